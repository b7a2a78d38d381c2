"""Lah numbers as weighted path counts in planar networks, checked in exact integer arithmetic."""

__version__ = "1.0.0"
