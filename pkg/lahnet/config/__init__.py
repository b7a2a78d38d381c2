from .settings import Settings, guard_lifted, settings

__all__ = ['Settings', 'guard_lifted', 'settings']
