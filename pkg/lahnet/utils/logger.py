import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from lahnet.config import settings

# Attributes every LogRecord carries; anything else came in through `extra=`
_RECORD_FIELDS = set(vars(logging.makeLogRecord({}))) | {"message", "asctime"}


class JSONFormatter(logging.Formatter):
    """JSON formatter for structured logging."""

    def format(self, record: logging.LogRecord) -> str:
        log_data: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat().replace("+00:00", "Z"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        for key, value in vars(record).items():
            if key not in _RECORD_FIELDS and not key.startswith("_"):
                log_data[key] = value

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data, default=str)


class StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr currently is; stdout belongs to command output."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> logging.Logger:
    """Configure the `lahnet` logger; calling it again replaces the previous handler."""
    logger = logging.getLogger("lahnet")
    logger.setLevel(getattr(logging, (level or settings.LOG_LEVEL).upper()))

    for handler in list(logger.handlers):
        if isinstance(handler, StderrHandler):
            logger.removeHandler(handler)

    handler = StderrHandler()
    if (fmt or settings.LOG_FORMAT) == "json":
        handler.setFormatter(JSONFormatter())
    else:
        handler.setFormatter(
            logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        )
    logger.addHandler(handler)
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child of the `lahnet` logger for code outside the package namespace."""
    if name == "lahnet" or name.startswith("lahnet."):
        return logging.getLogger(name)
    return logging.getLogger(f"lahnet.{name}")
