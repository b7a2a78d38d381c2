import json
import logging
import sys

import pytest
from pydantic import ValidationError

from lahnet import main as cli_module
from lahnet.config import Settings, guard_lifted, settings
from lahnet.lah import lah_enumerate
from lahnet.utils.errors import (
    DimensionError,
    GuardError,
    InvariantViolation,
    LahnetError,
    NetworkError,
)
from lahnet.utils.logger import JSONFormatter, StderrHandler, get_logger, setup_logging


@pytest.fixture
def clean_logger():
    logger = logging.getLogger("lahnet")
    level, handlers = logger.level, list(logger.handlers)
    yield logger
    logger.handlers[:] = handlers
    logger.setLevel(level)


# ===== SETTINGS =====
class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("ENUMERATION_MAX_N", "PATH_GUARD", "LGV_GUARD_OVERRIDE", "GUARD_OVERRIDE", "LOG_LEVEL"):
            monkeypatch.delenv(name, raising=False)
        fresh = Settings(_env_file=None)
        assert fresh.ENUMERATION_MAX_N == 9
        assert fresh.PATH_GUARD == 1_000_000
        assert fresh.FAMILY_GUARD == 10_000_000
        assert fresh.TNN_MAX_DIMENSION == 12
        assert fresh.LAPLACE_MAX_DIMENSION == 5
        assert fresh.DEFAULT_SEED == 42
        assert fresh.GUARD_OVERRIDE is False
        assert fresh.LOG_LEVEL == "WARNING"

    def test_override_from_environment(self, monkeypatch):
        monkeypatch.setenv("LGV_GUARD_OVERRIDE", "true")
        monkeypatch.setenv("tnn_max_dimension", "4")
        fresh = Settings(_env_file=None)
        assert fresh.GUARD_OVERRIDE is True
        assert fresh.TNN_MAX_DIMENSION == 4

    @pytest.mark.parametrize("name,value", [("PATH_GUARD", "0"), ("LOG_FORMAT", "xml"), ("DEFAULT_SEED", "-1")])
    def test_invalid_values(self, monkeypatch, name, value):
        monkeypatch.setenv(name, value)
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_guard_lifted(self, monkeypatch):
        assert guard_lifted() is False
        assert guard_lifted(True) is True
        monkeypatch.setattr(settings, "GUARD_OVERRIDE", True)
        assert guard_lifted() is True


# ===== LOGGING =====
class TestLogging:
    def test_json_lines_on_stderr(self, clean_logger, capsys):
        setup_logging("INFO", "json")
        logging.getLogger("lahnet.tests").info("hello", extra={"n": 3})
        captured = capsys.readouterr()
        assert captured.out == ""
        record = json.loads(captured.err.strip().splitlines()[-1])
        assert record["message"] == "hello"
        assert record["level"] == "INFO"
        assert record["logger"] == "lahnet.tests"
        assert record["n"] == 3
        assert record["timestamp"].endswith("Z")

    def test_text_format(self, clean_logger, capsys):
        setup_logging("WARNING", "text")
        logging.getLogger("lahnet.tests").warning("careful")
        logging.getLogger("lahnet.tests").info("hidden")
        err = capsys.readouterr().err
        assert "WARNING - careful" in err
        assert "hidden" not in err

    def test_setup_is_idempotent(self, clean_logger):
        setup_logging()
        setup_logging()
        assert sum(isinstance(h, StderrHandler) for h in clean_logger.handlers) == 1

    def test_exception_is_formatted(self):
        try:
            raise ValueError("boom")
        except ValueError:
            record = logging.LogRecord("lahnet.tests", logging.ERROR, __file__, 1, "failed", (), sys.exc_info())
        document = json.loads(JSONFormatter().format(record))
        assert document["message"] == "failed"
        assert "ValueError: boom" in document["exception"]

    def test_get_logger(self):
        assert get_logger("scripts").name == "lahnet.scripts"
        assert get_logger("lahnet.lah").name == "lahnet.lah"
        assert get_logger("__main__").name == "lahnet.__main__"

    def test_cli_logger_is_under_the_package(self):
        assert cli_module.logger.name == "lahnet.main"

    def test_guard_refusal_is_logged(self, caplog, monkeypatch):
        monkeypatch.setattr(settings, "ENUMERATION_MAX_N", 2)
        with caplog.at_level(logging.WARNING, logger="lahnet"):
            with pytest.raises(GuardError):
                lah_enumerate(3, 1)
        assert any("refused" in r.getMessage() for r in caplog.records)


# ===== ERRORS =====
class TestErrors:
    def test_hierarchy(self):
        assert issubclass(DimensionError, ValueError)
        assert issubclass(NetworkError, LahnetError)
        assert issubclass(InvariantViolation, AssertionError)

    def test_to_dict(self):
        error = GuardError("too big", guard="PATH_GUARD", limit=10, estimate=2**70)
        assert error.estimate == 2**70
        assert error.to_dict() == {
            "error": "GuardError",
            "message": "too big",
            "details": {"guard": "PATH_GUARD", "limit": "10", "estimate": str(2**70)},
        }
