"""
quatclass Logging Configuration
Structured logging on stderr; stdout belongs to command output
"""

import logging
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict
from quatclass.config.settings import get_settings

def _exact_default(value: Any) -> Any:
    """Rationals as 'a/b', enums by value, anything else by str()"""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    return getattr(value, "value", str(value))

class JSONFormatter(logging.Formatter):
    """One JSON object per record; extra fields are merged at top level"""

    def format(self, record: logging.LogRecord) -> str:
        log_entry: Dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            # quatclass.pipeline.report -> pipeline
            "component": record.name.split(".")[1] if record.name.count(".") else record.name,
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }
        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)
        log_entry.update(getattr(record, "extra_fields", {}))
        return json.dumps(log_entry, ensure_ascii=False, default=_exact_default)

class StandardFormatter(logging.Formatter):
    """Human-readable lines for QUATCLASS_LOG_FORMAT=text, extra fields as key=value"""

    def __init__(self):
        super().__init__(fmt="%(asctime)s %(levelname)-7s %(name)s: %(message)s", datefmt="%H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        extra = getattr(record, "extra_fields", None)
        if extra:
            line += " " + " ".join(f"{k}={v}" for k, v in extra.items())
        return line

def setup_logger(name: str) -> logging.Logger:
    """
    Logger for a quatclass module, configured once from Settings

    Args:
        name: Logger name (usually __name__)
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    settings = get_settings()
    log_level = getattr(logging, settings.log_level.upper(), logging.INFO)
    logger.setLevel(log_level)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)
    handler.setFormatter(JSONFormatter() if settings.log_format == "json" else StandardFormatter())
    logger.addHandler(handler)
    logger.propagate = False
    return logger

def log_with_extra(logger: logging.Logger, level: str, message: str, **extra_fields):
    """
    Log message with extra fields

    Args:
        logger: Logger instance
        level: Log level (info, warning, error, etc.)
        message: Log message
        **extra_fields: Additional fields to include in log
    """
    log_func = getattr(logger, level.lower())
    log_func(message, extra={"extra_fields": extra_fields})

# Domain logging helpers
def log_report_summary(logger: logging.Logger, p: int, regime: str, elapsed: float):
    """Log completion of one prime's report with timing"""
    log_with_extra(
        logger, "info", f"Report for p={p} completed",
        p=p,
        regime=regime,
        execution_time_ms=round(elapsed * 1000, 2),
        component="pipeline",
    )

def log_check_result(logger: logging.Logger, name: str, passed: bool, detail: str = ""):
    """Log the outcome of a named identity or integrality check"""
    log_with_extra(
        logger, "debug" if passed else "error",
        f"Check {name} {'passed' if passed else 'FAILED'}",
        check=name,
        passed=passed,
        detail=detail,
        component="checks"
    )
