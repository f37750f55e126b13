import logging
import logging.handlers
import json
from datetime import datetime
from typing import Dict, Any, Optional
from pathlib import Path


ROOT_LOGGER_NAME = "cocoakit"

SIZE_UNITS = {"KB": 1024, "MB": 1024 ** 2, "GB": 1024 ** 3}


class StructuredLogger:
    """Structured logging utility with JSON formatting and rotation"""

    def __init__(self, name: str, config: Dict[str, Any] = None):
        if name != ROOT_LOGGER_NAME and not name.startswith(ROOT_LOGGER_NAME + "."):
            name = f"{ROOT_LOGGER_NAME}.{name}"
        self.logger = logging.getLogger(name)
        self.config = config
        if config is not None:
            self._setup_logger()

    def _setup_logger(self):
        """Setup logger with handlers and formatting"""
        self.logger.handlers.clear()

        level = getattr(logging, self.config.get('level', 'INFO').upper())
        self.logger.setLevel(level)
        self.logger.propagate = False

        console_handler = logging.StreamHandler()
        console_handler.setLevel(
            getattr(logging, self.config.get('console_level', 'WARNING').upper())
        )
        console_handler.setFormatter(self._get_console_formatter())
        self.logger.addHandler(console_handler)

        # File handler with rotation
        log_file = self.config.get('file')
        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.handlers.RotatingFileHandler(
                log_file,
                maxBytes=self._parse_size(str(self.config.get('max_file_size', '10MB'))),
                backupCount=self.config.get('backup_count', 5)
            )
            file_handler.setFormatter(self._get_file_formatter())
            self.logger.addHandler(file_handler)

    def _get_console_formatter(self):
        return logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

    def _get_file_formatter(self):
        return JsonFormatter()

    def _parse_size(self, size_str: str) -> int:
        """'10MB' -> bytes; a bare number is taken as bytes"""
        size_str = size_str.strip().upper()
        for suffix, factor in SIZE_UNITS.items():
            if size_str.endswith(suffix):
                return int(size_str[:-len(suffix)]) * factor
        return int(size_str)

    def log_construction(self, operation: str, name: str, states: int,
                         duration: Optional[float] = None,
                         bound: Optional[int] = None):
        """Log an automaton construction with its resulting size"""
        log_data = {
            "event_type": "construction",
            "operation": operation,
            "automaton": name,
            "states": states,
            "timestamp": datetime.now().isoformat()
        }

        if duration is not None:
            log_data["duration"] = round(duration, 3)
        if bound is not None:
            log_data["bound"] = bound

        self.logger.debug(f"{operation} built {name} with {states} states",
                          extra={"structured_data": log_data})

    def log_check(self, kind: str, holds: bool, subject: str,
                  witness: Optional[str] = None,
                  duration: Optional[float] = None):
        """Log the outcome of a decision procedure"""
        log_data = {
            "event_type": "check",
            "kind": kind,
            "subject": subject,
            "holds": holds,
            "timestamp": datetime.now().isoformat()
        }

        if witness is not None:
            log_data["witness"] = witness
        if duration is not None:
            log_data["duration"] = round(duration, 3)

        message = f"Check {kind} on {subject} - {'HOLDS' if holds else 'FAILS'}"
        if witness is not None:
            message += f" (witness {witness})"

        self.logger.info(message, extra={"structured_data": log_data})

    def log_error(self, error: Exception, context: Dict[str, Any] = None):
        """Log error with context"""
        log_data = {
            "event_type": "error",
            "error_type": type(error).__name__,
            "error_message": str(error),
            "timestamp": datetime.now().isoformat()
        }

        code = getattr(error, 'code', None)
        if code:
            log_data["error_code"] = code
        if context:
            log_data["context"] = context

        self.logger.error(f"Error: {error}", extra={"structured_data": log_data})

    def log_performance(self, operation: str, duration: float,
                        items_count: Optional[int] = None,
                        family: Optional[str] = None):
        """Log performance metrics"""
        log_data = {
            "event_type": "performance",
            "operation": operation,
            "duration": round(duration, 3),
            "timestamp": datetime.now().isoformat()
        }

        if items_count:
            log_data["items_count"] = items_count
            log_data["items_per_second"] = round(items_count / duration, 2) if duration > 0 else 0

        if family:
            log_data["family"] = family

        message = f"Performance: {operation} took {duration:.3f}s"
        if items_count:
            message += f" for {items_count} items"

        self.logger.info(message, extra={"structured_data": log_data})


class JsonFormatter(logging.Formatter):
    """One JSON object per record; structured_data keys are merged in"""

    def format(self, record):
        entry = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "where": f"{record.module}.{record.funcName}:{record.lineno}",
        }
        entry.update(getattr(record, 'structured_data', {}))
        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(entry, default=str)


def setup_logging(config: Dict[str, Any] = None) -> StructuredLogger:
    """Setup global logging configuration"""
    if config is None:
        config = {
            'level': 'INFO',
            'console_level': 'WARNING',
            'file': 'logs/cocoakit.log',
            'max_file_size': '10MB',
            'backup_count': 5
        }

    return StructuredLogger(ROOT_LOGGER_NAME, config)


def get_logger(name: str) -> StructuredLogger:
    """Get a logger instance that reports through the cocoakit root"""
    return StructuredLogger(name)
