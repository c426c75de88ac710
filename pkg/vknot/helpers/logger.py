import logging
from logging.handlers import RotatingFileHandler

_DATEFMT = "%d-%b-%y %H:%M:%S"
_FMT_PLAIN = "[%(asctime)s - %(levelname)s] - %(name)s - %(message)s"
_FMT_SOURCE = "[%(asctime)s - %(levelname)s] - %(name)s - %(filename)s:%(lineno)d - %(message)s"
_OWN_PREFIXES = ("vknot", "Api")

# third-party loggers that flood INFO
_QUIET = {
    "asyncio": logging.WARNING,
    "httpx": logging.ERROR,
    "httpcore": logging.WARNING,
    "uvicorn.access": logging.WARNING,
    "hypothesis": logging.WARNING,
}


class _ConditionalFormatter(logging.Formatter):
    """File and line for our own records, but only while debugging."""

    def __init__(self, debug: bool):
        super().__init__(datefmt=_DATEFMT)
        self._debug = debug
        self._plain = logging.Formatter(_FMT_PLAIN, datefmt=_DATEFMT)
        self._source = logging.Formatter(_FMT_SOURCE, datefmt=_DATEFMT)

    def format(self, record: logging.LogRecord) -> str:
        if self._debug and record.name.startswith(_OWN_PREFIXES):
            return self._source.format(record)
        return self._plain.format(record)


def _from_config(name: str, default):
    try:
        import config
    except Exception:
        return default
    return getattr(config, name, default)


def setup_logging(debug: bool = False, log_file: str = "") -> None:
    """(Re)configure the root logger. Streams go to stderr; stdout belongs to the CLI."""
    root = logging.getLogger()
    root.setLevel(logging.DEBUG if debug else logging.INFO)
    fmt = _ConditionalFormatter(debug)

    if not root.handlers:
        root.addHandler(logging.StreamHandler())
    log_file = (log_file or "").strip()
    has_file = any(isinstance(h, RotatingFileHandler) for h in root.handlers)
    if log_file and not has_file:
        root.addHandler(RotatingFileHandler(log_file, mode="a", maxBytes=5_000_000, backupCount=3, encoding="utf-8"))

    for h in root.handlers:
        h.setFormatter(fmt)
    for name, level in _QUIET.items():
        logging.getLogger(name).setLevel(level)


setup_logging(bool(_from_config("DEBUG", False)), str(_from_config("LOG_FILE", "") or ""))


def LOGGER(name: str) -> logging.Logger:
    return logging.getLogger(name)
