import json
import re
from importlib import import_module

from vknot.helpers.logger import LOGGER, setup_logging

_TRUTHY = {"true", "1", "yes", "y", "on"}


def _str_list(value) -> list[str]:
    """Comma/space separated text, a JSON array, or any iterable, as a list of non-empty strings."""
    if value is None:
        return []
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("["):
            try:
                return _str_list(json.loads(text))
            except ValueError:
                return []
        return [part for part in re.split(r"[\s,]+", text) if part]
    if isinstance(value, (list, tuple, set)):
        return [s for s in (str(v or "").strip() for v in value) if s]
    return []


class Config:
    DEBUG = False
    LOG_FILE = ""
    MAX_CANONICAL_COMPONENTS = 10
    WALK_FAMILIES: list[str] = ["R1insert", "R1delete", "R2insert", "R2delete", "R3"]
    API_HOST = "127.0.0.1"
    API_PORT = 8001
    CORS_ORIGINS: list[str] = ["*"]

    _LIST_KEYS = {"WALK_FAMILIES", "CORS_ORIGINS"}
    _loaded = False

    @classmethod
    def load(cls, module: str = "config"):
        """Load overrides from config.py once. A missing module keeps the defaults."""
        if cls._loaded:
            return
        cls._loaded = True
        try:
            external = import_module(module)
        except ModuleNotFoundError:
            LOGGER(__name__).debug(f"No {module}.py found, using defaults")
            return
        overrides = [key for key in dir(external) if key.isupper() and hasattr(cls, key)]
        for key in overrides:
            setattr(cls, key, cls._process_value(key, getattr(external, key)))
        cls._validate_config()
        setup_logging(cls.DEBUG, cls.LOG_FILE)
        LOGGER(__name__).debug(f"Loaded {len(overrides)} keys from {module}.py")

    @classmethod
    def _process_value(cls, key, value):
        if key in cls._LIST_KEYS:
            return _str_list(value)

        default = getattr(cls, key)
        kind = type(default)
        if kind is bool:
            return value.strip().lower() in _TRUTHY if isinstance(value, str) else bool(value)
        if kind is str:
            return "" if value is None else str(value)
        # numbers and anything else: coerce, or keep the default
        try:
            return kind(value)
        except (TypeError, ValueError):
            return default

    @classmethod
    def _validate_config(cls):
        """Fail fast on obv broken configs."""
        from vknot.moves.reidemeister import MoveFamily

        if not isinstance(cls.MAX_CANONICAL_COMPONENTS, int) or cls.MAX_CANONICAL_COMPONENTS <= 0:
            raise SystemExit("MAX_CANONICAL_COMPONENTS must be a positive int")

        if not cls.WALK_FAMILIES:
            raise SystemExit("WALK_FAMILIES must name at least one move family")
        known = {f.value for f in MoveFamily}
        unknown = [f for f in cls.WALK_FAMILIES if f not in known]
        if unknown:
            raise SystemExit(f"Unknown WALK_FAMILIES: {', '.join(unknown)}")

        if not isinstance(cls.API_PORT, int) or not (0 < cls.API_PORT < 65536):
            raise SystemExit("API_PORT must be a valid TCP port")

    @classmethod
    def get(cls, key):
        return getattr(cls, key, None)

    @classmethod
    def get_all_config(cls) -> dict:
        return {k: getattr(cls, k) for k in dir(cls) if k.isupper() and not k.startswith("_")}
