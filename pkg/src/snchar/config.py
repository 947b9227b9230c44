import os
from pathlib import Path

from dotenv import load_dotenv, find_dotenv
from pydantic import BaseModel, ConfigDict

from snchar.errors import ConfigError


class Settings(BaseModel):
    """
    Runtime settings, read from ``SNCHAR_*`` environment variables (or a ``.env`` file).

    CLI flags override every field.
    """

    model_config = ConfigDict(frozen=True)

    log_level: str = "WARNING"
    catalog_dir: Path = Path("./catalogs")
    workers: int = 1
    max_order: int = 8
    max_degree: int = 8


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be >= 1, got {value}")
    return value


def load_settings() -> Settings:
    _ = load_dotenv(find_dotenv())

    return Settings(
        log_level=os.getenv("SNCHAR_LOG_LEVEL", "WARNING").upper(),
        catalog_dir=Path(os.getenv("SNCHAR_CATALOG_DIR", "./catalogs")),
        workers=_positive_int("SNCHAR_WORKERS", 1),
        max_order=_positive_int("SNCHAR_MAX_ORDER", 8),
        max_degree=_positive_int("SNCHAR_MAX_DEGREE", 8),
    )
