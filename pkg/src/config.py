import os
import logging
from typing import List

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from .algebra.errors import ConfigError

load_dotenv()

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


class Settings(BaseModel):
    element_cap: int = Field(20_000, description="Largest group the closure will enumerate.")
    pair_cap: int = Field(2_000, description="Largest |G| for commuting-pair classification.")
    tuple_cap: int = Field(250_000, description="Largest |G|^n for tuple-class enumeration.")
    prime_limit: int = Field(1_000_000, description="Upper bound of the Dixon prime search.")
    cover_cap: int = Field(60, description="Largest n for the cyclic and dihedral cover models.")
    cache_size: int = Field(32, description="Groups and tables kept per service.")
    log_level: str = "INFO"
    allowed_origins: List[str] = Field(default_factory=list)
    port: int = 8000


def _int_var(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


def load_env_vars() -> Settings:
    """Loads and validates the environment configuration."""
    allowed_origins_env = os.getenv("ALLOWED_ORIGINS", "")
    settings = Settings(
        element_cap=_int_var("CHARLAB_ELEMENT_CAP", 20_000),
        pair_cap=_int_var("CHARLAB_PAIR_CAP", 2_000),
        tuple_cap=_int_var("CHARLAB_TUPLE_CAP", 250_000),
        prime_limit=_int_var("CHARLAB_PRIME_LIMIT", 1_000_000),
        cover_cap=_int_var("CHARLAB_COVER_CAP", 60),
        cache_size=_int_var("CHARLAB_CACHE_SIZE", 32),
        log_level=os.getenv("CHARLAB_LOG_LEVEL", "INFO").upper(),
        allowed_origins=[origin.strip() for origin in allowed_origins_env.split(",") if origin.strip()],
        port=_int_var("PORT", 8000),
    )
    logger.debug("Environment variables check completed.")
    return settings


def configure_logging(settings: Settings) -> None:
    logging.basicConfig(level=getattr(logging, settings.log_level, logging.INFO), format=LOG_FORMAT)
