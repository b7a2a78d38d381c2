from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    """Guards, sampling defaults and logging options, read from the environment or `.env`."""

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=False, extra="ignore")

    # ===== Enumeration guards =====
    ENUMERATION_MAX_N: int = Field(9, gt=0)
    PATH_GUARD: int = Field(1_000_000, gt=0)
    FAMILY_GUARD: int = Field(10_000_000, gt=0)
    TNN_MAX_DIMENSION: int = Field(12, gt=0)
    LAPLACE_MAX_DIMENSION: int = Field(5, gt=0)
    GUARD_OVERRIDE: bool = Field(
        False,
        validation_alias=AliasChoices("LGV_GUARD_OVERRIDE", "GUARD_OVERRIDE"),
    )

    # ===== Variation sampling =====
    DEFAULT_SEED: int = Field(42, ge=0, lt=2**64)
    DEFAULT_SAMPLES: int = Field(1000, gt=0)
    DEFAULT_ENTRY_BOUND: int = Field(9, gt=0)

    # ===== Logging =====
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = Field("json", pattern="^(json|text)$")


# Global settings instance
settings = Settings()


def guard_lifted(force: bool = False) -> bool:
    """True when a caller passed `force` or LGV_GUARD_OVERRIDE is set."""
    return force or settings.GUARD_OVERRIDE
