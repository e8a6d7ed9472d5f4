"""This module contains the application configuration settings."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.shared.domain.exceptions.exception import InvalidSettingException


class Settings(BaseSettings):
    """Application configuration settings."""

    # Application metadata
    APP_NAME: str = Field("cut-workbench", validation_alias="APP_NAME")
    ENVIRONMENT: str = Field("local", validation_alias="ENVIRONMENT")
    LOG_LEVEL: str = Field("WARNING", validation_alias="LOG_LEVEL")

    # Reduction-graph exploration
    EXPLORE_NODE_LIMIT: int = Field(1_000_000, gt=0, validation_alias="EXPLORE_NODE_LIMIT")
    EXPLORE_WORKERS: int = Field(1, gt=0, validation_alias="EXPLORE_WORKERS")

    # Normalization
    NORMALIZE_MAX_STEPS: int = Field(10_000, gt=0, validation_alias="NORMALIZE_MAX_STEPS")

    # Term generation
    GEN_SIZE_BUDGET: int = Field(35, gt=0, validation_alias="GEN_SIZE_BUDGET")
    GEN_MAX_ATTEMPTS: int = Field(64, gt=0, validation_alias="GEN_MAX_ATTEMPTS")
    GEN_ATOM_POOL: str = Field("A,B,C", validation_alias="GEN_ATOM_POOL")

    # Certification of marked traces
    T2_SEARCH_LIMIT: int = Field(10_000, gt=0, validation_alias="T2_SEARCH_LIMIT")

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    @property
    def atom_pool(self) -> tuple[str, ...]:
        """Atom names available to the generator.

        Raises:
            InvalidSettingException: If the pool is empty or names a non-atom.
        """
        names = tuple(
            name.strip() for name in self.GEN_ATOM_POOL.split(",") if name.strip()
        )
        if not names:
            raise InvalidSettingException(
                "GEN_ATOM_POOL", self.GEN_ATOM_POOL, "no atom names given"
            )
        for name in names:
            if not (name[0].isupper() and name.replace("_", "").isalnum()):
                raise InvalidSettingException(
                    "GEN_ATOM_POOL", self.GEN_ATOM_POOL, f"{name!r} is not an atom name"
                )
        return names


@lru_cache
def get_settings():
    """Get cached application settings."""
    return Settings()


settings = get_settings()
