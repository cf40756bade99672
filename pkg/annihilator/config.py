"""
Configuration module for annihilator.
Loads environment variables (and an optional .env file) into settings.
"""
import os
from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Runtime settings loaded from environment variables."""

    APP_NAME: str = "annihilator"

    # Worker processes for scans; 0 means one per CPU
    ANNIHILATOR_THREADS: int = 1
    SCAN_CHUNK_SIZE: int = 512
    SHOW_PROGRESS: bool = False

    # Maximum independent sets retained per graph before analysis gives up
    ENUMERATION_BUDGET: int = 1_000_000

    LOG_LEVEL: str = "WARNING"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = True
        extra = "ignore"

    @field_validator("ANNIHILATOR_THREADS")
    @classmethod
    def _threads_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"ANNIHILATOR_THREADS must be >= 0, got {value}")
        return value

    @field_validator("SCAN_CHUNK_SIZE", "ENUMERATION_BUDGET")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"Value must be positive, got {value}")
        return value

    @property
    def worker_count(self) -> int:
        """Resolved number of scan workers."""
        if self.ANNIHILATOR_THREADS == 0:
            return os.cpu_count() or 1
        return self.ANNIHILATOR_THREADS


@lru_cache()
def get_settings() -> Settings:
    """Return cached settings instance."""
    return Settings()
