"""
quatclass Configuration Settings
Centralized configuration management using Pydantic Settings
"""

from typing import Optional
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """Application settings with environment variable support (prefix QUATCLASS_)"""

    model_config = SettingsConfigDict(
        env_prefix="QUATCLASS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Environment
    environment: str = Field(default="development")

    # Logging Configuration
    log_level: str = Field(default="INFO")
    log_format: str = Field(default="json")

    # Batch Configuration
    pmax_ceiling: int = Field(default=10**6, ge=2)
    batch_workers: int = Field(default=1, ge=0)

    # HTTP surface (serve command)
    host: str = Field(default="127.0.0.1")
    port: int = Field(default=8087)

    @field_validator("log_format")
    @classmethod
    def _known_log_format(cls, value: str) -> str:
        value = value.lower()
        if value not in ("json", "text"):
            raise ValueError("log_format must be 'json' or 'text'")
        return value

    def check_prime_bound(self, p_max: int) -> bool:
        """Whether a batch or report bound lies within the configured ceiling"""
        return p_max <= self.pmax_ceiling

# Global settings instance
_settings: Optional[Settings] = None

def get_settings() -> Settings:
    """Get application settings (singleton pattern)"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings

def reset_settings() -> None:
    """Forget the cached settings so the next call re-reads the environment"""
    global _settings
    _settings = None
