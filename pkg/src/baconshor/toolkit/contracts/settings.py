""" Settings Definition """

from typing import Optional

from pydantic import BaseSettings, validator


class Settings(BaseSettings):
    """
    Settings
    Toolkit configuration read from BACONSHOR_* environment variables.

    Attributes
    ----------
    enumeration_cap: int
        Default cap on the number of enumerated elements.
    threads: int
        Default worker count.
    logs_dir: Optional[str]
        Directory for the log file; stderr when unset.
    log_level: str
        Root log level.
    """

    enumeration_cap: int = 2**26
    threads: int = 1
    logs_dir: Optional[str] = None
    log_level: str = "INFO"

    @validator("enumeration_cap", "threads")
    def _positive(cls, value: int, field) -> int:  # pylint: disable=no-self-argument
        if value < 1:
            raise ValueError(f"{field.name} must be at least 1")
        return value

    class Config:
        env_prefix = "BACONSHOR_"
