""" Report Definition """

from typing import Any, Optional

from .base_model import BaseModel


class Report(BaseModel):
    """
    Report
    The JSON document every command emits.

    Attributes
    ----------
    command: str
        The command that produced it.
    arguments: dict[str, Any]
        The effective flags, including caps and seeds.
    inputs: dict[str, str]
        Input file name -> sha256 of its content.
    results: dict[str, Any]
        Command results.
    timings: dict[str, float]
        Wall-clock seconds per stage.
    passed: bool
        False when a checked property was violated.
    summary: Optional[str]
        One-line human summary.
    """

    command: str
    arguments: dict[str, Any] = {}
    inputs: dict[str, str] = {}
    results: dict[str, Any] = {}
    timings: dict[str, float] = {}
    passed: bool = True
    summary: Optional[str] = None
