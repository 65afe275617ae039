""" Abstract Controller Definition """

from abc import abstractmethod
from typing import Any, Optional

from ..contracts.base_model import BaseModel
from ..contracts.settings import Settings


class AbstractController(BaseModel):
    """
    Abstract Controller

    Attributes
    ----------
    settings: Settings
        Toolkit settings (caps, thread count).
    """

    settings: Settings

    def cap(self, override: Optional[int] = None) -> int:
        """The enumeration cap in effect for one call."""
        return self.settings.enumeration_cap if override is None else override

    @abstractmethod
    def execute(self, *args, **kwargs) -> Optional[Any]:
        """Should be implemented in the subclass"""
