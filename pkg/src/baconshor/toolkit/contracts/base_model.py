""" Base Model Definition """

import pydantic


class BaseModel(pydantic.BaseModel):
    """
    Base Model
    Immutable pydantic model shared by every toolkit contract.
    """

    class Config:
        frozen = True
