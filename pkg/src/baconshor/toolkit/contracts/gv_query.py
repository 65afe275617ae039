""" GV Query Definition """

from pydantic import root_validator

from .base_model import BaseModel


class GVQuery(BaseModel):
    """
    GV Query
    Parameters of a random fixed-rank search for matrices with large row and
    column distance.

    Attributes
    ----------
    m: int
        Matrix size.
    k: int
        Target rank, 1 <= k <= m.
    beta: float
        Distance fraction, 0 < beta < 1/2; the target distance is ceil(beta * m).
    max_trials: int
        Attempt budget.
    seed: int
        RNG seed.
    """

    m: int
    k: int
    beta: float
    max_trials: int = 1000
    seed: int = 0

    @root_validator(skip_on_failure=True)
    def _query_valid(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        if not 1 <= values["k"] <= values["m"]:
            raise ValueError("k must satisfy 1 <= k <= m")
        if not 0 < values["beta"] < 0.5:
            raise ValueError("beta must lie strictly between 0 and 1/2")
        if values["max_trials"] < 1:
            raise ValueError("max_trials must be positive")
        if values["seed"] < 0:
            raise ValueError("seed must be nonnegative")
        return values
