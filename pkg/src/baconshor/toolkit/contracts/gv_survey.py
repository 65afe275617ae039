""" GV Survey Definition """

from .base_model import BaseModel


class GVSurvey(BaseModel):
    """
    GV Survey
    Empirical success rate of a search over its whole trial budget.

    Attributes
    ----------
    trials: int
        Trials run.
    successes: int
        Trials whose matrix met the target.
    rate: float
        successes / trials.
    first_success: int
        Index of the first successful trial, -1 if none.
    target: int
        ceil(beta * m).
    seed: int
        The query seed.
    rng_algorithm: str
        Identifier of the bit generator.
    """

    trials: int
    successes: int
    rate: float
    first_success: int = -1
    target: int
    seed: int
    rng_algorithm: str
