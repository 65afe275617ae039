""" Bacon-Shor Toolkit Service Layer Handler(s) """

import logging
from typing import Callable, TypeVar

from fastapi import FastAPI, status
from starlette.exceptions import HTTPException
from starlette.middleware.cors import CORSMiddleware

from ..contracts.bit_matrix import BitMatrix
from ..contracts.gv_query import GVQuery
from ..contracts.matrix_request import MatrixRequest
from ..contracts.property_violation_error import PropertyViolationError
from ..contracts.report import Report
from ..contracts.settings import Settings
from ..contracts.toolkit_error import ToolkitError
from ..controllers.analyze import AnalyzeController
from ..controllers.bounds import BoundsController
from ..controllers.hadamard import HadamardController
from ..controllers.search import SearchController

Result = TypeVar("Result")

settings: Settings = Settings()

# Create controllers
analyze_controller = AnalyzeController(settings=settings)
bounds_controller = BoundsController(settings=settings)
hadamard_controller = HadamardController(settings=settings)
search_controller = SearchController(settings=settings)

# Create the FastAPI application
app = FastAPI()

#  Apply COR Configuration | https://fastapi.tiangolo.com/tutorial/cors/
origins = ["*"]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def to_matrix(rows: list[list[int]]) -> BitMatrix:
    try:
        return BitMatrix.from_rows(rows)
    except ValueError as error:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(error)) from error


def guarded(call: Callable[[], Result]) -> Result:
    """Runs a controller call, mapping toolkit errors onto status codes."""

    try:
        return call()
    except HTTPException as error:
        logging.error(str(error))
        raise error from error
    except PropertyViolationError as error:
        logging.error(str(error))
        raise HTTPException(status_code=status.HTTP_409_CONFLICT, detail=str(error)) from error
    except (ToolkitError, ValueError) as error:
        logging.error(str(error))
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(error)) from error
    except Exception as error:
        # Caught all other uncaught errors.
        logging.error(str(error))
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, detail="Internal Server Error"
        ) from error


@app.get("/health/plain", status_code=status.HTTP_200_OK)
async def health_plain() -> bool:
    """
    Get Application Health
    [GET] /health/plain

    Returns
    -------
    [STATUS CODE] 200: OK
        health: bool
            A true/false response of server health.
    """

    return True


@app.post("/v1/analyze", status_code=status.HTTP_200_OK)
def analyze_handler(request: MatrixRequest) -> Report:
    """
    Analyze A Matrix
    [POST] /v1/analyze

    Body
    ----
    request: MatrixRequest
        The matrix, the oracle to run and its limits.

    Returns
    -------
    report: Report
        The analysis report.

    [STATUS CODE]
        200 - OK
        400 - Invalid matrix or infeasible request
        409 - Oracle disagrees with the theory
        500 - Server failure
    """

    return guarded(
        lambda: analyze_controller.execute(
            matrix=to_matrix(request.matrix), oracle=request.oracle, w_max=request.w_max, cap=request.cap
        )
    )


@app.post("/v1/bounds", status_code=status.HTTP_200_OK)
def bounds_handler(request: MatrixRequest) -> Report:
    """
    Check Parameter Bounds
    [POST] /v1/bounds

    [STATUS CODE]
        200 - OK
        400 - Invalid matrix
        500 - Server failure
    """

    return guarded(lambda: bounds_controller.execute(matrix=to_matrix(request.matrix), cap=request.cap))


@app.get("/v1/hadamard/{k}", status_code=status.HTTP_200_OK)
def hadamard_handler(k: int) -> Report:
    """
    Build A Hadamard Matrix
    [GET] /v1/hadamard/{k}

    Path
    ----
    k: int
        Rank, 1 <= k <= 12.
    """

    return guarded(lambda: hadamard_controller.execute(k=k)[0])


@app.post("/v1/search", status_code=status.HTTP_200_OK)
def search_handler(query: GVQuery) -> Report:
    """
    Search For Fixed-Rank Matrices
    [POST] /v1/search

    Body
    ----
    query: GVQuery
        Search parameters including the seed.

    [STATUS CODE]
        200 - OK
        400 - Invalid query
        500 - Server failure
    """

    return guarded(lambda: search_controller.execute(query=query)[0])
