"""HTTP surface for charlab.
It uses FastAPI to expose one POST endpoint per computation; every response
carries the same record the CLI prints with --format structured."""
import logging
from contextlib import asynccontextmanager
from typing import Callable, Dict, Literal, Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .algebra.errors import CharLabError, SpecParseError
from .config import configure_logging, load_env_vars
from .service import compute_service

# --- Logging Setup ---
config = load_env_vars()
configure_logging(config)
logger = logging.getLogger("charlab-api")


# --- FastAPI Lifecycle ---
@asynccontextmanager
async def lifespan(app: FastAPI):
    """Attaches the shared compute service; tables are cached on it for the life of the process."""
    logger.info("Initializing compute service...")
    app.state.service = compute_service
    logger.info(f"Caps: elements={config.element_cap} pairs={config.pair_cap} tuples={config.tuple_cap}")
    yield
    logger.info("Shutting down compute service.")
    app.state.service = None


# --- FastAPI App Initialization ---
app = FastAPI(
    title="charlab - character tables, Galois and braid actions",
    version="1.0.0",
    lifespan=lifespan,
)

allowed_origins = ["http://localhost:3000", "http://localhost:3001"]
allowed_origins.extend(config.allowed_origins)

app.add_middleware(
    CORSMiddleware,
    allow_origins=allowed_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# --- API Models ---
class GroupRequest(BaseModel):
    group: str = Field(..., min_length=1, description="Builtin name (A5) or cycle list (deg=3; (1 2),(1 2 3)).")


class GaloisRequest(GroupRequest):
    ell: Optional[int] = Field(None, description="Omit for every ell coprime to the exponent.")


class BraidRequest(GroupRequest):
    word: str = Field("", description="Braid word such as 's1 s2^-1'.")
    pair: Optional[str] = None
    triple: Optional[str] = None


class CoverRequest(BaseModel):
    kind: Literal["cyclic", "dihedral"]
    n: int = Field(..., ge=1)
    ell: Optional[int] = None


class TuplesRequest(GroupRequest):
    n: int = Field(..., ge=1)


class APIResponse(BaseModel):
    status: str = "success"
    message: Optional[str] = None
    data: Optional[Dict] = None


class APIErrorResponse(BaseModel):
    status: str = "error"
    message: str = Field(..., description="Detailed error message")
    code: Optional[int] = Field(None, description="Optional error code")


ERROR_RESPONSES = {
    400: {"model": APIErrorResponse, "description": "Malformed input"},
    422: {"model": APIErrorResponse, "description": "Computation rejected the input"},
    500: {"model": APIErrorResponse, "description": "Internal Server Error"},
}


def _error(code: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=code, content=APIErrorResponse(message=message, code=code).model_dump())


def _run(name: str, compute: Callable[[], BaseModel]):
    try:
        result = compute()
        return APIResponse(data=result.model_dump())
    except SpecParseError as e:
        logger.warning(f"{name}: {e}")
        return _error(400, str(e))
    except CharLabError as e:
        logger.error(f"{name} rejected: {e}")
        return _error(422, str(e))
    except Exception:
        logger.exception(f"Unexpected internal server error in {name}")
        return _error(500, "An unexpected internal server error occurred.")


# --- API Endpoints ---
@app.get("/", summary="Health Check")
def health_check():
    """Provides a simple health check endpoint."""
    return {"status": "ok", "message": "charlab is healthy"}


@app.post("/table", response_model=APIResponse, responses=ERROR_RESPONSES)
def table(request: GroupRequest):
    return _run("table", lambda: compute_service.character_table(request.group))


@app.post("/galois", response_model=APIResponse, responses=ERROR_RESPONSES)
def galois(request: GaloisRequest):
    return _run("galois", lambda: compute_service.galois(request.group, request.ell))


@app.post("/pairs", response_model=APIResponse, responses=ERROR_RESPONSES)
def pairs(request: GroupRequest):
    return _run("pairs", lambda: compute_service.pairs(request.group))


@app.post("/braid", response_model=APIResponse, responses=ERROR_RESPONSES)
def braid(request: BraidRequest):
    return _run("braid", lambda: compute_service.braid(request.group, request.word, request.pair, request.triple))


@app.post("/cover", response_model=APIResponse, responses=ERROR_RESPONSES)
def cover(request: CoverRequest):
    return _run("cover", lambda: compute_service.cover(request.kind, request.n, request.ell))


@app.post("/tuples", response_model=APIResponse, responses=ERROR_RESPONSES)
def tuples(request: TuplesRequest):
    return _run("tuples", lambda: compute_service.tuples(request.group, request.n))


if __name__ == "__main__":
    import uvicorn
    # This allows running the app directly for development
    uvicorn.run("src.main:app", host="0.0.0.0", port=config.port, reload=True)
