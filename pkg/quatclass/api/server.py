"""
quatclass HTTP surface
Reports, invariant queries and assisted evaluation as JSON envelopes
"""

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from quatclass import __version__
from quatclass.assisted import evaluate, load_assisted_config
from quatclass.cli.envelope import OutputEnvelope, check_entries
from quatclass.cli.invariant_command import QUERIES
from quatclass.config.settings import get_settings
from quatclass.errors import InvalidInputError, QuatClassError
from quatclass.pipeline import report
from quatclass.utils.logger import log_with_extra, setup_logger

settings = get_settings()
logger = setup_logger(__name__)

app = FastAPI(
    title="quatclass",
    description="Spinor class numbers of totally definite quaternion orders",
    version=__version__,
    docs_url="/docs" if settings.environment == "development" else None,
    redoc_url="/redoc" if settings.environment == "development" else None
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)

def _respond(envelope: OutputEnvelope, status_code: int = 200) -> JSONResponse:
    return JSONResponse(content=envelope.model_dump(mode="json"), status_code=status_code)

@app.exception_handler(QuatClassError)
async def quatclass_error_handler(request: Request, exc: QuatClassError):
    """InvalidInputError and its subclasses -> 422, arithmetic failures -> 500"""
    status_code = 422 if isinstance(exc, InvalidInputError) else 500
    log_with_extra(logger, "warning" if status_code == 422 else "error",
                   f"Request failed: {exc.message}", path=request.url.path,
                   error=type(exc).__name__, status_code=status_code)
    command = request.url.path.rstrip("/").split("/")[2] if request.url.path.startswith("/api/") else "api"
    return _respond(OutputEnvelope(command=command, error=exc.to_dict()), status_code)

@app.get("/")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "name": "quatclass",
        "version": __version__,
        "environment": settings.environment
    }

@app.get("/api/report/{p}")
def report_endpoint(p: int):
    result = report(p)
    envelope = OutputEnvelope(
        command="report",
        inputs={"p": p},
        result=result.model_dump(mode="json", exclude={"identities_checked"}),
        checks=check_entries(result.identities_checked),
    )
    return _respond(envelope)

@app.get("/api/invariant")
def invariant_endpoint(what: str = Query(...), arg: int = Query(...)):
    if what not in QUERIES:
        raise InvalidInputError(f"unknown invariant '{what}'; expected one of {', '.join(QUERIES)}")
    value, _ = QUERIES[what](arg)
    return _respond(OutputEnvelope(command="invariant", inputs={"what": what, "arg": arg},
                                   result={"what": what, "arg": arg, "value": value}))

@app.post("/api/assisted")
async def assisted_endpoint(request: Request):
    """Body is the assisted config document; floats are rejected while parsing"""
    body = await request.body()
    config = load_assisted_config(body.decode("utf-8", errors="replace"))
    result = evaluate(config)
    return _respond(OutputEnvelope(command="assisted", result=result.model_dump(mode="json")))
