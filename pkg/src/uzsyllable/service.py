"""JSON-over-HTTP API around the syllabifier."""

from __future__ import annotations

import os
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .lexicon import ExceptionLexicon
from .schemas import ApiRequest, Health, analyze, dump

DEFAULT_MAX_BODY = 64 * 1024


def create_app(lexicon: Optional[ExceptionLexicon] = None, max_body: Optional[int] = None) -> FastAPI:
    """Build the app; the lexicon is fixed for the lifetime of the server.

    ``max_body`` (bytes of UTF-8 request text) defaults to the
    ``UZSYLLABLE_MAX_BODY`` environment variable, then 64 KiB.
    """
    if max_body is None:
        max_body = int(os.environ.get("UZSYLLABLE_MAX_BODY", DEFAULT_MAX_BODY))
    lexicon = lexicon or ExceptionLexicon()
    app = FastAPI(title="uzsyllable", version=__version__)

    @app.exception_handler(RequestValidationError)
    async def bad_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc.errors()[0].get("msg", "invalid request"))})

    def run(req: ApiRequest) -> dict:
        if len(req.text.encode("utf-8")) > max_body:
            raise HTTPException(status_code=413, detail=f"text exceeds {max_body} bytes")
        return dump(analyze(req.text, req.script, lexicon if req.lexicon else None))

    @app.post("/api/syllabify")
    def syllabify(req: ApiRequest):
        return run(req)

    @app.post("/api/hyphenate")
    def hyphenate(req: ApiRequest):
        return run(req)

    @app.post("/api/count")
    def count(req: ApiRequest):
        return run(req)

    @app.get("/health", response_model=Health)
    def health():
        return Health(status="ok", version=__version__, lexicon_entries=len(lexicon))

    return app
