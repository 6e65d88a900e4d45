"""HTTP facade over the engine.

Every computation the CLI offers is available as a POST endpoint taking and
returning the same text formats used on the command line (rationals "a/b",
tensor words "1 2.3", packed words "121" or "1 2 1", series literals
"exp1" / "Eq:1/2" / "coeffs:..."), plus a structured term list.  Responses
are deterministic: terms are rendered in the canonical order everywhere.

Package errors map to structured JSON bodies: {"error": {"code", "message"}}
with HTTP 422 for unusable input and 400 for truncation-order problems.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__, verify
from .errors import OrderError, ParseError, ShuffleHopfError
from .fps import parse_series
from .hausdorff import (format_ncpoly, goldberg_coeff, goldberg_moment_coeff,
                        hausdorff_series, ncpoly_terms_json, reconstruct_report)
from .nattrans import coder_apply, phi_apply, phi_inverse_apply
from .tensorhopf import (format_telem, parse_tensor_word, qshuffle, shuffle,
                         telem_terms_json, twisted_product, word_elem)
from .exact import parse_rational
from .wqsym import parse_packed_word

app = FastAPI(
    title="shufflehopf",
    version=__version__,
    description="Exact shuffle-algebra deformations, word quasi-symmetric "
                "functions, and Hausdorff-series coefficients.",
)


@app.exception_handler(ShuffleHopfError)
async def _domain_error_handler(_request: Request, exc: ShuffleHopfError):
    truncation = exc.exit_code == OrderError.exit_code
    return JSONResponse(
        status_code=400 if truncation else 422,
        content={"error": {"code": "truncation" if truncation else "parse",
                           "message": str(exc)}})


class TermModel(BaseModel):
    coeff: str
    word: list[list[str]]


class TElemResponse(BaseModel):
    text: str
    terms: list[TermModel]


class ProductRequest(BaseModel):
    kind: Literal["shuffle", "qshuffle", "twist"]
    left: str
    right: str
    series: str | None = None


class PhiRequest(BaseModel):
    series: str
    word: str
    inverse: bool = False


class CoderRequest(BaseModel):
    series: str
    word: str


class GoldbergRequest(BaseModel):
    word: str
    moments: list[str] | None = None


class GoldbergResponse(BaseModel):
    word: str
    coeff: str


class HausdorffRequest(BaseModel):
    letters: int = Field(ge=1)
    degree: int = Field(ge=1)


class NCTermModel(BaseModel):
    word: list[int]
    coeff: str


class CheckResponse(BaseModel):
    passed: bool
    coefficients: int
    first_mismatch: str | None = None


class HausdorffResponse(BaseModel):
    text: str
    terms: list[NCTermModel]


class VerifyRequest(BaseModel):
    suite: str
    max_n: int = verify.DEFAULT_MAX_N


class SuiteModel(BaseModel):
    suite: str
    max_n: int
    passed: bool
    cases: int
    failures: list[str]


class VerifyResponse(BaseModel):
    passed: bool
    suites: list[SuiteModel]


def _telem_response(x) -> TElemResponse:
    return TElemResponse(text=format_telem(x),
                         terms=[TermModel(**t) for t in telem_terms_json(x)])


@app.get("/")
def info() -> dict:
    return {"name": "shufflehopf", "version": __version__}


@app.post("/product", response_model=TElemResponse)
def product(req: ProductRequest) -> TElemResponse:
    left = parse_tensor_word(req.left)
    right = parse_tensor_word(req.right)
    if req.kind == "shuffle":
        result = shuffle(left, right)
    elif req.kind == "qshuffle":
        result = qshuffle(left, right)
    else:
        if req.series is None:
            raise ParseError("twisted products need a series")
        order = max(len(left) + len(right), 1)
        result = twisted_product(parse_series(req.series, order), left, right)
    return _telem_response(result)


@app.post("/phi", response_model=TElemResponse)
def phi(req: PhiRequest) -> TElemResponse:
    word = parse_tensor_word(req.word)
    series = parse_series(req.series, max(len(word), 1))
    apply = phi_inverse_apply if req.inverse else phi_apply
    return _telem_response(apply(series, word_elem(word)))


@app.post("/coder", response_model=TElemResponse)
def coder(req: CoderRequest) -> TElemResponse:
    word = parse_tensor_word(req.word)
    series = parse_series(req.series, max(len(word), 1))
    return _telem_response(coder_apply(series, word_elem(word)))


@app.post("/goldberg", response_model=GoldbergResponse)
def goldberg(req: GoldbergRequest) -> GoldbergResponse:
    word = parse_packed_word(req.word)
    if req.moments is None:
        coeff = goldberg_coeff(word)
    else:
        coeff = goldberg_moment_coeff(
            word, [parse_rational(m) for m in req.moments])
    return GoldbergResponse(word=str(word), coeff=str(coeff))


@app.post("/hausdorff", response_model=HausdorffResponse)
def hausdorff(req: HausdorffRequest) -> HausdorffResponse:
    series = hausdorff_series(req.letters, req.degree)
    return HausdorffResponse(
        text=format_ncpoly(series),
        terms=[NCTermModel(**t) for t in ncpoly_terms_json(series)])


@app.post("/hausdorff/check", response_model=CheckResponse)
def hausdorff_check(req: HausdorffRequest) -> CheckResponse:
    ok, count, mismatch = reconstruct_report(req.letters, req.degree)
    return CheckResponse(passed=ok, coefficients=count, first_mismatch=mismatch)


@app.post("/verify", response_model=VerifyResponse)
def run_verification(req: VerifyRequest) -> VerifyResponse:
    results = verify.run_suite(req.suite, req.max_n)
    return VerifyResponse(
        passed=all(r.passed for r in results),
        suites=[SuiteModel(suite=r.suite, max_n=r.max_n, passed=r.passed,
                           cases=r.cases, failures=r.failures)
                for r in results])
