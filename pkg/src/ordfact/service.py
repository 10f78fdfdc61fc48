"""Service layer: handler functions plus the FastAPI app exposing them.

The CLI calls the same handlers in-process, so the two surfaces cannot
drift apart.  Handlers accept and return the pydantic models from
``ordfact.schemas``; domain errors bubble up as OrderError subclasses
and are translated at each surface.
"""

from __future__ import annotations

import random

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from . import sampling
from .contexts import concept_lattice, concepts_to_json, parse_cxt
from .fibration import diamond, verify_oef_axioms
from .galois import (
    AdjunctionError,
    adjunction_from_json,
    adjunction_to_json,
    classify,
)
from .order import (
    OrderError,
    poset_to_dot,
    preorder_from_json,
    preorder_to_json,
    quotient,
)
from .polar import (
    check_factorization_system,
    closed_polar_factorization,
    open_polar_factorization,
    polar_factorization,
)
from .schemas import (
    CheckRequest,
    CheckResponse,
    ConceptsRequest,
    ConceptsResponse,
    DiamondRequest,
    DiamondResponse,
    FactorizeRequest,
    FactorizeResponse,
    LawRecordModel,
    LawsRequest,
    LawsResponse,
    QuotientRequest,
    QuotientResponse,
)


def handle_check(req: CheckRequest) -> CheckResponse:
    g = adjunction_from_json(req.adjunction.model_dump())
    cls = classify(g)
    return CheckResponse(
        is_reflection=cls.is_reflection,
        is_coreflection=cls.is_coreflection,
        is_pseudo_reflection=cls.is_pseudo_reflection,
        is_pseudo_coreflection=cls.is_pseudo_coreflection,
        is_equivalence=cls.is_equivalence,
        is_isomorphism=cls.is_isomorphism,
    )


_FLAVORS = {
    "full": polar_factorization,
    "closed": closed_polar_factorization,
    "open": open_polar_factorization,
}


def handle_factorize(req: FactorizeRequest) -> FactorizeResponse:
    if req.flavor not in _FLAVORS:
        raise ValueError(f"unknown flavor {req.flavor!r}")
    g = adjunction_from_json(req.adjunction.model_dump())
    fac = _FLAVORS[req.flavor](g)
    return FactorizeResponse(
        flavor=fac.flavor,
        axis=preorder_to_json(fac.axis),
        reflection=adjunction_to_json(fac.reflection),
        coreflection=adjunction_to_json(fac.coreflection),
        identities_verified=fac.identities_verified,
    )


def handle_diamond(req: DiamondRequest) -> DiamondResponse:
    g = adjunction_from_json(req.adjunction.model_dump())
    d = diamond(g)
    return DiamondResponse(
        objects={
            "source": preorder_to_json(d.g.source),
            "target": preorder_to_json(d.g.target),
            "ker_left": preorder_to_json(d.ker_left),
            "ker_right": preorder_to_json(d.ker_right),
            "axis": preorder_to_json(d.axis),
        },
        legs={name: adjunction_to_json(leg) for name, leg in d.legs.items()},
        identities={name: ok for name, ok in d.identities},
    )


def handle_quotient(req: QuotientRequest) -> QuotientResponse:
    P = preorder_from_json(req.preorder.model_dump())
    pw, canon = quotient(P)
    return QuotientResponse(
        poset=preorder_to_json(pw.preorder), canon=list(canon.map)
    )


def handle_concepts(req: ConceptsRequest) -> ConceptsResponse:
    K = parse_cxt(req.cxt)
    pw, concepts = concept_lattice(K)
    payload = concepts_to_json(K, concepts)
    return ConceptsResponse(concepts=payload["concepts"], dot=poset_to_dot(pw))


def _record(rec) -> LawRecordModel:
    return LawRecordModel(
        passed=rec.passed, checked=rec.checked, failures=list(rec.failures)
    )


def handle_laws(req: LawsRequest) -> LawsResponse:
    rng = random.Random(req.seed)
    adjunctions = [
        sampling.random_adjunction_any(rng, req.size_cap) for _ in range(req.samples)
    ]
    squares = [
        sampling.random_fill_square(rng, min(req.size_cap, 3))
        for _ in range(max(1, req.samples // 5))
    ]
    fs = check_factorization_system(adjunctions, squares)
    maps = []
    for g in adjunctions:
        maps.extend([g.left, g.right])
    oef = verify_oef_axioms(maps[: 2 * req.samples], adjunctions, enumeration_cap=3)
    fs_report = {
        "subcategory_laws": _record(fs.subcategory_laws),
        "existence": _record(fs.existence),
        "diagonalization": _record(fs.diagonalization),
        "uniqueness": _record(fs.uniqueness),
    }
    oef_report = {name: _record(rec) for name, rec in oef.records()}
    return LawsResponse(
        seed=req.seed,
        size_cap=req.size_cap,
        samples=req.samples,
        factorization_system=fs_report,
        fibration_axioms=oef_report,
        passed=fs.passed and oef.passed,
    )


app = FastAPI(title="ordfact")


@app.exception_handler(OrderError)
def _order_error(_, exc: OrderError):
    body = {"detail": str(exc)}
    if isinstance(exc, AdjunctionError) and exc.witness is not None:
        body["witness"] = exc.witness
    return JSONResponse(status_code=422, content=body)


@app.post("/check", response_model=CheckResponse)
def check_endpoint(req: CheckRequest):
    return handle_check(req)


@app.post("/factorize", response_model=FactorizeResponse)
def factorize_endpoint(req: FactorizeRequest):
    return handle_factorize(req)


@app.post("/diamond", response_model=DiamondResponse)
def diamond_endpoint(req: DiamondRequest):
    return handle_diamond(req)


@app.post("/quotient", response_model=QuotientResponse)
def quotient_endpoint(req: QuotientRequest):
    return handle_quotient(req)


@app.post("/concepts", response_model=ConceptsResponse)
def concepts_endpoint(req: ConceptsRequest):
    return handle_concepts(req)


@app.post("/laws", response_model=LawsResponse)
def laws_endpoint(req: LawsRequest):
    return handle_laws(req)
