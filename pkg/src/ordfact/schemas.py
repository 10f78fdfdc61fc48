"""Pydantic request/response models shared by the HTTP service and the CLI."""

from __future__ import annotations

from pydantic import BaseModel


class PreorderModel(BaseModel):
    elements: list[str]
    leq: list[list[bool]]


class MapModel(BaseModel):
    src: PreorderModel
    tgt: PreorderModel
    map: list[int]


class AdjunctionModel(BaseModel):
    left: MapModel
    right: MapModel


class CheckRequest(BaseModel):
    adjunction: AdjunctionModel


class CheckResponse(BaseModel):
    is_reflection: bool
    is_coreflection: bool
    is_pseudo_reflection: bool
    is_pseudo_coreflection: bool
    is_equivalence: bool
    is_isomorphism: bool


class FactorizeRequest(BaseModel):
    adjunction: AdjunctionModel
    flavor: str = "full"


class FactorizeResponse(BaseModel):
    flavor: str
    axis: PreorderModel
    reflection: AdjunctionModel
    coreflection: AdjunctionModel
    identities_verified: bool


class DiamondRequest(BaseModel):
    adjunction: AdjunctionModel


class DiamondResponse(BaseModel):
    objects: dict[str, PreorderModel]
    legs: dict[str, AdjunctionModel]
    identities: dict[str, bool]


class QuotientRequest(BaseModel):
    preorder: PreorderModel


class QuotientResponse(BaseModel):
    poset: PreorderModel
    canon: list[int]


class ConceptModel(BaseModel):
    extent: list[str]
    intent: list[str]


class ConceptsRequest(BaseModel):
    cxt: str


class ConceptsResponse(BaseModel):
    concepts: list[ConceptModel]
    dot: str


class LawsRequest(BaseModel):
    seed: int = 0
    size_cap: int = 4
    samples: int = 25


class LawRecordModel(BaseModel):
    passed: bool
    checked: int
    failures: list[str]


class LawsResponse(BaseModel):
    seed: int
    size_cap: int
    samples: int
    factorization_system: dict[str, LawRecordModel]
    fibration_axioms: dict[str, LawRecordModel]
    passed: bool
