"""Pydantic request/response models for the service wire format."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class AmbientModel(BaseModel):
    free_rank: int = Field(ge=0)
    torsion: list[int] = Field(default_factory=list)


class MonoidModel(BaseModel):
    ambient: AmbientModel
    generators: list[list[int]] = Field(default_factory=list)


class PresentationModel(BaseModel):
    ngens: int = Field(ge=0)
    relations: list[list[list[int]]] = Field(default_factory=list)


class TermModel(BaseModel):
    key: list[int]
    coeff: str


class ElementModel(BaseModel):
    terms: list[TermModel] = Field(default_factory=list)


class IdealModel(BaseModel):
    generators: list[list[int]] = Field(default_factory=list)


# ---- requests --------------------------------------------------------------


class MonoidRequest(BaseModel):
    monoid: MonoidModel


class MemberRequest(BaseModel):
    monoid: MonoidModel
    element: list[int]


class DividesRequest(BaseModel):
    monoid: MonoidModel
    s: list[int]
    t: list[int]


class HomRequest(BaseModel):
    source: MonoidModel
    target: MonoidModel
    images: list[list[int]]
    bound: int = 4


class WordsEqualRequest(BaseModel):
    presentation: PresentationModel
    x: list[int]
    y: list[int]
    bound: int = 12


class PresentationRequest(BaseModel):
    presentation: PresentationModel
    bound: int = 12


class CoequalizerRequest(BaseModel):
    target: PresentationModel
    theta1: list[list[int]]
    theta2: list[list[int]]


class PushoutRequest(BaseModel):
    q1: PresentationModel
    q2: PresentationModel
    u1: list[list[int]]
    u2: list[list[int]]


class FaceRequest(BaseModel):
    monoid: MonoidModel
    face: list[int]


class IdealRequest(BaseModel):
    monoid: MonoidModel
    ideal: IdealModel
    bound: int = 6


class TwoIdealRequest(BaseModel):
    monoid: MonoidModel
    i: IdealModel
    j: IdealModel
    bound: int = 6


class IdealMemberRequest(BaseModel):
    monoid: MonoidModel
    ideal: IdealModel
    element: list[int]


class PrimeRequest(BaseModel):
    monoid: MonoidModel
    prime: list[int]  # generator mask of the complement face


class ValuationVectorRequest(BaseModel):
    monoid: MonoidModel
    element: list[int]


class CountBallRequest(BaseModel):
    monoid: MonoidModel
    h: list[int]
    radius: int


class SaturationCheckRequest(BaseModel):
    monoid: MonoidModel
    radius: int = 4


class AlgebraBinaryRequest(BaseModel):
    monoid: MonoidModel
    f: ElementModel
    g: ElementModel


class AlgebraUnaryRequest(BaseModel):
    monoid: MonoidModel
    f: ElementModel


class AlgebraIdealRequest(BaseModel):
    monoid: MonoidModel
    f: ElementModel
    ideal: IdealModel


class AlgebraFaceRequest(BaseModel):
    monoid: MonoidModel
    f: ElementModel
    face: list[int]


class RetractRequest(BaseModel):
    monoid: MonoidModel
    f: ElementModel
    face: list[int]
    h: list[int]
    t: Optional[str] = None


class AlgebraPrimeRequest(BaseModel):
    monoid: MonoidModel
    f: ElementModel
    prime: list[int]


class SeriesBasisRequest(BaseModel):
    monoid: MonoidModel
    order: int = Field(ge=0)


class SeriesMulRequest(BaseModel):
    monoid: MonoidModel
    order: int = Field(ge=0)
    a: ElementModel
    b: ElementModel


class CofinalityRequest(BaseModel):
    monoid: MonoidModel
    h: list[int]
    n: int = Field(ge=0)


class ReesContainsRequest(BaseModel):
    monoid: MonoidModel
    ideal: IdealModel
    m: int = Field(ge=0)
    p: list[int]


class MatrixRequest(BaseModel):
    matrix: list[list[int]]


class HilbertRequest(BaseModel):
    rays: list[list[int]]
    dim: int = Field(ge=0)


class SolveNonnegRequest(BaseModel):
    ambient: AmbientModel
    gens: list[list[int]]
    target: list[int]
    bound: int = Field(ge=0)

