"""Pydantic request/response models for the HTTP service.

All numeric payloads travel as exact rational strings ("num" or "num/den");
polynomials are coefficient arrays ascending by degree, matrices are
row-major arrays of arrays.
"""

from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field

PolyJSON = list[str]
MatrixJSON = list[list[str]]
CoordsJSON = list[str]


class NaturalRepDef(BaseModel):
    dim: int
    basis_images: list[MatrixJSON]


class OrderDef(BaseModel):
    """Order file format: basis size, labels, unity coordinates and the
    rank^3 integer multiplication table."""

    rank: int
    labels: list[str]
    unity: list[int]
    structure_constants: list[list[list[int]]]
    spectral_degree: Optional[int] = None
    natural_rep: Optional[NaturalRepDef] = None


OrderRef = Union[str, OrderDef]


class SampleSpec(BaseModel):
    """How to assemble a sample of elements: explicit coordinate vectors,
    all residues mod m, and/or seeded random integer-coordinate elements."""

    elements: Optional[list[CoordsJSON]] = None
    mod: Optional[int] = None
    random_count: Optional[int] = None
    seed: int = 0
    coord_bound: int = 20


class MatrixRequest(BaseModel):
    matrix: MatrixJSON


class PolyResponse(BaseModel):
    coefficients: PolyJSON
    pretty: str


class IntegralCheckResponse(BaseModel):
    integral: bool
    minimal_polynomial: PolyResponse


class CompanionRequest(BaseModel):
    poly: PolyJSON


class MatrixResponse(BaseModel):
    matrix: MatrixJSON


class MemberIntRequest(BaseModel):
    poly: PolyJSON
    order: OrderRef


class VerdictResponse(BaseModel):
    verdict: str
    checked_count: int
    witness: Optional[CoordsJSON] = None
    witness_value: Optional[CoordsJSON] = None
    certificate: Optional[PolyJSON] = None


class MemberIntvalRequest(BaseModel):
    poly: PolyJSON
    order: OrderRef
    sample: SampleSpec
    whole_algebra: bool = False


class PullbackRequest(BaseModel):
    poly: PolyJSON
    modulus: PolyJSON


class PullbackResponse(BaseModel):
    member: bool
    remainder: PolyResponse


class CertificateBuildRequest(BaseModel):
    poly: PolyJSON
    order: OrderRef


class CertificateBuildResponse(BaseModel):
    certificate: PolyJSON
    degree: int
    factor_count: int
    denominator: int
    modulus: int


class CertificateVerifyRequest(BaseModel):
    certificate: PolyJSON
    poly: PolyJSON
    order: OrderRef
    sample: SampleSpec


class CertificateVerifyResponse(BaseModel):
    ok: bool
    sample_size: int


class ChainRequest(BaseModel):
    poly: PolyJSON
    order: OrderRef
    sample: SampleSpec


class ChainResponse(BaseModel):
    pullback_sample: bool
    member_int: str
    member_intval_sample: str
    implications_ok: bool
    sample_size: int
    checked_count: int
    witness: Optional[CoordsJSON] = None


class ThreeSquaresResponse(BaseModel):
    n: int
    decomposition: Optional[list[int]] = None


class HurwitzMatchRequest(BaseModel):
    quaternion: CoordsJSON = Field(description="coordinates on (1, i, j, k)")


class HurwitzMatchResponse(BaseModel):
    match_quaternion: CoordsJSON
    match_coords: CoordsJSON
    minimal_polynomial: PolyResponse


class DensityRefuteRequest(BaseModel):
    poly: PolyJSON
    order: OrderRef
    candidates: Optional[list[CoordsJSON]] = None


class DensityCompanionRequest(BaseModel):
    degree: int = 2
    height: int = 1
    irreducible_only: bool = False
    seed: int = 0
    count: int = 200


class DensityTriangularRequest(BaseModel):
    max_dim: int = 4
    seed: int = 0
    count: int = 200


class DensitySpectrumTransferRequest(BaseModel):
    seed: int = 0
    count: int = 200


class DensityReport(BaseModel):
    check: str
    instances: int
    failures: list[dict]
    witness: Optional[CoordsJSON] = None


class ExampleRequest(BaseModel):
    seed: int = 0
    count: Optional[int] = None


class ExampleAssertion(BaseModel):
    name: str
    ok: bool

    model_config = {"extra": "allow"}


class ExampleReport(BaseModel):
    example: str
    ok: bool
    assertions: list[ExampleAssertion]


class OrdersResponse(BaseModel):
    builtins: list[str]


class HealthResponse(BaseModel):
    status: str
