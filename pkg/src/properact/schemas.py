"""Pydantic request/response models for the service and the CLI.

All rational values cross the wire as "p/q" strings (plain integers are
accepted on input) so exactness survives serialization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from .exactlin import Mat, Vec

Scalar = Union[int, str]


def parse_vector(coords: list[Scalar]) -> Vec:
    try:
        return tuple(Fraction(c) for c in coords)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational coordinate in {coords}: {exc}") from exc


def fmt_scalar(x: Fraction) -> str:
    return str(x)


def fmt_vector(v: Vec) -> list[str]:
    return [fmt_scalar(x) for x in v]


def fmt_matrix(m: Mat) -> list[list[str]]:
    return [fmt_vector(row) for row in m]


class AmbientModel(BaseModel):
    """The ambient group: by catalog name, or as a bare restricted system."""

    name: Optional[str] = None
    family: Optional[str] = None
    rank: Optional[int] = None


class SubgroupModel(BaseModel):
    subsystem_generators: list[list[Scalar]] = Field(default_factory=list)
    extra_abelian_vectors: list[list[Scalar]] = Field(default_factory=list)
    named_form: Optional[str] = None


class OptionsModel(BaseModel):
    force_bruteforce: bool = False
    enumeration_cap: int = 2_000_000


class SpaceSpecModel(BaseModel):
    g: AmbientModel
    h: SubgroupModel = Field(default_factory=SubgroupModel)
    options: OptionsModel = Field(default_factory=OptionsModel)


class RanksModel(BaseModel):
    real_g: int
    real_h: int
    ahyp_g: int
    ahyp_h: int


class HypothesesModel(BaseModel):
    strongly_regular: bool
    h_inner: bool


class C2Model(BaseModel):
    holds: bool
    method: Literal["rank_fast_path", "benoist_bruteforce"]
    witness_matrix: Optional[list[list[str]]] = None


class C3Model(BaseModel):
    status: Literal[
        "holds", "fails", "not_decidable_hypotheses", "refuted_by_sl2_list"
    ]
    holds: Optional[bool] = None
    witness_vector: Optional[list[str]] = None


class ReportDocument(BaseModel):
    input: SpaceSpecModel
    ranks: RanksModel
    hypotheses: HypothesesModel
    normalization_matrix: list[list[str]]
    c1: bool
    c2: C2Model
    c3: C3Model
    timing_ms: float


class RankProfileResponse(BaseModel):
    name: str
    restricted_type: Optional[str]
    real_rank: int
    ahyp_rank: int
    inner: bool


class Table1Row(BaseModel):
    name: str
    ahyp_rank: int
    real_rank: int
    expected_ahyp: Optional[int] = None
    expected_real: Optional[int] = None
    ok: bool


class Table1Response(BaseModel):
    rows: list[Table1Row]
    checked: int
    failures: list[str]
    ok: bool


class AppendixResponse(BaseModel):
    strongly_regular: bool
    ranks: RanksModel
    table_ok: bool
    table_failures: list[str]
    c2: bool
    sl2_refuted: bool
    sl2_failures: list[str]
    c3: bool


class CatalogVerifyRow(BaseModel):
    label: str
    strongly_regular: bool
    components: list[str]
    expected_components: list[str]
    ok: bool


class CatalogVerifyResponse(BaseModel):
    rows: list[CatalogVerifyRow]
    ok: bool
