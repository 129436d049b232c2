"""Service layer: the evaluation pipeline behind both the HTTP API and the CLI.

The core functions take and return the pydantic models from schemas; the
FastAPI app is a thin routing shell over them, and the CLI calls them
in-process by default.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException

from . import schemas, so44, spaces
from .criteria import (
    C2Method,
    HypothesesNotMetError,
    decide_c1,
    decide_c2,
    decide_c3,
)
from .exactlin import NotCoveredError
from .homspace import (
    EmbeddingError,
    EmbeddingSpec,
    check_strong_regularity,
    derive_embedding,
    normalize_bh_into_b,
)
from .realform import (
    RealFormDescriptor,
    UnknownRealFormError,
    lookup_real_form,
    rank_profile,
    table1_expected,
    validate_against_table1,
)
from .rootsys import InvalidRootSystemError, InvalidSubsystemError, RootSystemType
from .weyl import EnumerationCapError, WeylGroup


class SpecError(ValueError):
    """The request document does not describe a valid space."""


def _resolve_ambient(model: schemas.AmbientModel) -> RealFormDescriptor:
    if model.name is not None:
        try:
            return lookup_real_form(model.name)
        except UnknownRealFormError as exc:
            raise SpecError(f"unknown real form {model.name!r}") from exc
    if model.family is not None and model.rank is not None:
        try:
            rstype = RootSystemType(model.family, model.rank)
        except InvalidRootSystemError as exc:
            raise SpecError(str(exc)) from exc
        return RealFormDescriptor(f"split({rstype})", rstype)
    raise SpecError("ambient needs either a name or a (family, rank) pair")


def _build_spec(model: schemas.SpaceSpecModel) -> EmbeddingSpec:
    ambient = _resolve_ambient(model.g)
    if model.h.named_form is not None:
        if model.h.named_form == "u_appendix" and ambient.name == "so(4,4)":
            return so44.build_u().spec
        raise SpecError(
            f"no built-in embedding for named_form {model.h.named_form!r} "
            f"inside {ambient.name}"
        )
    try:
        gens = tuple(schemas.parse_vector(v) for v in model.h.subsystem_generators)
        extra = tuple(schemas.parse_vector(v) for v in model.h.extra_abelian_vectors)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    return EmbeddingSpec(
        ambient=ambient, subsystem_generators=gens, extra_abelian_vectors=extra
    )


def evaluate_space(model: schemas.SpaceSpecModel) -> schemas.ReportDocument:
    """Full pipeline: derive, check hypotheses, normalize, decide C1/C2/C3."""
    started = time.perf_counter()
    spec = _build_spec(model)
    try:
        emb = derive_embedding(spec)
    except (InvalidSubsystemError, EmbeddingError) as exc:
        raise SpecError(str(exc)) from exc
    group = WeylGroup(emb.ambient_system, model.options.enumeration_cap)
    g_profile = rank_profile(spec.ambient)
    hypotheses = schemas.HypothesesModel(
        strongly_regular=check_strong_regularity(spec),
        h_inner=emb.h_profile.inner,
    )
    w1, emb = normalize_bh_into_b(emb, group)
    c1 = decide_c1(g_profile, emb.h_profile)
    c2_holds, method, c2_witness = decide_c2(
        emb, group, model.options.force_bruteforce
    )
    c2 = schemas.C2Model(
        holds=c2_holds,
        method=method.value,
        witness_matrix=(
            schemas.fmt_matrix(c2_witness.matrix) if c2_witness else None
        ),
    )
    c3 = _decide_c3_with_fallback(emb, spec.ambient, group)
    ranks = schemas.RanksModel(
        real_g=g_profile.real_rank,
        real_h=emb.h_profile.real_rank,
        ahyp_g=g_profile.ahyp_rank,
        ahyp_h=emb.h_profile.ahyp_rank,
    )
    return schemas.ReportDocument(
        input=model,
        ranks=ranks,
        hypotheses=hypotheses,
        normalization_matrix=schemas.fmt_matrix(w1.matrix),
        c1=c1,
        c2=c2,
        c3=c3,
        timing_ms=round((time.perf_counter() - started) * 1000, 3),
    )


def _decide_c3_with_fallback(emb, ambient, group) -> schemas.C3Model:
    try:
        holds, witness = decide_c3(emb, ambient, group)
    except HypothesesNotMetError:
        # outside the theorem: only so(4,4) with h whose split part is u1
        # has a complete sl(2,R) candidate list to refute against
        if ambient.name == "so(4,4)" and emb.a_h == so44.u1_subspace():
            report = so44.verify_no_proper_sl2(group)
            if report.ok:
                return schemas.C3Model(status="refuted_by_sl2_list", holds=False)
        return schemas.C3Model(status="not_decidable_hypotheses", holds=None)
    return schemas.C3Model(
        status="holds" if holds else "fails",
        holds=holds,
        witness_vector=schemas.fmt_vector(witness) if witness else None,
    )


def rank_profile_response(name: str) -> schemas.RankProfileResponse:
    try:
        d = lookup_real_form(name)
    except UnknownRealFormError as exc:
        raise SpecError(f"unknown real form {name!r}") from exc
    prof = rank_profile(d)
    return schemas.RankProfileResponse(
        name=name,
        restricted_type=str(d.restricted) if d.restricted else None,
        real_rank=prof.real_rank,
        ahyp_rank=prof.ahyp_rank,
        inner=prof.inner,
    )


def table1_response() -> schemas.Table1Response:
    report = validate_against_table1()
    rows = []
    for name in report.matched_rows:
        prof = rank_profile(lookup_real_form(name))
        expected = table1_expected(name)
        rows.append(
            schemas.Table1Row(
                name=name,
                ahyp_rank=prof.ahyp_rank,
                real_rank=prof.real_rank,
                expected_ahyp=expected[0],
                expected_real=expected[1],
                ok=(prof.ahyp_rank, prof.real_rank) == expected,
            )
        )
    return schemas.Table1Response(
        rows=rows, checked=report.checked, failures=report.failures, ok=report.ok
    )


def appendix_response() -> schemas.AppendixResponse:
    summary = so44.appendix_summary()
    return schemas.AppendixResponse(
        strongly_regular=summary["strongly_regular"],
        ranks=schemas.RanksModel(
            real_g=summary["ranks"]["real_g"],
            real_h=summary["ranks"]["real_h"],
            ahyp_g=summary["ranks"]["ahyp_g"],
            ahyp_h=summary["ranks"]["ahyp_h"],
        ),
        table_ok=summary["table_ok"],
        table_failures=summary["table_failures"],
        c2=bool(summary["c2"]),
        sl2_refuted=summary["sl2_refuted"],
        sl2_failures=summary["sl2_failures"],
        c3=bool(summary["c3"]),
    )


def catalog_verify_response() -> schemas.CatalogVerifyResponse:
    rows = []
    for inst in spaces.example_instances():
        sr = check_strong_regularity(inst.spec)
        emb = derive_embedding(inst.spec)
        components = [str(t) for t in emb.h_components]
        expected = [str(t) for t in inst.expected_components]
        rows.append(
            schemas.CatalogVerifyRow(
                label=inst.label,
                strongly_regular=sr,
                components=components,
                expected_components=expected,
                ok=sr and components == expected,
            )
        )
    return schemas.CatalogVerifyResponse(rows=rows, ok=all(r.ok for r in rows))


# -- HTTP surface ----------------------------------------------------------

app = FastAPI(
    title="properact",
    description=(
        "Decides, for homogeneous spaces given by restricted-root data, "
        "whether they admit infinite / non-virtually-abelian properly "
        "discontinuous groups and proper SL(2,R) actions."
    ),
)


def _http(call, *args):
    try:
        return call(*args)
    except SpecError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except EnumerationCapError as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    except (AssertionError, NotCoveredError) as exc:
        raise HTTPException(status_code=500, detail=f"internal consistency: {exc}")


@app.post("/report", response_model=schemas.ReportDocument)
def post_report(spec: schemas.SpaceSpecModel):
    return _http(evaluate_space, spec)


@app.get("/ranks/{name}", response_model=schemas.RankProfileResponse)
def get_ranks(name: str):
    return _http(rank_profile_response, name)


@app.get("/table1", response_model=schemas.Table1Response)
def get_table1():
    return _http(table1_response)


@app.get("/appendix-so44", response_model=schemas.AppendixResponse)
def get_appendix():
    return _http(appendix_response)


@app.get("/catalog-verify", response_model=schemas.CatalogVerifyResponse)
def get_catalog_verify():
    return _http(catalog_verify_response)
