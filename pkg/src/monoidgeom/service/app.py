"""FastAPI service exposing the monoid kernel.

Every endpoint accepts and returns JSON; successful responses are wrapped in
``{"ok": true, "result": ...}`` and domain errors arrive as HTTP 422 with
``{"ok": false, "error": ..., "detail": ...}``.  The CLI is a thin client of
this app (in-process by default).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import algebra as alg
from .. import duality as dual_mod
from .. import presentation as pres_mod
from .. import specm
from ..affine import (
    AffineMonoid,
    MonoidHom,
    classify_dim1,
    dominating_valuative,
    embed_sharp,
    is_exact_hom,
    is_local_hom,
)
from ..errors import MonoidGeomError
from ..lattice import IntMatrix, cokernel, smith_normal_form, solve_nonneg
from ..cones import hilbert_basis
from ..serialization import (
    coeff_to_str,
    element_coords,
    element_from_json,
    element_to_json,
    group_from_json,
    group_to_json,
    ideal_from_json,
    ideal_to_json,
    monoid_from_json,
    monoid_to_json,
    presentation_from_json,
    presentation_to_json,
)
from . import models as m

app = FastAPI(title="monoidgeom", version="0.1.0")


@app.exception_handler(MonoidGeomError)
async def domain_error_handler(_: Request, exc: MonoidGeomError):
    return JSONResponse(
        status_code=422,
        content={"ok": False, "error": type(exc).__name__, "detail": str(exc)},
    )


@app.exception_handler(ValueError)
async def value_error_handler(_: Request, exc: ValueError):
    return JSONResponse(
        status_code=422,
        content={"ok": False, "error": "ValueError", "detail": str(exc)},
    )


@app.exception_handler(RequestValidationError)
async def validation_error_handler(_: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=422,
        content={"ok": False, "error": "ValidationError", "detail": str(exc.errors())},
    )


def ok(result):
    return {"ok": True, "result": result}


def _monoid(model: m.MonoidModel) -> AffineMonoid:
    return monoid_from_json(model.model_dump())


def _element(mon: AffineMonoid, coords: list[int]):
    return mon.ambient.from_flat(coords)


def _face(mon: AffineMonoid, mask: list[int]) -> specm.Face:
    want = frozenset(int(i) for i in mask)
    for f in specm.faces(mon):
        if f.gen_mask == want:
            return f
    raise MonoidGeomError(f"no face with generator mask {sorted(want)}")


def _prime(mon: AffineMonoid, mask: list[int]) -> specm.PrimeIdeal:
    return specm.PrimeIdeal(_face(mon, mask))


def _ideal(mon: AffineMonoid, model: m.IdealModel) -> specm.MonoidIdeal:
    return ideal_from_json(mon, model.model_dump())


def _alg_element(mon: AffineMonoid, model: m.ElementModel):
    return element_from_json(mon, model.model_dump())


def _face_json(f: specm.Face) -> dict:
    return {"mask": sorted(f.gen_mask), "functional": list(f.functional)}


def _poset_json(s: specm.SpecPoset) -> dict:
    return {
        "primes": [sorted(p.face.gen_mask) for p in s.primes],
        "heights": s.heights(),
        "dimension": s.dimension(),
        "generic": s.generic_index,
        "closed": s.closed_index,
        "order": [[bool(x) for x in row] for row in s.order],
    }


def _verdict_json(status, witness=None, reason: str = "") -> dict:
    out = {"status": status.value, "reason": reason}
    if witness is not None:
        out["witness"] = witness
    return out


# --------------------------------------------------------------------------
# monoid


@app.post("/monoid/info")
def monoid_info(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    out = {
        "fine": q.is_fine(),
        "sharp": q.is_sharp(),
        "dull": q.is_dull(),
        "saturated": q.is_saturated(),
        "toric": q.is_toric(),
        "valuative": q.is_valuative(),
        "dimension": specm.dimension(q),
        "gp_invariants": list(q.gp.invariants()[1]),
        "gp_rank": q.gp.invariants()[0],
        "unit_generators": [element_coords(g) for g in q.units.gens],
        "faces": len(specm.faces(q)),
    }
    if q.is_sharp():
        out["irreducibles"] = [element_coords(g) for g in q.irreducibles()]
    return ok(out)


@app.post("/monoid/contains")
def monoid_contains(req: m.MemberRequest):
    q = _monoid(req.monoid)
    coeffs = q.membership_coeffs(_element(q, req.element))
    return ok({"contains": coeffs is not None, "coefficients": coeffs})


@app.post("/monoid/divides")
def monoid_divides(req: m.DividesRequest):
    q = _monoid(req.monoid)
    return ok({"divides": q.divides(_element(q, req.s), _element(q, req.t))})


@app.post("/monoid/saturate")
def monoid_saturate(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    return ok({"monoid": monoid_to_json(q.saturate())})


@app.post("/monoid/units")
def monoid_units(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    rank, tors = q.units.invariants()
    return ok(
        {
            "generators": [element_coords(g) for g in q.units.gens],
            "invariants": {"free_rank": rank, "torsion": list(tors)},
        }
    )


@app.post("/monoid/sharpen")
def monoid_sharpen(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    sharp, hom = q.sharpen()
    return ok(
        {
            "monoid": monoid_to_json(sharp),
            "images": [element_coords(im) for im in hom.images],
        }
    )


@app.post("/monoid/irreducibles")
def monoid_irreducibles(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    return ok({"elements": [element_coords(g) for g in q.irreducibles()]})


@app.post("/monoid/embed-sharp")
def monoid_embed_sharp(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    hom = embed_sharp(q)
    return ok(
        {
            "target": monoid_to_json(hom.target),
            "images": [element_coords(im) for im in hom.images],
        }
    )


@app.post("/monoid/classify-dim1")
def monoid_classify_dim1(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    split = classify_dim1(q)
    rank, tors = split.unit_invariants
    return ok(
        {
            "unit_invariants": {"free_rank": rank, "torsion": list(tors)},
            "generator": element_coords(split.generator),
        }
    )


@app.post("/monoid/dominate")
def monoid_dominate(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    dom = dominating_valuative(q)
    return ok(
        {
            "weights": list(dom.weights),
            "monoid": monoid_to_json(dom.monoid),
        }
    )


def _hom(req: m.HomRequest) -> MonoidHom:
    src = _monoid(req.source)
    tgt = _monoid(req.target)
    images = tuple(tgt.ambient.from_flat(v) for v in req.images)
    return MonoidHom(src, tgt, images)


@app.post("/monoid/is-local-hom")
def monoid_is_local(req: m.HomRequest):
    return ok({"local": is_local_hom(_hom(req))})


@app.post("/monoid/is-exact-hom")
def monoid_is_exact(req: m.HomRequest):
    verdict = is_exact_hom(_hom(req), req.bound)
    witness = None
    if verdict.witness is not None:
        witness = [element_coords(x) for x in verdict.witness]
    return ok(_verdict_json(verdict.status, witness))


# --------------------------------------------------------------------------
# presentations


@app.post("/pres/words-equal")
def pres_words_equal(req: m.WordsEqualRequest):
    p = presentation_from_json(req.presentation.model_dump())
    v = pres_mod.words_equal(p, tuple(req.x), tuple(req.y), req.bound)
    witness = None
    if v.witness is not None:
        witness = {
            "chain": [list(w) for w in v.witness.chain],
            "steps": [
                {
                    "relation": s.relation,
                    "forward": s.forward,
                    "translation": list(s.translation),
                }
                for s in v.witness.steps
            ],
        }
    return ok(_verdict_json(v.status, witness, v.reason))


@app.post("/pres/coequalizer")
def pres_coequalizer(req: m.CoequalizerRequest):
    q = presentation_from_json(req.target.model_dump())
    out = pres_mod.coequalizer(q, [tuple(t) for t in req.theta1], [tuple(t) for t in req.theta2])
    return ok({"presentation": presentation_to_json(out)})


@app.post("/pres/pushout")
def pres_pushout(req: m.PushoutRequest):
    q1 = presentation_from_json(req.q1.model_dump())
    q2 = presentation_from_json(req.q2.model_dump())
    out = pres_mod.pushout(q1, q2, [tuple(t) for t in req.u1], [tuple(t) for t in req.u2])
    return ok({"presentation": presentation_to_json(out)})


@app.post("/pres/groupify")
def pres_groupify(req: m.PresentationRequest):
    p = presentation_from_json(req.presentation.model_dump())
    group, images = pres_mod.groupify(p)
    return ok(
        {
            "group": group_to_json(group),
            "images": [element_coords(im) for im in images],
        }
    )


@app.post("/pres/integralize")
def pres_integralize(req: m.PresentationRequest):
    p = presentation_from_json(req.presentation.model_dump())
    return ok({"monoid": monoid_to_json(pres_mod.integralize(p))})


@app.post("/pres/is-integral")
def pres_is_integral(req: m.PresentationRequest):
    p = presentation_from_json(req.presentation.model_dump())
    v = pres_mod.is_integral(p, req.bound)
    witness = [list(w) for w in v.witness] if v.witness is not None else None
    return ok(_verdict_json(v.status, witness, v.reason))


# --------------------------------------------------------------------------
# spectrum


@app.post("/spec/faces")
def spec_faces(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    return ok({"faces": [_face_json(f) for f in specm.faces(q)]})


@app.post("/spec/poset")
def spec_poset(req: m.MonoidRequest):
    return ok(_poset_json(specm.spec(_monoid(req.monoid))))


@app.post("/spec/dot")
def spec_dot(req: m.MonoidRequest):
    return ok({"dot": specm.spec_dot(specm.spec(_monoid(req.monoid)))})


@app.post("/spec/face-dot")
def spec_face_dot(req: m.MonoidRequest):
    return ok({"dot": specm.face_lattice_dot(_monoid(req.monoid))})


@app.post("/spec/dimension")
def spec_dimension(req: m.MonoidRequest):
    return ok({"dimension": specm.dimension(_monoid(req.monoid))})


@app.post("/spec/height")
def spec_height(req: m.PrimeRequest):
    q = _monoid(req.monoid)
    return ok({"height": specm.height(_prime(q, req.prime))})


@app.post("/spec/localize")
def spec_localize(req: m.FaceRequest):
    q = _monoid(req.monoid)
    loc, _ = specm.localize(q, _face(q, req.face))
    return ok({"monoid": monoid_to_json(loc)})


@app.post("/spec/ideal-minimal")
def spec_ideal_minimal(req: m.IdealRequest):
    q = _monoid(req.monoid)
    gens = specm.minimal_ideal_generators(_ideal(q, req.ideal))
    return ok({"generators": [element_coords(g) for g in gens]})


@app.post("/spec/ideal-contains")
def spec_ideal_contains(req: m.IdealMemberRequest):
    q = _monoid(req.monoid)
    return ok({"contains": _ideal(q, req.ideal).contains(_element(q, req.element))})


@app.post("/spec/ideal-sum")
def spec_ideal_sum(req: m.TwoIdealRequest):
    q = _monoid(req.monoid)
    out = specm.ideal_union(_ideal(q, req.i), _ideal(q, req.j))
    return ok(ideal_to_json(out))


@app.post("/spec/ideal-product")
def spec_ideal_product(req: m.TwoIdealRequest):
    q = _monoid(req.monoid)
    out = specm.ideal_product(_ideal(q, req.i), _ideal(q, req.j))
    return ok(ideal_to_json(out))


@app.post("/spec/ideal-intersection")
def spec_ideal_intersection(req: m.TwoIdealRequest):
    q = _monoid(req.monoid)
    out = specm.ideal_intersection(_ideal(q, req.i), _ideal(q, req.j), req.bound)
    return ok(ideal_to_json(out))


@app.post("/spec/radical-contains")
def spec_radical_contains(req: m.IdealMemberRequest):
    q = _monoid(req.monoid)
    return ok(
        {"contains": specm.radical_contains(_ideal(q, req.ideal), _element(q, req.element))}
    )


@app.post("/spec/radical")
def spec_radical(req: m.IdealRequest):
    q = _monoid(req.monoid)
    gens = specm.radical_generators(_ideal(q, req.ideal))
    return ok({"generators": [element_coords(g) for g in gens]})


@app.post("/spec/primary")
def spec_primary(req: m.IdealRequest):
    q = _monoid(req.monoid)
    v = specm.is_primary(_ideal(q, req.ideal), req.bound)
    witness = None
    if v.witness is not None:
        witness = [element_coords(x) for x in v.witness]
    return ok(_verdict_json(v.status, witness))


@app.post("/spec/idealized")
def spec_idealized_route(req: m.IdealRequest):
    q = _monoid(req.monoid)
    im = specm.IdealizedMonoid(q, _ideal(q, req.ideal))
    return ok(_poset_json(specm.spec_idealized(im)))


# --------------------------------------------------------------------------
# duality


@app.post("/dual/dual")
def dual_dual(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    h = dual_mod.dual(q)
    profiles = [[q.pair_dual(hb, g) for g in q.gens] for hb in q.dual_basis]
    return ok({"monoid": monoid_to_json(h), "profiles": profiles})


@app.post("/dual/double-dual")
def dual_double_dual(req: m.MonoidRequest):
    q = _monoid(req.monoid)
    dd = dual_mod.double_dual_iso(q)
    return ok(
        {
            "core": monoid_to_json(dd.core),
            "double_dual": monoid_to_json(dd.double_dual),
            "pairs": [
                [element_coords(a), element_coords(b)] for a, b in dd.pairs
            ],
        }
    )


@app.post("/dual/face-perp")
def dual_face_perp(req: m.FaceRequest):
    q = _monoid(req.monoid)
    perp = dual_mod.face_perp(q, _face(q, req.face))
    return ok(_face_json(perp))


@app.post("/dual/face-perp-inverse")
def dual_face_perp_inverse(req: m.FaceRequest):
    q = _monoid(req.monoid)
    h = dual_mod.dual(q)
    want = frozenset(int(i) for i in req.face)
    target = None
    for f in specm.faces(h):
        if f.gen_mask == want:
            target = f
            break
    if target is None:
        raise MonoidGeomError(f"no dual face with mask {sorted(want)}")
    back = dual_mod.perp_of_dual_face(q, target)
    return ok(_face_json(back))


@app.post("/dual/valuation")
def dual_valuation(req: m.PrimeRequest):
    q = _monoid(req.monoid)
    v = dual_mod.height1_valuation(q, _prime(q, req.prime))
    return ok(
        {
            "functional": list(v.functional),
            "divisor": v.divisor,
            "values_on_generators": [v.value(g) for g in q.gens],
        }
    )


@app.post("/dual/valuation-vector")
def dual_valuation_vector(req: m.ValuationVectorRequest):
    q = _monoid(req.monoid)
    vv = dual_mod.valuation_vector(q, _element(q, req.element))
    return ok(
        {"values": [{"prime": sorted(p.face.gen_mask), "value": n} for p, n in vv]}
    )


@app.post("/dual/count-ball")
def dual_count_ball(req: m.CountBallRequest):
    q = _monoid(req.monoid)
    return ok({"count": dual_mod.count_ball(q, req.h, req.radius)})


@app.post("/dual/saturation-check")
def dual_saturation_check(req: m.SaturationCheckRequest):
    q = _monoid(req.monoid)
    return ok({"holds": dual_mod.saturation_by_valuations_check(q, req.radius)})


# --------------------------------------------------------------------------
# algebra


@app.post("/algebra/add")
def algebra_add(req: m.AlgebraBinaryRequest):
    q = _monoid(req.monoid)
    out = _alg_element(q, req.f) + _alg_element(q, req.g)
    return ok({"element": element_to_json(out)})


@app.post("/algebra/mul")
def algebra_mul(req: m.AlgebraBinaryRequest):
    q = _monoid(req.monoid)
    out = _alg_element(q, req.f) * _alg_element(q, req.g)
    return ok({"element": element_to_json(out)})


@app.post("/algebra/counit")
def algebra_counit(req: m.AlgebraUnaryRequest):
    q = _monoid(req.monoid)
    return ok({"value": coeff_to_str(alg.counit(_alg_element(q, req.f)))})


@app.post("/algebra/vertex")
def algebra_vertex(req: m.AlgebraUnaryRequest):
    q = _monoid(req.monoid)
    return ok({"value": coeff_to_str(alg.vertex_eval(_alg_element(q, req.f)))})


@app.post("/algebra/comul")
def algebra_comul(req: m.AlgebraUnaryRequest):
    q = _monoid(req.monoid)
    pairs = alg.comul(_alg_element(q, req.f))
    return ok(
        {
            "pairs": [
                {
                    "left": element_coords(a),
                    "right": element_coords(b),
                    "coeff": coeff_to_str(c),
                }
                for (a, b), c in pairs
            ]
        }
    )


@app.post("/algebra/support")
def algebra_support(req: m.AlgebraUnaryRequest):
    q = _monoid(req.monoid)
    return ok({"keys": [element_coords(k) for k in alg.support(_alg_element(q, req.f))]})


@app.post("/algebra/support-ideal")
def algebra_support_ideal(req: m.AlgebraUnaryRequest):
    q = _monoid(req.monoid)
    return ok(ideal_to_json(alg.support_ideal(_alg_element(q, req.f))))


@app.post("/algebra/quotient-project")
def algebra_quotient_project(req: m.AlgebraIdealRequest):
    q = _monoid(req.monoid)
    out = alg.quotient_project(_alg_element(q, req.f), _ideal(q, req.ideal))
    return ok({"element": element_to_json(out.base)})


@app.post("/algebra/face-restrict")
def algebra_face_restrict(req: m.AlgebraFaceRequest):
    q = _monoid(req.monoid)
    out = alg.face_restrict(_alg_element(q, req.f), _face(q, req.face))
    return ok({"element": element_to_json(out), "face_monoid": monoid_to_json(out.monoid)})


@app.post("/algebra/face-pull")
def algebra_face_pull(req: m.AlgebraFaceRequest):
    q = _monoid(req.monoid)
    face = _face(q, req.face)
    g = element_from_json(face.submonoid(), req.f.model_dump())
    return ok({"element": element_to_json(alg.face_pull(g, q))})


@app.post("/algebra/retract")
def algebra_retract(req: m.RetractRequest):
    q = _monoid(req.monoid)
    rh = alg.retract_homotopy(_alg_element(q, req.f), _face(q, req.face), req.h)
    out = {
        "terms": [
            {"key": element_coords(k), "degree": d, "coeff": coeff_to_str(c)}
            for k, d, c in rh.terms
        ],
        "at_zero": element_to_json(rh.specialize(0)),
        "at_one": element_to_json(rh.specialize(1)),
    }
    if req.t is not None:
        out["at_t"] = element_to_json(rh.specialize(req.t))
    return ok(out)


@app.post("/algebra/vp")
def algebra_vp(req: m.AlgebraPrimeRequest):
    q = _monoid(req.monoid)
    return ok({"value": alg.vp_element(q, _prime(q, req.prime), _alg_element(q, req.f))})


@app.post("/algebra/principal-support")
def algebra_principal_support(req: m.AlgebraUnaryRequest):
    q = _monoid(req.monoid)
    p = alg.is_principal_support(_alg_element(q, req.f))
    return ok({"principal": p is not None, "generator": element_coords(p) if p else None})


@app.post("/algebra/reduced")
def algebra_reduced(req: m.IdealRequest):
    q = _monoid(req.monoid)
    return ok({"reduced": alg.is_reduced_quotient(q, _ideal(q, req.ideal))})


@app.post("/algebra/hypersurface")
def algebra_hypersurface(req: m.MemberRequest):
    q = _monoid(req.monoid)
    comps = alg.hypersurface_components(q, _element(q, req.element))
    return ok({"primes": [sorted(p.face.gen_mask) for p in comps]})


# --------------------------------------------------------------------------
# series and Rees


@app.post("/series/basis")
def series_basis_route(req: m.SeriesBasisRequest):
    q = _monoid(req.monoid)
    return ok({"basis": [element_coords(x) for x in alg.series_basis(q, req.order)]})


@app.post("/series/mul")
def series_mul_route(req: m.SeriesMulRequest):
    q = _monoid(req.monoid)
    a = alg.TruncatedSeries.from_terms(
        q, req.order, _alg_element(q, req.a).terms
    )
    b = alg.TruncatedSeries.from_terms(
        q, req.order, _alg_element(q, req.b).terms
    )
    out = alg.series_mul(a, b)
    return ok(
        {
            "order": out.order,
            "terms": [
                {"key": element_coords(k), "coeff": coeff_to_str(c)} for k, c in out.terms
            ],
        }
    )


@app.post("/series/cofinality")
def series_cofinality(req: m.CofinalityRequest):
    q = _monoid(req.monoid)
    m1, m2 = alg.cofinality_check(q, req.h, req.n)
    return ok({"m1": m1, "m2": m2})


@app.post("/rees/build")
def rees_build(req: m.IdealRequest):
    q = _monoid(req.monoid)
    b = alg.rees(q, _ideal(q, req.ideal))
    return ok({"monoid": monoid_to_json(b.monoid)})


@app.post("/rees/contains")
def rees_contains(req: m.ReesContainsRequest):
    q = _monoid(req.monoid)
    b = alg.rees(q, _ideal(q, req.ideal))
    return ok({"contains": b.contains_pair(req.m, _element(q, req.p))})


# --------------------------------------------------------------------------
# lattice utilities


@app.post("/lattice/snf")
def lattice_snf(req: m.MatrixRequest):
    a = IntMatrix.from_rows(req.matrix)
    u, d, v = smith_normal_form(a)
    return ok({"u": u.tolists(), "d": d.tolists(), "v": v.tolists()})


@app.post("/lattice/cokernel")
def lattice_cokernel(req: m.MatrixRequest):
    if not req.matrix:
        raise MonoidGeomError("matrix must have at least one row (use zeros)")
    group, _ = cokernel(IntMatrix.from_rows(req.matrix))
    return ok({"group": group_to_json(group)})


@app.post("/lattice/hilbert")
def lattice_hilbert(req: m.HilbertRequest):
    return ok({"basis": [list(v) for v in hilbert_basis(req.rays, req.dim)]})


@app.post("/lattice/solve-nonneg")
def lattice_solve_nonneg(req: m.SolveNonnegRequest):
    amb = group_from_json(req.ambient.model_dump())
    gens = [amb.from_flat(v) for v in req.gens]
    sol = solve_nonneg(gens, amb.from_flat(req.target), req.bound)
    return ok({"solution": sol})
