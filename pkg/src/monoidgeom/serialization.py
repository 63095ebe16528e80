"""JSON encoding of monoids, presentations, ideals and algebra elements.

Wire formats:
  monoid        {"ambient": {"free_rank": r, "torsion": [d1, ...]},
                 "generators": [[free..., tors...], ...]}
  presentation  {"ngens": n, "relations": [[[...], [...]], ...]}
  element       {"terms": [{"key": [free..., tors...], "coeff": "a/b"}]}
  ideal         {"generators": [[free..., tors...], ...]}

Rational coefficients travel as strings so nothing is lost to floating
point.  ``canonical_dumps`` fixes key order and separators, so identical
values always serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .affine import AffineMonoid
from .algebra import AlgebraElement, TruncatedSeries
from .errors import MonoidGeomError
from .lattice import AbelianGroup, GroupElement
from .presentation import Presentation
from .specm import MonoidIdeal


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def group_to_json(g: AbelianGroup) -> dict:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def group_from_json(d: dict) -> AbelianGroup:
    try:
        return AbelianGroup(int(d["free_rank"]), tuple(int(x) for x in d.get("torsion", [])))
    except (KeyError, TypeError, ValueError) as exc:
        raise MonoidGeomError(f"bad ambient group: {exc}") from exc


def element_coords(x: GroupElement) -> list[int]:
    return list(x.free) + list(x.tors)


def monoid_to_json(m: AffineMonoid) -> dict:
    return {
        "ambient": group_to_json(m.ambient),
        "generators": [element_coords(g) for g in m.gens],
    }


def monoid_from_json(d: dict) -> AffineMonoid:
    amb = group_from_json(d.get("ambient", {}))
    gens = []
    for coords in d.get("generators", []):
        gens.append(amb.from_flat([int(c) for c in coords]))
    return AffineMonoid.from_generators(amb, gens)


def presentation_to_json(p: Presentation) -> dict:
    return {
        "ngens": p.ngens,
        "relations": [[list(l), list(r)] for l, r in p.relations],
    }


def presentation_from_json(d: dict) -> Presentation:
    try:
        return Presentation.make(int(d["ngens"]), [(l, r) for l, r in d.get("relations", [])])
    except (KeyError, TypeError, ValueError) as exc:
        raise MonoidGeomError(f"bad presentation: {exc}") from exc


def coeff_to_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def element_to_json(f: AlgebraElement) -> dict:
    return {
        "terms": [
            {"key": element_coords(k), "coeff": coeff_to_str(c)} for k, c in f.terms
        ]
    }


def element_from_json(m: AffineMonoid, d: dict) -> AlgebraElement:
    terms = []
    for t in d.get("terms", []):
        key = m.ambient.from_flat([int(c) for c in t["key"]])
        terms.append((key, Fraction(t["coeff"])))
    return AlgebraElement.from_terms(m, terms)


def series_to_json(s: TruncatedSeries) -> dict:
    return {
        "order": s.order,
        "terms": [
            {"key": element_coords(k), "coeff": coeff_to_str(c)} for k, c in s.terms
        ],
    }


def ideal_to_json(i: MonoidIdeal) -> dict:
    return {"generators": [element_coords(g) for g in i.gens]}


def ideal_from_json(m: AffineMonoid, d: dict) -> MonoidIdeal:
    gens = [m.ambient.from_flat([int(c) for c in coords]) for coords in d.get("generators", [])]
    return MonoidIdeal.generated(m, gens)
