"""Command line front door: a thin client of the service.

Every subcommand builds one request, sends it to the FastAPI app (in-process
by default, or to a remote server with --server), and prints the result JSON
canonically, so identical inputs give byte-identical output.  DOT-emitting
commands print the graph source directly.

Exit codes: 0 success, 2 malformed input or failed validation, 3 when the
result contains an `unknown` verdict and strict mode is on (--strict or
MONOIDGEOM_STRICT=1).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import Any, Optional

import httpx


def _load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _vector(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(x) for x in json.loads(text)]
    if not text:
        return []
    return [int(x) for x in text.split(",")]


def _vectors(text: str) -> list[list[int]]:
    data = json.loads(text)
    return [[int(x) for x in row] for row in data]


def _ideal_arg(text: str) -> dict:
    return {"generators": _vectors(text)}


def _post(path: str, payload: dict, server: Optional[str]):
    if server:
        r = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
        return r.status_code, r.json()

    async def go():
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://monoidgeom") as client:
            r = await client.post(path, json=payload)
            return r.status_code, r.json()

    return asyncio.run(go())


def _has_unknown(obj: Any) -> bool:
    if isinstance(obj, dict):
        if obj.get("status") == "unknown":
            return True
        return any(_has_unknown(v) for v in obj.values())
    if isinstance(obj, list):
        return any(_has_unknown(v) for v in obj)
    return False


def _canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(status: int, body: Any, strict: bool, raw_key: Optional[str] = None) -> int:
    if status != 200 or not isinstance(body, dict) or not body.get("ok", False):
        sys.stderr.write(_canonical(body) + "\n")
        return 2
    result = body.get("result")
    if raw_key is not None and isinstance(result, dict) and raw_key in result:
        sys.stdout.write(result[raw_key])
    else:
        sys.stdout.write(_canonical(result) + "\n")
    if strict and _has_unknown(result):
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monoidgeom",
        description="Affine monoids, their spectra, duals, valuations and algebras.",
    )
    ap.add_argument("--server", help="base URL of a running service (default: in-process)")
    ap.add_argument("--strict", action="store_true", help="exit 3 on unknown verdicts")
    sub = ap.add_subparsers(dest="group", required=True)

    def cmd(group, name, *flags):
        p = group.add_parser(name)
        for flag, kw in flags:
            p.add_argument(flag, **kw)
        return p

    FILE = ("file", {"help": "input JSON file"})
    BOUND = ("--bound", {"type": int, "default": None})

    g = sub.add_parser("monoid").add_subparsers(dest="verb", required=True)
    for verb in ("info", "saturate", "units", "sharpen", "irreducibles",
                 "embed-sharp", "classify-dim1", "dominate"):
        p = g.add_parser(verb); p.add_argument(*FILE[0:1], **FILE[1])
    p = g.add_parser("contains"); p.add_argument("file"); p.add_argument("--element", required=True)
    p = g.add_parser("divides"); p.add_argument("file"); p.add_argument("--s", required=True); p.add_argument("--t", required=True)
    p = g.add_parser("is-local-hom"); p.add_argument("file")
    p = g.add_parser("is-exact-hom"); p.add_argument("file"); p.add_argument("--bound", type=int, default=4)

    g = sub.add_parser("pres").add_subparsers(dest="verb", required=True)
    p = g.add_parser("words-equal"); p.add_argument("file"); p.add_argument("--x", required=True); p.add_argument("--y", required=True); p.add_argument("--bound", type=int, default=12)
    for verb in ("groupify", "integralize"):
        p = g.add_parser(verb); p.add_argument("file")
    p = g.add_parser("is-integral"); p.add_argument("file"); p.add_argument("--bound", type=int, default=12)
    p = g.add_parser("coequalizer"); p.add_argument("file")
    p = g.add_parser("pushout"); p.add_argument("file")

    g = sub.add_parser("spec").add_subparsers(dest="verb", required=True)
    for verb in ("poset", "dot", "faces", "face-dot", "dimension"):
        p = g.add_parser(verb); p.add_argument("file")
    p = g.add_parser("height"); p.add_argument("file"); p.add_argument("--prime", required=True)
    p = g.add_parser("localize"); p.add_argument("file"); p.add_argument("--face", required=True)
    p = g.add_parser("ideal-minimal"); p.add_argument("file"); p.add_argument("--ideal", required=True)
    p = g.add_parser("ideal-contains"); p.add_argument("file"); p.add_argument("--ideal", required=True); p.add_argument("--element", required=True)
    for verb in ("ideal-sum", "ideal-product", "ideal-intersection"):
        p = g.add_parser(verb); p.add_argument("file"); p.add_argument("--i", required=True); p.add_argument("--j", required=True); p.add_argument("--bound", type=int, default=6)
    p = g.add_parser("radical"); p.add_argument("file"); p.add_argument("--ideal", required=True)
    p = g.add_parser("radical-contains"); p.add_argument("file"); p.add_argument("--ideal", required=True); p.add_argument("--element", required=True)
    p = g.add_parser("primary"); p.add_argument("file"); p.add_argument("--ideal", required=True); p.add_argument("--bound", type=int, default=6)
    p = g.add_parser("idealized"); p.add_argument("file"); p.add_argument("--ideal", required=True)

    g = sub.add_parser("dual").add_subparsers(dest="verb", required=True)
    for verb in ("dual", "double-dual", "saturation-check"):
        p = g.add_parser(verb); p.add_argument("file")
        if verb == "saturation-check":
            p.add_argument("--radius", type=int, default=4)
    p = g.add_parser("face-perp"); p.add_argument("file"); p.add_argument("--face", required=True)
    p = g.add_parser("face-perp-inverse"); p.add_argument("file"); p.add_argument("--face", required=True)
    p = g.add_parser("valuation"); p.add_argument("file"); p.add_argument("--prime", required=True)
    p = g.add_parser("valuation-vector"); p.add_argument("file"); p.add_argument("--element", required=True)
    p = g.add_parser("count-ball"); p.add_argument("file"); p.add_argument("--h", required=True); p.add_argument("--radius", type=int, required=True)

    g = sub.add_parser("algebra").add_subparsers(dest="verb", required=True)
    for verb in ("add", "mul"):
        p = g.add_parser(verb); p.add_argument("file"); p.add_argument("--f", required=True); p.add_argument("--g", required=True)
    for verb in ("counit", "vertex", "comul", "support", "support-ideal", "principal-support"):
        p = g.add_parser(verb); p.add_argument("file"); p.add_argument("--f", required=True)
    p = g.add_parser("quotient-project"); p.add_argument("file"); p.add_argument("--f", required=True); p.add_argument("--ideal", required=True)
    p = g.add_parser("face-restrict"); p.add_argument("file"); p.add_argument("--f", required=True); p.add_argument("--face", required=True)
    p = g.add_parser("face-pull"); p.add_argument("file"); p.add_argument("--f", required=True); p.add_argument("--face", required=True)
    p = g.add_parser("retract"); p.add_argument("file"); p.add_argument("--f", required=True); p.add_argument("--face", required=True); p.add_argument("--h", required=True); p.add_argument("--t")
    p = g.add_parser("vp"); p.add_argument("file"); p.add_argument("--f", required=True); p.add_argument("--prime", required=True)
    p = g.add_parser("reduced"); p.add_argument("file"); p.add_argument("--ideal", required=True)
    p = g.add_parser("hypersurface"); p.add_argument("file"); p.add_argument("--element", required=True)

    g = sub.add_parser("series").add_subparsers(dest="verb", required=True)
    p = g.add_parser("basis"); p.add_argument("file"); p.add_argument("--order", type=int, required=True)
    p = g.add_parser("mul"); p.add_argument("file"); p.add_argument("--order", type=int, required=True); p.add_argument("--a", required=True); p.add_argument("--b", required=True)
    p = g.add_parser("cofinality"); p.add_argument("file"); p.add_argument("--h", required=True); p.add_argument("--n", type=int, required=True)

    g = sub.add_parser("rees").add_subparsers(dest="verb", required=True)
    p = g.add_parser("build"); p.add_argument("file"); p.add_argument("--ideal", required=True)
    p = g.add_parser("contains"); p.add_argument("file"); p.add_argument("--ideal", required=True); p.add_argument("--m", type=int, required=True); p.add_argument("--p", required=True)

    g = sub.add_parser("lattice").add_subparsers(dest="verb", required=True)
    for verb in ("snf", "cokernel"):
        p = g.add_parser(verb); p.add_argument("file")
    p = g.add_parser("hilbert"); p.add_argument("file")
    p = g.add_parser("solve-nonneg"); p.add_argument("file")

    p = sub.add_parser("serve")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8641)
    return ap


def _request_for(args) -> tuple[str, dict, Optional[str]]:
    """(path, payload, raw_output_key) for the parsed arguments."""
    group, verb = args.group, getattr(args, "verb", None)
    if group in ("monoid", "spec", "dual", "algebra", "series", "rees") and hasattr(args, "file"):
        doc = _load_json(args.file)
    elif group in ("pres", "lattice") and hasattr(args, "file"):
        doc = _load_json(args.file)
    else:
        doc = None

    if group == "monoid":
        if verb in ("info", "saturate", "units", "sharpen", "irreducibles",
                    "embed-sharp", "classify-dim1", "dominate"):
            return f"/monoid/{verb}", {"monoid": doc}, None
        if verb == "contains":
            return "/monoid/contains", {"monoid": doc, "element": _vector(args.element)}, None
        if verb == "divides":
            return "/monoid/divides", {"monoid": doc, "s": _vector(args.s), "t": _vector(args.t)}, None
        if verb in ("is-local-hom", "is-exact-hom"):
            payload = dict(doc)
            if verb == "is-exact-hom":
                payload["bound"] = args.bound
            return f"/monoid/{verb}", payload, None
    if group == "pres":
        if verb == "words-equal":
            return "/pres/words-equal", {
                "presentation": doc, "x": _vector(args.x), "y": _vector(args.y), "bound": args.bound
            }, None
        if verb in ("groupify", "integralize"):
            return f"/pres/{verb}", {"presentation": doc}, None
        if verb == "is-integral":
            return "/pres/is-integral", {"presentation": doc, "bound": args.bound}, None
        if verb in ("coequalizer", "pushout"):
            return f"/pres/{verb}", doc, None
    if group == "spec":
        if verb in ("poset", "faces", "dimension"):
            return f"/spec/{verb}", {"monoid": doc}, None
        if verb == "dot":
            return "/spec/dot", {"monoid": doc}, "dot"
        if verb == "face-dot":
            return "/spec/face-dot", {"monoid": doc}, "dot"
        if verb == "height":
            return "/spec/height", {"monoid": doc, "prime": _vector(args.prime)}, None
        if verb == "localize":
            return "/spec/localize", {"monoid": doc, "face": _vector(args.face)}, None
        if verb == "ideal-minimal":
            return "/spec/ideal-minimal", {"monoid": doc, "ideal": _ideal_arg(args.ideal)}, None
        if verb == "ideal-contains":
            return "/spec/ideal-contains", {"monoid": doc, "ideal": _ideal_arg(args.ideal), "element": _vector(args.element)}, None
        if verb in ("ideal-sum", "ideal-product", "ideal-intersection"):
            return f"/spec/{verb}", {
                "monoid": doc, "i": _ideal_arg(args.i), "j": _ideal_arg(args.j), "bound": args.bound
            }, None
        if verb == "radical":
            return "/spec/radical", {"monoid": doc, "ideal": _ideal_arg(args.ideal)}, None
        if verb == "radical-contains":
            return "/spec/radical-contains", {"monoid": doc, "ideal": _ideal_arg(args.ideal), "element": _vector(args.element)}, None
        if verb == "primary":
            return "/spec/primary", {"monoid": doc, "ideal": _ideal_arg(args.ideal), "bound": args.bound}, None
        if verb == "idealized":
            return "/spec/idealized", {"monoid": doc, "ideal": _ideal_arg(args.ideal)}, None
    if group == "dual":
        if verb in ("dual", "double-dual"):
            return f"/dual/{verb}", {"monoid": doc}, None
        if verb == "saturation-check":
            return "/dual/saturation-check", {"monoid": doc, "radius": args.radius}, None
        if verb in ("face-perp", "face-perp-inverse"):
            return f"/dual/{verb}", {"monoid": doc, "face": _vector(args.face)}, None
        if verb == "valuation":
            return "/dual/valuation", {"monoid": doc, "prime": _vector(args.prime)}, None
        if verb == "valuation-vector":
            return "/dual/valuation-vector", {"monoid": doc, "element": _vector(args.element)}, None
        if verb == "count-ball":
            return "/dual/count-ball", {"monoid": doc, "h": _vector(args.h), "radius": args.radius}, None
    if group == "algebra":
        if verb in ("add", "mul"):
            return f"/algebra/{verb}", {"monoid": doc, "f": _load_json(args.f), "g": _load_json(args.g)}, None
        if verb in ("counit", "vertex", "comul", "support", "support-ideal", "principal-support"):
            return f"/algebra/{verb}", {"monoid": doc, "f": _load_json(args.f)}, None
        if verb == "quotient-project":
            return "/algebra/quotient-project", {"monoid": doc, "f": _load_json(args.f), "ideal": _ideal_arg(args.ideal)}, None
        if verb in ("face-restrict", "face-pull"):
            return f"/algebra/{verb}", {"monoid": doc, "f": _load_json(args.f), "face": _vector(args.face)}, None
        if verb == "retract":
            payload = {"monoid": doc, "f": _load_json(args.f), "face": _vector(args.face), "h": _vector(args.h)}
            if args.t is not None:
                payload["t"] = args.t
            return "/algebra/retract", payload, None
        if verb == "vp":
            return "/algebra/vp", {"monoid": doc, "f": _load_json(args.f), "prime": _vector(args.prime)}, None
        if verb == "reduced":
            return "/algebra/reduced", {"monoid": doc, "ideal": _ideal_arg(args.ideal)}, None
        if verb == "hypersurface":
            return "/algebra/hypersurface", {"monoid": doc, "element": _vector(args.element)}, None
    if group == "series":
        if verb == "basis":
            return "/series/basis", {"monoid": doc, "order": args.order}, None
        if verb == "mul":
            return "/series/mul", {"monoid": doc, "order": args.order, "a": _load_json(args.a), "b": _load_json(args.b)}, None
        if verb == "cofinality":
            return "/series/cofinality", {"monoid": doc, "h": _vector(args.h), "n": args.n}, None
    if group == "rees":
        if verb == "build":
            return "/rees/build", {"monoid": doc, "ideal": _ideal_arg(args.ideal)}, None
        if verb == "contains":
            return "/rees/contains", {"monoid": doc, "ideal": _ideal_arg(args.ideal), "m": args.m, "p": _vector(args.p)}, None
    if group == "lattice":
        if verb in ("snf", "cokernel"):
            return f"/lattice/{verb}", {"matrix": doc["matrix"] if isinstance(doc, dict) else doc}, None
        if verb == "hilbert":
            return "/lattice/hilbert", doc, None
        if verb == "solve-nonneg":
            return "/lattice/solve-nonneg", doc, None
    raise SystemExit(f"unhandled command {group} {verb}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    strict = args.strict or os.environ.get("MONOIDGEOM_STRICT") == "1"

    if args.group == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    try:
        path, payload, raw_key = _request_for(args)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f'{{"ok":false,"error":"input","detail":"{exc}"}}\n')
        return 2
    status, body = _post(path, payload, args.server)
    return _emit(status, body, strict, raw_key)


if __name__ == "__main__":
    sys.exit(main())
