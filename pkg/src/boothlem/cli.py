"""Command-line front end.

Subcommands ``radius``, ``inscribed``, ``inclusion``, ``verify``,
``sharpness`` and ``boundary``. Exit code 0 means ok, 1 a verification
failure, 2 an input error. Structured output (json, csv) formats numbers to
12 significant digits and keeps a fixed field order, so identical arguments
give byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Dict, List, Optional, Tuple

from .classes import (
    Convex,
    Fournier,
    FunctionClass,
    Janowski,
    MClass,
    Parvatham,
    Starlike,
    StarlikeOrder,
    bs_radius,
    inclusion_holds,
)
from .discs import circumscribed_radius, inscribed_branch, inscribed_radius
from .errors import DomainError
from .oracles import (
    LEMMA_TOL,
    RADIUS_TOL,
    SWEEP_POINTS,
    SingleCrossingError,
    certify_bs_radius,
    certify_circumscribed,
    certify_inscribed,
    sharpness_witness,
)
from .region import RegionParam, boundary_polyline

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
_EXIT = {"ok": EXIT_OK, "fail": EXIT_FAIL, "error": EXIT_ERROR}

CLASS_NAMES = ("starlike-order", "starlike", "convex", "m-class", "janowski", "parvatham", "fournier")


class CliError(Exception):
    """Input error reported with status=error and exit code 2."""

    def __init__(self, parameter: str, message: str):
        super().__init__(message)
        self.parameter = parameter


def _num(x: float) -> float:
    return float(f"{x:.12g}") + 0.0


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    if v is None:
        return ""
    return str(v)


def _text(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if v is None:
        return "-"
    return _cell(v)


def _clean(value):
    if isinstance(value, float):
        return _num(value)
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_clean(v) for v in value]
    return value


def _need(args, name: str) -> float:
    value = getattr(args, name)
    if value is None:
        raise CliError(name, f"--{name} is required for this command")
    return value


def build_class(args) -> FunctionClass:
    name = args.cls
    if name is None:
        raise CliError("class", "--class is required for this command")
    if name == "starlike":
        return Starlike()
    if name == "convex":
        return Convex()
    if name == "starlike-order":
        return StarlikeOrder(_need(args, "beta"))
    if name == "m-class":
        return MClass(_need(args, "beta"))
    if name == "parvatham":
        return Parvatham(_need(args, "beta"))
    if name == "fournier":
        return Fournier(_need(args, "beta"))
    A = _need(args, "A")
    if not -1.0 < A <= 1.0:
        raise DomainError("A", f"A must satisfy -1 < B < A <= 1 (got A={A!r})")
    return Janowski(A, _need(args, "B"))


def _class_inputs(cls: FunctionClass) -> Dict:
    return {"class": cls.name, **cls.params()}


def _radius(args) -> Tuple[Dict, Dict, str]:
    alpha = RegionParam(args.alpha).alpha
    cls = build_class(args)
    res = bs_radius(cls, alpha)
    inputs = {"alpha": alpha, **_class_inputs(cls)}
    return inputs, {"radius": res.value, "branch": res.branch.value, "clamped": res.clamped}, "ok"


def _inscribed(args) -> Tuple[Dict, Dict, str]:
    alpha = RegionParam(args.alpha).alpha
    a = _need(args, "center")
    results = {
        "r_a": inscribed_radius(alpha, a),
        "R_a": circumscribed_radius(alpha, a),
        "branch": inscribed_branch(alpha, a),
    }
    return {"alpha": alpha, "center": a}, results, "ok"


def _inclusion(args) -> Tuple[Dict, Dict, str]:
    alpha = RegionParam(args.alpha).alpha
    A, B = _need(args, "A"), _need(args, "B")
    verdict = inclusion_holds(alpha, A, B)
    return {"alpha": alpha, "A": A, "B": B}, {"holds": verdict.holds, "via_condition": verdict.via_condition}, "ok"


def _report_fields(prefix: str, rep) -> Dict:
    return {
        f"{prefix}closed_form": rep.closed_form,
        f"{prefix}oracle": rep.oracle,
        f"{prefix}abs_gap": rep.abs_gap,
        f"{prefix}tolerance": rep.tolerance,
        f"{prefix}touch_parameter": rep.touch_parameter,
        f"{prefix}verdict": rep.verdict,
    }


def _verify(args) -> Tuple[Dict, Dict, str]:
    alpha = RegionParam(args.alpha).alpha
    if args.cls is None:
        a = _need(args, "center")
        tol = LEMMA_TOL if args.tolerance is None else args.tolerance
        inner = certify_inscribed(alpha, a, tol)
        outer = certify_circumscribed(alpha, a, tol)
        results = {**_report_fields("r_a_", inner), **_report_fields("R_a_", outer)}
        ok = inner.verdict == "pass" and outer.verdict == "pass"
        return {"alpha": alpha, "center": a, "tolerance": tol}, results, "ok" if ok else "fail"
    cls = build_class(args)
    tol = RADIUS_TOL if args.tolerance is None else args.tolerance
    inputs = {"alpha": alpha, **_class_inputs(cls), "tolerance": tol}
    try:
        rep = certify_bs_radius(cls, alpha, tol)
    except SingleCrossingError as exc:
        return inputs, {"diagnostic": str(exc)}, "fail"
    results = {"branch": bs_radius(cls, alpha).branch.value, **_report_fields("", rep)}
    return inputs, results, "ok" if rep.verdict == "pass" else "fail"


def _sharpness(args) -> Tuple[Dict, Dict, str]:
    alpha = RegionParam(args.alpha).alpha
    cls = build_class(args)
    sweep = SWEEP_POINTS if args.samples is None else args.samples
    w = sharpness_witness(cls, alpha, r=args.radius_override, sweep=sweep)
    inputs = {"alpha": alpha, **_class_inputs(cls), "radius": w.r, "samples": sweep}
    results = {
        "x0": w.x0,
        "t_star": w.t_star,
        "margin": w.margin,
        "sweep_x": w.sweep_x,
        "sweep_margin": w.sweep_margin,
        "witnessed": w.witnessed,
    }
    return inputs, results, "ok" if w.witnessed else "fail"


def _boundary_rows(args) -> Tuple[Dict, List[Dict]]:
    alpha = RegionParam(args.alpha).alpha
    n = 256 if args.samples is None else args.samples
    if n < 8:
        raise CliError("samples", f"--samples must be at least 8 (got {n})")
    pts = boundary_polyline(alpha, n)
    rows = [{"t": 2.0 * math.pi * k / n, "u": p.real, "v": p.imag} for k, p in enumerate(pts)]
    return {"alpha": alpha, "samples": n}, rows


_HANDLERS = {
    "radius": _radius,
    "inscribed": _inscribed,
    "inclusion": _inclusion,
    "verify": _verify,
    "sharpness": _sharpness,
}


def _document(command: str, inputs: Dict, results: Dict, status: str) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "status": status,
    }


def _error_document(command: str, parameter: str, message: str) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": "error",
        "error": {"parameter": parameter, "message": message},
    }


def _to_csv(header: List[str], rows: List[List]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render(doc: Dict, fmt: str) -> str:
    """Serialise a report document (not boundary data) in ``fmt``."""
    if fmt == "json":
        return json.dumps(_clean(doc), indent=2) + "\n"
    if doc["status"] == "error":
        err = doc["error"]
        if fmt == "csv":
            return _to_csv(["schema_version", "status", "parameter", "message"],
                           [[SCHEMA_VERSION, "error", err["parameter"], err["message"]]])
        return f"error: {err['parameter']}: {err['message']}\n"
    flat = {**doc["inputs"], **doc["results"]}
    if fmt == "csv":
        header = ["schema_version", "status", *flat]
        return _to_csv(header, [[SCHEMA_VERSION, doc["status"], *(_cell(v) for v in flat.values())]])
    if doc["command"] == "inscribed":
        r = doc["results"]
        return f"r_a = {r['r_a']:.12f}  R_a = {r['R_a']:.12f}\n"
    lines = [f"{k} = {_text(v)}" for k, v in doc["results"].items()]
    lines.append(f"status = {doc['status']}")
    return "\n".join(lines) + "\n"


def render_boundary(inputs: Dict, rows: List[Dict], fmt: str) -> str:
    if fmt == "json":
        doc = _document("boundary", inputs, {"points": rows}, "ok")
        return json.dumps(_clean(doc), indent=2) + "\n"
    return _to_csv(["t", "u", "v"], [[_cell(r["t"] + 0.0), _cell(r["u"] + 0.0), _cell(r["v"] + 0.0)]
                                     for r in rows])


def run_command(args) -> Tuple[str, int]:
    """Execute parsed ``args``; returns ``(output text, exit code)``."""
    try:
        if args.command == "boundary":
            inputs, rows = _boundary_rows(args)
            return render_boundary(inputs, rows, args.format), EXIT_OK
        inputs, results, status = _HANDLERS[args.command](args)
        doc = _document(args.command, inputs, results, status)
    except (DomainError, CliError) as exc:
        doc = _error_document(args.command, exc.parameter, str(exc))
    return render(doc, args.format), _EXIT[doc["status"]]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, required=True, help="region parameter in [0, 1)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--class", dest="cls", choices=CLASS_NAMES, help="function class")
    common.add_argument("--beta", type=float, help="class order parameter")
    common.add_argument("--A", dest="A", type=float, help="Janowski A")
    common.add_argument("--B", dest="B", type=float, help="Janowski B")
    common.add_argument("--center", type=float, help="real disc center a")
    common.add_argument("--samples", type=int, help="sample count (boundary >= 8, sweep >= 64)")
    common.add_argument("--tolerance", type=float, help="verification tolerance")
    common.add_argument("--radius-override", type=float, help="radius for the sharpness witness")

    parser = argparse.ArgumentParser(
        prog="boothlem", description="Booth lemniscate starlikeness radii and their numerical checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "radius": "closed-form BS(alpha)-radius of a function class",
        "inscribed": "inscribed and circumscribed disc radii about a real center",
        "inclusion": "sufficient test for S*[A,B] inside BS(alpha)",
        "verify": "compare a closed form with its brute-force oracle",
        "sharpness": "locate the extremal touch point on the boundary",
        "boundary": "boundary polyline samples for plotting",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out, code = run_command(args)
    stream = sys.stderr if code == EXIT_ERROR and args.format == "text" else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
