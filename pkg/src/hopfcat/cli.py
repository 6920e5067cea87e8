"""Command-line front end.

    hopfcat <command> [paths...] [--out report.json] [--pretty]

Every command prints (or writes) one JSON report with the fields
``command``, ``inputs`` (path and sha256 of each file read), ``result`` and
``status``.  Elapsed time goes to stderr only, so reports for identical
inputs are byte-identical.

Exit codes: 0 pass, 1 fail, 2 malformed input, 3 mathematical
precondition failed, 4 internal invariant violated (counterexample in the
report).
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import catalog as catalog_mod
from .colimits import coequalizer, hopf_cokernel
from .errors import InvariantViolation, PreconditionError, SchemaError
from .hopf_model import (
    HopfAlgebra,
    Morphism,
    is_commutative,
    is_normal_sub_hopf,
    is_sub_hopf,
    verify_hopf,
)
from .io import Loader, dumps, hopf_to_json, subspace_to_json
from .limits import equalizer, hopf_kernel, hopf_kernel_space, legs_determine_maps, product, pullback
from .newman import sigma, tau, verify_normal_kernel_lemma
from .smash import abelian_object_test, abelian_obstruction, smash_product
from .sweeps import run_axioms

EXIT = {"pass": 0, "fail": 1, "schema": 2, "precondition": 3, "invariant": 4}

def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _object(h: HopfAlgebra) -> dict:
    return {"dim": h.dim, "axioms": verify_hopf(h).as_dict(), "json": hopf_to_json(h)}


def _matrix(f: Morphism) -> list:
    return f.matrix.to_json()


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# -- commands ---------------------------------------------------------------
# each takes (loader, args) and returns (result payload, status)

def cmd_verify(ld: Loader, args) -> tuple[dict, str]:
    h = ld.hopf(args.paths[0])
    report = verify_hopf(h)
    return {"dim": h.dim, "axioms": report.as_dict(), "failures": report.failures(),
            "commutative": is_commutative(h)}, _status(report.ok)


def cmd_kernel(ld: Loader, args) -> tuple[dict, str]:
    f = ld.morphism(args.paths[0])
    space = hopf_kernel_space(f)
    k, incl = hopf_kernel(f)
    mirrored = hopf_kernel_space(f, mirrored=True) == space
    normal = is_normal_sub_hopf(f.dom, space)
    obj = _object(k)
    ok = mirrored and normal and all(obj["axioms"].values())
    return {"dim": k.dim, "subspace": subspace_to_json(space), "object": obj,
            "inclusion": _matrix(incl), "normal": normal, "mirrored_form_agrees": mirrored}, _status(ok)


def _quotient_result(pres) -> tuple[dict, str]:
    obj = _object(pres.quotient)
    return {"dim": pres.quotient.dim, "ideal": subspace_to_json(pres.ideal), "object": obj,
            "projection": _matrix(pres.projection)}, _status(all(obj["axioms"].values()))


def cmd_cokernel(ld: Loader, args) -> tuple[dict, str]:
    return _quotient_result(hopf_cokernel(ld.morphism(args.paths[0])))


def cmd_equalizer(ld: Loader, args) -> tuple[dict, str]:
    f, g = ld.morphism(args.paths[0]), ld.morphism(args.paths[1])
    space, incl = equalizer(f, g)
    obj = _object(incl.dom)
    return {"dim": space.dim, "subspace": subspace_to_json(space), "object": obj,
            "inclusion": _matrix(incl), "sub_hopf": is_sub_hopf(f.dom, space)}, \
        _status(all(obj["axioms"].values()))


def cmd_coequalizer(ld: Loader, args) -> tuple[dict, str]:
    return _quotient_result(coequalizer(ld.morphism(args.paths[0]), ld.morphism(args.paths[1])))


def _cone_result(cone, extra: dict | None = None) -> tuple[dict, str]:
    obj = _object(cone.apex)
    unique = legs_determine_maps(cone)
    out = {"dim": cone.apex.dim, "object": obj, "legs": [_matrix(leg) for leg in cone.legs],
           "embedding": _matrix(cone.embedding), "legs_determine_maps": unique}
    out.update(extra or {})
    return out, _status(unique and all(obj["axioms"].values()))


def cmd_product(ld: Loader, args) -> tuple[dict, str]:
    return _cone_result(product(ld.hopf(args.paths[0]), ld.hopf(args.paths[1])))


def cmd_pullback(ld: Loader, args) -> tuple[dict, str]:
    return _cone_result(pullback(ld.morphism(args.paths[0]), ld.morphism(args.paths[1])))


def cmd_smash(ld: Loader, args) -> tuple[dict, str]:
    sp = smash_product(ld.action(args.paths[0]))
    obj = _object(sp.hopf)
    return {"dim": sp.hopf.dim, "object": obj, "p": _matrix(sp.p), "s": _matrix(sp.s),
            "commutative": is_commutative(sp.hopf)}, _status(all(obj["axioms"].values()))


def cmd_newman(ld: Loader, args) -> tuple[dict, str]:
    h = ld.hopf(args.paths[0])
    g = ld.subspace(args.paths[1], h.dim)
    ideal = tau(h, g)
    back = sigma(h, ideal)
    again = tau(h, back).space
    out: dict[str, Any] = {
        "tau": subspace_to_json(ideal.space), "sigma_of_tau": subspace_to_json(back),
        "sigma_tau_roundtrip": back == g, "tau_sigma_roundtrip": again == ideal.space,
        "normal": is_normal_sub_hopf(h, g)}
    if out["normal"]:
        out["normal_kernel_lemma"] = verify_normal_kernel_lemma(h, g)
    ok = out["sigma_tau_roundtrip"] and out["tau_sigma_roundtrip"] and out.get("normal_kernel_lemma", True)
    return out, _status(ok)


def cmd_abelian(ld: Loader, args) -> tuple[dict, str]:
    h = ld.hopf(args.paths[0])
    abelian = abelian_object_test(h)
    commutative = is_commutative(h)
    out = {"abelian_object": abelian, "commutative": commutative, "agree": abelian == commutative}
    if not abelian:
        out["witness"] = abelian_obstruction(h)
    return out, _status(abelian == commutative)


def cmd_axioms(ld: Loader, args) -> tuple[dict, str]:
    path = Path(args.paths[0]) if args.paths else catalog_mod.catalog_dir()
    cat = catalog_mod.Catalog.from_dir(path)
    for f in catalog_mod.group_files(path):
        ld.note(f)
    result = run_axioms(cat)
    if result["invariant_failures"]:
        raise InvariantViolation(f"{result['invariant_failures']} sweep instances violated an invariant",
                                 result)
    return result, _status(result["total_failures"] == 0)


def cmd_export(ld: Loader, args) -> tuple[dict, str]:
    files = catalog_mod.write_bundled(args.paths[0])
    return {"written": [str(p.relative_to(args.paths[0])) for p in files]}, "pass"


COMMANDS: dict[str, tuple[Callable, int, int, str]] = {
    "verify": (cmd_verify, 1, 1, "check every Hopf axiom of an algebra file"),
    "kernel": (cmd_kernel, 1, 1, "Hopf kernel of a morphism"),
    "cokernel": (cmd_cokernel, 1, 1, "Hopf cokernel of a morphism"),
    "equalizer": (cmd_equalizer, 2, 2, "equalizer of two parallel morphisms"),
    "coequalizer": (cmd_coequalizer, 2, 2, "coequalizer of two parallel morphisms"),
    "product": (cmd_product, 2, 2, "product of two algebras with its projections"),
    "pullback": (cmd_pullback, 2, 2, "pullback of two morphisms with a common codomain"),
    "smash": (cmd_smash, 1, 1, "smash product of an action file"),
    "newman": (cmd_newman, 2, 2, "tau and sigma for a sub-Hopf algebra given as a subspace"),
    "abelian": (cmd_abelian, 1, 1, "abelian-object test against commutativity"),
    "axioms": (cmd_axioms, 0, 1, "catalog-wide sweep (default: bundled or $HOPFCAT_CATALOG)"),
    "export": (cmd_export, 1, 1, "write the bundled catalog into a directory"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfcat",
                                     description="Exact constructions on cocommutative Hopf algebras.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, lo, hi, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.add_argument("paths", nargs="*" if lo == 0 else "+", metavar="path")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--pretty", action="store_true", help="indent the JSON report")
        p.set_defaults(arity=(lo, hi))
    return parser


def execute(args: argparse.Namespace) -> tuple[dict, int]:
    """Run a parsed command; returns the report and the exit code."""
    fn = COMMANDS[args.command][0]
    # verify reports on broken algebras; everything else needs valid inputs
    ld = Loader(strict=args.command != "verify")
    report: dict[str, Any] = {"command": args.command}
    try:
        result, status = fn(ld, args)
        report["result"] = result
        report["status"] = status
        code = EXIT[status]
    except SchemaError as exc:
        report["status"] = "error"
        report["error"] = {"kind": "schema", "field": exc.field, "message": str(exc)}
        code = EXIT["schema"]
    except PreconditionError as exc:
        report["status"] = "error"
        report["error"] = {"kind": "precondition", "message": str(exc)}
        code = EXIT["precondition"]
    except InvariantViolation as exc:
        report["status"] = "error"
        report["error"] = {"kind": "invariant", "message": str(exc),
                           "counterexample": exc.counterexample}
        code = EXIT["invariant"]
    report["inputs"] = [{"path": _display(p), "sha256": _digest(p)} for p in ld.files if p.is_file()]
    return report, code


def _display(p: Path) -> str:
    try:
        return str(p.relative_to(Path.cwd()))
    except ValueError:
        return str(p)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    lo, hi = args.arity
    if not lo <= len(args.paths) <= hi:
        n = str(lo) if lo == hi else f"{lo} to {hi}"
        parser.error(f"{args.command} takes {n} path(s), got {len(args.paths)}")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    start = time.perf_counter()
    report, code = execute(args)
    text = dumps(report, pretty=args.pretty)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    elapsed = (time.perf_counter() - start) * 1000
    print(f"hopfcat {args.command}: {report['status']} (exit {code}) in {elapsed:.0f} ms",
          file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
