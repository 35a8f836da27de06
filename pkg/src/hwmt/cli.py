"""Command-line surface: every operation as a subcommand with JSON output.

Rationals are written `r/s` on the command line and as strings in JSON
(never as floats); identical inputs produce byte-identical output.  Exit
codes: 0 success / all verifications pass, 1 verification failure (with a
JSON diagnostic on stdout), 2 usage errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import census as census_mod
from .errors import HwmtError
from .families import FAMILIES, get_family
from .hasse_witt import (
    hasse_witt,
    key_lemma_check,
    truncation_relation_check,
)
from .hypergeometric import (
    HypergeometricData,
    clausen_check,
    quadratic_residue_check,
    truncated_pFq,
)
from .pencil import build_vertex_pencil, specialize
from .picard_fuchs import analyze_family
from .point_count import congruence_check
from .polytope import (
    LatticePolytope,
    is_kernel_pair,
    is_mirror_kernel_pair,
    is_reflexive,
    polar_dual,
    vertex_kernel,
)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from exc


def _frac_list(text: str):
    return [_frac(x) for x in text.split(",") if x]


def _int_list(text: str):
    return [int(x) for x in text.split(",") if x]


def _parse_vertices(text: str):
    verts = tuple(
        tuple(int(x) for x in chunk.split(",")) for chunk in text.split(";") if chunk
    )
    return LatticePolytope(len(verts[0]), verts)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2, default=str))


def _load_records(path):
    if path is None:
        path = census_mod.fixture_path("tables3d.txt")
    return {r.id: r for r in census_mod.load_polytopes(path)}


def _select_polytope(args) -> LatticePolytope:
    if getattr(args, "vertices", None):
        return _parse_vertices(args.vertices)
    if getattr(args, "id", None) is not None:
        records = _load_records(getattr(args, "input", None))
        if args.id not in records:
            raise HwmtError(f"id {args.id} not in fixture")
        return records[args.id].polytope
    raise HwmtError("select a polytope with --vertices or --id")


def _pencil_rows(pencil):
    return [
        {
            "exponent": list(t.exponent),
            "coeff": str(t.const),
            "has_psi": t.psi_coeff != 0,
        }
        for t in pencil.terms
    ]


# --------------------------------------------------------------------------
# subcommand handlers
# --------------------------------------------------------------------------

def _cmd_polytope(args) -> int:
    poly = _select_polytope(args)
    if args.action == "dual":
        _emit({"vertices": [list(v) for v in polar_dual(poly).vertices]})
    elif args.action == "reflexive":
        _emit({"reflexive": is_reflexive(poly)})
    else:
        k = vertex_kernel(poly)
        _emit({"ambient_rank": k.ambient_rank, "basis": [list(v) for v in k.basis]})
    return 0


def _cmd_pair(args) -> int:
    records = _load_records(args.input)
    a, b = args.pair
    p, q = records[a].polytope, records[b].polytope
    ok, witness = is_kernel_pair(p, q)
    _emit(
        {
            "pair": [a, b],
            "kernel_pair": ok,
            "witness": list(witness) if witness else None,
            "mirror_kernel_pair": is_mirror_kernel_pair(p, q),
        }
    )
    return 0


def _cmd_pencil(args) -> int:
    if args.family:
        pencil = get_family(args.family).vertex_pencil()
    else:
        pencil = build_vertex_pencil(_select_polytope(args))
    if args.psi is not None:
        poly = specialize(pencil, args.psi)
        _emit(
            [
                {"exponent": list(e), "coeff": str(c), "has_psi": False}
                for e, c in poly.terms
            ]
        )
    else:
        _emit(_pencil_rows(pencil))
    return 0


def _cmd_hw(args) -> int:
    if args.family:
        source = get_family(args.family)
        label = source.name
    else:
        source = build_vertex_pencil(_select_polytope(args))
        label = "pencil"
    rows = []
    for psi in args.psi:
        for p in args.primes:
            hw = hasse_witt(source, psi, p)
            rows.append({"family": label, "psi": str(psi), "p": p, "hw": hw.value})
    _emit(rows)
    return 0


def _cmd_count(args) -> int:
    fam = get_family(args.family)
    rows = []
    failures = 0
    for psi in args.psi:
        for p in args.primes:
            if not fam.is_smooth_model(psi):
                rows.append(
                    {"model": fam.model, "psi": str(psi), "p": p,
                     "count": None, "congruence_ok": None, "singular": True}
                )
                continue
            ok, count, trunc = congruence_check(fam, psi, p)
            failures += 0 if ok else 1
            rows.append(
                {"model": fam.model, "psi": str(psi), "p": p,
                 "count": count, "congruence_ok": ok}
            )
    _emit(rows)
    return 1 if failures else 0


def _cmd_hyp(args) -> int:
    nums_text, dens_text = args.params.split(";")
    c_text, e_text = args.arg.split(",")
    data = HypergeometricData(
        tuple(_frac_list(nums_text)),
        tuple(_frac_list(dens_text)),
        (_frac(c_text), int(e_text)),
    )
    value = truncated_pFq(data, args.psi, args.prime)
    _emit(
        {
            "series": str(data),
            "psi": str(args.psi),
            "prime": args.prime,
            "value": value.value,
            "terms_used": value.terms_used,
            "quadratic_residue": quadratic_residue_check(value.value, args.prime),
        }
    )
    return 0


def _cmd_pf(args) -> int:
    rep = analyze_family(args.family)
    if args.json:
        _emit(rep.as_dict())
        return 0
    d = rep.as_dict()
    print(f"family: {d['family']}")
    for stage in ("companion", "sheared", "powered", "rescaled", "inverted",
                  "residue_zero", "residue_infinity"):
        print(f"{stage}:")
        for row in d[stage]:
            print("   [" + ", ".join(row) + "]")
    print("exponents at 0:", ", ".join(d["exponents_at_zero"]))
    print("exponents at infinity:", ", ".join(d["exponents_at_infinity"]))
    print("intermediate:", d["intermediate"])
    print("final:", d["final"])
    for note in d["notes"]:
        print("note:", note)
    return 0


def _cmd_census(args) -> int:
    path = args.input or census_mod.fixture_path("tables3d.txt")
    result = census_mod.run_census(census_mod.load_polytopes(path))
    print(census_mod.report(result, args.report))
    return 0


def _cmd_verify(args) -> int:
    rows = []
    failures = 0
    if args.what == "key-lemma":
        records = _load_records(args.input)
        a, b = args.pair
        for psi in args.psi:
            for p in args.primes:
                ok, hw_a, hw_b = key_lemma_check(
                    records[a].polytope, records[b].polytope, psi, p
                )
                failures += 0 if ok else 1
                rows.append(
                    {"pair": [a, b], "psi": str(psi), "p": p,
                     "hw": [hw_a.value, hw_b.value], "match": ok}
                )
    elif args.what == "truncation":
        target = args.family if args.family else _select_polytope(args)
        label = args.family or "polytope"
        for psi in args.psi:
            for p in args.primes:
                ok = truncation_relation_check(target, psi, p)
                failures += 0 if ok else 1
                rows.append({"family": label, "psi": str(psi), "p": p, "match": ok})
    elif args.what == "congruence":
        fam = get_family(args.family)
        for psi in args.psi:
            for p in args.primes:
                if not fam.is_smooth_model(psi):
                    rows.append({"family": fam.name, "psi": str(psi), "p": p,
                                 "singular": True, "match": None})
                    continue
                ok, count, trunc = congruence_check(fam, psi, p)
                failures += 0 if ok else 1
                rows.append(
                    {"family": fam.name, "psi": str(psi), "p": p,
                     "count": count, "truncation": trunc, "match": ok}
                )
    else:  # clausen: mismatches are findings, not failures
        fam = get_family(args.family)
        for psi in args.psi:
            for p in args.primes:
                match = clausen_check(fam, psi, p)
                rows.append(
                    {"family": fam.name, "psi": str(psi), "p": p, "match": match}
                )
    _emit(rows)
    return 1 if failures else 0


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _pair_arg(text):
    a, b = text.split(",")
    return (int(a), int(b))


def _add_selector(parser, with_family=False):
    parser.add_argument("--vertices", help="inline vertices: x,y,z;x,y,z;...")
    parser.add_argument("--id", type=int, help="polytope id from the fixture")
    parser.add_argument("--input", help="fixture file (default: bundled 3D tables)")
    if with_family:
        parser.add_argument("--family", choices=sorted(FAMILIES),
                            help="named pencil family")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hwmt",
        description="Exact Hasse-Witt invariants, point counts, and "
        "hypergeometric truncations of toric vertex pencils.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polytope", help="polar dual, reflexivity, kernel")
    p.add_argument("action", choices=["dual", "reflexive", "kernel"])
    _add_selector(p)
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("pair", help="kernel-pair and mirror-pair predicates")
    p.add_argument("action", choices=["check"])
    p.add_argument("--pair", type=_pair_arg, required=True, metavar="A,B")
    p.add_argument("--input")
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("pencil", help="build a vertex pencil")
    p.add_argument("action", choices=["build"])
    _add_selector(p, with_family=True)
    p.add_argument("--psi", type=_frac, help="specialize at this rational")
    p.set_defaults(func=_cmd_pencil)

    p = sub.add_parser("hw", help="Hasse-Witt invariants")
    _add_selector(p, with_family=True)
    p.add_argument("--psi", type=_frac_list, required=True)
    p.add_argument("--primes", type=_int_list, required=True)
    p.set_defaults(func=_cmd_hw)

    p = sub.add_parser("count", help="brute-force point counts")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--psi", type=_frac_list, required=True)
    p.add_argument("--primes", type=_int_list, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("hyp", help="truncated hypergeometric series mod p")
    p.add_argument("--params", required=True, metavar="NUMS;DENS")
    p.add_argument("--arg", required=True, metavar="C,E",
                   help="argument c*psi^e")
    p.add_argument("--psi", type=_frac, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=_cmd_hyp)

    p = sub.add_parser("pf", help="Picard-Fuchs parameter extraction")
    p.add_argument("action", choices=["analyze"])
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pf)

    p = sub.add_parser("census", help="kernel types and mirror pairs")
    p.add_argument("--input")
    p.add_argument("--report", choices=["json", "csv", "markdown"],
                   default="json")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="verification sweeps")
    p.add_argument("what", choices=["key-lemma", "truncation", "congruence",
                                    "clausen"])
    p.add_argument("--pair", type=_pair_arg, metavar="A,B")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--vertices")
    p.add_argument("--id", type=int)
    p.add_argument("--input")
    p.add_argument("--psi", type=_frac_list, required=True)
    p.add_argument("--primes", type=_int_list, required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HwmtError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
