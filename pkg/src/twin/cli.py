"""``twin`` command-line entry point.

Exit codes: 0 all checks passed, 2 invalid input or usage, 3 an internal
check failed, 4 I/O error. JSON output uses sorted keys and canonical scalar
strings, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CHECK_FAILED = 3
EXIT_IO = 4


class InputError(Exception):
    """Bad user input; maps to exit code 2."""


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True)


def _envelope(command: str, inputs: dict, ok: bool, result: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "ok": ok, "result": result}


def _load(args) -> tuple:
    from .galois import MalformedDatumError, catalog, load_datum

    if args.catalog and args.input:
        raise InputError("give either --catalog or --input, not both")
    if args.catalog:
        try:
            return catalog(args.catalog), {"catalog": args.catalog}
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from exc
    if args.input:
        try:
            return load_datum(args.input), {"input": args.input}
        except MalformedDatumError as exc:
            raise InputError(f"{exc.code}: {exc}") from exc
    raise InputError("one of --catalog or --input is required")


def _require_valid(d) -> None:
    from .galois import ValidationError, validate

    report = validate(d)
    if not report.ok:
        raise ValidationError(report)


# --- commands: each returns (ok, result dict, text) ---


def cmd_validate(args):
    from .galois import validate

    d, inputs = _load(args)
    report = validate(d)
    return inputs, report.ok, report.to_json(), report.to_text(), EXIT_INVALID


def cmd_catalog(args):
    from .galois import CATALOG_NAMES, catalog_entry, datum_to_json, galois_group, validate

    if args.list or not args.name:
        rows = []
        for name in CATALOG_NAMES:
            e = catalog_entry(name)
            rows.append({
                "name": name,
                "n": e.datum.n,
                "base": e.datum.base.tag,
                "expected_group": e.expected_group_name,
                "abelian": e.expected_abelian,
            })
        text = "\n".join(f"{r['name']:<8} n={r['n']}  base={r['base']:<3} group={r['expected_group']}" for r in rows)
        return {"list": True}, True, {"entries": rows}, text, EXIT_CHECK_FAILED
    try:
        e = catalog_entry(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from exc
    ok = validate(e.datum).ok and galois_group(e.datum).name == e.expected_group_name
    data = datum_to_json(e.datum)
    return {"name": args.name}, ok, {"datum": data}, _dump(data), EXIT_CHECK_FAILED


def analyze_datum(d) -> dict:
    from .descent import hopf_of_group, primitive_idempotent_count
    from .galois import galois_group, validate
    from .groups import center, identify
    from .other_group import build_theta, center_theorems_check, other_group, torsor_check

    report = validate(d)
    gal = galois_group(d)
    t = build_theta(d)
    res = other_group(t)
    torsor = torsor_check(t, res)
    cent = center_theorems_check(t, res)
    hopf = hopf_of_group(res.gbar, d)
    axioms = hopf.axioms()
    idem = primitive_idempotent_count(hopf.algebra)
    orbits = len(res.gbar.orbits())
    hopf_summary = {
        "dim": hopf.dim,
        "axioms": axioms,
        "primitive_idempotents": idem,
        "gal_orbits_on_gbar": orbits,
    }
    z = sorted(center(gal))
    checks = dict(res.checks)
    checks["torsor"] = torsor.ok
    checks["center_theorems"] = cent.ok
    checks["hopf_axioms"] = all(axioms.values())
    checks["idempotents_match_orbits"] = idem == orbits
    return {
        "name": d.name,
        "n": d.n,
        "base": d.base.tag,
        "notes": list(report.notes),
        "galois_group": {"name": gal.name, "order": gal.order, "abelian": gal.is_abelian()},
        "G": {
            "name": identify(_as_group(res.G)) or "",
            "generators": [str(p) for p in res.G.generators()],
            "order": res.G.order(),
        },
        "Gbar": {
            "name": identify(res.gbar.group) or "",
            "generators": [str(p) for p in res.gbar_perms.generators()],
            "order": len(res.gbar_elements),
            "orbit_sizes": res.orbit_sizes(),
        },
        "constant": cent.constant,
        "center": {"size": len(z), "elements": [gal.labels[a] for a in z]},
        "intersection": sorted(str(p) for p in res.gbar_perms.intersection(res.G)),
        "torsor": torsor.to_json(),
        "center_theorems": cent.to_json(),
        "hopf": hopf_summary,
        "checks": checks,
    }


def _as_group(h):
    from .other_group import _perm_group

    return _perm_group(h)


def _analyze_text(r: dict) -> str:
    lines = [
        f"{r['name']}: n={r['n']} over {r['base']}, Galois group {r['galois_group']['name']}",
        f"  G     = <{', '.join(r['G']['generators'])}>  ({r['G']['name']}, order {r['G']['order']})",
        f"  Gbar  = <{', '.join(r['Gbar']['generators'])}>  ({r['Gbar']['name']}, order {r['Gbar']['order']}),"
        f" action orbit sizes {r['Gbar']['orbit_sizes']}",
        f"  constant: {r['constant']}",
        f"  Z(gal): {r['center']['size']} element(s); |Gbar ∩ G| = {r['center_theorems']['intersection_size']}",
        f"  torsor: {r['torsor']['pair_count']} pairs, bijection {r['torsor']['bijection_ok']},"
        f" equivariance {r['torsor']['equivariance_ok']} ({r['torsor']['triples_checked']} triples)",
        f"  hopf: dim {r['hopf']['dim']}, {r['hopf']['primitive_idempotents']} primitive idempotents,"
        f" axioms {'ok' if all(r['hopf']['axioms'].values()) else 'FAIL'}",
    ]
    lines += [f"  note: {n}" for n in r["notes"]]
    failed = [k for k, v in r["checks"].items() if not v]
    lines.append("  all checks passed" if not failed else f"  FAILED: {', '.join(sorted(failed))}")
    return "\n".join(lines)


def cmd_analyze(args):
    d, inputs = _load(args)
    _require_valid(d)
    r = analyze_datum(d)
    return inputs, all(r["checks"].values()), r, _analyze_text(r), EXIT_CHECK_FAILED


def cmd_census(args):
    from .centralizer import centralizer_order_census
    from .groups import MAX_ENUM_ORDER, group_catalog

    if args.max_order > MAX_ENUM_ORDER or args.max_order < 1:
        raise InputError(f"--max-order must be between 1 and {MAX_ENUM_ORDER}")
    reports = [centralizer_order_census(g) for g in group_catalog(args.max_order)]
    ok = all(r.ok for r in reports)
    text = "\n\n".join(r.to_text() for r in reports)
    return {"max_order": args.max_order}, ok, {"groups": [r.to_json() for r in reports]}, text, EXIT_CHECK_FAILED


def cmd_hopf(args):
    from .descent import primitive_idempotent_count
    from .descent import hopf_of_group
    from .other_group import build_theta, other_group

    d, inputs = _load(args)
    _require_valid(d)
    res = other_group(build_theta(d))
    h = hopf_of_group(res.gbar, d)
    axioms = h.axioms()
    idem = primitive_idempotent_count(h.algebra)
    result = {
        "name": d.name,
        "base": d.base.to_json(),
        "hopf": h.to_json(),
        "axioms": axioms,
        "primitive_idempotents": idem,
        "gal_orbits": len(res.gbar.orbits()),
    }
    ok = all(axioms.values()) and idem == result["gal_orbits"]
    text = (
        f"{d.name}: Hopf algebra of dimension {h.dim} over {d.base.tag}\n"
        + "\n".join(f"  {k}: {'ok' if v else 'FAIL'}" for k, v in axioms.items())
        + f"\n  primitive idempotents: {idem} (gal orbits: {result['gal_orbits']})"
    )
    return inputs, ok, result, text, EXIT_CHECK_FAILED


def descent_matrix(d, max_size: int) -> list[dict]:
    from .descent import algebra_of_set, gamma_sets_up_to, roundtrip_algebra, roundtrip_set, set_of_algebra
    from .galois import galois_group

    rows = []
    for combo, x in gamma_sets_up_to(galois_group(d), max_size):
        a = algebra_of_set(x, d)
        xa = set_of_algebra(a, d)
        rs = roundtrip_set(x, d)
        ra = roundtrip_algebra(a, d)
        rows.append({
            "orbit_types": list(combo),
            "orbit_sizes": sorted(len(o) for o in x.orbits()),
            "size": x.size,
            "algebra_dim": a.dim,
            "points_of_algebra": xa.size,
            "set_roundtrip": rs.ok,
            "algebra_roundtrip": ra.ok,
        })
    return rows


def cmd_descent(args):
    d, inputs = _load(args)
    _require_valid(d)
    if args.max_size < 1 or args.max_size > 8:
        raise InputError("--max-size must be between 1 and 8")
    inputs["max_size"] = args.max_size
    rows = descent_matrix(d, args.max_size)
    ok = all(r["set_roundtrip"] and r["algebra_roundtrip"] and r["algebra_dim"] == r["size"] == r["points_of_algebra"] for r in rows)
    text = "\n".join(
        f"  {str(r['orbit_sizes']):<24} dim={r['algebra_dim']} points={r['points_of_algebra']}"
        f" set={'pass' if r['set_roundtrip'] else 'FAIL'} algebra={'pass' if r['algebra_roundtrip'] else 'FAIL'}"
        for r in rows
    )
    return inputs, ok, {"name": d.name, "rows": rows}, f"{d.name}: {len(rows)} Γ-sets\n{text}", EXIT_CHECK_FAILED


def s6_report() -> dict:
    from .s6 import (
        build_outer,
        class_swap_check,
        find_conjugator,
        inner_composite_samples,
        is_inner,
        regular_involution_check,
        regular_subgroup_census,
    )

    phi = build_outer()
    swap = class_swap_check(phi)
    census = regular_subgroup_census()
    inv = regular_involution_check(phi)
    square = find_conjugator(phi.compose(phi))
    samples = inner_composite_samples(phi)
    return {
        "generator_images": phi.generator_images(),
        "homomorphism": phi.is_homomorphism(),
        "bijective": phi.is_bijective(),
        "inner": is_inner(phi),
        "square_conjugator": str(square) if square is not None else None,
        "class_swap": swap.to_json(),
        "regular_subgroups": census.to_json(),
        "involutions": inv.to_json(),
        "inner_composites_outer": [[str(c), ok] for c, ok in samples],
    }


def cmd_s6(args):
    r = s6_report()
    ok = (
        r["homomorphism"]
        and r["bijective"]
        and not r["inner"]
        and r["square_conjugator"] is not None
        and r["class_swap"]["ok"]
        and r["regular_subgroups"]["ok"]
        and r["involutions"]["ok"]
        and all(flag for _, flag in r["inner_composites_outer"])
    )
    rs = r["regular_subgroups"]
    lines = [
        "phi on generators: " + ", ".join(f"{k} -> {v}" for k, v in r["generator_images"].items()),
        f"inner: {r['inner']} (phi^2 conjugator: {r['square_conjugator']})",
        "cycle type of g -> cycle type of phi(g):",
    ]
    lines += [f"  {src:<14} -> {', '.join(f'{t} x{c}' for t, c in dst)}" for src, dst in r["class_swap"]["image_types"].items()]
    lines += [
        f"regular subgroups: {rs['total']} ({rs['cyclic']} cyclic, {rs['nonabelian']} S3);"
        f" 720/|N| = {rs['conjugacy_class_sizes']}",
        f"involutions in regular subgroups: {r['involutions']['involutions_checked']},"
        f" all (2,2,2): {r['involutions']['all_involutions_222']},"
        f" none fixed by phi: {r['involutions']['phi_fixes_none']},"
        f" phi(G) never regular: {r['involutions']['images_not_regular']}",
    ]
    return {}, ok, r, "\n".join(lines), EXIT_CHECK_FAILED


# --- parser ---


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twin", description="Galois groups, their twins, and the S_6 exception.")
    sub = p.add_subparsers(dest="command", required=True)

    def source(sp):
        sp.add_argument("--catalog", help="built-in datum name")
        sp.add_argument("--input", help="path to a datum JSON file")

    def emit(sp, default="text"):
        sp.add_argument("--emit", choices=["text", "json"], default=default)

    sp = sub.add_parser("validate", help="validate a Galois datum")
    source(sp)
    emit(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("catalog", help="list or print built-in data")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    emit(sp)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("analyze", help="fixed group, other group, torsor, center, Hopf summary")
    source(sp)
    emit(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("census", help="centralizer orders against (m!) k^m")
    sp.add_argument("--max-order", type=int, default=8)
    emit(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("hopf", help="Hopf algebra of the other group")
    source(sp)
    emit(sp)
    sp.set_defaults(func=cmd_hopf)

    sp = sub.add_parser("descent-roundtrip", help="Γ-set / algebra round trips")
    source(sp)
    sp.add_argument("--max-size", type=int, default=8)
    emit(sp)
    sp.set_defaults(func=cmd_descent)

    sp = sub.add_parser("s6-demo", help="outer automorphism of S_6")
    emit(sp)
    sp.set_defaults(func=cmd_s6)
    return p


def main(argv: list[str] | None = None, out: Callable[[str], None] | None = None) -> int:
    from .galois import ValidationError

    out = out or (lambda s: sys.stdout.write(s + "\n"))
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "emit", "text") == "json"

    def fail(code: int, kind: str, message: str, details=None) -> int:
        if as_json:
            out(_dump(_envelope(args.command, {}, False, {"error": kind, "message": message, "details": details})))
        else:
            sys.stderr.write(f"twin {args.command}: {message}\n")
        return code

    try:
        inputs, ok, result, text, fail_code = args.func(args)
    except InputError as exc:
        return fail(EXIT_INVALID, "invalid_input", str(exc))
    except ValidationError as exc:
        if not as_json:
            sys.stderr.write(exc.report.to_text() + "\n")
        return fail(EXIT_INVALID, "validation", str(exc), exc.report.to_json())
    except OSError as exc:
        return fail(EXIT_IO, "io", str(exc))
    except (AssertionError, ArithmeticError) as exc:
        return fail(EXIT_CHECK_FAILED, "internal_check", str(exc))
    out(_dump(_envelope(args.command, inputs, ok, result)) if as_json else text)
    return EXIT_OK if ok else fail_code


if __name__ == "__main__":
    sys.exit(main())
