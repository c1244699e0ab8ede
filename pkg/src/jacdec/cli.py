"""Command line front end.

Subcommands: fixed-point, decompose, simple, siegel-act, group-check,
verify.  Output is JSON by default (--format table for a plain-text
rendering).  Exit codes: 0 success, 1 input error, 2 degenerate
mathematical situation, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .cyclofield import CyclotomicField
from .decompose import (
    idempotent_image,
    lattice_from_basis,
    polarization_type,
    sub_period_matrix,
    sum_map_certificate,
)
from .errors import (
    DegenerateFixedLocusError,
    NotAGroupError,
    SingularMatrixError,
)
from .exactlinalg import Matrix, hnf, int_det
from .grouprep import (
    element_order,
    evaluate_word,
    generate_group,
    riemann_hurwitz_genus,
    verify_relations,
    verify_skep,
)
from .simplicity import build_system, decide, verify_witness
from .symplectic import (
    fixed_riemann_matrix,
    is_symplectic,
    ppav_isomorphism_witness,
    siegel_act,
)

__all__ = ["main"]


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.func(args)
    except (NotAGroupError, DegenerateFixedLocusError, SingularMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if payload is not None:
        if args.format == "table":
            print("\n".join(_render_table(payload)))
        else:
            print(json.dumps(payload, indent=2, sort_keys=True))
    return code


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=128,
                        help="working precision in bits for positivity checks")
    common.add_argument("--tolerance-bits", type=int, default=40,
                        help="positivity margin: minors must exceed 2^-this")
    common.add_argument("--search-bound", type=int, default=20,
                        help="bound for witness and rational-point searches")
    common.add_argument("--format", choices=("json", "table"), default="json")

    parser = argparse.ArgumentParser(
        prog="jacdec",
        description="Exact Riemann matrices, group-algebra decomposition "
                    "and simplicity tests for Jacobians with many "
                    "automorphisms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixed-point", parents=[common],
                       help="Riemann matrix fixed by a symplectic group")
    p.add_argument("group_file")
    p.add_argument("--conductor", type=int, default=5)
    p.add_argument("--rou-orders", default=None,
                   help="comma-separated orders of candidate eigenvalue "
                        "roots of unity (default: all in the field)")
    p.set_defaults(func=cmd_fixed_point)

    p = sub.add_parser("decompose", parents=[common],
                       help="abelian subvariety attached to one or two "
                            "subgroups")
    p.add_argument("group_file")
    p.add_argument("--subgroup", action="append", required=True,
                   metavar="WORDS",
                   help="comma-separated generator words or element indices; "
                        "repeat for a second subgroup")
    p.add_argument("--conductor", type=int, default=5)
    p.add_argument("--riemann", default=None,
                   help="Riemann matrix JSON file (default: solve for the "
                        "fixed point of the group)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("simple", parents=[common],
                       help="decide simplicity of an abelian surface")
    p.add_argument("riemann_file")
    p.add_argument("--half", action="store_true",
                   help="halve the input matrix first")
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("siegel-act", parents=[common],
                       help="apply an integral symplectic matrix to a "
                            "Riemann matrix")
    p.add_argument("matrix_file")
    p.add_argument("riemann_file")
    p.set_defaults(func=cmd_siegel_act)

    p = sub.add_parser("group-check", parents=[common],
                       help="closure, relations, skep and genus report")
    p.add_argument("group_file")
    p.add_argument("--max-order", type=int, default=10000)
    p.set_defaults(func=cmd_group_check)

    p = sub.add_parser("verify", parents=[common],
                       help="run the full bundled-data reproduction report")
    p.set_defaults(func=cmd_verify)
    return parser


def _parse_rou(text):
    if text is None:
        return None
    try:
        orders = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValueError(f"--rou-orders must be integers, got {text!r}") from None
    if not orders:
        raise ValueError("--rou-orders is empty")
    return orders


def _require_symplectic_generators(gd) -> None:
    """Reject bad input before attempting a closure: a non-symplectic
    generator can generate an infinite set."""
    for name, M in gd.generators.items():
        if not is_symplectic(M):
            raise ValueError(f"generator {name!r} is not symplectic")


def cmd_fixed_point(args):
    gd = jsonio.group_from_json(jsonio.read_payload(args.group_file))
    _require_symplectic_generators(gd)
    G = generate_group(gd.generators)
    field = CyclotomicField(args.conductor)
    res = fixed_riemann_matrix(
        G, field,
        rou_orders=_parse_rou(args.rou_orders),
        precision_bits=args.precision,
        tolerance_bits=args.tolerance_bits,
    )
    payload = jsonio.riemann_to_json(res.Z, res.embedding_k)
    payload["schema_version"] = jsonio.SCHEMA_VERSION
    return 0, payload


def _subgroup_elements(spec: str, G, assignments):
    """Closure in the ambient group of comma-separated words or indices.

    Word syntax wins ("1" is the identity word); a token that is not a
    valid word but parses as an integer picks G.elements[i].
    """
    gens = {}
    for i, token in enumerate(t.strip() for t in spec.split(",")):
        if not token:
            continue
        try:
            gens[f"g{i}"] = evaluate_word(token, assignments)
        except ValueError:
            if not token.isdigit():
                raise
            idx = int(token)
            if idx >= G.order:
                raise ValueError(f"element index {idx} out of range") from None
            gens[f"g{i}"] = G.elements[idx]
    if not gens:
        raise ValueError(f"subgroup spec {spec!r} names no elements")
    return generate_group(gens, max_order=G.order).elements


def _period_matrix(Z: Matrix) -> Matrix:
    return Matrix.identity(Z.field, Z.rows).hstack(Z)


def cmd_decompose(args):
    gd = jsonio.group_from_json(jsonio.read_payload(args.group_file))
    _require_symplectic_generators(gd)
    G = generate_group(gd.generators)
    assignments = gd.assignments()
    if args.riemann is not None:
        Z, _ = jsonio.riemann_from_json(jsonio.read_payload(args.riemann))
    else:
        field = CyclotomicField(args.conductor)
        Z = fixed_riemann_matrix(
            G, field,
            precision_bits=args.precision,
            tolerance_bits=args.tolerance_bits,
        ).Z
    Pi = _period_matrix(Z)
    blocks = []
    lattices = []
    for spec in args.subgroup:
        H = _subgroup_elements(spec, G, assignments)
        L = idempotent_image(H)
        sub = sub_period_matrix(
            Pi, L,
            precision_bits=args.precision,
            tolerance_bits=args.tolerance_bits,
        )
        lattices.append(L)
        blocks.append({
            "subgroup": spec,
            "subgroup_order": len(H),
            "B": jsonio.int_matrix_to_json(L.B),
            "type": list(L.type),
            "d": L.d,
            "Z_sub": jsonio.riemann_to_json(sub.Z_sub, sub.embedding_k),
        })
    payload = {"schema_version": jsonio.SCHEMA_VERSION, "subvarieties": blocks}
    if len(lattices) == 2:
        cert = sum_map_certificate(lattices[0], lattices[1])
        payload["certificate"] = {
            "det": cert.det,
            "kernel_order": cert.kernel_order,
            "verdict": cert.verdict,
        }
    return 0, payload


def cmd_simple(args):
    Z, _ = jsonio.riemann_from_json(jsonio.read_payload(args.riemann_file))
    if args.half:
        Z = Z * Fraction(1, 2)
    verdict = decide(build_system(Z), search_bound=args.search_bound)
    payload = {
        "schema_version": jsonio.SCHEMA_VERSION,
        "kind": verdict.kind,
        "witness": _frac_list(verdict.witness),
        "residual": _frac_list(verdict.residual),
        "residual_pretty": verdict.residual_pretty,
        "dimension": verdict.dimension,
    }
    if verdict.family is not None:
        particular, kernel = verdict.family
        payload["family"] = {
            "particular": _frac_list(particular),
            "kernel": [_frac_list(k) for k in kernel],
        }
    return 0, payload


def cmd_siegel_act(args):
    R = jsonio.int_matrix_from_json(jsonio.read_payload(args.matrix_file))
    Z, k = jsonio.riemann_from_json(jsonio.read_payload(args.riemann_file))
    acted = siegel_act(R, Z)
    payload = jsonio.riemann_to_json(acted, k)
    payload["schema_version"] = jsonio.SCHEMA_VERSION
    return 0, payload


def cmd_group_check(args):
    gd = jsonio.group_from_json(jsonio.read_payload(args.group_file))
    G = generate_group(gd.generators, max_order=args.max_order)
    assignments = gd.assignments()
    payload = {
        "schema_version": jsonio.SCHEMA_VERSION,
        "order": G.order,
        "symplectic": {n: is_symplectic(M) for n, M in gd.generators.items()},
        "element_orders": {n: element_order(M) for n, M in assignments.items()},
    }
    ok = all(payload["symplectic"].values())
    rep = verify_relations(assignments, gd.relations)
    payload["relations"] = {
        "all_hold": rep.all_hold,
        "results": [{"word": w, "holds": holds} for w, holds in rep.results],
    }
    ok = ok and rep.all_hold
    if gd.signature is not None:
        genus = riemann_hurwitz_genus(G.order, gd.signature)
        payload["genus"] = _frac_str(genus)
        if gd.skep is not None:
            images = [evaluate_word(w, assignments) for w in gd.skep]
            sk = verify_skep(images, gd.signature, G)
            payload["skep"] = {
                "product_is_identity": sk.product_is_identity,
                "image_orders": [list(p) for p in sk.image_orders],
                "generates": sk.generates,
                "passed": sk.passed,
            }
            ok = ok and sk.passed
    payload["ok"] = ok
    return (0 if ok else 3), payload


def cmd_verify(args):
    steps = []
    artifacts = {}

    def step(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # report and keep going
            ok, detail = False, f"error: {exc}"
        steps.append({"name": name, "status": "pass" if ok else "fail",
                      "detail": detail})
        return ok

    gd = jsonio.group_from_json(jsonio.load_fixture("group_genus4.json"))
    assignments = gd.assignments()
    Z_ref, k_ref = jsonio.riemann_from_json(jsonio.load_fixture("fixed_point_Z.json"))
    field = Z_ref.field
    B1 = jsonio.lattice_from_json(jsonio.load_fixture("lattice_B1.json"))
    B2 = jsonio.lattice_from_json(jsonio.load_fixture("lattice_B2.json"))
    Z1, _ = jsonio.riemann_from_json(jsonio.load_fixture("theorem_Z1.json"))
    Z2, _ = jsonio.riemann_from_json(jsonio.load_fixture("theorem_Z2.json"))
    rho_phi = jsonio.int_matrix_from_json(jsonio.load_fixture("rho_phi.json")["matrix"])

    step("generators_symplectic", lambda: (
        all(is_symplectic(M) for M in gd.generators.values()),
        ", ".join(f"{n}: {is_symplectic(M)}" for n, M in gd.generators.items()),
    ))

    state = {}

    def run_closure():
        state["G"] = generate_group(gd.generators)
        return state["G"].order == 40, f"order={state['G'].order}"
    step("group_order_40", run_closure)

    step("relations_hold", lambda: (
        verify_relations(assignments, gd.relations).all_hold,
        f"relations={list(gd.relations)}",
    ))

    def run_skep():
        images = [evaluate_word(w, assignments) for w in gd.skep]
        sk = verify_skep(images, gd.signature, state["G"])
        return sk.passed, (
            f"product_is_identity={sk.product_is_identity} "
            f"orders={[list(p) for p in sk.image_orders]} generates={sk.generates}"
        )
    step("skep_generating_vector", run_skep)

    step("riemann_hurwitz_genus_4", lambda: (
        riemann_hurwitz_genus(40, gd.signature) == 4,
        f"genus={_frac_str(riemann_hurwitz_genus(40, gd.signature))}",
    ))

    def run_fixed_point():
        res = fixed_riemann_matrix(
            state["G"], field,
            precision_bits=args.precision,
            tolerance_bits=args.tolerance_bits,
        )
        state["Z"] = res.Z
        artifacts["Z"] = jsonio.riemann_to_json(res.Z, res.embedding_k)
        same = res.Z == Z_ref and res.embedding_k == k_ref
        return same, f"embedding_k={res.embedding_k} matches_bundled={same}"
    step("fixed_point_matches", run_fixed_point)

    def run_lattices():
        H1 = generate_group({"h": assignments["c"]}).elements
        H2 = generate_group({"h": evaluate_word("a c a^-1", assignments)}).elements
        state["L1"] = idempotent_image(H1)
        state["L2"] = idempotent_image(H2)
        artifacts["B1_hnf"] = jsonio.int_matrix_to_json(state["L1"].B)
        artifacts["B2_hnf"] = jsonio.int_matrix_to_json(state["L2"].B)
        same1 = state["L1"].B == _freeze(hnf(B1))
        same2 = state["L2"].B == _freeze(hnf(B2))
        return same1 and same2, f"B1_match={same1} B2_match={same2}"
    step("subvariety_lattices_match", run_lattices)

    def run_types():
        t1, d1 = polarization_type(B1)
        t2, d2 = polarization_type(B2)
        ok = t1 == (2, 2) and t2 == (2, 2) and d1 == d2 == 2
        return ok, f"type1={list(t1)} d1={d1} type2={list(t2)} d2={d2}"
    step("polarization_types_2_2", run_types)

    def run_certificate():
        cert = sum_map_certificate(lattice_from_basis(B1), lattice_from_basis(B2))
        return (cert.verdict == "isomorphism" and cert.det == 1,
                f"det={cert.det} verdict={cert.verdict}")
    step("sum_certificate_det_1", run_certificate)

    step("det_rho_phi_1", lambda: (
        int_det([list(r) for r in rho_phi]) == 1,
        f"det={int_det([list(r) for r in rho_phi])}",
    ))

    def make_witness_step(key, get_pair):
        def run():
            Za, Zb = get_pair()
            w = ppav_isomorphism_witness(Za, Zb, search_bound=args.search_bound)
            if w.kind == "witness":
                artifacts[key] = jsonio.int_matrix_to_json(w.T)
            return w.kind == "witness", f"kind={w.kind}"
        return run

    def get_sub(which, L_key, B_ref):
        sub = sub_period_matrix(
            _period_matrix(state["Z"]), state[L_key],
            precision_bits=args.precision,
            tolerance_bits=args.tolerance_bits,
        )
        artifacts[f"Z_sub_{which}"] = jsonio.riemann_to_json(
            sub.Z_sub, sub.embedding_k)
        return sub.Z_sub, B_ref * Fraction(1, 2)

    step("witness_S1_vs_Z1", make_witness_step(
        "T_S1_Z1", lambda: get_sub(1, "L1", Z1)))
    step("witness_S2_vs_Z2", make_witness_step(
        "T_S2_Z2", lambda: get_sub(2, "L2", Z2)))
    step("witness_Z1_vs_Z2", make_witness_step(
        "T_Z1_Z2", lambda: (Z1 * Fraction(1, 2), Z2 * Fraction(1, 2))))

    def run_simplicity():
        verdict = decide(build_system(Z1 * Fraction(1, 2)),
                         search_bound=args.search_bound)
        ok = (verdict.kind == "Simple"
              and verdict.residual_pretty == "5*mu^2 = 1")
        return ok, f"kind={verdict.kind} residual={verdict.residual_pretty}"
    step("simplicity_half_Z1", run_simplicity)

    def run_det_value():
        d = (Z1 * Fraction(1, 2)).det()
        expected = field.element((2, 0, 2, 2))
        return d == expected, f"det_coordinates={[str(c) for c in d.coeffs]}"
    step("det_half_Z1_value", run_det_value)

    ok = all(s["status"] == "pass" for s in steps)
    payload = {
        "schema_version": jsonio.SCHEMA_VERSION,
        "steps": steps,
        "artifacts": artifacts,
        "ok": ok,
    }
    return (0 if ok else 3), payload


def _freeze(M):
    return tuple(tuple(row) for row in M)


def _frac_list(values):
    if values is None:
        return None
    return [str(Fraction(v)) for v in values]


def _frac_str(q: Fraction):
    return int(q) if q.denominator == 1 else str(q)


def _render_table(payload, indent=0):
    pad = " " * indent
    lines = []
    if isinstance(payload, dict) and {"rows", "cols", "entries"} <= set(payload):
        for row in payload["entries"]:
            cells = [
                "[" + ", ".join(e) + "]" if isinstance(e, list) else str(e)
                for e in row
            ]
            lines.append(pad + "  ".join(cells))
        return lines
    for key, value in payload.items():
        if key == "steps":
            lines.append(f"{pad}steps:")
            for s in value:
                lines.append(f"{pad}  {s['status']:4}  {s['name']}: {s['detail']}")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_table(value, indent + 2))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.extend(_render_table(item, indent + 2))
                lines.append(pad + "  -")
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


if __name__ == "__main__":
    sys.exit(main())
