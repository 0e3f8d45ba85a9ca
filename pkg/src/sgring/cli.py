"""Command-line front end.

Subcommands: analyze | basis | construct | batch | verify.  Ring input is
either JSON {"a": A, "b": B, "gens": [[p, q], ...]} or the compact form
"A,B;p1:q1,p2:q2".  Machine output is deterministic: JSON with sorted keys,
CSV with a fixed column order, monomials sorted by (beta, alpha).

Exit codes: 0 ring is Cohen-Macaulay (or command succeeded), 3 ring is not
Cohen-Macaulay, 64 usage, 65 bad input data, 69 work budget exceeded,
70 internal disagreement (a bug), 74 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import curve, fourgen, hilbert
from .core import RingSpec, subgroup_classes
from .errors import (
    BudgetExceeded,
    DisagreementError,
    NotFourGen,
    RingSpecError,
    SgringError,
)
from .oracle import DEFAULT_BUDGET, corners, fourgen_constants_bruteforce, gsw_cm_check, hilbert_function

EXIT_CM = 0
EXIT_OK = 0
EXIT_NOT_CM = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_BUDGET = 69
EXIT_SOFTWARE = 70
EXIT_IO = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 64 instead of argparse's default 2
        self.print_usage(sys.stderr)
        raise SystemExit(self.prog + ": error: " + message) from None


def parse_ring(text: str) -> RingSpec:
    """Parse a ring from JSON or the compact "A,B;p:q,..." form."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
            return RingSpec(data["a"], data["b"], tuple((p, q) for p, q in data["gens"]))
        except RingSpecError:
            raise
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise RingSpecError(f"bad ring JSON: {exc}") from exc
    try:
        head, _, tail = text.partition(";")
        a_s, b_s = head.split(",")
        gens = []
        for part in tail.split(","):
            part = part.strip()
            if not part:
                continue
            p_s, q_s = part.split(":")
            gens.append((int(p_s), int(q_s)))
        return RingSpec(int(a_s), int(b_s), tuple(gens))
    except RingSpecError:
        raise
    except ValueError as exc:
        raise RingSpecError(f"bad compact ring form {text!r}: {exc}") from exc


def ring_json(spec: RingSpec) -> dict:
    return {"a": spec.a, "b": spec.b, "gens": [list(g) for g in spec.gens]}


def build_report(spec: RingSpec, oracle_checked: bool = False,
                 budget: int = DEFAULT_BUDGET, with_trace: bool = False) -> dict:
    """Full analysis of one ring; raises DisagreementError if criteria split."""
    cs = corners(spec, budget)
    hd = hilbert.hilbert_data(spec, cs)
    length = len(cs)
    criteria = {
        "corner_unique": hilbert.is_cm(spec, cs),
        "length_equals_multiplicity": length == hd.multiplicity,
    }
    basis_out = None
    trace_out = None
    if len(spec.gens) <= 1:
        # at most three monomial generators: always Cohen-Macaulay
        criteria["few_generators"] = True
    elif len(spec.gens) == 2:
        consts = fourgen.constants(spec.a, spec.b, spec.gens[0], spec.gens[1])
        criteria["fourgen_sign"] = fourgen.is_cm(consts)
        result = fourgen.monomial_basis(consts)
        basis_out = [list(v) for v in result.sorted_monomials()]
        if with_trace:
            trace_out = [_trace_json(t) for t in result.trace]
        if oracle_checked and fourgen_constants_bruteforce(
                spec.a, spec.b, spec.gens[0], spec.gens[1]) != consts:
            raise DisagreementError(f"constants fast path != brute force for {spec}")
        if result.monomials != frozenset(cs.corners):
            raise DisagreementError(f"basis monomials != corner set for {spec}")
    if oracle_checked:
        criteria["cone_shift"] = gsw_cm_check(spec, cs)[0]
        for n in range(hd.stabilization, hd.stabilization + 3):
            if hilbert_function(spec, n, cs) != hd.value(n):
                raise DisagreementError(f"Hilbert function != polynomial at n={n} for {spec}")
    if len(set(criteria.values())) != 1:
        raise DisagreementError(f"Cohen-Macaulay criteria disagree for {spec}: {criteria}")
    return {
        "spec": ring_json(spec),
        "subgroup_size": len(subgroup_classes(spec)),
        "length": length,
        "multiplicity": hd.multiplicity,
        "constant_C": hd.constant,
        "stabilization_N": hd.stabilization,
        "polynomial": {"slope": hd.slope, "intercept": hd.intercept},
        "is_cm": criteria["corner_unique"],
        "criteria": criteria,
        "oracle_checked": oracle_checked,
        "basis": basis_out,
        "trace": trace_out,
    }


def _trace_json(t: fourgen.TraceStep, with_c: bool = False, n: int = 0) -> dict:
    row = {
        "branch": t.branch, "base": t.base, "a_star": t.a_star, "b_star": t.b_star,
        "g_star": t.g_star, "h_star": t.h_star, "added": t.added, "size": t.size,
    }
    if with_c:
        row["c_star"] = t.h_star // n
    return row


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _bool(v) -> str:
    return "true" if v else "false"


def cmd_analyze(args) -> int:
    spec = parse_ring(args.ring)
    report = build_report(spec, oracle_checked=args.oracle, budget=args.budget,
                          with_trace=args.trace)
    if args.json:
        _emit_json(report)
    else:
        out = sys.stdout
        out.write(f"ring: a={spec.a} b={spec.b} gens={list(spec.gens)}\n")
        out.write(f"subgroup size |H|: {report['subgroup_size']}\n")
        out.write(f"length dim_k R/(x^a,y^b): {report['length']}\n")
        out.write(f"multiplicity: {report['multiplicity']}\n")
        out.write(
            "hilbert polynomial: P(n) = "
            f"{report['multiplicity']}*(n+1) + {report['constant_C']}"
            f"   (exact for n >= {report['stabilization_N']})\n"
        )
        crits = " ".join(f"{k}={_bool(v)}" for k, v in sorted(report["criteria"].items()))
        out.write(f"criteria: {crits}\n")
        if report["basis"] is not None:
            out.write(f"basis size: {len(report['basis'])}\n")
        if args.trace and report["trace"]:
            for row in report["trace"]:
                out.write(
                    f"rule{row['branch']} |B|={row['size']} base={row['base']} "
                    f"a*={row['a_star']} b*={row['b_star']} g*={row['g_star']} h*={row['h_star']}\n"
                )
        if args.plot:
            _plot_corners(spec, args.budget)
        out.write(f"cohen-macaulay: {'yes' if report['is_cm'] else 'no'}\n")
    return EXIT_CM if report["is_cm"] else EXIT_NOT_CM


def _plot_corners(spec: RingSpec, budget: int) -> None:
    """ASCII staircases, one grid per congruence class with several corners."""
    cs = corners(spec, budget)
    out = sys.stdout
    for cls, grid in cs.grids.items():
        if len(grid) < 2:
            continue
        max_u = min(grid[-1][0], 40)
        max_v = min(grid[0][1], 40)
        out.write(f"class {cls}: corners at steps {list(grid)} (u right, v down)\n")
        gset = set(grid)
        for v in range(max_v + 1):
            line = []
            for u in range(max_u + 1):
                if (u, v) in gset:
                    line.append("X")
                elif any(uc <= u and vc <= v for uc, vc in grid):
                    line.append("#")
                else:
                    line.append(".")
            out.write("  " + "".join(line) + "\n")


def _plot_pairs(result: fourgen.BasisResult) -> None:
    """ASCII view of the basis pairs: '#' seed box, '+' added rows."""
    box = fourgen.candidate_box(result.consts)
    max_a = max(a for a, _ in result.pairs)
    max_b = max(b for _, b in result.pairs)
    out = sys.stdout
    out.write(f"pairs (a right, b down), {len(result.pairs)} total:\n")
    for b in range(min(max_b, 60) + 1):
        line = []
        for a in range(min(max_a, 60) + 1):
            if (a, b) in box:
                line.append("#")
            elif (a, b) in result.pairs:
                line.append("+")
            else:
                line.append(".")
        out.write("  " + "".join(line) + "\n")


def cmd_basis(args) -> int:
    curve_mode = args.n is not None or args.l is not None or args.m is not None
    if curve_mode:
        if args.n is None or args.l is None or args.m is None:
            raise NotFourGen("curve mode needs all of --n, --l, --m")
        cspec = curve.CurveSpec(args.n, args.l, args.m)
        consts = curve.constants(cspec).to_fourgen()
        label = {"curve": {"n": cspec.n, "l": cspec.l, "m": cspec.m}}
    else:
        if not args.ring:
            raise NotFourGen("need a ring argument or curve flags --n --l --m")
        spec = parse_ring(args.ring)
        if len(spec.gens) != 2:
            raise NotFourGen(
                f"basis needs exactly two middle generators, got {len(spec.gens)}"
            )
        consts = fourgen.constants(spec.a, spec.b, spec.gens[0], spec.gens[1])
        label = {"spec": ring_json(spec)}
    result = fourgen.monomial_basis(consts)
    cm = fourgen.is_cm(consts)
    n_for_c = consts.n if curve_mode else 0

    if args.json:
        payload = dict(label)
        payload.update({
            "constants": {k: getattr(consts, k) for k in
                          ("d", "n", "e", "l", "f", "m", "a1", "b1", "g1", "h1",
                           "a2", "b2", "g2", "h2", "a3", "b3", "g3", "h3")},
            "initial_size": result.initial_size,
            "size": len(result.pairs),
            "is_cm": cm,
            "monomials": [list(v) for v in result.sorted_monomials()],
            "pairs": [list(v) for v in result.sorted_pairs()],
            "trace": [_trace_json(t, curve_mode, n_for_c) for t in result.trace],
        })
        _emit_json(payload)
    else:
        out = sys.stdout
        if args.trace:
            if curve_mode:
                out.write(f"init  |B|={result.initial_size} base={consts.a1} "
                          f"a*={consts.a2} b*={consts.b2} c*={consts.h2 // consts.n}\n")
                for t in result.trace:
                    out.write(f"rule{t.branch} |B|={t.size} base={t.base} "
                              f"a*={t.a_star} b*={t.b_star} c*={t.h_star // consts.n}\n")
            else:
                out.write(f"init  |B|={result.initial_size} base={consts.a1} "
                          f"a*={consts.a2} b*={consts.b2} g*={consts.g2} h*={consts.h2}\n")
                for t in result.trace:
                    out.write(f"rule{t.branch} |B|={t.size} base={t.base} "
                              f"a*={t.a_star} b*={t.b_star} g*={t.g_star} h*={t.h_star}\n")
        if args.plot:
            _plot_pairs(result)
        if args.log:
            for a, b in result.sorted_pairs():
                out.write(f"({a},{b})\n")
        else:
            for alpha, beta in result.sorted_monomials():
                out.write(f"({alpha},{beta})\n")
    return EXIT_CM if cm else EXIT_NOT_CM


def cmd_construct(args) -> int:
    try:
        class_gens = [(p, q) for p, q in json.loads(args.subgroup_gens)]
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise RingSpecError(f"bad --subgroup-gens: {exc}") from exc
    spec = hilbert.construct_ring(args.a, args.b, class_gens, args.constant, args.stab)
    hd = hilbert.hilbert_data(spec, budget=args.budget)
    payload = {
        "spec": ring_json(spec),
        "verification": {
            "multiplicity": hd.multiplicity,
            "constant_C": hd.constant,
            "stabilization_N": hd.stabilization,
        },
    }
    if args.json:
        _emit_json(payload)
    else:
        out = sys.stdout
        out.write(f"ring: a={spec.a} b={spec.b} gens={list(spec.gens)}\n")
        out.write(
            f"verification: multiplicity={hd.multiplicity} "
            f"constant_C={hd.constant} stabilization_N={hd.stabilization}\n"
        )
    return EXIT_OK


def cmd_batch(args) -> int:
    if not args.curves:
        raise RingSpecError("batch currently supports --curves only")
    rows = curve.batch_classify(args.max_n, oracle_up_to=args.oracle_up_to,
                                budget=args.budget)
    with_oracle = args.oracle_up_to > 0
    if args.json:
        payload = []
        for r in rows:
            item = {"n": r.n, "l": r.l, "m": r.m, "is_cm": r.is_cm, "H": r.group_order,
                    "basis_size": r.basis_size, "bound_attained": r.bound_attained}
            if with_oracle:
                item["oracle_agree"] = r.oracle_agree
            payload.append(item)
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["n", "l", "m", "is_cm", "H", "basis_size", "bound_attained"]
        if with_oracle:
            header.append("oracle_agree")
        writer.writerow(header)
        for r in rows:
            row = [r.n, r.l, r.m, _bool(r.is_cm), r.group_order, r.basis_size,
                   _bool(r.bound_attained)]
            if with_oracle:
                row.append("" if r.oracle_agree is None else _bool(r.oracle_agree))
            writer.writerow(row)
        text = buf.getvalue()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"sgring: cannot write {args.out}: {exc}\n")
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo_s, _, hi_s = text.partition("..")
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise RingSpecError(f"bad range {text!r}, expected lo..hi") from exc
    if lo < 0 or hi < lo:
        raise RingSpecError(f"bad range {text!r}")
    return lo, hi


def verify_checks(spec: RingSpec, hf_range: tuple[int, int] | None,
                  budget: int = DEFAULT_BUDGET) -> list[tuple[str, bool, str]]:
    """Oracle-vs-fast comparisons; every check should pass on every ring."""
    cs = corners(spec, budget)
    hd = hilbert.hilbert_data(spec, cs)
    length = len(cs)
    checks = []

    verdicts = {
        "corner_unique": hilbert.is_cm(spec, cs),
        "length_equals_multiplicity": length == hd.multiplicity,
        "cone_shift": gsw_cm_check(spec, cs)[0],
    }
    consts = None
    if len(spec.gens) == 2:
        consts = fourgen.constants(spec.a, spec.b, spec.gens[0], spec.gens[1])
        verdicts["fourgen_sign"] = fourgen.is_cm(consts)
    agree = len(set(verdicts.values())) == 1
    checks.append(("cm_agreement", agree,
                   " ".join(f"{k}={_bool(v)}" for k, v in sorted(verdicts.items()))))

    if hf_range is not None:
        lo, hi = hf_range
        bad = []
        values = []
        for n in range(lo, hi + 1):
            hf = hilbert_function(spec, n, cs)
            values.append(hf)
            if (hf == hd.value(n)) != (n >= hd.stabilization):
                bad.append(n)
        checks.append((
            "hilbert_function", not bad,
            f"HF({lo}..{hi}) = {values}, equals P(n) exactly for n >= {hd.stabilization}",
        ))

    if consts is not None:
        brute = fourgen_constants_bruteforce(spec.a, spec.b, spec.gens[0], spec.gens[1])
        checks.append(("constants", brute == consts,
                       f"fast {consts} vs brute force"))
        result = fourgen.monomial_basis(consts)
        checks.append(("basis_equals_corners",
                       result.monomials == frozenset(cs.corners),
                       f"basis size {len(result.pairs)}, corner count {length}"))
        checks.append(("candidate_box_size",
                       len(fourgen.candidate_box(consts)) == consts.group_order,
                       f"|B0| vs |H| = {consts.group_order}"))
    return checks


def cmd_verify(args) -> int:
    spec = parse_ring(args.ring)
    hf_range = _parse_range(args.hf_range) if args.hf_range else None
    checks = verify_checks(spec, hf_range, args.budget)
    ok = all(passed for _, passed, _ in checks)
    if args.json:
        _emit_json({
            "spec": ring_json(spec),
            "checks": [{"name": n, "passed": p, "detail": d} for n, p, d in checks],
            "passed": ok,
        })
    else:
        for name, passed, detail in checks:
            sys.stdout.write(f"{'ok  ' if passed else 'FAIL'} {name}: {detail}\n")
        sys.stdout.write("verify: " + ("all checks passed\n" if ok else "FAILED\n"))
    return EXIT_OK if ok else EXIT_SOFTWARE


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trace", action="store_true", help="print per-iteration state")
    common.add_argument("--oracle", action="store_true", help="add brute-force cross-checks")
    common.add_argument("--plot", action="store_true", help="ASCII staircase rendering")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="work budget for exact enumerations")

    parser = _Parser(prog="sgring",
                     description="Cohen-Macaulay analysis of k[x^a, x^p1 y^q1, ..., y^b]")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="length, multiplicity, Hilbert data, CM verdict")
    p.add_argument("ring", help="ring as JSON or 'A,B;p1:q1,...'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("basis", parents=[common],
                       help="monomial basis of R/(x^a, y^b) for 4-generator rings and curves")
    p.add_argument("ring", nargs="?", help="ring with exactly two middle generators")
    p.add_argument("--n", type=int, help="curve: y-power")
    p.add_argument("--l", type=int, help="curve: first y-exponent")
    p.add_argument("--m", type=int, help="curve: second y-exponent")
    p.add_argument("--log", action="store_true",
                   help="print lattice pairs (a, b) instead of exponent vectors")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("construct", parents=[common],
                       help="build a ring with prescribed Hilbert data")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--subgroup-gens", required=True,
                   help="JSON list of congruence classes, e.g. '[[1,1]]'")
    p.add_argument("--constant", type=int, required=True, help="Hilbert constant C")
    p.add_argument("--stab", type=int, required=True, help="stabilization index")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("batch", parents=[common], help="classify curve families to CSV/JSON")
    p.add_argument("--curves", action="store_true", help="iterate 0 < l < m < n <= max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--oracle-up-to", type=int, default=0,
                   help="cross-check rows with n up to this bound against the oracle")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("verify", parents=[common],
                       help="run oracle-vs-fast comparisons on one ring")
    p.add_argument("ring", help="ring as JSON or 'A,B;p1:q1,...'")
    p.add_argument("--hf-range", help="check the Hilbert function on lo..hi")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            sys.stderr.write(exc.code + "\n")
            return EXIT_USAGE
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"sgring: {exc}\n")
        return EXIT_BUDGET
    except (DisagreementError,) as exc:
        sys.stderr.write(f"sgring: internal disagreement: {exc}\n")
        return EXIT_SOFTWARE
    except SgringError as exc:
        sys.stderr.write(f"sgring: {exc}\n")
        return EXIT_DATA
    except OSError as exc:
        sys.stderr.write(f"sgring: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
