"""Command-line surface: table verification, per-family reports, determinantal
tools, and parameter search.

Every command emits a deterministic report (text, JSON or CSV) built from
exact integers and reduced fractions; floating point never appears.  Exit
codes: 0 when everything checks out, 1 on a verification mismatch, 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__, tables
from .determinantal import DegreeMatrix, en_resolution, hilbert_polynomial, match_family
from .errors import HilbdimError
from .families import (
    Family,
    FamilyDescriptor,
    del_pezzo3,
    h1L,
    hqf,
    invariant_set,
    scroll_p2,
    scroll_p2_genus,
    scroll_q,
    scroll_q_genus,
    violations,
)
from .hilbert_dim import (
    SplittingInputs,
    check_unobstructed,
    chi_normal,
    dim_closed_form,
    verify_tables,
)
from .p1_bundles import ceil_half, check_fibration_bound, derive_eb, infer_a1_lower

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(HilbdimError):
    """Bad command-line input; maps to exit code 2."""


# report plumbing --------------------------------------------------------------


def _report(command: str, rows: List[dict]) -> dict:
    passed = sum(1 for r in rows if r["pass"])
    return {
        "command": command,
        "version": __version__,
        "rows": rows,
        "summary": {"pass": passed, "fail": len(rows) - passed},
    }


def _row(inputs: dict, computed: dict, paper: dict, ok: bool, notes: Sequence[str]) -> dict:
    return {
        "input": inputs,
        "computed": computed,
        "paper": paper,
        "pass": bool(ok),
        "notes": list(notes),
    }


def _scalar(value) -> str:
    if isinstance(value, (list, tuple)):
        return json.dumps(list(value))
    return str(value)


def _render_text(report: dict) -> str:
    lines = [f"{report['command']} (hilbdim {report['version']})"]
    for row in report["rows"]:
        mark = " ok " if row["pass"] else "FAIL"
        chunks = []
        for section in ("input", "computed", "paper"):
            data = row[section]
            if data:
                chunks.append(" ".join(f"{k}={_scalar(v)}" for k, v in data.items()))
        line = f"[{mark}] " + " | ".join(chunks)
        for note in row["notes"]:
            line += f"\n       note: {note}"
        lines.append(line)
    summary = report["summary"]
    lines.append(f"summary: pass={summary['pass']} fail={summary['fail']}")
    return "\n".join(lines) + "\n"


def _render_csv(report: dict) -> str:
    flat_rows = []
    keys: List[str] = []
    seen = set()
    for row in report["rows"]:
        flat = {}
        for section in ("input", "computed", "paper"):
            for k, v in row[section].items():
                flat[f"{section}.{k}"] = _scalar(v)
        flat["pass"] = str(row["pass"])
        flat["notes"] = "; ".join(row["notes"])
        flat_rows.append(flat)
        for k in flat:
            if k not in seen:
                seen.add(k)
                keys.append(k)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=sorted(keys), lineterminator="\n")
    writer.writeheader()
    for flat in flat_rows:
        writer.writerow(flat)
    return buffer.getvalue()


def _emit(report: dict, args: argparse.Namespace) -> None:
    if args.quiet:
        return
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_render_csv(report))
    else:
        sys.stdout.write(_render_text(report))


# shared argument parsing -------------------------------------------------------


def _int_tuple(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from exc


def _require(args: argparse.Namespace, names: Sequence[str], family: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {family} requires {', '.join(missing)}")


def _descriptor_from_args(args: argparse.Namespace) -> FamilyDescriptor:
    family = Family(args.family)
    if family is Family.SCROLL_P2:
        _require(args, ("e1", "e2", "n"), family.value)
        f = scroll_p2(args.n, args.e1, args.e2)
    elif family is Family.SCROLL_Q:
        if args.c1 is not None:
            if len(args.c1) != 2:
                raise UsageError("--c1 needs two integers, e.g. --c1 3,3")
            e11, e12 = args.c1
        else:
            _require(args, ("e11", "e12"), family.value)
            e11, e12 = args.e11, args.e12
        _require(args, ("e2", "n"), family.value)
        f = scroll_q(args.n, e11, e12, args.e2)
    else:
        _require(args, ("d", "g", "n"), family.value)
        if family is Family.DEL_PEZZO3:
            _require(args, ("pg",), family.value)
            f = del_pezzo3(args.d, args.g, args.n, args.pg, a=args.bundle)
        else:
            f = hqf(args.d, args.g, args.n, a=args.bundle)
    for given, actual, label in (
        (args.d, f.d, "d"),
        (args.g, f.g, "g"),
    ):
        if given is not None and given != actual:
            raise UsageError(
                f"{label} = {given} contradicts the value {actual} forced by the "
                f"bundle data (violated invariant: degree/genus identity)"
            )
    return f


def _splitting_from_args(args: argparse.Namespace, f: FamilyDescriptor) -> SplittingInputs:
    if f.family is Family.SCROLL_P2:
        a = args.split_a if args.split_a is not None else ceil_half(f.params.e1)
        return SplittingInputs(a=a)
    if f.family is Family.SCROLL_Q:
        a = args.split_a if args.split_a is not None else ceil_half(f.params.e12)
        b = args.split_b if args.split_b is not None else ceil_half(f.params.e11)
        return SplittingInputs(a=a, b=b)
    case = args.case
    if case is None and args.a1_lower is None:
        case = tables.hqf_case_hint(f.d, f.g, f.n)
    return SplittingInputs(a1_lower=args.a1_lower, case_hint=case)


def _published_dim(f: FamilyDescriptor) -> Tuple[Optional[int], Optional[str]]:
    if f.family is Family.SCROLL_P2:
        for row in tables.SCROLL_P2_TABLE:
            if (row.d, row.g, row.n) == (f.d, f.g, f.n):
                label = f"scroll-p2 d={row.d} g={row.g}"
                if not row.existence_known:
                    label += " (existence open)"
                return row.dim, label
    elif f.family is Family.SCROLL_Q:
        for row in tables.SCROLL_Q_TABLE:
            if (row.d, row.g, row.n) == (f.d, f.g, f.n):
                return row.dim, f"scroll-q d={row.d} g={row.g}"
    elif f.family is Family.HQF:
        for row in tables.HQF_TABLE:
            if (row.d, row.g, row.n) == (f.d, f.g, f.n):
                return row.dim, f"hqf case {row.case}"
    else:
        for row in tables.DEL_PEZZO_TABLE:
            if (row.d, row.g, row.n) == (f.d, f.g, f.n):
                return row.dim, f"del-pezzo3 d={row.d} g={row.g}"
    return None, None


# verify-tables -----------------------------------------------------------------


def cmd_verify_tables(args: argparse.Namespace) -> int:
    rows = []
    for result in verify_tables().rows:
        rep = result.report
        rows.append(
            _row(
                {"table": result.table, "label": result.label, **result.inputs},
                {
                    "chi_N": rep.chi_normal,
                    "dim_formula": rep.dim_closed_form,
                    "h1L": rep.h1L,
                    "hypothesis_i": rep.hypothesis_i,
                    "hypothesis_ii": rep.hypothesis_ii.passed,
                    "hypothesis_ii_provenance": rep.hypothesis_ii.provenance,
                },
                {"dim": result.published_dim, "existence_known": result.existence_known},
                result.passed,
                result.notes,
            )
        )
    for ex in tables.DET_EXAMPLES:
        matrix = DegreeMatrix(ex.b, ex.a, ex.ambient_dim)
        rep = match_family(matrix, ex.descriptor())
        rows.append(
            _row(
                {
                    "table": "determinantal",
                    "label": ex.key,
                    "b": list(ex.b),
                    "a": list(ex.a),
                    "ambient_dim": ex.ambient_dim,
                },
                {
                    "hilbert_poly": str(rep.en_poly),
                    "d": rep.degree_genus[0],
                    "g": rep.degree_genus[1],
                    "dim": rep.dim_computed,
                    "polynomial_match": rep.polynomial_match,
                },
                {"dim_W": rep.dim_published},
                rep.passed,
                rep.notes,
            )
        )
    report = _report("verify-tables", rows)
    _emit(report, args)
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_MISMATCH


# family ------------------------------------------------------------------------


def cmd_family(args: argparse.Namespace) -> int:
    f = _descriptor_from_args(args)
    errs = violations(f)
    if errs:
        raise UsageError(f"invalid descriptor: {'; '.join(errs)}")
    h1 = h1L(f)
    if h1 != 0 and not args.allow_nonzero_h1l:
        raise UsageError(
            f"h1(L) = {h1} != 0 for this descriptor; pass --allow-nonzero-h1l to "
            f"proceed anyway"
        )
    sections = [s for s in ("invariants", "dim", "hypotheses") if getattr(args, s)]
    if not sections:
        sections = ["invariants", "dim", "hypotheses"]

    inv = invariant_set(f)
    rep = check_unobstructed(f, _splitting_from_args(args, f))
    computed: Dict[str, object] = {}
    if "invariants" in sections:
        computed.update(inv.seven())
        computed.update({"chi_OX": inv.chi_OX, "chi_OS": inv.chi_OS, "h1L": inv.h1L})
    if "dim" in sections:
        computed["chi_N"] = rep.chi_normal
        computed["dim_formula"] = rep.dim_closed_form
        computed["agree"] = rep.agree
    if "hypotheses" in sections:
        computed["hypothesis_i"] = rep.hypothesis_i
        computed["hypothesis_ii"] = rep.hypothesis_ii.passed
        computed["hypothesis_ii_provenance"] = rep.hypothesis_ii.provenance
        computed["hypothesis_ii_detail"] = rep.hypothesis_ii.detail

    published, label = _published_dim(f)
    paper = {"dim": published, "table": label} if published is not None else {}
    ok = rep.hypothesis_i and rep.hypothesis_ii.passed and rep.agree
    if published is not None:
        ok = ok and rep.chi_normal == published

    inputs = {"family": f.family.value, "d": f.d, "g": f.g, "n": f.n}
    if f.family is Family.SCROLL_P2:
        inputs.update({"e1": f.params.e1, "e2": f.params.e2})
    elif f.family is Family.SCROLL_Q:
        inputs.update({"e11": f.params.e11, "e12": f.params.e12, "e2": f.params.e2})
    else:
        inputs.update({"e": f.params.e, "b": f.params.b})
        if f.family is Family.DEL_PEZZO3:
            inputs["pg"] = f.pg_s

    report = _report("family", [_row(inputs, computed, paper, ok, [])])
    _emit(report, args)
    return EXIT_OK if ok else EXIT_MISMATCH


# det ---------------------------------------------------------------------------


def _matrix_from_args(args: argparse.Namespace) -> DegreeMatrix:
    if args.b is None or args.a is None or args.ambient_dim is None:
        raise UsageError("det commands need --b, --a and --ambient-dim")
    try:
        return DegreeMatrix(args.b, args.a, args.ambient_dim)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_det_resolution(args: argparse.Namespace) -> int:
    matrix = _matrix_from_args(args)
    inputs = {"b": list(matrix.b), "a": list(matrix.a), "ambient_dim": matrix.N}
    rows = [
        _row(
            inputs,
            {
                "index": index,
                "terms": [[twist, mult] for twist, mult in terms],
            },
            {},
            True,
            [],
        )
        for index, terms in en_resolution(matrix)
    ]
    report = _report("det resolution", rows)
    _emit(report, args)
    return EXIT_OK


def cmd_det_hilbert_poly(args: argparse.Namespace) -> int:
    matrix = _matrix_from_args(args)
    poly = hilbert_polynomial(matrix)
    descending = [str(c) for c in reversed(poly.coefficients)]
    rows = [
        _row(
            {"b": list(matrix.b), "a": list(matrix.a), "ambient_dim": matrix.N},
            {
                "coefficients_descending": descending,
                "degree": poly.degree,
                "polynomial": str(poly),
            },
            {},
            True,
            [],
        )
    ]
    report = _report("det hilbert-poly", rows)
    _emit(report, args)
    if not args.quiet and args.format == "text":
        sys.stdout.write(", ".join(descending) + "\n")
    return EXIT_OK


def cmd_det_match(args: argparse.Namespace) -> int:
    matrix = _matrix_from_args(args)
    f = _descriptor_from_args(args)
    errs = violations(f)
    if errs:
        raise UsageError(f"invalid descriptor: {'; '.join(errs)}")
    rep = match_family(matrix, f)
    rows = [
        _row(
            {
                "b": list(matrix.b),
                "a": list(matrix.a),
                "ambient_dim": matrix.N,
                "family": f.family.value,
                "d": f.d,
                "g": f.g,
                "n": f.n,
            },
            {
                "hilbert_poly": str(rep.en_poly),
                "family_poly": str(rep.family_poly),
                "polynomial_match": rep.polynomial_match,
                "degree": rep.degree_genus[0],
                "genus": rep.degree_genus[1],
                "degree_genus_match": rep.degree_genus_match,
                "dim": rep.dim_computed,
            },
            {"dim_W": rep.dim_published},
            rep.passed,
            rep.notes,
        )
    ]
    report = _report("det match", rows)
    _emit(report, args)
    return EXIT_OK if rep.passed else EXIT_MISMATCH


# search ------------------------------------------------------------------------


def _search_rows_fibration(family: Family, d_min: int, d_max: int) -> List[dict]:
    alpha = family.alpha
    rows = []
    for d in range(d_min, d_max + 1):
        g_top = d - 4 if alpha == 2 else max(-1, 2 * d - 11)
        for g in range(0, g_top + 1):
            if alpha == 3 and (2 * d - g - 2) % 3:
                continue
            e, b = derive_eb(d, g, alpha)
            if alpha == 2:
                n, pg = d + 2 - g, 0
                f = hqf(d, g, n)
            else:
                # h0(L) = h0(E) (all degrees nonnegative) plus h1(L) = 0 pins
                # the surface geometric genus: 3*pg = 2g + 1 - d
                triple_pg = 2 * g + 1 - d
                if triple_pg < 0:
                    continue
                pg = triple_pg // 3
                n = e + 3
                if n < 6:
                    continue
                f = del_pezzo3(d, g, n, pg)
            hint = tables.hqf_case_hint(d, g, n) if alpha == 2 else None
            bound = infer_a1_lower(alpha, b, hint)
            if not check_fibration_bound(alpha, b, bound.lower):
                continue
            published, label = _published_dim(f)
            dim = dim_closed_form(f)
            inputs = {"family": family.value, "d": d, "g": g, "n": n}
            if alpha == 3:
                inputs["pg"] = pg
            computed = {
                "e": e,
                "b": b,
                "h1L": h1L(f),
                "chi_N": chi_normal(f),
                "dim_formula": dim,
                "a1_lower": bound.lower,
            }
            paper = {"table": label, "dim": published} if published is not None else {}
            ok = published is None or dim == published
            notes = [bound.rule] if hint is not None else []
            rows.append(_row(inputs, computed, paper, ok, notes))
    return rows


def _search_rows_scroll(family: Family, d_min: int, d_max: int, c1: Tuple[int, ...]) -> List[dict]:
    rows = []
    for d in range(d_min, d_max + 1):
        if family is Family.SCROLL_P2:
            (e1,) = c1
            e2 = e1 * e1 - d
            g = scroll_p2_genus(e1)
            extra = {"e1": e1, "e2": e2}
        else:
            e11, e12 = c1
            e2 = 2 * e11 * e12 - d
            g = scroll_q_genus(e11, e12)
            extra = {"e11": e11, "e12": e12, "e2": e2}
        if e2 < 0:
            continue
        n = d + 2 - g
        if n < 6:
            continue
        if family is Family.SCROLL_P2:
            f = scroll_p2(n, c1[0], e2)
            threaded = {"split_a": ceil_half(c1[0])}
        else:
            f = scroll_q(n, c1[0], c1[1], e2)
            threaded = {"split_a": ceil_half(c1[1]), "split_b": ceil_half(c1[0])}
        published, label = _published_dim(f)
        dim = dim_closed_form(f)
        inputs = {"family": family.value, "d": d, "g": g, "n": n, **extra}
        computed = {"h1L": h1L(f), "chi_N": chi_normal(f), "dim_formula": dim, **threaded}
        paper = {"table": label, "dim": published} if published is not None else {}
        ok = published is None or dim == published
        rows.append(_row(inputs, computed, paper, ok, []))
    return rows


def cmd_search(args: argparse.Namespace) -> int:
    if args.d_min is None or args.d_max is None:
        raise UsageError("search needs both --d-min and --d-max (bounded range)")
    if args.d_min > args.d_max:
        raise UsageError(f"empty degree range [{args.d_min}, {args.d_max}]")
    family = Family(args.family)
    if family is Family.SCROLL_P2:
        if args.e1 is None:
            raise UsageError("search scroll-p2 needs --e1 (the sweep is unbounded without it)")
        rows = _search_rows_scroll(family, args.d_min, args.d_max, (args.e1,))
    elif family is Family.SCROLL_Q:
        if args.c1 is None:
            raise UsageError("search scroll-q needs --c1 e11,e12 (the sweep is unbounded without it)")
        if len(args.c1) != 2:
            raise UsageError("--c1 needs two integers, e.g. --c1 3,3")
        rows = _search_rows_scroll(family, args.d_min, args.d_max, tuple(args.c1))
    else:
        rows = _search_rows_fibration(family, args.d_min, args.d_max)
    report = _report(f"search {family.value}", rows)
    _emit(report, args)
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_MISMATCH


# parser ------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )
    common.add_argument("--quiet", action="store_true", help="suppress report output")

    family_opts = argparse.ArgumentParser(add_help=False)
    family_opts.add_argument("--d", type=int, default=None, help="degree")
    family_opts.add_argument("--g", type=int, default=None, help="sectional genus")
    family_opts.add_argument("--n", type=int, default=None, help="ambient projective dimension")
    family_opts.add_argument("--e1", type=int, default=None, help="c1 degree on the plane")
    family_opts.add_argument("--e2", type=int, default=None, help="c2 degree")
    family_opts.add_argument("--e11", type=int, default=None, help="first c1 bidegree on the quadric")
    family_opts.add_argument("--e12", type=int, default=None, help="second c1 bidegree on the quadric")
    family_opts.add_argument("--c1", type=_int_tuple, default=None, help="c1 bidegree pair, e.g. 3,3")
    family_opts.add_argument("--pg", type=int, default=None, help="geometric genus of the surface section")
    family_opts.add_argument("--bundle", type=_int_tuple, default=None, help="fibration splitting degrees, e.g. 0,1,1,1")
    family_opts.add_argument("--split-a", type=int, default=None, help="stated splitting degree on a line")
    family_opts.add_argument("--split-b", type=int, default=None, help="stated splitting degree on the second ruling")
    family_opts.add_argument("--a1-lower", type=int, default=None, help="certified lower bound for the smallest splitting degree")
    family_opts.add_argument("--case", type=int, default=None, help="table case carrying a sharpened bound")

    parser = argparse.ArgumentParser(
        prog="hilbdim",
        description=(
            "Exact invariants and Hilbert-scheme component dimensions for "
            "embedded 3-fold scrolls and fibrations."
        ),
    )
    parser.add_argument("--version", action="version", version=f"hilbdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-tables", parents=[common], help="recompute all built-in tables")
    p.set_defaults(handler=cmd_verify_tables)

    p = sub.add_parser("family", parents=[common, family_opts], help="report on one family instance")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--invariants", action="store_true", help="show the invariant set")
    p.add_argument("--dim", action="store_true", help="show chi(N) and the closed-form dimension")
    p.add_argument("--hypotheses", action="store_true", help="show the hypothesis verdicts")
    p.add_argument(
        "--allow-nonzero-h1l",
        action="store_true",
        help="proceed even when h1(L) is nonzero",
    )
    p.set_defaults(handler=cmd_family)

    det = sub.add_parser("det", help="determinantal tools")
    det_sub = det.add_subparsers(dest="det_command", required=True)
    det_opts = argparse.ArgumentParser(add_help=False)
    det_opts.add_argument("--b", type=_int_tuple, default=None, help="source twists, e.g. 0,0")
    det_opts.add_argument("--a", type=_int_tuple, default=None, help="target twists, e.g. 1,1,1,2")
    det_opts.add_argument("--ambient-dim", type=int, default=None, help="ambient projective dimension")

    p = det_sub.add_parser("resolution", parents=[common, det_opts], help="resolution twists and multiplicities")
    p.set_defaults(handler=cmd_det_resolution)
    p = det_sub.add_parser("hilbert-poly", parents=[common, det_opts], help="Hilbert polynomial coefficients")
    p.set_defaults(handler=cmd_det_hilbert_poly)
    p = det_sub.add_parser(
        "match", parents=[common, det_opts, family_opts], help="match degree data against a family instance"
    )
    p.add_argument("--family", dest="family", required=True, choices=[f.value for f in Family])
    p.set_defaults(handler=cmd_det_match)

    p = sub.add_parser("search", parents=[common, family_opts], help="enumerate admissible parameter sets")
    p.add_argument("family", choices=[f.value for f in Family])
    p.add_argument("--d-min", type=int, default=None, help="smallest degree")
    p.add_argument("--d-max", type=int, default=None, help="largest degree")
    p.set_defaults(handler=cmd_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HilbdimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # internal failure still honors the exit contract
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
