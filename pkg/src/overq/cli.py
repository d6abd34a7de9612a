"""Command-line front end: verification, coefficient tables, enumeration,
and oracle comparison.

Exit codes are a stable contract: 0 success, 1 a verification compared
unequal, 2 usage error (unknown id, malformed argument).  Data goes to
stdout (or --out), diagnostics to stderr.  Coefficients serialize as
exact decimal strings so arbitrary-precision values survive a round trip.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Optional, Sequence

from . import bailey as _bailey
from .enumeration import enumerate_family, family, oracle_compare, signed_count
from .identities import (
    CLASSICAL_IDS,
    classical_sides,
    gen_family,
    rhs_theorem,
    verify_classical,
    verify_theorem,
)
from .products import Monomial, poch_finite, poch_infinite
from .report import VerificationReport
from .series import QSeries

DEFAULT_ORDER = 120
ORDER_ENV = "OVERQ_ORDER"

_FAMILY_ORDER = ("F", "G", "A", "A2", "B", "C", "D")


class UsageError(Exception):
    """Bad input that should exit 2."""


def _resolve_order(value: Optional[int]) -> int:
    if value is None:
        env = os.environ.get(ORDER_ENV)
        if env is not None:
            try:
                value = int(env)
            except ValueError:
                raise UsageError(f"{ORDER_ENV} must be an integer, got {env!r}") from None
        else:
            value = DEFAULT_ORDER
    if value < 0:
        raise UsageError("order must be >= 0")
    return value


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
            if text and not text.endswith("\n"):
                handle.write("\n")


# -- series id grammar -------------------------------------------------------

_MONO_RE = re.compile(r"(-?)(?:q(?:\^(\d+))?|1)")


def _parse_monomial(text: str) -> Monomial:
    m = _MONO_RE.fullmatch(text)
    if not m:
        raise UsageError(f"bad monomial {text!r}; expected forms like q, -q, q^3, -1")
    c = -1 if m.group(1) else 1
    if text.lstrip("-") == "1":
        return Monomial(c, 0)
    return Monomial(c, int(m.group(2)) if m.group(2) else 1)


def _series_for(sid: str, order: int) -> QSeries:
    """Resolve a series id.

    gen:<family>              signed counting series of a family
    rhs:<family>              its closed theta side
    classical:<id>:<lhs|rhs>  one side of a classical identity (first pair)
    poch:<mono>:<base>        infinite product (a; q^base)_inf
    poch:<mono>:<base>:<n>    finite product (a; q^base)_n
    """
    head, _, rest = sid.partition(":")
    if head == "gen" and rest:
        return gen_family(rest, order)
    if head == "rhs" and rest:
        return rhs_theorem(rest, order)
    if head == "classical" and rest:
        cid, _, side = rest.rpartition(":")
        if side not in ("lhs", "rhs") or not cid:
            raise UsageError(f"classical series id must end in :lhs or :rhs, got {sid!r}")
        pairs = classical_sides(cid, order)
        _, lhs, rhs = pairs[0]
        return lhs if side == "lhs" else rhs
    if head == "poch" and rest:
        bits = rest.split(":")
        if len(bits) not in (2, 3):
            raise UsageError(f"poch series id is poch:<mono>:<base>[:<n>], got {sid!r}")
        a = _parse_monomial(bits[0])
        try:
            base = int(bits[1])
            n = int(bits[2]) if len(bits) == 3 else None
        except ValueError:
            raise UsageError(f"non-integer base or length in {sid!r}") from None
        if n is None:
            return poch_infinite(a, base, order)
        return poch_finite(a, base, n, order)
    raise UsageError(f"unknown series id {sid!r}; see `overq coeffs --help`")


# -- verify ------------------------------------------------------------------


def _lemma_case(name: str) -> Monomial:
    for pair_name, a in _bailey.LEMMA_CASES:
        if pair_name == name:
            return a
    raise UsageError(f"unknown Bailey pair {name!r}; know {sorted(_bailey.PAIRS)}")


def _verify_reports(target: str, order: int) -> list[VerificationReport]:
    head, _, rest = target.partition(":")
    if head == "theorem" and rest:
        return [verify_theorem(rest, order)]
    if head == "classical" and rest:
        return [verify_classical(rest, order)]
    if head == "bailey" and rest:
        return [_bailey.bailey_check(rest, n_max=40, order=order)]
    if head == "lemma" and rest:
        return [_bailey.verify_lemma(rest, _lemma_case(rest), order)]
    if target == "chain":
        reports = _bailey.chain_stage_reports(order)
        reports.append(_bailey.verify_chain(order))
        return reports
    if target == "all":
        reports = [verify_theorem(fam, order) for fam in _FAMILY_ORDER]
        reports += [verify_classical(cid, order) for cid in CLASSICAL_IDS]
        for pair_name, a in _bailey.LEMMA_CASES:
            reports.append(_bailey.bailey_check(pair_name, n_max=40, order=order))
            reports.append(_bailey.verify_lemma(pair_name, a, order))
        reports.append(_bailey.verify_chain(order))
        return reports
    raise UsageError(
        f"unknown verify target {target!r}; expected theorem:<family>, "
        "classical:<id>, bailey:<pair>, lemma:<pair>, chain, or all"
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    order = _resolve_order(args.order)
    reports = _verify_reports(args.target, order)
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in reports], indent=2), args.out)
    else:
        _emit("\n".join(r.render() for r in reports), args.out)
    return 0 if all(r.ok for r in reports) else 1


# -- coeffs ------------------------------------------------------------------


def _cmd_coeffs(args: argparse.Namespace) -> int:
    order = _resolve_order(args.order)
    series = _series_for(args.series, order)
    table = [(e, str(c)) for e, c in enumerate(series.coeffs) if c]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["exponent", "coefficient"])
        writer.writerows(table)
        _emit(buf.getvalue(), args.out)
    else:
        payload = {
            "series": args.series,
            "order": series.order,
            "coeffs": [[e, v] for e, v in table],
        }
        _emit(json.dumps(payload, indent=2), args.out)
    return 0


# -- enum --------------------------------------------------------------------


def _cmd_enum(args: argparse.Namespace) -> int:
    spec = family(args.family)  # raises KeyError -> usage
    if args.n < 1:
        raise UsageError("weight must be >= 1")
    if args.list:
        objs = enumerate_family(args.family, args.n)
        lines = [obj.render(unicode=args.unicode) for obj in objs]
        if args.format == "json":
            payload = {"family": spec.name, "n": args.n, "objects": lines}
            _emit(json.dumps(payload, indent=2), args.out)
        else:
            _emit("\n".join(lines), args.out)
    else:
        even, odd, signed = signed_count(args.family, args.n)
        if args.format == "json":
            payload = {"family": spec.name, "n": args.n, "counts": [even, odd, signed]}
            _emit(json.dumps(payload, indent=2), args.out)
        else:
            _emit(f"({even}, {odd}, {signed})", args.out)
    return 0


# -- oracle ------------------------------------------------------------------


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    names = list(_FAMILY_ORDER) if args.family == "all" else [args.family]
    reports = [oracle_compare(name, args.max_n, args.order) for name in names]
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in reports], indent=2), args.out)
    else:
        _emit("\n".join(r.render() for r in reports), args.out)
    return 0 if all(r.ok for r in reports) else 1


# -- parser ------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overq",
        description="Exact q-series verification and overpartition enumeration.",
        epilog=f"The default order is {DEFAULT_ORDER}, overridable via {ORDER_ENV}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify",
        help="compare both sides of an identity coefficient by coefficient",
        description=(
            "Targets: theorem:<family> (F, G, A, A'', B, C, D; primed aliases "
            "accepted), classical:<id>, bailey:<pair>, lemma:<pair>, chain, all."
        ),
    )
    p_verify.add_argument("--target", required=True)
    p_verify.add_argument("--order", type=int, default=None)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_coeffs = sub.add_parser(
        "coeffs",
        help="print the nonzero coefficients of a series as exact strings",
        description=(
            "Series ids: gen:<family>, rhs:<family>, classical:<id>:<lhs|rhs>, "
            "poch:<mono>:<base>[:<n>] with monomials like q, -q, q^3, -1."
        ),
    )
    p_coeffs.add_argument("--series", required=True)
    p_coeffs.add_argument("--order", type=int, default=None)
    p_coeffs.add_argument("--format", choices=("json", "csv"), default="json")
    p_coeffs.add_argument("--out", default=None)
    p_coeffs.set_defaults(func=_cmd_coeffs)

    p_enum = sub.add_parser(
        "enum",
        help="list or count the weight-n objects of a family",
        description=(
            "Overlined parts render with a trailing ~ (2~+1~+1); --unicode "
            "switches to combining overlines."
        ),
    )
    p_enum.add_argument("--family", required=True)
    p_enum.add_argument("--n", type=int, required=True)
    mode = p_enum.add_mutually_exclusive_group(required=True)
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--counts", action="store_true")
    p_enum.add_argument("--unicode", action="store_true")
    p_enum.add_argument("--format", choices=("text", "json"), default="text")
    p_enum.add_argument("--out", default=None)
    p_enum.set_defaults(func=_cmd_enum)

    p_oracle = sub.add_parser(
        "oracle",
        help="compare enumeration counts with series coefficients",
    )
    p_oracle.add_argument("--family", default="all")
    p_oracle.add_argument("--max-n", type=int, default=20)
    p_oracle.add_argument("--order", type=int, default=None)
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")
    p_oracle.add_argument("--out", default=None)
    p_oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, KeyError, ValueError) as exc:
        detail = exc.args[0] if exc.args else exc
        print(f"error: {detail}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
