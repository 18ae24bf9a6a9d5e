"""Command-line front end.

Every invocation prints one JSON document (or a TSV table) on stdout.
Exit codes: 0 success, 2 malformed input, 3 precision exhausted,
4 precondition violated, 1 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import classifier, heisenberg as heis
from .corpus import load_corpus
from .entropy_formulas import MixedShape, addition_check, entropy_mixed, entropy_padic, entropy_real
from .errors import InvalidInput, PreconditionError, PrecisionExhausted, RootFindingFailure
from .lattice_oracle import entropy_estimate
from .matrices import RationalMatrix, parse_rational
from .padic_core import DEFAULT_PRECISION, PadicContext

EXIT_OK, EXIT_FAILURE, EXIT_INPUT, EXIT_PRECISION, EXIT_PRECONDITION = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class CliConfig:
    p: int = 5
    K: int = DEFAULT_PRECISION
    n_max: int = 32
    fmt: str = "json"
    seed: int = 0

    def __post_init__(self):
        PadicContext(self.p, self.K)
        if self.n_max < 2:
            raise InvalidInput("--n-max must be at least 2")
        if self.fmt not in ("json", "tsv"):
            raise InvalidInput("--format must be json or tsv")

    @property
    def ctx(self) -> PadicContext:
        return PadicContext(self.p, self.K)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInput(f"expected two comma-separated integers, got {text!r}") from None
    return a, b


def _descriptor(args) -> classifier.GroupDescriptor:
    try:
        counts = [int(x) for x in args.descriptor.split(",")]
    except ValueError:
        raise InvalidInput(f"malformed descriptor {args.descriptor!r}") from None
    if len(counts) != 4:
        raise InvalidInput("descriptor needs alpha,beta,gamma,delta")
    return classifier.GroupDescriptor(args.p, *counts, finite_part_order=args.finite_order)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-p", type=int, default=5, help="prime (default 5)")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="p-adic digits K")
    common.add_argument("--n-max", type=int, default=32, help="cotrajectory length for the oracle")
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="schur-entropy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    add("real-entropy", "entropy of a linear map of R^m").add_argument("--matrix", required=True)
    add("padic-entropy", "entropy of a linear map of Q_p^m").add_argument("--matrix", required=True)
    s = add("mixed-entropy", "entropy on Q_p^eps x Z_p^zeta")
    s.add_argument("--matrix", required=True)
    s.add_argument("--shape", required=True, help="eps,zeta")
    s = add("oracle", "cotrajectory index growth vs the closed formula")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix")
    g.add_argument("--corpus", action="store_true", help="run the bundled corpus")
    s = add("addition-check", "entropy of a block-triangular map vs its blocks")
    s.add_argument("--matrix", required=True)
    s.add_argument("--split", required=True, help="m1,m2")
    s = add("heisenberg", "Heisenberg group computations")
    s.add_argument("action", choices=("mul", "inv", "comm", "pow", "entropy", "rank", "generators"))
    s.add_argument("--ring", default="Zp", help='e.g. "Qp^1 x Zp^2"')
    s.add_argument("--heis-n", type=int, default=1)
    s.add_argument("--g", help='element "a=(..); b=(..); c=.."')
    s.add_argument("--h", help="second element")
    s.add_argument("--power", type=int, help="exponent for pow (default p)")
    s.add_argument("--A")
    s.add_argument("--B")
    s.add_argument("--s")
    s.add_argument("--truncation", type=int, default=2, help="K for H_n(Z/p^K) in rank")
    s = add("classify", "p-rank and entropy class of a descriptor")
    s.add_argument("--descriptor", required=True, help="alpha,beta,gamma,delta")
    s.add_argument("--finite-order", type=int)
    s = add("schur-report", "central quotient / derived group report")
    s.add_argument("--ring")
    s.add_argument("--heis-n", type=int, default=1)
    s.add_argument("--descriptor", help="abelian group alpha,beta,gamma,delta")
    s.add_argument("--finite-order", type=int)
    return parser


def _oracle_payload(M: RationalMatrix, cfg: CliConfig) -> dict:
    return entropy_estimate(M, cfg.n_max, cfg.ctx).to_json()


def _heisenberg(args, cfg: CliConfig) -> dict:
    ring = heis.RingDescriptor.parse(args.ring, cfg.p, cfg.K)
    n = args.heis_n

    def element(text, flag):
        if text is None:
            raise InvalidInput(f"{flag} is required for heisenberg {args.action}")
        return heis.HeisenbergElement.parse(text, ring)

    act = args.action
    if act in ("mul", "comm"):
        g, h = element(args.g, "--g"), element(args.h, "--h")
        out = heis.hmul(g, h) if act == "mul" else heis.hcomm(g, h)
        return {"result": out.to_text(), "element": out.to_json()}
    if act == "inv":
        out = heis.hinv(element(args.g, "--g"))
        return {"result": out.to_text(), "element": out.to_json()}
    if act == "pow":
        g = element(args.g, "--g")
        out = heis.hpow_p(g) if args.power in (None, cfg.p) else heis.hpow(g, args.power)
        return {"result": out.to_text(), "element": out.to_json()}
    if act == "entropy":
        if args.A is None or args.B is None or args.s is None:
            raise InvalidInput("--A, --B and --s are required for heisenberg entropy")
        psi = heis.HeisenbergEndo(RationalMatrix.parse(args.A), RationalMatrix.parse(args.B),
                                  parse_rational(args.s))
        h = heis.endo_entropy(psi, ring)
        return {"ring": str(ring), "n": psi.n, **h.to_json(), **h.details}
    if act == "rank":
        report = heis.frattini_rank_report(n, ring, args.truncation)
        return {**report.to_json(), "formula": heis.rank_formula(n, ring)}
    gens = heis.generators(n, ring)
    return {"ring": str(ring), "n": n, "count": len(gens), "generators": [g.to_text() for g in gens]}


def dispatch(args, cfg: CliConfig) -> dict:
    cmd = args.command
    if cmd == "real-entropy":
        return entropy_real(RationalMatrix.parse(args.matrix)).to_json()
    if cmd == "padic-entropy":
        h = entropy_padic(RationalMatrix.parse(args.matrix), cfg.ctx)
        return {**h.to_json(), "root_valuations": h.details["root_valuations"]}
    if cmd == "mixed-entropy":
        eps, zeta = _pair(args.shape)
        h = entropy_mixed(RationalMatrix.parse(args.matrix), MixedShape(cfg.p, eps, zeta), cfg.ctx)
        return {**h.to_json(), **h.details}
    if cmd == "oracle":
        if not args.corpus:
            return _oracle_payload(RationalMatrix.parse(args.matrix), cfg)
        rows = []
        for p, M in load_corpus():
            est = entropy_estimate(M, cfg.n_max, PadicContext(p, cfg.K))
            rows.append({"p": p, "matrix": M.format(), "limit_coeff": str(est.limit_coeff),
                         "formula_coeff": str(est.formula_coeff),
                         "agrees_with_formula": est.agrees_with_formula})
        return {"n_max": cfg.n_max, "entries": rows,
                "agrees_with_formula": all(r["agrees_with_formula"] for r in rows)}
    if cmd == "addition-check":
        return addition_check(RationalMatrix.parse(args.matrix), _pair(args.split), cfg.ctx).to_json()
    if cmd == "heisenberg":
        return _heisenberg(args, cfg)
    if cmd == "classify":
        d = _descriptor(args)
        return {"descriptor": d.to_json(), "rank": classifier.rank(d), "compact": d.compact,
                "class": classifier.entropy_class(d).value}
    if cmd == "schur-report":
        if args.descriptor:
            return classifier.schur_check_abelian(_descriptor(args)).to_json()
        if not args.ring:
            raise InvalidInput("schur-report needs --ring or --descriptor")
        ring = heis.RingDescriptor.parse(args.ring, cfg.p, cfg.K)
        return classifier.schur_report_heisenberg(args.heis_n, ring).to_json()
    raise InvalidInput(f"unknown command {cmd!r}")  # pragma: no cover


def _tsv(payload: dict) -> str:
    """Equal-length list fields become columns; scalars become ``# key<TAB>value`` lines."""
    lists = {k: v for k, v in payload.items() if isinstance(v, list) and v and not isinstance(v[0], (dict, list))}
    lengths = {len(v) for v in lists.values()}
    lines = [f"# {k}\t{json.dumps(v) if isinstance(v, (dict, list)) else v}"
             for k, v in payload.items() if k not in lists or len(lengths) > 1]
    if len(lengths) == 1:
        cols = list(lists)
        lines.append("\t".join(cols))
        lines.extend("\t".join(str(lists[c][i]) for c in cols) for i in range(lengths.pop()))
    rows = next((v for v in payload.values() if isinstance(v, list) and v and isinstance(v[0], dict)), None)
    if rows:
        cols = list(rows[0])
        lines.append("\t".join(cols))
        lines.extend("\t".join(str(r[c]) for c in cols) for r in rows)
    return "\n".join(lines)


_VALUE_FLAGS = {"--matrix", "--A", "--B", "--s", "--g", "--h", "--power", "--descriptor"}


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--matrix -1,2;3,4`` into ``--matrix=-1,2;3,4`` so argparse keeps the value."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _fail(code: int, name: str, detail: str, err, **extra) -> int:
    print(json.dumps({"error": name, "detail": detail, **extra}), file=err)
    return code


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(_attach_negative_values(list(sys.argv[1:] if argv is None else argv)))
        cfg = CliConfig(args.p, args.precision, args.n_max, args.format, args.seed)
        payload = dispatch(args, cfg)
    except PrecisionExhausted as exc:
        return _fail(EXIT_PRECISION, "PrecisionExhausted", str(exc), err,
                     suggested_precision=exc.suggested_precision or 2 * DEFAULT_PRECISION)
    except PreconditionError as exc:
        return _fail(EXIT_PRECONDITION, type(exc).__name__, str(exc), err)
    except InvalidInput as exc:
        return _fail(EXIT_INPUT, "InvalidInput", str(exc), err)
    except RootFindingFailure as exc:
        return _fail(EXIT_FAILURE, "RootFindingFailure", str(exc), err)
    if cfg.fmt == "tsv":
        print(_tsv(payload), file=out)
    else:
        print(json.dumps(payload, indent=1), file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
