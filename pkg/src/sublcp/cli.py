"""``sublcp`` command-line tool.

Exit status: 0 when every verdict holds, 1 when some verdict fails (the
report then carries a witness), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .channel import ChannelInstance, simulate
from .code import SubspaceCode
from .codefile import (
    CodeFile,
    codefile_from_families,
    emit_code_text,
    format_vector,
    format_vector_e,
    parse_code_file,
    parse_element,
)
from .construct import (
    lift_family,
    lift_matrix_code,
    paired_lcp,
    plotkin_lcp_pair,
    plotkin_tilde_pair,
    s_lambda_dual_pair,
    s_lambda_lcd_pair,
    s_lambda_pair,
    spread_field,
    spread_matrix,
    spread_partition,
    verify_spread,
)
from .errors import SubLcpError
from .field import GF, Field
from .lcp import CRITERIA, LcpReport, check_lcp, check_lcp_all
from .subspace import DEFAULT_CAP

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)
    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, dict[str, str]] = field(default_factory=dict)
    timing: float | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_dict(self) -> dict[str, Any]:
        d = {
            "command": self.command,
            "parameters": self.parameters,
            "data": self.data,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
        }
        if self.timing is not None:
            d["timing_seconds"] = self.timing
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        out = [f"command: {self.command}"]
        out += [f"parameter {k}: {_text(v)}" for k, v in sorted(self.parameters.items())]
        out += [f"{k}: {_text(v)}" for k, v in self.data.items()]
        out += [f"verdict {k}: {_text(v)}" for k, v in self.verdicts.items()]
        out += [f"witness {k}: {w['e']} ({w['vector']})" for k, w in self.witnesses.items()]
        if self.timing is not None:
            out.append(f"timing: {self.timing:.6f} s")
        return "\n".join(out)


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text(x)}" for k, x in v.items()) + "}"
    return str(v)


def _witness(F: Field, vec) -> dict[str, str]:
    return {"e": format_vector_e(F, vec), "vector": format_vector(F, vec)}


# ----------------------------------------------------------------------------
# inputs


def fixture_path(name: str) -> Path:
    """Path to a bundled fixture, by bare name (``example_6_1``) or file name."""
    root = resources.files("sublcp") / "fixtures"
    for cand in (name, f"{name}.txt"):
        p = root / cand
        if p.is_file():
            return Path(str(p))
    raise FileNotFoundError(f"no such file or fixture: {name}")


def load(path_or_fixture: str) -> CodeFile:
    p = Path(path_or_fixture)
    return parse_code_file(p if p.is_file() else fixture_path(path_or_fixture))


def _family_block(code: SubspaceCode) -> dict[str, Any]:
    prof = code.profile()
    return {"size": len(code), "dims": {str(k): prof[k] for k in sorted(prof)}}


def _lcp_into(rep: Report, name: str, r: LcpReport, F: Field) -> None:
    rep.verdicts[name] = r.verdict
    if r.violating_pair is not None:
        v = r.violating_pair
        rep.witnesses[f"{name} C[{v.c_index}]^D[{v.d_index}]"] = _witness(F, v.witness)


# ----------------------------------------------------------------------------
# subcommands


def cmd_lcp_check(args, rep: Report) -> None:
    cf = load(args.file)
    C, D = cf.family(args.C), cf.family(args.D)
    rep.parameters.update(file=args.file, C=args.C, D=args.D, criterion=args.criterion)
    rep.data.update(field=repr(cf.field), n=cf.n, C=_family_block(C), D=_family_block(D))
    if args.criterion == "all":
        results = check_lcp_all(C, D)
        for name in CRITERIA:
            if name in results:
                _lcp_into(rep, name, results[name], cf.field)
            else:
                rep.data[f"{name}"] = "not applicable"
        rep.data["criteria_agree"] = len(set(rep.verdicts.values())) == 1
        first = next(iter(results.values()))
    else:
        first = check_lcp(C, D, args.criterion, full_scan=args.full_scan)
        _lcp_into(rep, first.criterion, first, cf.field)
    rep.data["pairs_checked"] = first.pairs_checked
    rep.data["profile_compatible"] = first.profile_ok
    for w in first.warnings:
        rep.data.setdefault("warnings", []).append(w)
    if args.full_scan and args.criterion != "all":
        rep.data["violations"] = len(first.violations)


def cmd_distance(args, rep: Report) -> None:
    cf = load(args.file)
    U, V = cf.subspace(args.U), cf.subspace(args.V)
    rep.parameters.update(file=args.file, U=args.U, V=args.V)
    rep.data.update(
        dim_U=U.dim, dim_V=V.dim, dim_sum=(U + V).dim, dim_intersection=(U & V).dim, distance=U.distance(V)
    )


def _parse_lambda(F: Field, text: str | None) -> int:
    if text is None:
        raise ValueError("--lambda is required for s-lambda")
    return parse_element(text, F)


def cmd_construct(args, rep: Report) -> None:
    cf = load(args.file)
    F = cf.field
    names = args.pair
    if len(names) > 2:
        raise ValueError("--pair takes one or two family names")
    rep.parameters.update(file=args.file, method=args.method, pair=list(names))
    fams = [cf.family(n) for n in names]
    second = [cf.family(n) for n in args.pair2] if args.pair2 else fams
    if args.pair2:
        rep.parameters["pair2"] = list(args.pair2)
    method, variant = args.method, args.variant
    paired = False
    if method in ("plotkin", "plotkin-tilde") or variant != "lcd":
        if len(fams) != 2 or len(second) != 2:
            raise ValueError(f"{method} needs --pair C D")
    if method == "plotkin":
        A, B = plotkin_lcp_pair(fams[0], fams[1], second[0], second[1])
    elif method == "plotkin-tilde":
        A, B = plotkin_tilde_pair(fams[0], fams[1])
    else:
        lam = _parse_lambda(F, args.lam)
        lam2 = F.mul_s(lam, lam)
        rep.parameters.update(variant=variant, **{"lambda": args.lam})
        rep.data["lambda_squared"] = format_vector(F, [lam2])
        rep.data["q_odd"] = F.p != 2
        if variant == "product":
            A, B = s_lambda_pair(fams[0], fams[1], second[0], second[1], lam)
        elif variant == "dual":
            rep.data["lambda_squared_is_minus_one"] = lam2 == F.neg_s(1)
            A, B = s_lambda_dual_pair(fams[0], fams[1], lam)
            paired = True
        else:
            rep.data["lambda_squared_is_one"] = lam2 == 1
            rep.data["input_lcd"] = all((c & c.orthogonal()).dim == 0 for c in fams[0])
            A, B = s_lambda_lcd_pair(fams[0], lam)
            paired = True
    rep.data.update(n=A.n, A=_family_block(A), B=_family_block(B))
    full = check_lcp(A, B)
    if paired:
        rep.verdicts["paired_lcp"] = paired_lcp(A, B)
        rep.data["family_lcp"] = full.verdict
    else:
        _lcp_into(rep, "lcp", full, F)
    if args.emit:
        Path(args.emit).write_text(emit_code_text(codefile_from_families({"A": A, "B": B})))
        rep.data["emitted"] = args.emit


def cmd_spread(args, rep: Report) -> None:
    rep.parameters["method"] = args.method
    if args.method == "field":
        if args.q is None or args.k is None:
            raise ValueError("--method field needs --q and --k")
        rep.parameters.update(q=args.q, k=args.k)
        S = spread_field(GF(args.q), args.k)
    else:
        if args.file is None:
            raise ValueError("--method matrix needs a code file with a matrix family")
        cf = load(args.file)
        rep.parameters.update(file=args.file, family=args.family)
        S = spread_matrix(cf.matrix_family(args.family))
    chk = verify_spread(S.code, args.cap)
    rep.data.update(field=repr(S.code.field), n=S.n, k=S.k, members=len(S), covered=chk.covered)
    rep.verdicts["spread"] = chk.valid
    if chk.failure:
        rep.data["failure"] = chk.failure
    if args.partition is not None:
        rep.parameters["partition"] = args.partition
        C, D = spread_partition(S, args.partition)
        rep.data.update(C=_family_block(C), D=_family_block(D))
        _lcp_into(rep, "lcp", check_lcp(C, D), S.code.field)
    if args.emit:
        fams = {"S": S.code}
        if args.partition is not None:
            cf = codefile_from_families({"S": S.code})
            names = cf.families["S"]
            cf.families["C"] = names[: args.partition]
            cf.families["D"] = names[args.partition :]
            cf.order += ["C", "D"]
        else:
            cf = codefile_from_families(fams)
        Path(args.emit).write_text(emit_code_text(cf))
        rep.data["emitted"] = args.emit


def cmd_lift(args, rep: Report) -> None:
    cf = load(args.file)
    rep.parameters.update(file=args.file, names=list(args.names), m=args.m)
    if len(args.names) == 1:
        U = cf.subspace(args.names[0]) if args.names[0] not in cf.families else None
        if U is not None:
            L = lift_matrix_code(U, args.m)
            rep.data.update(n=L.n, dim=L.dim, dim_expected=args.m * U.dim)
            rep.verdicts["dimension"] = L.dim == args.m * U.dim
            return
        fam = lift_family(cf.family(args.names[0]), args.m)
        rep.data.update(n=fam.n, lifted=_family_block(fam))
        return
    if len(args.names) != 2:
        raise ValueError("lift takes one subspace or family, or two families")
    C, D = (cf.family(n) for n in args.names)
    LC, LD = lift_family(C, args.m), lift_family(D, args.m)
    rep.data.update(n=LC.n, C=_family_block(LC), D=_family_block(LD))
    before = check_lcp(C, D).verdict
    after = check_lcp(LC, LD)
    rep.data["input_lcp"] = before
    _lcp_into(rep, "lcp", after, cf.field)
    rep.verdicts["transfer"] = before == after.verdict


def cmd_simulate(args, rep: Report) -> None:
    cf = load(args.file)
    C, D = cf.family(args.C), cf.family(args.D)
    rep.parameters.update(file=args.file, C=args.C, D=args.D, mode=args.mode)
    if args.mode == "random":
        rep.parameters.update(trials=args.trials, seed=args.seed)
    inst = ChannelInstance(C, D, cap=args.cap)
    sim = simulate(inst, args.mode, args.trials, args.seed, workers=args.workers, cap=args.cap)
    rep.data.update(sim.to_dict())
    rep.verdicts["all_recovered"] = sim.recoveries == sim.trials


COMMANDS = {
    "lcp-check": cmd_lcp_check,
    "distance": cmd_distance,
    "construct": cmd_construct,
    "spread": cmd_spread,
    "lift": cmd_lift,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "structured"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration limit")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in the report")

    p = argparse.ArgumentParser(prog="sublcp", description="Linear complementary pairs of subspace codes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lcp-check", parents=[common], help="decide whether two families form an LCP")
    s.add_argument("file", help="code file path or fixture name")
    s.add_argument("C")
    s.add_argument("D")
    s.add_argument("--criterion", choices=("pairwise", "distance", "right-inv", "stacked", "all"), default="pairwise")
    s.add_argument("--full-scan", action="store_true", help="list every violating pair")

    s = sub.add_parser("distance", parents=[common], help="subspace distance of two named subspaces")
    s.add_argument("file")
    s.add_argument("U")
    s.add_argument("V")

    s = sub.add_parser("construct", parents=[common], help="build LCP families from LCP inputs")
    s.add_argument("file")
    s.add_argument("--method", choices=("plotkin", "plotkin-tilde", "s-lambda"), required=True)
    s.add_argument("--pair", nargs="+", required=True, metavar="FAMILY")
    s.add_argument("--pair2", nargs=2, metavar="FAMILY", help="second input pair (default: --pair)")
    s.add_argument("--lambda", dest="lam", metavar="ELT")
    s.add_argument("--variant", choices=("product", "dual", "lcd"), default="product")
    s.add_argument("--emit", metavar="PATH", help="write the constructed families as a code file")

    s = sub.add_parser("spread", parents=[common], help="build and verify a k-spread of F_q^2k")
    s.add_argument("file", nargs="?")
    s.add_argument("--method", choices=("field", "matrix"), required=True)
    s.add_argument("--q", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--family", default="M", help="matrix family name for --method matrix")
    s.add_argument("--partition", type=int, metavar="S")
    s.add_argument("--emit", metavar="PATH")

    s = sub.add_parser("lift", parents=[common], help="lift subspaces to matrix codes")
    s.add_argument("file")
    s.add_argument("names", nargs="+")
    s.add_argument("--m", type=int, required=True)

    s = sub.add_parser("simulate", parents=[common], help="insertion-error channel simulation")
    s.add_argument("file")
    s.add_argument("C")
    s.add_argument("D")
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--trials", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_TRUE
    if getattr(args, "m", 1) is not None and getattr(args, "m", 1) < 1:
        print("sublcp: error: --m must be positive", file=stderr)
        return EXIT_USAGE
    rep = Report(command=" ".join(["sublcp", *argv]))
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command](args, rep)
    except (SubLcpError, ValueError, OSError) as exc:
        print(f"sublcp: error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.timing:
        rep.timing = time.perf_counter() - t0
    print(rep.to_json() if args.output == "structured" else rep.to_text(), file=stdout)
    return EXIT_TRUE if rep.ok else EXIT_FALSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
