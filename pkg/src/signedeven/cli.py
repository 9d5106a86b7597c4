"""Command-line front end: ``signedeven <subcommand> ...``.

Exit status is 0 on success, 1 when a requested verification fails and 2 for
malformed input or a group-membership violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import canonical_forms as cf
from . import enumeration_verify as ev
from .group_core import (
    DEFAULT_BUDGET, GROUPS, BudgetExceededError, MembershipError, SignedPermutation,
    WindowParseError, WordParseError, compose, embed, eval_word, format_window, membership,
    parse_window, parse_word,
)
from .statistics import STATISTICS, des_A_set, del_B, ell_A, ell_L, inv, neg_inv, statistics_record
from .structure_maps import main_lemma_factor, phi

CHECK_NAMES = ("prop1", "cor_inex", "prop2", "biagioli", "rr61", "rr61_t",
               "structure", "lengths", "witnesses")

# a window such as -3,1,-2 would otherwise be taken for an option
_NEGATIVE_WINDOW = re.compile(r"-[0-9]+(,-?[0-9]+)*")


def _window(text: str) -> SignedPermutation:
    return parse_window(text)


def _index_set(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}[]")
    if not text:
        return ()
    try:
        return tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index set {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="signedeven",
        description="Signed permutation statistics, canonical forms and identity checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def window_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("window", help="window notation, e.g. 5,-1,2,-3,4")
        sp.add_argument("--embed", type=int, metavar="M", help="pad with fixed points to degree M first")
        sp.add_argument("--json", action="store_true")
        return sp

    window_cmd("stats", "all statistics of an element")
    sp = window_cmd("canon", "canonical presentation")
    sp.add_argument("--style", type=str.upper, choices=cf.STYLES, default="B")
    window_cmd("phi", "apply the involution phi")
    window_cmd("decompose", "factor pi in L_m as sigma * u")

    sp = sub.add_parser("eval", help="evaluate a generator word")
    sp.add_argument("word", nargs="+", help="tokens such as s0 s2 a1^-1; '(..)(1)' accepted")
    sp.add_argument("--degree", type=int, help="degree (default: smallest that fits)")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("gf", help="generating function of a statistic")
    sp.add_argument("--group", type=str.upper, choices=GROUPS, required=True)
    sp.add_argument("--n", type=int, required=True, help="degree of the group")
    sp.add_argument("--stat", choices=sorted(STATISTICS), required=True)
    cons = sp.add_mutually_exclusive_group()
    cons.add_argument("--neg-subset", type=_index_set, metavar="B", help="Neg(σ^-1) ⊆ B")
    cons.add_argument("--neg-equal", type=_index_set, metavar="B", help="Neg(σ^-1) = B")
    cons.add_argument("--neg-card", type=int, metavar="K", help="#Neg(σ^-1) = K")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("verify", help="run identity checks by exhaustive enumeration")
    sp.add_argument("--all", action="store_true", help="run every check (the default)")
    sp.add_argument("--check", action="append", choices=CHECK_NAMES, help="restrict to these checks")
    sp.add_argument("--max-n", type=int, default=5, help="largest group degree")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--out", metavar="FILE", help="also write the JSON report here")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("families", help="list the words of R_j for a style")
    sp.add_argument("--style", type=str.upper, choices=cf.STYLES, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    return p


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _read_window(args) -> SignedPermutation:
    sigma = _window(args.window)
    if args.embed is not None:
        sigma = embed(sigma, args.embed)
    return sigma


def cmd_stats(args) -> int:
    sigma = _read_window(args)
    if not membership(sigma, "L"):
        print(f"warning: {format_window(sigma)} is not in L_{sigma.degree}; "
              "Des_A is still computed from ell_L", file=sys.stderr)
    rec = statistics_record(sigma)
    d = rec.to_dict()
    width = max(len(k) for k in d)
    _emit(args, d, "\n".join(f"{k:<{width}}  {'-' if v is None else v}" for k, v in d.items()))
    return 0


def cmd_canon(args) -> int:
    sigma = _read_window(args)
    pres = cf.canonical(sigma, args.style)
    _emit(args, pres.to_dict(), str(pres))
    return 0


def cmd_eval(args) -> int:
    word = parse_word(" ".join(args.word), args.degree)
    sigma = eval_word(word)
    _emit(args, {"degree": word.degree, "window": list(sigma.window)}, format_window(sigma))
    return 0


def cmd_phi(args) -> int:
    out = phi(_read_window(args))
    _emit(args, {"window": list(out.window)}, format_window(out))
    return 0


def cmd_decompose(args) -> int:
    pi = _read_window(args)
    f = main_lemma_factor(pi)
    checks = {
        "product": compose(f.sigma, f.u) == pi,
        "u_in_A": membership(f.u, "A"),
        "sigma_descent_free": len(des_A_set(f.sigma)) == 0,
        "neg_inv_preserved": neg_inv(f.sigma) == neg_inv(pi),
        "des_A_preserved": des_A_set(f.u) == des_A_set(pi),
        "inv_minus_del_preserved": inv(f.u) - del_B(f.u) == inv(pi) - del_B(pi),
        "ell_L_split": ell_L(pi) == ell_A(f.u) + sum(neg_inv(pi)),
    }
    payload = {"pi": list(pi.window), "sigma": list(f.sigma.window), "u": list(f.u.window),
               "case": f.case, "checks": checks}
    text = "\n".join(
        [f"sigma  {format_window(f.sigma)}", f"u      {format_window(f.u)}", f"case   {f.case}"]
        + [f"{'ok  ' if v else 'FAIL'}  {k}" for k, v in checks.items()])
    _emit(args, payload, text)
    return 0 if all(checks.values()) else 1


def cmd_gf(args) -> int:
    if args.neg_subset is not None:
        constraint, value = "subset", args.neg_subset
    elif args.neg_equal is not None:
        constraint, value = "equal", args.neg_equal
    elif args.neg_card is not None:
        constraint, value = "card", args.neg_card
    else:
        constraint, value = None, None
    query = ev.GFQuery(args.group, args.n, args.stat, constraint, value)
    poly = ev.generating_function(query, args.budget)
    payload = {"group": args.group, "degree": args.n, "statistic": args.stat,
               "constraint": constraint, "value": list(value) if isinstance(value, tuple) else value,
               "text": str(poly), "coeffs": poly.to_json()}
    _emit(args, payload, str(poly))
    return 0


def _selected_checks(args) -> list[tuple[str, dict]]:
    everything = ev.standard_checks(args.max_n, args.seed, include_t=True)
    if args.all or not args.check:
        return everything
    wanted = set(args.check)

    def key(name, kwargs):
        short = name.removeprefix("verify_")
        return "rr61_t" if short == "rr61" and kwargs.get("include_t") else short

    return [(n, k) for n, k in everything if key(n, k) in wanted]


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise ValueError("--max-n must be at least 1")
    reports = ev.run_checks(_selected_checks(args), args.threads)
    data = [r.to_dict() for r in reports]
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(data, fh, indent=2)
    if args.json:
        print(json.dumps(data))
    else:
        for r in reports:
            status = "PASS" if r.passed else ("note" if r.exploratory else "FAIL")
            params = " ".join(f"{k}={_fmt(v)}" for k, v in r.params.items())
            line = f"{status}  {r.identity:<15} {params:<22} {r.elapsed:8.3f}s"
            if not r.passed and r.counterexample:
                line += f"  counterexample {_fmt(r.counterexample)}"
            print(line)
        gating = [r for r in reports if not r.exploratory]
        print(f"{sum(r.passed for r in gating)}/{len(gating)} checks passed")
    return 0 if all(r.passed for r in reports if not r.exploratory) else 1


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return "{" + ",".join(map(str, v)) + "}"
    return str(v)


def cmd_families(args) -> int:
    words = cf.family(args.style, args.j, args.degree)
    _emit(args, [[str(t) for t in w] for w in words], "\n".join(str(w) for w in words))
    return 0


COMMANDS = {
    "stats": cmd_stats, "canon": cmd_canon, "eval": cmd_eval, "phi": cmd_phi,
    "decompose": cmd_decompose, "gf": cmd_gf, "verify": cmd_verify, "families": cmd_families,
}


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [f"[{x}]" if _NEGATIVE_WINDOW.fullmatch(x) else x for x in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except MembershipError as exc:
        print(f"error: {exc} (violates membership in {exc.group})", file=sys.stderr)
        return 2
    except (WindowParseError, WordParseError, BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
