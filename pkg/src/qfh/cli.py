"""
Command-line interface.

    qfh gr-basis --n 3
    qfh phi --mu 1 --nu 1 --at-q 1
    qfh --format json char --n 2 --lambda 1,1 --mu 1
    qfh verify --suite paper

Partitions are comma-separated parts; the empty string is the empty
partition. Exit status: 0 success, 1 verification failure, 2 usage error,
3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import cache
from .combinat import Partition, contents, contents_mod_e, e_core, partitions, q_contents
from .errors import SizeGuard, guards
from .exactalg import IVLPoly, LaurentQ
from .fhq import FHqElem, K, psi, psi_inverse, structure_constants, theta
from .hecke import gamma, gamma_expand, geck_rouquier_basis
from .specht import blocks, central_character, character_table
from .symfunc import EPolyElem, e_to_m, m, m_to_e
from .verify import psi_e1_squared_report, run_suite

FORMAT_VERSION = 1
GLOBAL_DEFAULTS = {"format": "text", "max_n": None, "cache_dir": None, "no_cache": False,
                   "seed": 0, "timing": False}

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class VerificationFailed(Exception):
    def __init__(self, result):
        super().__init__("verification failed")
        self.result = result


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _quantum_char(text: str) -> float | int:
    if text.lower() in ("inf", "infinity", "oo"):
        return math.inf
    try:
        e = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid e: {text!r}") from None
    if e < 2:
        raise argparse.ArgumentTypeError("e must be >= 2 or inf")
    return e


def _by_degree(d: dict) -> list:
    return sorted(d, key=lambda lam: (-lam.size, list(lam)))


def _lines(d: dict) -> str:
    if not d:
        return "0"
    return "\n".join(f"{lam}: {d[lam]}" for lam in _by_degree(d))


# -- subcommands: each returns (json payload, text) --------------------------


def cmd_gr_basis(args):
    if args.mu is not None:
        if args.mu.support_rank > args.n:
            raise ValueError(f"|mu| + l(mu) = {args.mu.support_rank} exceeds n = {args.n}")
        basis = {args.mu: geck_rouquier_basis(args.n)[args.mu]}
    else:
        basis = geck_rouquier_basis(args.n)
    order = sorted(basis, key=lambda lam: (lam.size, list(lam)))
    payload = {"n": args.n, "basis": [{"mu": list(mu), "element": basis[mu].to_json()} for mu in order]}
    text = "\n".join(f"Gamma_{mu} = {basis[mu]}" for mu in order)
    return payload, text


def cmd_multiply(args):
    if args.n > guards.max_n:
        raise SizeGuard(f"n = {args.n} exceeds the configured bound {guards.max_n}")
    for p in (args.left, args.right):
        if p.support_rank > args.n:
            raise ValueError(f"Gamma_{p} does not exist in H_{args.n}")
    prod = gamma(args.n, args.left) * gamma(args.n, args.right)
    expansion = gamma_expand(prod)
    payload = {
        "n": args.n, "left": list(args.left), "right": list(args.right),
        "gamma": [{"lambda": list(l), "coeff": expansion[l].to_json()} for l in _by_degree(expansion)],
    }
    text = _lines({lam: f"({c})" for lam, c in expansion.items()})
    if args.basis == "T":
        payload["product"] = prod.to_json()
        text = str(prod)
    return payload, text


def cmd_phi(args):
    table = structure_constants(args.mu, args.nu)
    if args.at_q is not None:
        table = dict(theta(FHqElem(table)).items())
    payload = {
        "mu": list(args.mu), "nu": list(args.nu),
        "terms": [{"lambda": list(l), "phi": table[l].to_json()} for l in _by_degree(table)],
    }
    if args.at_q is not None:
        payload["q"] = args.at_q
    return payload, _lines(table)


def cmd_fmu(args):
    f = psi_inverse(args.mu)
    fe = m_to_e(f)
    payload = {"mu": list(args.mu), "e_basis": fe.to_json(), "m_basis": f.to_json()}
    text = f"e-basis: {fe}\nm-basis: {f}"
    if args.check:
        residual = psi(f) - K(args.mu)
        payload["residual_zero"] = residual.is_zero()
        text += f"\nround trip: {'ok' if residual.is_zero() else 'FAILED'}"
        if not residual.is_zero():
            raise VerificationFailed((payload, text))
    return payload, text


def cmd_psi(args):
    if args.e is not None:
        f = e_to_m(EPolyElem({args.e: 1}))
        label = f"e{args.e}"
    else:
        f = m(args.m)
        label = f"m{args.m}"
    out = psi(f)
    payload = {"input": label, "terms": [{"mu": list(mu), "coeff": c.to_json()}
                                         for mu, c in sorted(out.items())]}
    text = _lines(dict(out.items()))
    if args.e == Partition([1, 1]):
        report = psi_e1_squared_report()
        payload["k2_coefficient_matches"] = report["matches"]
    return payload, text


def cmd_char(args):
    if args.lam.size != args.n:
        raise ValueError(f"lambda = {args.lam} is not a partition of {args.n}")
    value = central_character(args.lam, args.mu)
    return {"n": args.n, "lambda": list(args.lam), "mu": list(args.mu), "value": value.to_json()}, str(value)


def cmd_char_table(args):
    table = character_table(args.n, args.mu)
    payload = {"mu": list(args.mu),
               "rows": [{"lambda": list(l), "value": v.to_json()} for l, v in table.items()]}
    return payload, "\n".join(f"{l}: {v}" for l, v in table.items())


def cmd_blocks(args):
    bp = blocks(args.n, args.e)
    text = "\n".join("{" + ", ".join(map(str, c)) + "}" for c in bp.classes)
    return bp.to_json(), text


def cmd_core(args):
    core = e_core(args.lam, args.e)
    return {"lambda": list(args.lam), "e": args.e, "core": list(core)}, ",".join(map(str, core))


def cmd_contents(args):
    payload = {"lambda": list(args.lam), "contents": list(contents(args.lam)),
               "q_contents": [c.to_json() for c in q_contents(args.lam)]}
    text = "contents: " + " ".join(map(str, contents(args.lam)))
    text += "\nq-contents: " + ", ".join(map(str, q_contents(args.lam)))
    if args.e is not None:
        res = contents_mod_e(args.lam, args.e)
        payload["residues"] = list(res)
        text += f"\nresidues mod {args.e}: " + " ".join(map(str, res))
    return payload, text


def cmd_verify(args):
    max_n = args.max_n if args.max_n is not None else 5
    results = run_suite(args.suite, max_n=max_n, seed=args.seed)
    payload = {"suite": args.suite, "seed": args.seed, "passed": all(r.passed for r in results),
               "checks": [r.to_json() if args.timing else {k: v for k, v in r.to_json().items() if k != "seconds"}
                          for r in results]}
    lines = []
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name}"
        if args.timing:
            line += f"  ({r.seconds:.2f}s)"
        if r.detail:
            line += f"  [{r.detail}]"
        lines.append(line)
    text = "\n".join(lines)
    if not payload["passed"]:
        raise VerificationFailed((payload, text))
    return payload, text


def cmd_cache(args):
    store = cache.disk()
    if store is None:
        return {"action": args.action, "enabled": False}, "cache disabled"
    if args.action == "clear":
        removed = store.clear()
        return {"action": "clear", "removed": removed}, f"removed {removed} entries"
    files = store.entries()
    kinds: dict[str, int] = {}
    for f in files:
        kinds[f.parent.name] = kinds.get(f.parent.name, 0) + 1
    payload = {"action": "info", "path": str(store.root), "entries": len(files), "kinds": kinds}
    text = f"{store.root}: {len(files)} entries" + "".join(f"\n  {k}: {v}" for k, v in sorted(kinds.items()))
    return payload, text


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                        help="rank guard for Hecke computations")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help=f"cache location (default ${cache.ENV_VAR} or ~/.cache/qfh)")
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS,
                        help="do not read or write the disk cache")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="report wall-clock time")
    parser = argparse.ArgumentParser(prog="qfh", parents=[common],
                                     description="Centres of Iwahori-Hecke algebras "
                                     "and the q-Farahat-Higman algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gr-basis", parents=[common], help="Geck-Rouquier basis of Z(H_n(q))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_partition)
    p.set_defaults(func=cmd_gr_basis)

    p = sub.add_parser("multiply", parents=[common], help="Gamma_mu * Gamma_nu in H_n(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--left", type=_partition, required=True)
    p.add_argument("--right", type=_partition, required=True)
    p.add_argument("--basis", choices=["gamma", "T"], default="gamma")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("phi", parents=[common], help="structure constants phi_{mu,nu}^lambda(q,t)")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--at-q", type=int, choices=[1], default=None, help="specialize q")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("fmu", parents=[common], help="f_mu, the preimage of K_mu")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--check", action="store_true", help="re-apply Psi and confirm the round trip")
    p.set_defaults(func=cmd_fmu)

    p = sub.add_parser("psi", parents=[common], help="Psi_q of e_lambda or m_lambda")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--e", type=_partition, help="product e_{l1} e_{l2} ...")
    g.add_argument("--m", type=_partition, help="monomial symmetric function")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("char", parents=[common], help="central character of Gamma_mu on S^lambda")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("char-table", parents=[common], help="central characters of Gamma_mu on all S^lambda")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("blocks", parents=[common], help="blocks of H_n at quantum characteristic e")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=_quantum_char, required=True)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("core", parents=[common], help="e-core of a partition")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("contents", parents=[common], help="contents, q-contents and residues")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--e", type=int)
    p.set_defaults(func=cmd_contents)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=["paper", "properties", "all"], default="paper",
                   help="paper: fixed worked examples; properties: relation checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the disk cache")
    p.add_argument("action", choices=["info", "clear"], nargs="?", default="info")
    p.set_defaults(func=cmd_cache)
    return parser


def _emit(args, payload, text, elapsed: float, out) -> None:
    if args.format == "json":
        env = {"format_version": FORMAT_VERSION, "command": args.command, "result": payload}
        if args.timing:
            env["timing"] = round(elapsed, 3)
        out.write(json.dumps(env, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text + "\n")
        if args.timing and args.command != "verify":
            out.write(f"[{elapsed:.2f}s]\n")


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)

    saved = (guards.max_n, cache.disk())
    if args.max_n is not None:
        guards.max_n = args.max_n
    if args.no_cache:
        cache.configure(None)
    else:
        cache.configure(args.cache_dir or cache.default_dir())
    start = time.perf_counter()
    try:
        payload, text = args.func(args)
        code = EXIT_OK
    except VerificationFailed as exc:
        payload, text = exc.result
        code = EXIT_VERIFY
    except SizeGuard as exc:
        print(f"qfh: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, KeyError) as exc:
        print(f"qfh: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        guards.max_n = saved[0]
        cache.configure(saved[1])
    _emit(args, payload, text, time.perf_counter() - start, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
