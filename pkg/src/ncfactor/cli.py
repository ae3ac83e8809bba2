"""Command-line front end.

Every subcommand takes polynomials as positional arguments.  The session
options ``--field``, ``--vars``, ``--seed``, ``--budget`` and ``--output`` may
appear before or after the subcommand; the environment variables
``NCFACTOR_FIELD``, ``NCFACTOR_VARS``, ``NCFACTOR_SEED``, ``NCFACTOR_BUDGET``
and ``NCFACTOR_OUTPUT`` supply defaults that explicit flags override.

Exit status: 0 success, 1 usage or syntax error, 2 domain error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from . import arith, factor, leavitt, modalg, vmodule
from .errors import (InfeasibleEnumeration, NCFactorError, PolySyntaxError,
                     UnknownVariable)
from .fields import field_from_descriptor
from .parsing import format_poly, format_word, parse_poly, tokenize

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 0, 1, 2, 3

_SESSION_DEFAULTS = {"field": "rational", "vars": None, "seed": 0,
                     "budget": 10 ** 6, "output": "text"}


@dataclass(frozen=True)
class Session:
    field: object
    nvars: int | None
    seed: int
    budget: int
    output: str

    def rng(self):
        return random.Random(self.seed)


class UsageError(Exception):
    pass


def _positive_int(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _session_options(parser, suppress):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--field", default=d, help="rational or fp:P (default rational)")
    parser.add_argument("--vars", type=_positive_int, default=d,
                        help="number of variables (default: largest index seen)")
    parser.add_argument("--seed", type=int, default=d, help="random seed (default 0)")
    parser.add_argument("--budget", type=_positive_int, default=d,
                        help="cap on exhaustive enumerations (default 1000000)")
    parser.add_argument("--output", choices=("text", "structured"), default=d)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _session_options(common, suppress=True)
    p = argparse.ArgumentParser(prog="ncfactor", parents=[common],
                                description="Arithmetic of polynomials in non-commuting variables.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    c = cmd("cofactors", "iterated cofactors, or one cofactor with --word")
    c.add_argument("poly")
    c.add_argument("--word", help="head (or tail with --left) such as x1*x2")
    c.add_argument("--left", action="store_true", help="use left cofactors")

    for name, h in (("vmodule", "the left module V"), ("wmodule", "the right module W")):
        c = cmd(name, h)
        c.add_argument("poly")

    c = cmd("star", "twisted action of a variable or word on a polynomial")
    c.add_argument("lam")
    c.add_argument("gamma")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--var", type=_positive_int)
    g.add_argument("--word")

    c = cmd("divides", "does GAMMA right-divide LAM (left-divide with --left)")
    c.add_argument("gamma")
    c.add_argument("lam")
    c.add_argument("--left", action="store_true")

    c = cmd("divmod", "division of LAM by GAMMA with remainders")
    c.add_argument("lam")
    c.add_argument("gamma")

    c = cmd("quotient", "exact quotient of LAM by GAMMA")
    c.add_argument("lam")
    c.add_argument("gamma")
    c.add_argument("--side", choices=("left", "right"), default="left",
                   help="left: LAM = Q*GAMMA (default); right: LAM = GAMMA*Q")

    c = cmd("gcd", "generalized greatest common divisor")
    c.add_argument("polys", nargs="+")
    c.add_argument("--certificate", action="store_true")

    for name, h in (("irreducible", "irreducibility test"), ("length", "number of atoms"),
                    ("simclass", "similarity class (finite fields)"),
                    ("endo", "endomorphism ring of V"), ("primary", "primary components"),
                    ("zero-constant", "two-sided factorizations without constant")):
        c = cmd(name, h)
        c.add_argument("poly")

    c = cmd("factor", "atomic factorization")
    c.add_argument("poly")
    c.add_argument("--strategy", choices=factor.STRATEGIES, default="auto")

    c = cmd("similar", "similarity test")
    c.add_argument("lam")
    c.add_argument("gamma")

    c = cmd("leavitt-nf", "normal form in the Leavitt algebra")
    c.add_argument("expr")

    c = cmd("verify-cert", "check sum COEFF_i * INPUT_i == GCD")
    c.add_argument("gcd")
    c.add_argument("pairs", nargs="+", metavar="INPUT COEFF")
    return p


def _resolve_session(ns, environ) -> Session:
    vals = dict(_SESSION_DEFAULTS)
    for key in vals:
        env = environ.get(f"NCFACTOR_{key.upper()}")
        if env is not None:
            vals[key] = env
        if getattr(ns, key, None) is not None:
            vals[key] = getattr(ns, key)
    try:
        F = field_from_descriptor(str(vals["field"]))
        nvars = None if vals["vars"] in (None, "") else int(vals["vars"])
        seed, budget = int(vals["seed"]), int(vals["budget"])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if (nvars is not None and nvars < 1) or budget < 1:
        raise UsageError("--vars and --budget must be positive")
    if vals["output"] not in ("text", "structured"):
        raise UsageError(f"unknown output mode {vals['output']!r}")
    return Session(F, nvars, seed, budget, vals["output"])


def _word(text):
    out = []
    for t in tokenize(text):
        if t.kind == "var":
            out.append(t.value)
        elif t.kind == "num" and out:
            out.extend([out[-1]] * (t.value - 1))
        elif t.kind == "op" and t.value in "*^":
            continue
        elif t.kind == "end":
            break
        else:
            raise UsageError(f"bad word {text!r}")
    return tuple(out)


def _coords_text(F, M):
    return [[[F.format(x) for x in row] for row in A] for A in M.actions]


def _module_lines(M):
    lines = [f"dim {M.dim}", "basis: " + ", ".join(format_poly(b) for b in M.basis)]
    for i, A in enumerate(M.actions, start=1):
        lines.append(f"x{i}: " + "; ".join(" ".join(M.field.format(x) for x in row) for row in A))
    return lines


def _run(args, S: Session):
    F = S.field
    n = S.nvars

    def P(text):
        return parse_poly(text, F, n)

    rng, budget = S.rng(), S.budget
    c = args.command
    strategy = None

    if c == "cofactors":
        lam = P(args.poly)
        if args.word:
            w = _word(args.word)
            res = (vmodule.left_cofactor(w, lam) if args.left
                   else vmodule.right_cofactor(lam, w))
            return format_poly(res), [format_poly(res)], strategy
        cofs = vmodule.iterated_left_cofactors(lam) if args.left else vmodule.iterated_cofactors(lam)
        items = [format_poly(p) for p in cofs]
        return items, items, strategy

    if c in ("vmodule", "wmodule"):
        lam = P(args.poly)
        build = vmodule.build_v if c == "vmodule" else vmodule.build_w
        M = build(lam, n)
        return M.to_dict(), _module_lines(M), strategy

    if c == "star":
        lam, gamma = P(args.lam), P(args.gamma)
        if args.var is not None:
            res = vmodule.star(lam, args.var, gamma)
        else:
            res = vmodule.word_star(lam, _word(args.word), gamma)
        return format_poly(res), [format_poly(res)], strategy

    if c == "divides":
        gamma, lam = P(args.gamma), P(args.lam)
        if args.left:
            ok = arith.left_divides(gamma, lam)
            return {"divides": ok}, [str(ok).lower()], strategy
        ok = arith.right_divides(gamma, lam)
        result = {"divides": ok, "witness": None}
        lines = [str(ok).lower()]
        if not ok:
            wit = arith.divisibility_witness(gamma, lam)
            if wit:
                result["witness"] = {"word": format_word(wit[0]), "value": format_poly(wit[1])}
                lines.append(f"witness: {format_word(wit[0])} * {format_poly(wit[1])}")
        return result, lines, strategy

    if c == "divmod":
        lam, gamma = P(args.lam), P(args.gamma)
        r = arith.divmod(lam, gamma)
        rems = {format_word(b): format_poly(v) for b, v in r.remainder_terms.items()}
        result = {"quotient": format_poly(r.quotient), "remainders": rems,
                  "remainder": format_poly(r.assembled_remainder), "exact": r.exact}
        lines = [f"quotient: {result['quotient']}", f"remainder: {result['remainder']}",
                 f"exact: {str(r.exact).lower()}"]
        lines += [f"  {b} -> {v}" for b, v in rems.items()]
        return result, lines, strategy

    if c == "quotient":
        lam, gamma = P(args.lam), P(args.gamma)
        q = (arith.left_quotient if args.side == "left" else arith.right_quotient)(lam, gamma)
        return format_poly(q), [format_poly(q)], strategy

    if c == "gcd":
        polys = [P(t) for t in args.polys]
        r = arith.gcd(polys, want_certificate=args.certificate)
        g = format_poly(r.gcd)
        result = {"gcd": g}
        lines = [g]
        notice = [format_poly(p) for p in polys if p.constant_term == 0]
        if notice:
            msg = ("notice: inputs without constant term were replaced by their cofactors; "
                   "the gcd is the comonic generator and need not generate the same left ideal as "
                   + ", ".join(notice))
            result["notice"] = msg
            print(msg, file=sys.stderr)
        if args.certificate:
            cert = [str(x) for x in r.certificate]
            result["certificate"] = cert
            result["certificate_valid"] = leavitt.verify_certificate(polys, r.certificate, r.gcd)
            lines += [f"c{i + 1}: {x}" for i, x in enumerate(cert)]
        return result, lines, strategy

    if c == "irreducible":
        ok = factor.is_irreducible(P(args.poly), rng, budget)
        return ok, [str(ok).lower()], strategy

    if c == "length":
        k = factor.atom_count(P(args.poly), rng, budget)
        return k, [str(k)], strategy

    if c == "factor":
        f = factor.atomic_factorization(P(args.poly), args.strategy, rng, budget)
        atoms = [format_poly(a) for a in f.atoms]
        lines = ([] if f.unit == 1 else [f"unit: {F.format(f.unit)}"]) + atoms
        return {"unit": F.format(f.unit), "atoms": atoms}, lines, f.strategy

    if c == "similar":
        ok = factor.is_similar(P(args.lam), P(args.gamma), rng, budget)
        return ok, [str(ok).lower()], strategy

    if c == "simclass":
        cls = [format_poly(p) for p in factor.similarity_class(P(args.poly), rng, budget)]
        return cls, cls, strategy

    if c == "endo":
        M = vmodule.build_v(P(args.poly), n)
        E = modalg.endomorphism_ring(M, rng, budget)
        basis = [[[F.format(x) for x in row] for row in B] for B in E.basis]
        consts = [[[F.format(x) for x in v] for v in row] for row in E.structure_constants]
        result = {"dim": E.dim, "is_division": E.is_division, "basis": basis,
                  "structure_constants": consts}
        return result, [f"dim {E.dim}", f"division: {str(E.is_division).lower()}"], strategy

    if c == "primary":
        comps = factor.primary_components(P(args.poly), rng, budget)
        result = [M.to_dict() for M in comps]
        lines = [f"{len(comps)} component(s)"]
        for k, M in enumerate(comps, start=1):
            lines.append(f"[{k}] " + "; ".join(_module_lines(M)))
        return result, lines, strategy

    if c == "zero-constant":
        z = factor.factor_zero_constant(P(args.poly))

        def fmt(pair):
            return None if pair is None else [format_poly(x) for x in pair]

        result = {"left_form": fmt(z.left_form), "right_form": fmt(z.right_form)}
        lines = []
        for label, pair in (("left", z.left_form), ("right", z.right_form)):
            lines.append(f"{label}: " + ("none" if pair is None else
                                         f"({format_poly(pair[0])}) * ({format_poly(pair[1])})"))
        return result, lines, strategy

    if c == "leavitt-nf":
        e = leavitt.parse_leavitt(args.expr, F, n if n is None else max(n, 2))
        return str(e), [str(e)], strategy

    if c == "verify-cert":
        if len(args.pairs) % 2:
            raise UsageError("verify-cert expects INPUT COEFF pairs")
        texts = [args.gcd] + args.pairs
        idx = [t.value for s in texts for t in tokenize(s) if t.kind in ("var", "svar")]
        alph = max([2, n or 0] + idx)
        claimed = P(args.gcd)
        inputs = [P(t) for t in args.pairs[0::2]]
        coeffs = [leavitt.parse_leavitt(t, F, alph) for t in args.pairs[1::2]]
        ok = leavitt.verify_certificate(inputs, coeffs, claimed)
        return ok, [str(ok).lower()], strategy

    raise UsageError(f"unknown command {c}")


def _inputs(args):
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in _SESSION_DEFAULTS or k == "command":
            continue
        out[k] = v
    return out


def main(argv=None, environ=None, stdout=None) -> int:
    environ = os.environ if environ is None else environ
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    record = {"command": args.command, "inputs": _inputs(args), "status": "ok",
              "result": None, "error": None, "strategy": None}
    code = EXIT_OK
    session = None
    lines = []
    try:
        session = _resolve_session(args, environ)
        result, lines, strategy = _run(args, session)
        record["result"], record["strategy"] = result, strategy
    except (UsageError, PolySyntaxError, UnknownVariable) as exc:
        code = EXIT_USAGE
        record["status"], record["error"] = "error", {"type": type(exc).__name__, "message": str(exc)}
    except InfeasibleEnumeration as exc:
        code = EXIT_BUDGET
        record["status"], record["error"] = "error", {"type": type(exc).__name__, "message": str(exc)}
    except (NCFactorError, ValueError, ZeroDivisionError) as exc:
        code = EXIT_DOMAIN
        record["status"], record["error"] = "error", {"type": type(exc).__name__, "message": str(exc)}

    structured = (session.output if session else
                  getattr(args, "output", None) or environ.get("NCFACTOR_OUTPUT", "text")) == "structured"
    if session:
        record.update(field=session.field.descriptor, vars=session.nvars,
                      seed=session.seed, budget=session.budget)
    else:
        record.update(field=None, vars=None, seed=None, budget=None)
    if structured:
        print(json.dumps(record, sort_keys=True), file=out)
    elif code == EXIT_OK:
        for line in lines:
            print(line, file=out)
        if record["strategy"]:
            print(f"strategy: {record['strategy']}", file=sys.stderr)
    else:
        print(f"{record['error']['type']}: {record['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
