"""Command line front end: ``orthorep <verb> [options]``.

Exit status: 0 success, 1 a Fail verdict or a failed check, 2 bad input,
3 a search budget was exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .algebra import Algebra
from .ar import tau, tau_higher, tau_higher_minus
from .decompose import AddSet, decompose, default_seed, set_default_seed
from .errors import OrthorepError, SearchBudgetExceeded
from .homological import cosyzygy, ext_dim, syzygy
from .io import load_algebra, load_module
from .module import Module, hom_dim, injective, projective, regular_module, simple
from .nakayama import L, bridge, classify, dd, nak_syzygy
from .orthosym import (
    AtLeast,
    IndecCatalogue,
    dominant_dim_lower,
    gorenstein_dims_of_end,
    is_n_orthosymmetric,
    is_nm_orthosymmetric,
    rigidity_degree,
)
from .relative import (
    default_cutoff,
    left_approx,
    m_coresdim,
    m_resdim,
    right_approx,
    verdict_json,
)
from .tilting import Fail, is_tilting, mutate_left, mutate_right
from .verify import SCOPES
from .verify import run as run_checks

REPORT_VERSION = 1


class UsageError(Exception):
    pass


# -- inputs -----------------------------------------------------------------------------

def _parse_pair(text: str, what: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must look like 'a,b', got {text!r}") from None
    return a, b


class Inputs:
    """The algebra named on the command line and a parser for module arguments."""

    def __init__(self, args):
        if bool(args.nakayama) == bool(args.algebra):
            raise UsageError("give exactly one of --nakayama e,a and --algebra FILE")
        self.bridge = None
        if args.nakayama:
            e, a = _parse_pair(args.nakayama, "--nakayama")
            if e < 1 or a < 1:
                raise UsageError("--nakayama needs e >= 1 and a >= 1")
            self.params = (e, a)
            self.bridge = bridge((e, a), args.field)
            self.algebra: Algebra = self.bridge.algebra
            IndecCatalogue.from_bridge(self.bridge)
        else:
            self.params = None
            self.algebra = load_algebra(args.algebra, args.field)

    def module(self, text: str) -> Module:
        """``A``, ``P:v``, ``I:v``, ``S:v``, ``L:i,t`` (Nakayama only) or a module file."""
        A = self.algebra
        if text == "A":
            return regular_module(A)
        kind, _, rest = text.partition(":")
        if kind in ("P", "I", "S") and rest.isdigit():
            v = int(rest)
            if v >= A.vertex_count:
                raise UsageError(f"vertex {v} out of range")
            return {"P": projective, "I": injective, "S": simple}[kind](A, v)
        if kind == "L" and rest:
            if self.bridge is None:
                raise UsageError("L:i,t modules need --nakayama")
            i, t = _parse_pair(rest, "L:i,t")
            if not 1 <= t <= self.bridge.params.b:
                raise UsageError(f"length {t} out of range 1..{self.bridge.params.b}")
            return self.bridge((i, t))
        if not os.path.exists(text):
            raise UsageError(f"cannot read module {text!r}")
        return load_module(text, A)

    def addset(self, texts: list[str], with_regular: bool = False) -> AddSet:
        mods = [self.module(t) for t in texts]
        if with_regular:
            mods.insert(0, regular_module(self.algebra))
        if not mods:
            raise UsageError("no modules given")
        return AddSet.of(*mods)


def describe(X: Module) -> dict:
    if X.dim == 0:
        return {"dims": list(X.dims), "summands": []}
    return {
        "dims": list(X.dims),
        "summands": [
            {"label": R.name or "·".join(map(str, R.dims)), "dims": list(R.dims), "multiplicity": m}
            for R, m in decompose(X)
        ],
    }


# -- verbs ------------------------------------------------------------------------------

def cmd_hom(args, inp: Inputs) -> tuple[dict, int]:
    X, Y = inp.module(args.x), inp.module(args.y)
    return {"x": describe(X), "y": describe(Y), "dim": hom_dim(X, Y)}, 0


def cmd_ext(args, inp: Inputs) -> tuple[dict, int]:
    X, Y = inp.module(args.x), inp.module(args.y)
    degrees = range(1, args.degree + 1) if args.all_degrees else [args.degree]
    return {"x": describe(X), "y": describe(Y), "ext": {str(i): ext_dim(X, Y, i) for i in degrees}}, 0


def cmd_syzygy(args, inp: Inputs) -> tuple[dict, int]:
    X = inp.module(args.module)
    Y = syzygy(X, args.k) if args.k >= 0 else cosyzygy(X, -args.k)
    out = {"module": describe(X), "k": args.k, "result": describe(Y)}
    if inp.bridge is not None and args.module.startswith("L:"):
        z = nak_syzygy(L(*_parse_pair(args.module[2:], "L:i,t"), inp.params), args.k)
        out["closed_form"] = z.label if z is not None else "0"
    return out, 0


def cmd_tau(args, inp: Inputs) -> tuple[dict, int]:
    X = inp.module(args.module)
    n = args.n or 0
    if args.inverse:
        Y = tau_higher_minus(X, n)
    else:
        Y = tau(X) if n == 0 else tau_higher(X, n)
    return {"module": describe(X), "n": n, "inverse": args.inverse, "result": describe(Y)}, 0


def cmd_approx(args, inp: Inputs) -> tuple[dict, int]:
    M = inp.addset(args.add)
    X = inp.module(args.module)
    appr = right_approx(M, X) if args.side == "right" else left_approx(M, X)
    return {
        "add": M.labels(),
        "module": describe(X),
        "side": args.side,
        "approximation": describe(appr.object),
        "complement": describe(appr.complement),
        "minimal": appr.minimal,
        "resdim" if args.side == "right" else "coresdim": verdict_json(
            (m_resdim if args.side == "right" else m_coresdim)(M, X, args.cutoff)
        ),
    }, 0


def cmd_rigidity(args, inp: Inputs) -> tuple[dict, int]:
    M = inp.addset(args.module, args.with_regular)
    r = rigidity_degree(M, args.cap)
    if isinstance(r, AtLeast):
        out = {"module": M.labels(), "rigidity_degree": None, "at_least": r.value}
    else:
        out = {"module": M.labels(), "rigidity_degree": r}
    if inp.bridge is not None and len(args.module) == 1 and args.module[0].startswith("L:"):
        x = L(*_parse_pair(args.module[0][2:], "L:i,t"), inp.params)
        if not x.projective:
            out["dd"] = dd(x)
    return out, 0


def cmd_orthosym(args, inp: Inputs) -> tuple[dict, int]:
    M = inp.addset(args.module, args.with_regular)
    n = _need_n(args)
    report = is_n_orthosymmetric(M, n, args.cutoff)
    out = report.to_json()
    if args.m is not None:
        if inp.bridge is None:
            raise UsageError("--m needs a catalogue of indecomposables; use --nakayama")
        cat = IndecCatalogue.from_bridge(inp.bridge)
        out["m"] = args.m
        out["nm_ortho_symmetric"] = is_nm_orthosymmetric(M, n, args.m, cat)
    if args.assume_mueller_exact:
        out["domdim_lower"] = dominant_dim_lower(M, assume_mueller_exact=True)
    return out, 0


def cmd_gorenstein(args, inp: Inputs) -> tuple[dict, int]:
    M = inp.addset(args.module, args.with_regular)
    n = _need_n(args)
    left, right = gorenstein_dims_of_end(M, n, args.cutoff)
    return {"module": M.labels(), "n": n, "left": verdict_json(left), "right": verdict_json(right)}, 0


def cmd_tilting(args, inp: Inputs) -> tuple[dict, int]:
    M = inp.addset(args.module)
    report = is_tilting(M.module())
    return report.to_json(), 1 if isinstance(report.verdict, Fail) else 0


def cmd_mutate(args, inp: Inputs) -> tuple[dict, int]:
    M = inp.addset(args.module, args.with_regular)
    pivot = inp.addset(args.pivot)
    result = mutate_right(M, pivot) if args.side == "right" else mutate_left(M, pivot)
    out = result.to_json()
    if args.n is not None:
        out["ortho_symmetric_after"] = is_n_orthosymmetric(result.output, args.n, args.cutoff).ortho_symmetric
    return out, 0


def cmd_classify(args, inp: Inputs) -> tuple[dict, int]:
    if inp.params is None:
        raise UsageError("classify needs --nakayama e,a")
    e, a = inp.params
    if e % 3:
        raise UsageError("classify needs e divisible by 3")
    report = classify(e // 3, a, args.kind, pruned=not args.unpruned, budget=args.budget)
    out = report.to_json()
    if not args.timing:
        out.pop("seconds", None)
    return out, 0


def cmd_verify(args, inp: Inputs | None) -> tuple[dict, int]:
    numbers = set(args.check) if args.check else None
    results = run_checks(args.scope, numbers)
    out = {
        "scope": args.scope,
        "checks": [r.to_json(timing=args.timing) for r in results],
        "passed": sum(r.passed for r in results),
        "failed": sum(not r.passed for r in results),
    }
    return out, 0 if all(r.passed for r in results) else 1


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    return args.n


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nakayama", metavar="E,A", help="symmetric Nakayama algebra A_{e,ae+1}")
    common.add_argument("--algebra", metavar="FILE", help="algebra file (JSON or TOML)")
    common.add_argument("--field", default=None, help="Fp:<prime> or Q (default Fp:101)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized splitting")
    common.add_argument("--cutoff", type=int, default=None, help="resolution length cutoff")
    common.add_argument("--format", choices=("json", "md"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall-clock times")

    parser = argparse.ArgumentParser(prog="orthorep", description="Ortho-symmetric modules and relative homological algebra.")
    parser.add_argument("--version", action="version", version=f"orthorep {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def modules(p, required=True):
        p.add_argument("--module", "-M", action="append", default=[], required=required,
                       help="summand (repeatable): A, P:v, I:v, S:v, L:i,t or a module file")
        p.add_argument("--with-regular", action="store_true", help="add A as a summand")

    p = verb("hom", cmd_hom, "dim Hom(X, Y)")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = verb("ext", cmd_ext, "dim Ext^i(X, Y)")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--degree", "-i", type=int, default=1)
    p.add_argument("--all-degrees", action="store_true", help="every degree from 1 to --degree")

    p = verb("syzygy", cmd_syzygy, "stable k-th syzygy (negative k: cosyzygy)")
    p.add_argument("--module", "-M", required=True)
    p.add_argument("--k", type=int, default=1)

    p = verb("tau", cmd_tau, "τ, or τ_{n+1} with --n")
    p.add_argument("--module", "-M", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--inverse", action="store_true")

    p = verb("approx", cmd_approx, "minimal add(M)-approximation of a module")
    p.add_argument("--add", action="append", required=True, help="summand of M (repeatable)")
    p.add_argument("--module", "-M", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right")

    p = verb("rigidity", cmd_rigidity, "largest n with M n-rigid")
    modules(p)
    p.add_argument("--cap", type=int, default=32)

    p = verb("orthosym", cmd_orthosym, "n-ortho-symmetry and (n,m)-ortho-symmetry")
    modules(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--assume-mueller-exact", action="store_true",
                   help="report the dominant dimension bound as exact")

    p = verb("gorenstein", cmd_gorenstein, "Gorenstein dimensions of End(M)")
    modules(p)
    p.add_argument("--n", type=int, default=None)

    p = verb("tilting", cmd_tilting, "tilting verdict for T")
    modules(p)

    p = verb("mutate", cmd_mutate, "mutation of M at a summand or orbit")
    modules(p)
    p.add_argument("--pivot", action="append", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--n", type=int, default=None, help="also test n-ortho-symmetry of the result")

    p = verb("classify", cmd_classify, "maximal 1-ortho-symmetric or 1-rigid modules")
    p.add_argument("--kind", choices=("max-1-orthosymmetric", "max-1-rigid"), default="max-1-orthosymmetric")
    p.add_argument("--unpruned", "--exhaustive-unpruned", action="store_true", dest="unpruned")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("verify-paper", help="run the acceptance checks")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("--check", type=int, action="append", help="only this check number (repeatable)")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_verify, nakayama=None, algebra=None, field=None, cutoff=None)
    return parser


# -- output -----------------------------------------------------------------------------

def render_markdown(report: dict) -> str:
    lines = [f"# orthorep {report['verb']}", ""]
    lines += [f"- {k}: {report[k]}" for k in ("version", "field", "seed", "cutoff") if k in report]
    lines.append("")
    result = report["result"]
    if report["verb"] == "verify-paper":
        lines += ["| # | check | result |", "|---|---|---|"]
        for c in result["checks"]:
            lines.append(f"| {c['number']} | {c['name']} | {'PASS' if c['passed'] else 'FAIL'} |")
    elif report["verb"] == "classify":
        lines += [f"{result['algebra']}, {result['kind']}, {result['candidates']} candidates", ""]
        for k, members in enumerate(result["classes"], 1):
            lines.append(f"{k}. " + " ⊕ ".join(members))
    else:
        for key, value in result.items():
            lines.append(f"- **{key}**: `{json.dumps(value, ensure_ascii=False)}`")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    if os.environ.get("ORTHOREP_SEED"):
        try:
            seed = int(os.environ["ORTHOREP_SEED"])
        except ValueError:
            print("orthorep: ORTHOREP_SEED must be an integer", file=sys.stderr)
            return 2
    if seed is not None:
        set_default_seed(seed)
    try:
        inp = None if args.verb == "verify-paper" else Inputs(args)
        if inp is not None and args.cutoff is None:
            args.cutoff = default_cutoff(inp.algebra)
        result, status = args.func(args, inp)
    except UsageError as exc:
        print(f"orthorep: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"orthorep: {exc} (explored {exc.explored_fraction:.3%})", file=sys.stderr)
        return 3
    except (OrthorepError, ValueError, KeyError, OSError) as exc:
        print(f"orthorep: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    report = {
        "report_version": REPORT_VERSION,
        "version": __version__,
        "verb": args.verb,
        "field": inp.algebra.field.descriptor if inp is not None else None,
        "seed": default_seed(),
        "cutoff": args.cutoff,
        "result": result,
    }
    if args.format == "md":
        sys.stdout.write(render_markdown(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
