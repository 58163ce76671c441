"""Command-line interface: ``tournament-limits <command> ...``.

Exit codes: 0 success, 1 invalid input (the violated invariant is named on
stderr), 2 internal inconsistency or a failed verification suite.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import formats, kdecomp, kdensity, kernel, sampler, tdecomp, verify
from .errors import InternalInconsistency, ParseError, ValidationError
from .homcount import densities, transitivity_report
from .kernel import Atom, SegmentKernel, StepKernel
from .tournament import (
    Tournament,
    cycle_digraph,
    cyclic,
    direct_sum,
    empty_digraph,
    path_digraph,
    singleton,
    transitive,
)

_PATTERN = re.compile(r"^([TPCE])(\d+)$")


class _Out:
    """Collects report fields; renders as ``key: value`` lines or JSON."""

    def __init__(self, args):
        self.decimal = getattr(args, "decimal", False)
        self.as_json = getattr(args, "json", False)
        self.items = {}

    def num(self, x):
        if isinstance(x, bool) or x is None:
            return x
        if isinstance(x, float):
            return f"{x:.10g}"
        x = Fraction(x)
        if self.decimal:
            return f"{x.numerator / x.denominator:.12g}"
        return formats.rational(x)

    def put(self, key, value):
        self.items[key] = value

    def render(self) -> str:
        if self.as_json:
            return json.dumps(self.items, indent=2) + "\n"
        lines = []
        for k, v in self.items.items():
            if isinstance(v, (list, dict)):
                v = json.dumps(v)
            elif isinstance(v, bool):
                v = "true" if v else "false"
            lines.append(f"{k}: {v}")
        return "\n".join(lines) + "\n"


def resolve_pattern(spec: str):
    """A named pattern (C3, P4, T5, E2, K1, ...) or a tournament file."""
    if spec == "K1":
        return singleton()
    m = _PATTERN.match(spec)
    if m:
        letter, k = m.group(1), int(m.group(2))
        if letter == "T":
            return transitive(k)
        if letter == "P":
            return path_digraph(k)
        if letter == "E":
            return empty_digraph(k)
        return cyclic(3) if k == 3 else cycle_digraph(k)
    return _load(spec)


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return formats.parse_any(text)


def _load_kernel(path: str) -> SegmentKernel:
    obj = _load(path)
    if isinstance(obj, Tournament):
        raise ParseError(f"{path} holds a tournament, a kernel JSON file is required")
    return obj


def _kernel_view(W: SegmentKernel):
    """The step kernel itself when the file is a single full atom."""
    return formats.as_step_kernel(W) or W


# commands -------------------------------------------------------------------


def cmd_gen(args, out: _Out) -> str:
    fam, n = args.family, args.n
    if fam == "transitive":
        G = transitive(n)
    elif fam == "cyclic":
        G = cyclic(n)
    else:
        W = kernel.quasi_random() if fam == "random-uniform" else None
        if fam == "from-kernel":
            if not args.kernel:
                raise ParseError("--family from-kernel requires --kernel FILE")
            W = _load_kernel(args.kernel)
        G = sampler.sample_tournament(W, sampler.SampleConfig(n, args.seed))
    return formats.tournament_to_text(G)


def cmd_density(args, out: _Out):
    F = resolve_pattern(args.pattern)
    target = _load(args.target)
    out.put("pattern", args.pattern)
    out.put("kind", args.kind)
    if isinstance(target, Tournament):
        if args.mc:
            raise ParseError("--mc needs a kernel target")
        d = densities(F, target)
        value = {"t": d.t, "tinj": d.t_inj, "tind": d.t_ind}[args.kind]
        out.put("density", out.num(value))
        return
    W = _kernel_view(target)
    if args.kind == "tind":
        exact = kdensity.t_ind_segment(F, W)
    else:
        # injective and plain densities coincide for kernels
        exact = kdensity.t_kernel(F, W)
    if args.mc:
        if args.kind != "tind":
            raise ParseError("--mc estimates the induced density; use --kind tind")
        rep = sampler.mc_density(F, target, sampler.SampleConfig(F.n, args.seed, args.reps), exact)
        out.put("estimate", out.num(rep.estimate))
        out.put("std_error", out.num(rep.std_error))
        out.put("exact", out.num(exact))
        out.put("z", out.num(rep.z))
        out.put("reps", rep.reps)
        return
    out.put("density", out.num(exact))


def cmd_decompose(args, out: _Out):
    obj = _load(args.input)
    if isinstance(obj, Tournament):
        dec = tdecomp.decompose(obj)
        out.put("type", "tournament")
        out.put("n", obj.n)
        out.put("components", dec.records(coarse=False))
        out.put("coarse", dec.records(coarse=True))
        out.put("irreducible", len(dec.components) <= 1)
        return
    out.put("type", "kernel")
    step = formats.as_step_kernel(obj)
    if step is not None:
        dec = kdecomp.decompose_kernel(step)
        out.put("block_map", [list(x) for x in dec.block_map])
        canon = dec.result
    else:
        canon = kdecomp.decompose_segment_kernel(obj)
    segs = []
    for s in canon.segments:
        if isinstance(s, Atom):
            segs.append({"type": "atom", "weight": out.num(s.weight), "blocks": s.inner.m})
        else:
            segs.append({"type": "transitive", "weight": out.num(s.weight)})
    out.put("segments", segs)
    out.put("canonical", formats.kernel_to_obj(canon))


def cmd_check(args, out: _Out):
    path = args.input or args.kernel
    if not path:
        raise ParseError("check needs --input FILE or --kernel FILE")
    obj = _load(path)
    out.put("property", args.property)
    if isinstance(obj, Tournament):
        if args.property == "transitive":
            r = transitivity_report(obj)
            for k, v in r.verdicts.items():
                out.put(k, v)
            out.put("c3_count", r.c3_count)
            out.put("score_sum", r.score_sum)
            out.put("score_target", r.score_target)
            out.put("all_agree", r.all_agree)
            out.put("verdict", r.verdict)
        else:
            r = tdecomp.is_irreducible(obj)
            out.put("scc", r.scc_verdict)
            out.put("paths", r.path_verdict)
            out.put("closed_subset", r.subset_verdict)
            out.put("witness", sorted(r.witness) if r.witness else None)
            out.put("verdict", r.irreducible)
        return
    W = _kernel_view(obj)
    if args.property == "transitive":
        r = kdensity.kernel_transitivity_report(W)
        out.put("t_c3", out.num(r.t_c3))
        out.put("t_p3", out.num(r.t_p3))
        out.put("t_t3", out.num(r.t_t3))
        out.put("score_integral", out.num(r.score_integral))
        out.put("path_densities", [out.num(x) for x in r.path_densities])
        out.put("transitive_densities", [out.num(x) for x in r.transitive_densities])
        for k, v in r.verdicts.items():
            out.put(k, v)
        out.put("identity_difference", r.identity_difference)
        out.put("identity_affine", r.identity_affine)
        out.put("all_agree", r.all_agree)
        out.put("verdict", r.transitive)
        if not (r.all_agree and r.identities_hold):
            raise InternalInconsistency("kernel transitivity criteria disagree")
        return
    if isinstance(W, StepKernel):
        irr = kdecomp.is_irreducible_kernel(W)
        wit = kdecomp.reducibility_witness(W)
        out.put("support_strongly_connected", irr)
        if wit is not None:
            out.put("witness_blocks", sorted(wit.blocks))
            out.put("witness_mass", out.num(wit.mass))
            out.put("witness_integral", out.num(wit.integral))
            out.put("witness_identity", wit.holds)
        out.put("verdict", irr)
    else:
        out.put("verdict", kdecomp.is_irreducible_segment_kernel(W))


def cmd_dsum(args, out: _Out) -> str:
    objs = [_load(p) for p in args.inputs]
    kinds = {isinstance(o, Tournament) for o in objs}
    if kinds == {True}:
        if args.weights:
            raise ParseError("--weights applies to kernels only")
        return formats.tournament_to_text(direct_sum(objs))
    if len(kinds) > 1:
        raise ParseError("dsum inputs must be all tournaments or all kernels")
    weights = (
        [formats.parse_rational(w) for w in args.weights]
        if args.weights
        else [Fraction(1, len(objs))] * len(objs)
    )
    if len(weights) != len(objs):
        raise ParseError(f"{len(objs)} inputs but {len(weights)} weights")
    segs = []
    for W, w in zip(objs, weights):
        segs.extend(kernel.scale_into(W, w))
    return formats.kernel_to_json(kernel.kernel_direct_sum(segs))


def cmd_sample(args, out: _Out) -> str:
    W = _load_kernel(args.kernel)
    G = sampler.sample_tournament(W, sampler.SampleConfig(args.n, args.seed), rep=args.rep)
    return formats.tournament_to_text(G)


def cmd_estimate(args, out: _Out):
    W = _load_kernel(args.kernel)
    if args.what == "reducibility":
        if args.n is None:
            raise ParseError("--what reducibility needs --n")
        rate = sampler.reducibility_rate(W, args.n, args.reps, args.seed)
        out.put("n", args.n)
        out.put("reps", args.reps)
        out.put("reducibility_rate", out.num(rate))
        return
    if not args.pattern:
        raise ParseError("--what density needs --pattern")
    F = resolve_pattern(args.pattern)
    exact = kdensity.t_ind_segment(F, W)
    rep = sampler.mc_density(F, W, sampler.SampleConfig(F.n, args.seed, args.reps), exact)
    out.put("pattern", args.pattern)
    out.put("estimate", out.num(rep.estimate))
    out.put("std_error", out.num(rep.std_error))
    out.put("exact", out.num(exact))
    out.put("z", out.num(rep.z))
    out.put("reps", rep.reps)


def cmd_eta(args, out: _Out):
    W = _load_kernel(args.kernel)
    direct, from_lambda = kernel.eta(W), kernel.eta_from_lambda(W)
    if direct != from_lambda:
        raise InternalInconsistency("embedding from cumulative weights disagrees with out-mass")
    rows = []
    for (k, start, width), seg in zip(direct, W.segments):
        kind = "atom" if isinstance(seg, Atom) else "transitive"
        rows.append({"segment": k, "type": kind, "start": out.num(start), "width": out.num(width)})
    out.put("segments", rows)


def cmd_verify(args, out: _Out):
    results = verify.run_suites(args.suite, seed=args.seed)
    failed = 0
    lines = []
    for r in results:
        failed += not r.ok
        tag = "PASS" if r.ok else "FAIL"
        lines.append({"suite": r.suite, "check": r.name, "ok": r.ok, "detail": r.detail})
        if not out.as_json:
            extra = f" ({r.detail})" if r.detail else ""
            print(f"{tag} [{r.suite}] {r.name}{extra}")
    out.put("checks", len(results))
    out.put("failed", failed)
    if out.as_json:
        out.put("results", lines)
    return failed


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--decimal", action="store_true", help="print decimals instead of p/q")

    p = argparse.ArgumentParser(prog="tournament-limits", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a tournament file")
    g.add_argument("--family", required=True, choices=["transitive", "cyclic", "random-uniform", "from-kernel"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--kernel")
    g.add_argument("--seed", type=int, default=0)

    d = sub.add_parser("density", parents=[common], help="homomorphism density of a pattern")
    d.add_argument("--pattern", required=True, help="C3, P3, T3, Tk, Pk, Ck, Ek, K1 or a tournament file")
    d.add_argument("--target", required=True)
    d.add_argument("--kind", choices=["t", "tinj", "tind"], default="t")
    mode = d.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact value (default)")
    mode.add_argument("--mc", action="store_true", help="Monte Carlo estimate (kernel targets)")
    d.add_argument("--reps", type=int, default=10_000)
    d.add_argument("--seed", type=int, default=0)

    dc = sub.add_parser("decompose", parents=[common], help="ordered component decomposition")
    dc.add_argument("--input", required=True)

    c = sub.add_parser("check", parents=[common], help="multi-criterion property report")
    c.add_argument("--input")
    c.add_argument("--kernel")
    c.add_argument("--property", required=True, choices=["transitive", "irreducible"])

    s = sub.add_parser("dsum", parents=[common], help="ordered direct sum of files")
    s.add_argument("inputs", nargs="+")
    s.add_argument("--weights", nargs="+", help="segment masses for kernel inputs")

    sm = sub.add_parser("sample", parents=[common], help="draw G(n, W)")
    sm.add_argument("--kernel", required=True)
    sm.add_argument("--n", type=int, required=True)
    sm.add_argument("--seed", type=int, default=0)
    sm.add_argument("--rep", type=int, default=0, help="independent stream index")

    e = sub.add_parser("estimate", parents=[common], help="Monte Carlo estimates")
    e.add_argument("--kernel", required=True)
    e.add_argument("--what", choices=["density", "reducibility"], default="density")
    e.add_argument("--pattern")
    e.add_argument("--n", type=int)
    e.add_argument("--reps", type=int, default=10_000)
    e.add_argument("--seed", type=int, default=0)

    et = sub.add_parser("eta", parents=[common], help="order embedding of the segments")
    et.add_argument("--kernel", required=True)

    v = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    v.add_argument("--suite", choices=["identities", "decomposition", "sampling", "all"], default="all")
    v.add_argument("--seed", type=int, default=2024)
    return p


COMMANDS = {
    "gen": cmd_gen,
    "density": cmd_density,
    "decompose": cmd_decompose,
    "check": cmd_check,
    "dsum": cmd_dsum,
    "sample": cmd_sample,
    "estimate": cmd_estimate,
    "eta": cmd_eta,
    "verify": cmd_verify,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            result = COMMANDS[args.command](args, out)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistency as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        sys.stdout.write(result)
        return 0
    sys.stdout.write(out.render())
    if args.command == "verify" and result:
        return 2
    return 0


def main() -> None:
    sys.exit(run())
