"""``tomofix`` command line.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import asdict, dataclass
from typing import Any, Callable

from . import balanced as bal
from . import golden
from .bounded import RankDeficiencyError, bounded_basis, period_lattice, rational_basis
from .core import (
    GRID_LEGEND,
    TorusArray,
    array_from_json,
    array_to_json,
    delta,
    is_fixed,
    puncture,
    render_grid,
    square_window,
)
from .cyclotomic import ConductorCapError
from .modp import flatten, group_det_check, kernel, rep_matrix, theorem41_sweep
from .polygrowth import array_from_solution, graded_representatives, operator_at, shift_char_poly
from .rings import IntMod, Ring, is_prime
from .spectra import square_zero_locus, zero_locus_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    text: str
    ok: bool = True


@dataclass(frozen=True)
class RunManifest:
    subcommand: str
    parameters: dict
    exact: bool
    elapsed_seconds: float
    digest: str

    def to_json(self) -> dict:
        return asdict(self)


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


# zero-locus


def cmd_zero_locus(args: argparse.Namespace) -> Outcome:
    pts = zero_locus_oracle(args.n, threads=args.threads) if args.oracle else square_zero_locus(args.n)
    if args.json:
        return Outcome(_dump([p.to_json() for p in pts]))
    lines = [f"# {len(pts)} points of the torus zero locus of m_S({args.n})*"]
    lines += [str(p) for p in pts]
    return Outcome("\n".join(lines))


# bounded-basis


def _fmt_value(v: Any) -> str:
    return str(v)


def cmd_bounded_basis(args: argparse.Namespace) -> Outcome:
    if args.rational:
        rb = rational_basis(args.n)
        if args.json:
            ring = Ring("Q")
            return Outcome(
                _dump(
                    {
                        "n": rb.n,
                        "dims": list(rb.dims),
                        "orbit_sizes": list(rb.orbit_sizes),
                        "arrays": [array_to_json(a, ring) for a in rb.arrays],
                        "periods": [[list(p), list(q)] for p, q in rb.periods],
                    }
                )
            )
        lines = [f"# rational basis for S({args.n})*: {len(rb.arrays)} arrays on {rb.dims[0]}x{rb.dims[1]}"]
        for idx, (a, (p, q)) in enumerate(zip(rb.arrays, rb.periods), 1):
            lines.append(f"## b{idx} periods {p} {q}")
            if args.grid:
                lines.append(render_grid(a, _fmt_value))
        return Outcome("\n".join(lines))
    arrays = bounded_basis(args.n)
    if args.json:
        return Outcome(
            _dump(
                [
                    {
                        "point": a.point.to_json(),
                        "periods": [list(v) for v in period_lattice(a)],
                        "array": array_to_json(a.array),
                    }
                    for a in arrays
                ]
            )
        )
    lines = [f"# {len(arrays)} character arrays for S({args.n})*"]
    for a in arrays:
        p, q = period_lattice(a)
        lines.append(f"## {a.point} periods {p} {q}")
        if args.grid:
            lines.append(render_grid(a.array, _fmt_value))
    return Outcome("\n".join(lines))


# poly


def _parse_region(text: str) -> tuple[int, int]:
    try:
        w, h = (int(x) for x in text.lower().split("x"))
    except ValueError as exc:
        raise UsageError(f"--region must look like 12x12, got {text!r}") from exc
    if w < 1 or h < 1:
        raise UsageError("--region sides must be positive")
    return w, h


def cmd_poly(args: argparse.Namespace) -> Outcome:
    pts = square_zero_locus(args.n)
    if not 0 <= args.point_index < len(pts):
        raise UsageError(f"--point-index must be in 0..{len(pts) - 1}")
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    w, h = _parse_region(args.region)
    p = pts[args.point_index]
    window = puncture(square_window(args.n))
    d = operator_at(window, p)
    reps = graded_representatives(d, args.degree)
    out: dict = {
        "point": p.to_json(),
        "shifted_polynomial": str(shift_char_poly(window, p)),
        "operator": str(d),
        "representatives": [[str(g) for g in layer] for layer in reps],
        "arrays": [],
    }
    lines = [f"# point {p}", f"# m^p = {out['shifted_polynomial']}", f"# D_p = {out['operator']}"]
    for t, layer in enumerate(reps):
        for g in layer:
            arr = array_from_solution(p, g, (0, w - 1, 0, h - 1), window)
            lines.append(f"## degree {t}: {g}")
            if args.grid:
                lines.append(render_grid(arr))
            out["arrays"].append(
                {"degree": t, "solution": str(g), "values": [[str(v) for v in row] for row in arr.rows()]}
            )
    if args.json:
        return Outcome(_dump(out))
    return Outcome("\n".join(lines))


# modp


def cmd_modp(args: argparse.Namespace) -> Outcome:
    p = args.p
    if not is_prime(p) or p == 2:
        raise UsageError(f"--p must be an odd prime, got {p}")
    if args.sweep:
        rows = theorem41_sweep(p)
        ok = all((r.kernel_dim == 0) == (r.n <= p - 2) and r.det == r.formula for r in rows)
        if args.json:
            return Outcome(_dump([asdict(r) for r in rows]), ok)
        lines = [f"# p = {p}: n, kernel dim, det, (n^2-1) mod p"]
        lines += [f"{r.n} {r.kernel_dim} {r.det} {r.formula}" for r in rows]
        return Outcome("\n".join(lines), ok)
    n = args.n if args.n is not None else 2
    rep = kernel(n, p)
    direct, formula, equal = group_det_check(n, p)
    ok = equal and rep.rank + rep.dimension == p * p
    if args.random_checks:
        ok = ok and _random_matrix_checks(n, p, args.random_checks, args.seed)
    if args.json:
        data = rep.to_json()
        data["det"] = direct
        data["det_formula"] = formula
        return Outcome(_dump(data), ok)
    lines = [
        f"# p = {p}, n = {n}: kernel dimension {rep.dimension}, rank {rep.rank}",
        f"# det = {direct}, (n^2-1) mod p = {formula}",
    ]
    for idx, b in enumerate(rep.basis, 1):
        lines.append(f"## kernel basis {idx}")
        lines.append(render_grid(b, lambda v: str(int(v))))
    return Outcome("\n".join(lines), ok)


def _random_matrix_checks(n: int, p: int, count: int, seed: int) -> bool:
    """Matrix-vector product against the operator on seeded random arrays."""
    rng = random.Random(seed)
    m = rep_matrix(n, p)
    w = puncture(square_window(n))
    for _ in range(count):
        v = TorusArray((p, p), tuple(IntMod(rng.randrange(p), p) for _ in range(p * p)))
        if m.apply(flatten(v)) != flatten(delta(w, v)):
            return False
    return True


# balanced


def cmd_balanced(args: argparse.Namespace) -> Outcome:
    modes = [args.search, args.fn is not None, args.probe is not None, args.certificate is not None]
    if sum(modes) != 1:
        raise UsageError("choose exactly one of --search, --fn, --probe, --certificate")
    if args.search:
        if args.n != 3:
            raise UsageError("--search is the exhaustive n = 3 search; use --probe for other n")
        sols = bal.search_balanced_3torus()
        certs = [bal.is_zero_sum(a, bal.punctured_square(2)) for a in sols]
        ok = len(sols) == 12 and all(c.valid for c in certs)
        if args.json:
            return Outcome(_dump([c.to_json() for c in certs]), ok)
        lines = [" ".join(str(v) for v in a.values) for a in sols]
        if args.grid:
            lines = [GRID_LEGEND] + [
                "\n".join(" ".join(f"{v:2d}" for v in row) for row in a.rows()) + "\n" for a in sols
            ]
        return Outcome("\n".join(lines), ok)
    if args.fn is not None:
        if args.fn < 3:
            raise UsageError("--fn needs n >= 3")
        a = bal.construct_fn(args.fn)
        cert = bal.is_zero_sum(a, bal.punctured_square(args.fn - 1))
        ident = bal.proof_identities_check(args.fn)
        ok = cert.valid and ident.ok
        if args.json:
            data = cert.to_json()
            data["identities"] = asdict(ident)
            return Outcome(_dump(data), ok)
        text = render_grid(a.to_torus(), lambda v: str(int(v)))
        text += f"\n# balanced={cert.balanced} zero_sum={cert.zero_sum} identities={ident.ok}"
        return Outcome(text, ok)
    if args.certificate is not None:
        if args.k is None:
            raise UsageError("--certificate needs --k")
        try:
            cert = bal.nonexistence_certificate(args.certificate, args.k, strict=False)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if args.json:
            return Outcome(_dump(cert.to_json()))
        verdict = "issued" if cert.applicable else "not applicable"
        return Outcome(f"# certificate {verdict}: {cert.argument}")
    if args.k is None:
        raise UsageError("--probe needs --k")
    try:
        cfg = bal.ProbeConfig(args.probe, args.k, budget=args.budget, max_solutions=args.max_solutions)
        rep = bal.composite_probe(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        data = rep.to_json()
        data["certificates"] = [
            bal.is_zero_sum(a, bal.punctured_square(args.k)).to_json() for a in rep.solutions
        ]
        return Outcome(_dump(data))
    lines = [f"# n={rep.n} k={rep.k} status={rep.status} nodes={rep.nodes} complete={rep.complete}"]
    lines += [" ".join(str(v) for v in a.values) for a in rep.solutions]
    return Outcome("\n".join(lines))


# verify


def cmd_verify(args: argparse.Namespace) -> Outcome:
    try:
        with open(args.file, encoding="utf-8") as fh:
            a = array_from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read array from {args.file}: {exc}") from exc
    w = square_window(args.n)
    if args.mode == "fixed":
        ok = is_fixed(w, a)
        what = f"fixed by S({args.n})"
    else:
        ok = delta(puncture(w), a).is_zero()
        what = f"zero-sum for S({args.n})*"
    if args.json:
        return Outcome(_dump({"file": args.file, "check": args.mode, "n": args.n, "ok": ok}), ok)
    return Outcome(f"{'PASS' if ok else 'FAIL'} {what}", ok)


# reproduce-paper


def cmd_reproduce(args: argparse.Namespace) -> Outcome:
    results = golden.run_checks(threads=args.threads)
    ok = all(r.ok for r in results)
    if args.json:
        return Outcome(_dump([asdict(r) for r in results]), ok)
    return Outcome(golden.render_table(results), ok)


COMMANDS: dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "zero-locus": cmd_zero_locus,
    "bounded-basis": cmd_bounded_basis,
    "poly": cmd_poly,
    "modp": cmd_modp,
    "balanced": cmd_balanced,
    "verify": cmd_verify,
    "reproduce-paper": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--grid", action="store_true", help="print arrays as text grids")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--threads", type=int, default=1, help="worker threads")
    common.add_argument("--budget", type=int, default=200_000, help="search node budget")
    common.add_argument(
        "--manifest", metavar="PATH", help="write a run manifest to PATH, or '-' for a stdout footer"
    )

    parser = argparse.ArgumentParser(prog="tomofix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zero-locus", parents=[common], help="torus zero locus of m_S(n)*")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="enumerate mu_M^2 instead of the closed form")

    p = sub.add_parser("bounded-basis", parents=[common], help="bounded fixed arrays")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rational", action="store_true", help="orbit-average rational basis")

    p = sub.add_parser("poly", parents=[common], help="polynomial-growth fixed arrays")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--point-index", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--region", default="12x12", help="WxH patch, default 12x12")

    p = sub.add_parser("modp", parents=[common], help="kernel of S(n)* on the p-torus")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--sweep", action="store_true", help="all n = 2..p-1")
    p.add_argument(
        "--random-checks", type=int, default=0, metavar="K", help="compare matrix and operator on K seeded arrays"
    )

    p = sub.add_parser("balanced", parents=[common], help="balanced zero-sum arrays")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--search", action="store_true", help="all 12 solutions on the 3-torus")
    p.add_argument("--fn", type=int, metavar="N", help="explicit construction for S(N-1)*")
    p.add_argument("--probe", type=int, metavar="N", help="budgeted search on a composite N-torus")
    p.add_argument("--certificate", type=int, metavar="P", help="nonexistence certificate on the P-torus")
    p.add_argument("--k", type=int, help="window side for --probe and --certificate")
    p.add_argument("--max-solutions", type=int, default=1)

    p = sub.add_parser("verify", parents=[common], help="check a JSON array file")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("fixed", "zero-sum"), default="fixed")

    sub.add_parser("reproduce-paper", parents=[common], help="run every worked-example check")
    return parser


def _manifest(args: argparse.Namespace, text: str, elapsed: float) -> RunManifest:
    skip = {"command", "manifest", "threads"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return RunManifest(args.command, params, True, round(elapsed, 3), digest)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    if args.threads < 1:
        print("tomofix: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        outcome = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"tomofix {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConductorCapError as exc:
        print(f"tomofix {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RankDeficiencyError, AssertionError) as exc:
        print(f"tomofix {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"tomofix {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start
    print(outcome.text)
    if args.manifest:
        man = _manifest(args, outcome.text, elapsed)
        if args.manifest == "-":
            print("# manifest " + json.dumps(man.to_json(), sort_keys=True))
        else:
            with open(args.manifest, "w", encoding="utf-8") as fh:
                json.dump(man.to_json(), fh, indent=2, sort_keys=True)
                fh.write("\n")
    return EXIT_OK if outcome.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
