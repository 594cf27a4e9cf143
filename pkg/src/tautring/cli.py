"""Command-line front end: present, hilbert, verify, integrate."""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import pickle
import re
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import ENGINE_VERSION
from .ideal import NotHomogeneous
from .poly import Poly
from .presentation import REL5_MODES, SUBSET_MODES, Flags, build, validate
from .quotient import GradedQuotient, TopDegreeError, socle_and_duality

CACHE_ENV = "TAUTRING_CACHE_DIR"

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_INVALID, EXIT_DEGREE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    d: int | None = None
    rel5: str = "derived"
    subsets: str = "strict"
    max_degree: int | None = None
    invariant: bool = False
    fmt: str = "json"
    cache_dir: str | None = None
    jobs: int = 1
    suite: str = "all"
    output: str | None = None
    monomials: tuple = ()

    @property
    def flags(self) -> Flags:
        return Flags(rel5=self.rel5, subsets=self.subsets)

    def check(self):
        if self.command != "verify":
            if self.n is None or self.d is None:
                raise CliError(EXIT_ARGS, "--n and --d are required")
            if self.n < 1 or self.d < 1:
                raise CliError(EXIT_ARGS, "need --n >= 1 and --d >= 1")
        if self.max_degree is not None and self.max_degree < 0:
            raise CliError(EXIT_ARGS, "--max-degree must be non-negative")
        if self.jobs < 1:
            raise CliError(EXIT_ARGS, "--jobs must be positive")

    def cache_key(self) -> str:
        blob = json.dumps({"n": self.n, "d": self.d, "flags": self.flags.as_dict(), "engine": ENGINE_VERSION},
                          sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:32]


# -- cache ---------------------------------------------------------------------
def _cache_path(cfg: RunConfig):
    root = cfg.cache_dir or os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"{cfg.cache_key()}.pkl")


def _build_checked(cfg: RunConfig):
    try:
        pres = build(cfg.n, cfg.d, cfg.flags)
    except NotHomogeneous as e:
        raise CliError(EXIT_INVALID, f"validation failed: {e}")
    return pres


def load_quotient(cfg: RunConfig) -> GradedQuotient:
    path = _cache_path(cfg)
    if path and os.path.exists(path):
        with open(path, "rb") as fh:
            return pickle.load(fh)
    return GradedQuotient(_build_checked(cfg))


def store_quotient(cfg: RunConfig, q: GradedQuotient):
    path = _cache_path(cfg)
    if not path:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    with os.fdopen(fd, "wb") as fh:
        pickle.dump(q, fh)
    os.replace(tmp, path)


# -- monomial grammar ----------------------------------------------------------
_FACTOR = re.compile(r"^(k2|k3|[DF]\{?[0-9,]+\}?)(?:\^([0-9]+))?$")


def parse_monomial(text: str, ctx) -> Poly:
    """k2, k3, D{side}, F{side} joined by '*', with '^' powers.  Sides may be
    given in any order and on either side of the partition."""
    out = Poly.const(1)
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise CliError(EXIT_ARGS, f"cannot parse factor {factor!r}")
        name, e = m.group(1), int(m.group(2) or 1)
        if name in ("k2", "k3"):
            x = ctx.ring.gen(name)
        else:
            digits = name[1:].strip("{}")
            side = tuple(sorted(int(c) for c in (digits.split(",") if "," in digits else digits)))
            try:
                P = ctx.partition_of(side)
            except KeyError:
                raise CliError(EXIT_ARGS, f"{name} is not a boundary side for d={ctx.d}")
            x = ctx.D(P) if name[0] == "D" else ctx.F(side)
        out = out * x**e
    return out


def primitive(values) -> list[Fraction]:
    """Scale a rational vector to coprime integers with first nonzero entry positive."""
    vals = [Fraction(v) for v in values]
    nz = [v for v in vals if v]
    if not nz:
        return vals
    den = lcm(*(v.denominator for v in nz))
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    sign = -1 if nz[0] < 0 else 1
    return [Fraction(sign * x, g) for x in ints]


# -- commands ------------------------------------------------------------------
def cmd_present(cfg: RunConfig) -> str:
    q = load_quotient(cfg)
    rep = validate(q.pres, q.ideal)
    if rep.problems:
        raise CliError(EXIT_INVALID, "validation failed: " + "; ".join(rep.problems))
    store_quotient(cfg, q)
    return q.pres.to_json() + "\n"


def hilbert_table(cfg: RunConfig, q: GradedQuotient) -> dict:
    dim = q.dim
    top = dim + 2 if cfg.max_degree is None else cfg.max_degree
    rows = []
    for k in range(top + 1):
        sl = q.slice(k)
        row = {"degree": k, "ambient": sl.ambient_dim, "ideal_rank": sl.ideal_dim, "quotient": sl.quotient_dim}
        if cfg.invariant:
            row["invariant"] = q.invariant_echelon(k).rank
        rows.append(row)
    key = "invariant" if cfg.invariant else "quotient"
    warnings = []
    if top < dim:
        warnings.append(f"max-degree {top} is below dim {dim}; duality check is incomplete")
    dual = socle_and_duality(dim, [r[key] for r in rows])
    return {
        "n": cfg.n,
        "d": cfg.d,
        "dim": dim,
        "flags": cfg.flags.as_dict(),
        "rows": rows,
        "duality": {"checked": key, "ok": dual.ok, "problems": dual.problems},
        "warnings": warnings,
    }


def cmd_hilbert(cfg: RunConfig) -> str:
    q = load_quotient(cfg)
    table = hilbert_table(cfg, q)
    store_quotient(cfg, q)
    if cfg.fmt == "json":
        return json.dumps(table, sort_keys=True) + "\n"
    buf = io.StringIO()
    cols = list(table["rows"][0])
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in table["rows"]:
        w.writerow([r[c] for c in cols])
    buf.write(f"# duality {'ok' if table['duality']['ok'] else 'FAILED'}\n")
    for warn in table["warnings"]:
        buf.write(f"# warning: {warn}\n")
    return buf.getvalue()


def _run_one_suite(args):
    from .suites import run_suites

    name, flags = args
    return run_suites([name], flags)[0]


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    from .suites import SUITES, run_suites

    names = list(SUITES) if cfg.suite == "all" else [cfg.suite]
    for name in names:
        if name not in SUITES:
            raise CliError(EXIT_ARGS, f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_run_one_suite, [(n, cfg.flags) for n in names]))
    else:
        results = run_suites(names, cfg.flags)
    ok = all(r.ok for r in results)
    report = {
        "ok": ok,
        "rel5": cfg.rel5,
        "subsets": cfg.subsets,
        "engine": ENGINE_VERSION,
        "results": [{"name": r.name, "ok": r.ok, "seconds": r.seconds, "detail": r.detail} for r in results],
    }
    for r in results:
        print(r.line(), file=sys.stderr)
    return json.dumps(report, sort_keys=True, default=str) + "\n", (EXIT_OK if ok else EXIT_VERIFY)


def cmd_integrate(cfg: RunConfig) -> str:
    q = load_quotient(cfg)
    ctx = q.pres.kc.ctx
    words = [w for chunk in cfg.monomials for w in chunk.split()]
    if not words:
        raise CliError(EXIT_ARGS, "no monomials given")
    polys = [parse_monomial(w, ctx) for w in words]
    for w, p in zip(words, polys):
        deg = q.ring.is_homogeneous(p)
        if deg != q.dim:
            raise CliError(EXIT_DEGREE, f"{w} has degree {deg}, top degree is {q.dim}")
    try:
        ratios = q.integrate_ratio(polys)
    except TopDegreeError as e:
        raise CliError(EXIT_INVALID, str(e))
    store_quotient(cfg, q)
    out = primitive(ratios)
    if cfg.fmt == "json":
        return json.dumps({"monomials": words, "ratios": [str(x) for x in out]}) + "\n"
    return " ".join(str(x) for x in out) + "\n"


# -- argument parsing ----------------------------------------------------------
def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--rel5", choices=[m for m in REL5_MODES if m != "none"], default="derived")
    common.add_argument("--subsets", choices=SUBSET_MODES, default="strict")
    common.add_argument("--max-degree", type=int, dest="max_degree")
    common.add_argument("--invariant", action="store_true")
    common.add_argument("--format", choices=["json", "csv"], default="json", dest="fmt")
    common.add_argument("--cache-dir", dest="cache_dir")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--output", "-o", help="write to this file instead of standard output")

    p = argparse.ArgumentParser(prog="tautring", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("present", parents=[common], help="emit the presentation as JSON")
    sub.add_parser("hilbert", parents=[common], help="per-degree dimensions")
    v = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    v.add_argument("--suite", default="all")
    i = sub.add_parser("integrate", parents=[common], help="ratios of top-degree monomials")
    i.add_argument("monomials", nargs="+")
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    code = EXIT_OK
    try:
        cfg.check()
        if cfg.command == "present":
            text = cmd_present(cfg)
        elif cfg.command == "hilbert":
            text = cmd_hilbert(cfg)
        elif cfg.command == "verify":
            text, code = cmd_verify(cfg)
        else:
            text = cmd_integrate(cfg)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
