"""Command-line front end: ``gcx <group> <action> [flags]``.

Every command prints (and optionally writes) one JSON report.  Exit status is
0 when every verdict holds, 1 when one fails, 2 on usage errors and 3 when a
truncation or size guard trips.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__

log = logging.getLogger("gcx")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3
CACHE_MAGIC = "GCX1-CACHE"


class CacheError(RuntimeError):
    pass


# ---------------------------------------------------------------- basis cache

def cache_dir(explicit: str | None = None) -> Path:
    env = os.environ.get("GCX_CACHE")
    if env:
        return Path(env)
    if explicit:
        return Path(explicit)
    return Path.home() / ".cache" / "gcx"


def _cache_path(root: Path, key: tuple) -> Path:
    return Path(root) / ("_".join(str(k) for k in key) + ".gcx")


def _digest(lines: list) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()


def cache_store(root, key: tuple, lines: list) -> Path:
    path = _cache_path(root, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = [f"{CACHE_MAGIC} key={'/'.join(map(str, key))}"] + list(lines)
    path.write_text("\n".join(body + [f"sha256 {_digest(body)}"]) + "\n")
    return path


def cache_load(root, key: tuple) -> list | None:
    """Stored lines, ``None`` when missing.  Raises :class:`CacheError` on a
    checksum or header mismatch."""
    path = _cache_path(root, key)
    if not path.exists():
        return None
    text = path.read_text().splitlines()
    if len(text) < 2 or not text[-1].startswith("sha256 "):
        raise CacheError(f"{path}: missing checksum trailer")
    body, trailer = text[:-1], text[-1].split(" ", 1)[1]
    if _digest(body) != trailer:
        raise CacheError(f"{path}: checksum mismatch")
    if body[0] != f"{CACHE_MAGIC} key={'/'.join(map(str, key))}":
        raise CacheError(f"{path}: header does not match key")
    return body[1:]


def cached_basis(root, n: int, flavor: str, v: int, e: int) -> tuple:
    """Basis for a graph-complex cell via the cache; returns ``(graphs, status)``."""
    from .gc_lie import basis, preload_basis
    from .graph_core import decode_gcx1

    key = ("gc", n, flavor, v, e)
    status = "hit"
    try:
        lines = cache_load(root, key)
    except CacheError as exc:
        log.warning("%s; rebuilding", exc)
        lines, status = None, "rebuilt"
    if lines is not None:
        graphs = [decode_gcx1(line) for line in lines]
        preload_basis(n % 2, v, e, flavor, graphs)
        return graphs, status
    graphs = basis(n % 2, v, e, flavor)
    cache_store(root, key, [g.encode() for g in graphs])
    return graphs, "miss" if status == "hit" else status


# ---------------------------------------------------------------- JSON helpers

def jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x, key=repr) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "encode") and callable(x.encode) and not isinstance(x, bytes):
        try:
            return x.encode()
        except TypeError:
            pass
    return str(x)


def _vector_lines(x) -> list:
    return [f"{g.encode()} :: {c}" for g, c in sorted(x.terms.items(), key=lambda kv: kv[0].encode())]


# ---------------------------------------------------------------- commands

def cmd_gc_cohomology(a) -> tuple:
    from .gc_lie import GraphVector, cohomology_window, dimension_table, differential, window_basis

    root = cache_dir(a.cache)
    statuses = {}
    for v in range(1, a.vmax + 2):
        for e in range(a.emax + 2):
            _, st = cached_basis(root, a.n, a.flavor, v, e)
            statuses[st] = statuses.get(st, 0) + 1
    rows = cohomology_window(a.n, a.vmax, a.emax, flavor=a.flavor, max_cell=a.max_cell)
    dsq_bad = sum(1 for g in window_basis(a.n % 2, a.vmax, a.emax, a.flavor)
                  if not differential(differential(GraphVector.from_graph(g), a.flavor), a.flavor).is_zero())
    cells = [{k: r[k] for k in ("vertices", "edges", "loop_order", "degree", "dim_chain", "dim")}
             for r in rows]
    if a.csv:
        with open(a.csv, "w") as fh:
            fh.write("vertices,edges,loop_order,degree,dim\n")
            for c in cells:
                fh.write(f"{c['vertices']},{c['edges']},{c['loop_order']},{c['degree']},{c['dim']}\n")
    report = {"dimensions": dimension_table(rows), "cells": [c for c in cells if c["dim"]],
              "cache": statuses, "d_squared_violations": dsq_bad}
    return report, {"d_squared_zero": dsq_bad == 0}


def cmd_gc_loops(a) -> tuple:
    from .gc_lie import loop_class_report

    reports = [loop_class_report(a.n, r) for r in range(2, a.rmax + 1)]
    surviving = [r["r"] for r in reports if r["nonzero"] and r["closed"] and not r["exact"]]
    plus = [r for r in range(2, a.rmax + 1) if r % 4 == (2 * a.n + 1) % 4]
    minus = [r for r in range(2, a.rmax + 1) if r % 4 == (2 * a.n - 1) % 4]
    report = {"loops": reports, "surviving": surviving,
              "rule_2n_plus_1": plus, "rule_2n_minus_1": minus}
    return report, {"matches_2n_plus_1_rule": surviving == plus}


def _mc_element(a):
    from .graph_core import tadpole
    from .gc_lie import GraphVector
    from .mc_engine import BGCElement, conjectured_m
    from .char_ring import make_ring

    if a.element == "conjectured":
        return conjectured_m(a.n, a.jmax)
    if a.element == "tadpole":
        if a.n % 2:
            raise ValueError("the Euler tadpole exists for even n only")
        ring = make_ring(f"SO({a.n})")
        return BGCElement(GraphVector.from_graph(tadpole(0), ring.gen("E")), a.n, ring)
    raise ValueError(a.element)


def cmd_mc_check(a) -> tuple:
    from .graph_core import theta
    from .mc_engine import mc_report, odd_coeff_cap, z2_check

    m = _mc_element(a)
    cap = odd_coeff_cap(a.n, a.jmax) if a.n % 2 else None
    rep = mc_report(m, a.vmax, cap)
    report = {"element": _vector_lines(m.vector), "coefficient_cap": cap,
              "raw_fgc_terms": rep["raw_fgc_terms"], "gc_terms": rep["gc_terms"],
              "gc_residue": _vector_lines(rep["gc"]), "total_degrees": m.total_degrees(),
              "z2_invariant": z2_check(m)}
    if a.n % 2:
        report["theta_coefficient"] = str(m.coefficient(theta(1)))
    verdicts = {"gc_residue_zero": rep["gc_terms"] == 0}
    if a.ring == "o":
        verdicts["z2_invariant"] = report["z2_invariant"]
    return report, verdicts


def cmd_mc_gauge(a) -> tuple:
    from .mc_engine import degree_zero_sample, gauge, mc_residue, odd_coeff_cap

    m = _mc_element(a)
    cap = odd_coeff_cap(a.n, a.jmax) if a.n % 2 else None
    nu = degree_zero_sample(a.n, a.vmax, a.emax, a.seed, coeff_cap=cap)
    moved = gauge(m, nu, a.vmax, cap)
    res = mc_residue(moved, a.vmax, "fgc", cap)
    report = {"parameter": _vector_lines(nu), "result_terms": len(moved.vector),
              "total_degrees": moved.total_degrees(), "residue_terms": len(res)}
    return report, {"mc_preserved": res.is_zero(), "degree_one": moved.total_degrees() <= {1}}


def cmd_hairy_verify(a) -> tuple:
    from .gc_lie import GraphVector
    from .hairy import HairyComplex

    hc = HairyComplex(a.m, a.n, localized=a.ring != "prod")
    checks = {w: hc.check_morphism(w, a.vmax, a.emax) for w in ("iota", "p0", "p1")}
    sections = 0
    for g in hc.plain_window(a.vmax, a.emax):
        x = GraphVector.from_graph(g, hc.ring.one())
        ix = hc.iota(x)
        sections += (hc.p0(ix) != x) + (hc.p1(ix) != x)
    dsq = sum(1 for g in hc.colored_window(a.vmax, a.emax)
              if not hc.differential(hc.differential(GraphVector.from_graph(g, hc.ring.one()))).is_zero())
    report = {"morphisms": checks, "section_violations": sections, "d_squared_violations": dsq,
              "zhat0_degrees": hc.total_degrees(hc.zhat0())}
    verdicts = {f"{w}_morphism": c["differential_violations"] == 0 and c["bracket_violations"] == 0
                for w, c in checks.items()}
    verdicts["sections"] = sections == 0
    verdicts["d_squared_zero"] = dsq == 0
    if hc.localized:
        hom = hc.check_homotopy(a.vmax, a.emax)
        report["homotopy"] = hom
        verdicts["homotopy"] = hom["h0_prime_violations"] == 0 and hom["h0_violations"] == 0
    return report, verdicts


def cmd_graphs_dims(a) -> tuple:
    from .graphs_cooperad import cohen_dims, cohomology_dims

    res = cohomology_dims(a.n, a.arity, a.imax, flavor=a.flavor)
    cohen = cohen_dims(a.n, a.arity)
    # each complete k-piece sits in cohomological degree k (n - 1)
    complete = {k * (a.n - 1) for k in res["complete_k"]}
    window = {d: c for d, c in res["dims"].items() if d in complete}
    expected = {d: c for d, c in cohen.items() if d in complete}
    if a.csv:
        with open(a.csv, "w") as fh:
            fh.write("k,internal,edges,coh_degree,dim_chain,dim\n")
            for c in res["cells"]:
                fh.write(",".join(str(c[x]) for x in ("k", "internal", "edges", "coh_degree",
                                                       "dim_chain", "dim")) + "\n")
    report = {"window_dims": res["dims"], "complete_degrees": sorted(complete),
              "cohen_dims": cohen, "cells": res["cells"]}
    return report, {"matches_cohen": window == expected}


def cmd_nonformality(a) -> tuple:
    from .graphs_cooperad import nonformality_report

    rep = nonformality_report(a.n)
    return rep, {"obstruction": bool(rep["obstruction"])}


def cmd_dk_verify(a) -> tuple:
    from .dk_operad import verify

    rep = verify(a.n, a.arity, a.maxlen, framed=a.framed)
    return rep, {"operad_checks": rep["ok"]}


def cmd_forms_check(a) -> tuple:
    from .cartan_forms import check

    rep = check(a.n)
    verdicts = {"identity": rep["residual_terms"] == 0}
    if a.n % 2:
        verdicts["north_pole"] = rep["north_pole_matches"]
    return rep, verdicts


def cmd_cache_rebuild(a) -> tuple:
    root = cache_dir(a.cache)
    statuses = {}
    cells = 0
    for v in range(1, a.vmax + 1):
        for e in range(a.emax + 1):
            key = ("gc", a.n, a.flavor, v, e)
            path = _cache_path(root, key)
            if path.exists():
                path.unlink()
            _, st = cached_basis(root, a.n, a.flavor, v, e)
            statuses[st] = statuses.get(st, 0) + 1
            cells += 1
    return {"cache_dir": str(root), "cells": cells}, {"rebuilt": True}


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common(p, **defaults):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", dest="json_path", metavar="PATH")
    p.add_argument("--cache", metavar="DIR")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")
    p.add_argument("--ring", choices=("so", "o", "prod", "localized"), default=defaults.get("ring", "so"))
    return p


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="gcx", description="Exact graph-complex computations.")
    top.add_argument("--version", action="version", version=f"gcx {__version__}")
    groups = top.add_subparsers(dest="group", required=True, parser_class=_Parser)

    gc = groups.add_parser("gc").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = _common(gc.add_parser("cohomology"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vmax", type=int, default=5)
    p.add_argument("--emax", type=int, default=8)
    p.add_argument("--flavor", choices=("fgc", "gc2", "gc"), default="gc")
    p.add_argument("--max-cell", type=int, default=5000, help="largest basis cell before giving up")
    p.set_defaults(func=cmd_gc_cohomology)
    p = _common(gc.add_parser("loops"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rmax", type=int, default=7)
    p.set_defaults(func=cmd_gc_loops)

    mc = groups.add_parser("mc").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("check", cmd_mc_check), ("gauge", cmd_mc_gauge)):
        p = _common(mc.add_parser(name))
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--element", choices=("conjectured", "tadpole"), default="conjectured")
        p.add_argument("--vmax", type=int, default=4)
        p.add_argument("--emax", type=int, default=6)
        p.add_argument("--jmax", type=int, default=3 if name == "check" else 2)
        p.set_defaults(func=func)

    hairy = groups.add_parser("hairy").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = _common(hairy.add_parser("verify"), ring="localized")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vmax", type=int, default=4)
    p.add_argument("--emax", type=int, default=5)
    p.set_defaults(func=cmd_hairy_verify)

    graphs = groups.add_parser("graphs").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = _common(graphs.add_parser("dims"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--imax", type=int, default=2)
    p.add_argument("--flavor", choices=("graphs", "graphs2", "full"), default="graphs")
    p.set_defaults(func=cmd_graphs_dims)

    p = _common(groups.add_parser("nonformality"))
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=cmd_nonformality)

    dk = groups.add_parser("dk").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = _common(dk.add_parser("verify"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arity", type=int, default=4)
    p.add_argument("--maxlen", type=int, default=3)
    p.add_argument("--framed", action="store_true")
    p.set_defaults(func=cmd_dk_verify)

    forms = groups.add_parser("forms").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = _common(forms.add_parser("check"))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_forms_check)

    cache = groups.add_parser("cache").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = _common(cache.add_parser("rebuild"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vmax", type=int, default=5)
    p.add_argument("--emax", type=int, default=8)
    p.add_argument("--flavor", choices=("fgc", "gc2", "gc"), default="gc")
    p.set_defaults(func=cmd_cache_rebuild)
    return top


_CONFIG_SKIP = {"func", "json_path", "csv", "timing"}


def dispatch(argv=None) -> tuple:
    """Run one command; returns ``(exit_code, report)``."""
    from .gc_lie import WindowOverflow
    from .graphs_cooperad import ArityError
    from .mc_engine import NilpotencyError

    args = build_parser().parse_args(argv)
    config = {k: v for k, v in sorted(vars(args).items()) if k not in _CONFIG_SKIP}
    report = {"config": config, "version": __version__}
    start = time.perf_counter()
    try:
        result, verdicts = args.func(args)
    except (WindowOverflow, NilpotencyError, ArityError, RecursionError, MemoryError) as exc:
        report.update(error=f"{type(exc).__name__}: {exc}", verdicts={}, ok=False)
        code = EXIT_OVERFLOW
    except ValueError as exc:
        print(f"gcx: error: {exc}", file=sys.stderr)
        report.update(error=str(exc), verdicts={}, ok=False)
        code = EXIT_USAGE
    else:
        ok = all(verdicts.values())
        report.update(result=result, verdicts=verdicts, ok=ok)
        code = EXIT_OK if ok else EXIT_FAIL
    if args.timing:
        report["seconds"] = f"{time.perf_counter() - start:.3f}"
    text = json.dumps(jsonable(report), indent=2, sort_keys=True)
    if args.json_path:
        Path(args.json_path).write_text(text + "\n")
    print(text)
    return code, report


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="gcx: %(levelname)s: %(message)s")
    try:
        code, _ = dispatch(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return code


if __name__ == "__main__":
    sys.exit(main())
