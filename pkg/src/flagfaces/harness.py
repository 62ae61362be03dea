"""Batch verification over corpora of clique complexes.

Work is split into contiguous index ranges, processed independently (in a
process pool when ``workers > 1``) and merged; the merged result is sorted
canonically so it does not depend on the worker count.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

import numpy as np

from .complexes import Graph, boundary_of_simplex, clique_fvector, fvector_of_complex
from .inequalities import DEFAULT_MAX_N, check_inequalities, default_order

EXHAUSTIVE_MAX = 8
KINDS = ("exhaustive", "random", "family")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    vertices: int
    edge_prob: Fraction = Fraction(1, 2)
    trials: int = 0
    seed: int = 0
    max_n: int = DEFAULT_MAX_N
    order: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise CorpusError(f"unknown corpus kind {self.kind!r}")
        if self.kind == "exhaustive" and self.vertices > EXHAUSTIVE_MAX:
            raise CorpusError("exhaustive bound exceeded")
        if self.kind == "family" and self.vertices < 2:
            raise CorpusError("family needs at least 2 vertices")
        if not 0 <= self.edge_prob <= 1:
            raise CorpusError("edge probability must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise CorpusError("seed must be a 64-bit unsigned integer")
        if self.vertices < 0 or self.trials < 0 or self.max_n < 1:
            raise CorpusError("vertices, trials and max_n must be non-negative (max_n positive)")

    @property
    def size(self) -> int:
        if self.kind == "exhaustive":
            return 1 << (self.vertices * (self.vertices - 1) // 2)
        if self.kind == "random":
            return self.trials
        return 1

    def resolved_order(self) -> int:
        return default_order(self.max_n) if self.order is None else self.order

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": self.vertices,
            "edge_prob": f"{self.edge_prob.numerator}/{self.edge_prob.denominator}",
            "trials": self.trials,
            "seed": self.seed,
            "max_n": self.max_n,
            "order": self.resolved_order(),
        }


@dataclass
class CorpusResult:
    spec: CorpusSpec
    total: int = 0
    violations: list[tuple[str, int, int]] = field(default_factory=list)
    route_disagreements: int = 0
    non_integral: int = 0
    max_v_seen: dict[int, Fraction | int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.route_disagreements and not self.non_integral

    def merge(self, other: CorpusResult) -> None:
        self.total += other.total
        self.violations.extend(other.violations)
        self.route_disagreements += other.route_disagreements
        self.non_integral += other.non_integral
        for n, v in other.max_v_seen.items():
            if n not in self.max_v_seen or v > self.max_v_seen[n]:
                self.max_v_seen[n] = v

    def to_dict(self) -> dict:
        # wall time is left out so identical specs serialise identically
        return {
            "spec": self.spec.to_dict(),
            "total": self.total,
            "violations": [
                {"graph": enc, "n": n, "lhs": str(lhs)} for enc, n, lhs in self.violations
            ],
            "route_disagreements": self.route_disagreements,
            "non_integral": self.non_integral,
            "max_v_seen": {str(n): _rat(v) for n, v in sorted(self.max_v_seen.items())},
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def violation_lines(self) -> Iterator[str]:
        for enc, n, lhs in self.violations:
            yield f"{enc} n={n} lhs={lhs}"


def _rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def enumerate_labeled_graphs(m: int) -> Iterator[Graph]:
    """All ``2^C(m,2)`` labelled graphs on ``m`` vertices in edge-mask order."""
    if m > EXHAUSTIVE_MAX:
        raise CorpusError("exhaustive bound exceeded")
    for mask in range(1 << (m * (m - 1) // 2)):
        yield Graph.from_edge_mask(m, mask)


def random_graph(m: int, p, seed: int, index: int) -> Graph:
    """Erdős–Rényi ``G(m, p)`` from a Philox stream keyed by ``(seed, index)``.

    Each vertex pair consumes raw 64-bit words until one falls below the
    largest multiple of ``p``'s denominator, so the edge probability is
    exactly ``p``. Raw Philox output is stable across platforms and numpy
    releases.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise CorpusError("edge probability must lie in [0, 1]")
    bitgen = np.random.Philox(key=(index << 64) | seed)
    q = p.denominator
    limit = (1 << 64) - (1 << 64) % q
    edges = []
    for u, v in combinations(range(m), 2):
        while True:
            word = int(bitgen.random_raw())
            if word < limit:
                break
        if word % q < p.numerator:
            edges.append((u, v))
    return Graph.from_edges(m, edges)


def _items(spec: CorpusSpec, start: int, stop: int):
    if spec.kind == "exhaustive":
        for mask in range(start, stop):
            g = Graph.from_edge_mask(spec.vertices, mask)
            yield g.encode(), clique_fvector(g)
    elif spec.kind == "random":
        for i in range(start, stop):
            g = random_graph(spec.vertices, spec.edge_prob, spec.seed, i)
            yield g.encode(), clique_fvector(g)
    else:
        c = boundary_of_simplex(spec.vertices)
        yield f"boundary_of_simplex({spec.vertices})", fvector_of_complex(c)


def _run_range(spec: CorpusSpec, start: int, stop: int) -> CorpusResult:
    out = CorpusResult(spec)
    order = spec.resolved_order()
    for enc, f in _items(spec, start, stop):
        report = check_inequalities(f, spec.max_n, order)
        out.total += 1
        if not report.routes_agree:
            out.route_disagreements += 1
        for rec in report.records:
            if not rec.holds:
                out.violations.append((enc, rec.n, rec.lhs))
            if not rec.v_integral:
                out.non_integral += 1
            best = out.max_v_seen.get(rec.n)
            if best is None or rec.v > best:
                out.max_v_seen[rec.n] = rec.v
    return out


def _chunks(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = -(-total // pieces) if total else 1
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def _sort_key(item):
    enc, n, _ = item
    m, _, h = enc.partition(":")
    return (int(m) if m.isdigit() else -1, int(h, 16) if h else 0, enc, n)


def run_corpus(spec: CorpusSpec, workers: int | None = 1) -> CorpusResult:
    workers = workers or os.cpu_count() or 1
    t0 = time.perf_counter()
    result = CorpusResult(spec)
    ranges = _chunks(spec.size, workers * 4 if workers > 1 else 1)
    if workers == 1 or len(ranges) <= 1:
        parts = [_run_range(spec, a, b) for a, b in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_range, [spec] * len(ranges), *zip(*ranges)))
    for part in parts:
        result.merge(part)
    result.violations.sort(key=_sort_key)
    result.elapsed = time.perf_counter() - t0
    return result


def scan_boundary_violation(k: int, max_n: int | None = None) -> int | None:
    """Smallest ``N <= max_n`` (default ``k``) at which ``boundary_of_simplex(k)`` fails, or None."""
    max_n = k if max_n is None else max_n
    report = check_inequalities(fvector_of_complex(boundary_of_simplex(k)), max_n)
    bad = report.violations()
    return bad[0].n if bad else None
