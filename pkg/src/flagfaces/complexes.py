"""Graphs, simplicial complexes, clique counts and flagness.

Vertex subsets are bitmasks (Python ints): bit ``i`` set means vertex ``i``
is present.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from . import kernels


class ParseError(ValueError):
    """Malformed input file; ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    m: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.m:
            raise ValueError("adjacency length must equal vertex count")
        for u, nb in enumerate(self.adj):
            if nb >> self.m:
                raise ValueError(f"vertex {u} has neighbours outside 0..{self.m - 1}")
            if nb >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in _bits(nb):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * m
        for u, v in edges:
            if not (0 <= u < m and 0 <= v < m) or u == v:
                raise ValueError(f"bad edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(m, tuple(adj))

    @classmethod
    def complete(cls, m: int) -> Graph:
        full = (1 << m) - 1
        return cls(m, tuple(full & ~(1 << v) for v in range(m)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.m) for v in _bits(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_mask(self) -> int:
        """Bit ``j`` marks the ``j``-th pair in lexicographic ``(u, v)`` order."""
        mask = 0
        for j, (u, v) in enumerate(combinations(range(self.m), 2)):
            if self.adj[u] >> v & 1:
                mask |= 1 << j
        return mask

    @classmethod
    def from_edge_mask(cls, m: int, mask: int) -> Graph:
        adj = [0] * m
        for j, (u, v) in enumerate(combinations(range(m), 2)):
            if mask >> j & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls(m, tuple(adj))

    def encode(self) -> str:
        """Compact ``m:hexmask`` form used in reports."""
        return f"{self.m}:{self.edge_mask():x}"

    @classmethod
    def decode(cls, s: str) -> Graph:
        m, _, h = s.partition(":")
        return cls.from_edge_mask(int(m), int(h, 16))


@dataclass(frozen=True)
class Complex:
    """Simplicial complex stored by its facets (sorted vertex tuples)."""

    m: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(sorted(tuple(sorted(f)) for f in self.facets)))
        masks = [_mask(f) for f in self.facets]
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate facet")
        for i, a in enumerate(masks):
            if a >> self.m:
                raise ValueError(f"facet {self.facets[i]} has vertices outside 0..{self.m - 1}")
            for j, b in enumerate(masks):
                if i != j and a & b == a:
                    raise ValueError(f"facet {self.facets[i]} is contained in {self.facets[j]}")
        covered = 0
        for a in masks:
            covered |= a
        if covered != (1 << self.m) - 1:
            raise ValueError("ghost vertex: some vertex lies in no facet")

    @classmethod
    def from_faces(cls, m: int, faces: Iterable[Iterable[int]]) -> Complex:
        """Build from any generating faces; dominated ones are dropped."""
        masks = sorted({_mask(f) for f in faces}, key=lambda x: -x.bit_count())
        kept: list[int] = []
        for a in masks:
            if not any(a & b == a for b in kept):
                kept.append(a)
        facets = sorted(tuple(_bits(a)) for a in kept)
        return cls(m, tuple(facets))

    def facet_masks(self) -> list[int]:
        return [_mask(f) for f in self.facets]

    def contains(self, face: int | Iterable[int]) -> bool:
        s = face if isinstance(face, int) else _mask(face)
        return any(s & f == s for f in self.facet_masks())

    def one_skeleton(self) -> Graph:
        adj = [0] * self.m
        for f in self.facets:
            for u, v in combinations(f, 2):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return Graph(self.m, tuple(adj))

    def faces_of_size(self, k: int) -> set[int]:
        out: set[int] = set()
        for f in self.facets:
            if len(f) >= k:
                out.update(_mask(c) for c in combinations(f, k))
        return out


def clique_counts(g: Graph) -> list[int]:
    """Number of ``k``-cliques for ``k = 0..m`` (``k = 0`` is the empty clique)."""
    return list(kernels.count_cliques(list(g.adj), g.m))


def clique_fvector(g: Graph) -> tuple[int, ...]:
    """f-vector of the clique complex of ``g``."""
    counts = clique_counts(g)[1:]
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def fvector_of_complex(c: Complex) -> tuple[int, ...]:
    dim = max((len(f) for f in c.facets), default=0)
    return tuple(len(c.faces_of_size(k)) for k in range(1, dim + 1))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron–Kerbosch with Tomita pivoting over bitsets."""
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(tuple(_bits(r)))
            return
        pu = max(_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in _bits(p & ~adj[pu]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.m:
        expand(0, (1 << g.m) - 1, 0)
    return sorted(out)


def clique_complex(g: Graph) -> Complex:
    return Complex(g.m, tuple(maximal_cliques(g)))


def minimal_nonfaces(c: Complex, max_size: int) -> set[tuple[int, ...]]:
    """Non-faces of size ``<= max_size`` all of whose proper subsets are faces.

    These generate the Stanley–Reisner ideal of ``c``.
    """
    if max_size > c.m:
        raise ValueError("max_size exceeds vertex count")
    facets = c.facet_masks()

    def is_face(s: int) -> bool:
        return any(s & f == s for f in facets)

    found: set[tuple[int, ...]] = set()
    for k in range(1, max_size + 1):
        # a minimal non-face of size k extends a (k-1)-face by a larger vertex
        bases = c.faces_of_size(k - 1) if k > 1 else {0}
        for tau in bases:
            top = tau.bit_length()
            for x in range(top, c.m):
                sigma = tau | 1 << x
                if is_face(sigma):
                    continue
                if all(is_face(sigma & ~(1 << v)) for v in _bits(sigma)):
                    found.add(tuple(_bits(sigma)))
    return found


def is_flag_by_nonfaces(c: Complex) -> bool:
    """Every minimal non-face has exactly two vertices."""
    return all(len(s) == 2 for s in minimal_nonfaces(c, c.m))


def is_flag_by_cliques(c: Complex) -> bool:
    """The complex equals the clique complex of its own 1-skeleton."""
    return set(maximal_cliques(c.one_skeleton())) == set(c.facets)


def is_flag(c: Complex) -> bool:
    a = is_flag_by_cliques(c)
    if a != is_flag_by_nonfaces(c):
        raise AssertionError("flagness characterisations disagree")
    return a


def boundary_of_simplex(k: int) -> Complex:
    if k < 2:
        raise ValueError("boundary_of_simplex needs k >= 2")
    return Complex(k, tuple(combinations(range(k), k - 1)))


# ---------------------------------------------------------------- file formats


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _parse_header(lines) -> int:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError("missing vertex count") from None
    parts = line.split()
    if len(parts) != 1:
        raise ParseError("first data line must be the vertex count", lineno)
    m = _parse_int(parts[0], lineno)
    if m < 0:
        raise ParseError("vertex count must be non-negative", lineno)
    return m


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    m = _parse_header(lines)
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v'", lineno)
        u, v = (_parse_int(p, lineno) for p in parts)
        if not 0 <= u < v < m:
            raise ParseError(f"edge ({u}, {v}) violates 0 <= u < v < {m}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
    return Graph.from_edges(m, seen)


def parse_facet_list(text: str) -> Complex:
    lines = _data_lines(text)
    m = _parse_header(lines)
    facets: list[tuple[int, ...]] = []
    where: list[int] = []
    for lineno, line in lines:
        verts = [_parse_int(p, lineno) for p in line.split()]
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise ParseError("facet vertices must be strictly increasing", lineno)
        if verts[0] < 0 or verts[-1] >= m:
            raise ParseError(f"vertex outside [0, {m})", lineno)
        facets.append(tuple(verts))
        where.append(lineno)
    masks = [_mask(f) for f in facets]
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j and a & b == a:
                raise ParseError(f"facet {facets[i]} is dominated by line {where[j]}", where[i])
    try:
        return Complex(m, tuple(facets))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [str(g.m)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_fvector(s: str) -> tuple[int, ...]:
    """Inline ``"f0,f1,..."``; the empty string is the empty complex."""
    s = s.strip()
    if not s:
        return ()
    try:
        f = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ParseError(f"malformed f-vector {s!r}") from None
    if any(x < 0 for x in f):
        raise ParseError("f-vector entries must be non-negative")
    return f
