"""Simplicial complexes on [n] with faces stored as bitmasks.

Vertices are 1-based; a face {i_1 < ... < i_k} is the integer with bits
i_1-1, ..., i_k-1 set. The void complex (no faces at all) and the
irrelevant complex {emptyset} are distinct values: the latter carries
reduced homology in degree -1, which the dual Hochster bookkeeping needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

MAX_VERTICES = 63  # subset sweeps are 2^n; bit tricks assume one machine word


class DegenerateDualError(ValueError):
    """Alexander dual of the full simplex would be the void complex."""


def verts_to_bits(verts: Iterable[int], n: int) -> int:
    mask = 0
    for v in verts:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
        bit = 1 << (v - 1)
        if mask & bit:
            raise ValueError(f"repeated vertex {v}")
        mask |= bit
    return mask


def bits_to_verts(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int):
    """All subsets of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face family on vertex set [n]."""

    n: int
    faces: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}")
        if self.faces and 0 not in self.faces:
            raise ValueError("nonvoid complex must contain the empty face")

    @property
    def kind(self) -> str:
        return "void" if not self.faces else "nonvoid"

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return max(m.bit_count() for m in self.faces) - 1

    def has_face(self, mask: int) -> bool:
        return mask in self.faces

    def faces_of_size(self, k: int) -> tuple[int, ...]:
        return tuple(sorted((m for m in self.faces if m.bit_count() == k),
                            key=bits_to_verts))

    def facets(self) -> tuple[int, ...]:
        out = [m for m in self.faces
               if not any(o != m and (m & o) == m for o in self.faces)]
        return tuple(sorted(out, key=bits_to_verts))

    def vertices_present(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1)
                     if (1 << (v - 1)) in self.faces)

    def is_full_simplex(self) -> bool:
        return len(self.faces) == (1 << self.n)

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        fac = ", ".join("{" + ",".join(map(str, bits_to_verts(m))) + "}"
                        for m in self.facets())
        return f"SimplicialComplex(n={self.n}, facets=[{fac}])"


def void_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, frozenset())


def build_complex(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Smallest downward-closed complex containing the given facets.

    Redundant (non-maximal) input faces are absorbed; an empty facet list
    yields the irrelevant complex {emptyset}.
    """
    faces = {0}
    for facet in facets:
        mask = facet if isinstance(facet, int) else verts_to_bits(facet, n)
        if mask >> n:
            raise ValueError("facet vertex out of range")
        for sub in submasks(mask):
            faces.add(sub)
    return SimplicialComplex(n, frozenset(faces))


def full_simplex(n: int) -> SimplicialComplex:
    return build_complex(n, [range(1, n + 1)]) if n else build_complex(0, [])


@dataclass(frozen=True)
class Graph:
    """Simple graph on [n]: no loops, no multi-edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u},{v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    def adjacency_masks(self) -> list[int]:
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return adj

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


def one_skeleton(k: SimplicialComplex) -> Graph:
    edges = [bits_to_verts(m) for m in k.faces if m.bit_count() == 2]
    return Graph.from_edges(k.n, edges)


def clique_complex(g: Graph) -> SimplicialComplex:
    """Flag complex of a graph: faces are exactly the cliques."""
    adj = g.adjacency_masks()
    faces = [0]

    # grow cliques vertex by vertex; candidates stay above the last added
    def grow(clique: int, candidates: int):
        faces.append(clique)
        cand = candidates
        while cand:
            bit = cand & (-cand)
            cand ^= bit
            v = bit.bit_length()
            grow(clique | bit, candidates & adj[v] & ~((bit << 1) - 1))

    for v in range(1, g.n + 1):
        bit = 1 << (v - 1)
        grow(bit, adj[v] & ~((bit << 1) - 1))
    return SimplicialComplex(g.n, frozenset(faces))


def is_flag(k: SimplicialComplex) -> bool:
    if k.is_void:
        raise ValueError("void complex")
    return clique_complex(one_skeleton(k)).faces == k.faces


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    """K* = { s subset of [n] : complement of s not in K }."""
    if k.is_void:
        raise ValueError("void complex has no Alexander dual")
    if k.is_full_simplex():
        raise DegenerateDualError(
            "Alexander dual of the full simplex is the void complex")
    full = (1 << k.n) - 1
    faces = frozenset(m for m in range(1 << k.n) if (full ^ m) not in k.faces)
    return SimplicialComplex(k.n, faces)


class RelabeledComplex(NamedTuple):
    """A complex on a smaller vertex set plus the order-preserving labels.

    vertices[i] is the original label of new vertex i+1.
    """

    complex: SimplicialComplex
    vertices: tuple[int, ...]


def _relabel(faces: Iterable[int], keep_mask: int) -> tuple[frozenset[int], tuple[int, ...]]:
    old = bits_to_verts(keep_mask)
    pos = {v: i for i, v in enumerate(old)}
    out = set()
    for m in faces:
        new = 0
        for v in bits_to_verts(m):
            new |= 1 << pos[v]
        out.add(new)
    return frozenset(out), old


def induced_subcomplex(k: SimplicialComplex, subset) -> RelabeledComplex:
    """Faces of k contained in the subset, relabeled onto 1..|subset|."""
    mask = subset if isinstance(subset, int) else verts_to_bits(subset, k.n)
    if k.is_void:
        return RelabeledComplex(void_complex(mask.bit_count()), bits_to_verts(mask))
    faces, old = _relabel((m for m in k.faces if m & ~mask == 0), mask)
    return RelabeledComplex(SimplicialComplex(mask.bit_count(), faces), old)


def link(k: SimplicialComplex, s) -> RelabeledComplex:
    """link_K(s) = { t : t disjoint from s, t union s in K }, relabeled."""
    mask = s if isinstance(s, int) else verts_to_bits(s, k.n)
    if mask not in k.faces:
        raise ValueError("link of a non-face")
    keep = ((1 << k.n) - 1) ^ mask
    faces, old = _relabel(
        (m for m in k.faces if m & mask == 0 and (m | mask) in k.faces), keep)
    return RelabeledComplex(SimplicialComplex(keep.bit_count(), faces), old)


def f_vector(k: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_d); f_{-1} = 1 counts the empty face."""
    if k.is_void:
        raise ValueError("void complex has no f-vector")
    counts = [0] * (k.dim + 2)
    for m in k.faces:
        counts[m.bit_count()] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# text formats
#
# Complex files: first line "n <N>", then one facet per line as
# space-separated vertex indices; '#' starts a comment. Blank lines are
# skipped, so the empty facet cannot be written explicitly -- a file with
# no facet lines denotes the irrelevant complex {emptyset}.
# Graph files: first line "graph <N>", then "u v" edge lines.


class FormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield idx, line


def parse_complex_text(text: str) -> SimplicialComplex:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input", 1)
    idx, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "n":
        raise FormatError("expected header 'n <N>'", idx)
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"bad vertex count {parts[1]!r}", idx) from None
    facets = []
    for idx, line in lines[1:]:
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"bad facet line {line!r}", idx) from None
        for v in verts:
            if not 1 <= v <= n:
                raise FormatError(f"vertex {v} out of range 1..{n}", idx)
        facets.append(verts)
    return build_complex(n, facets)


def parse_graph_text(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input", 1)
    idx, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "graph":
        raise FormatError("expected header 'graph <N>'", idx)
    n = int(parts[1])
    edges = []
    for idx, line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"expected edge 'u v', got {line!r}", idx)
        u, v = int(toks[0]), int(toks[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"edge ({u},{v}) out of range", idx)
        if u == v:
            raise FormatError(f"loop at {u}", idx)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_complex_text(k: SimplicialComplex, comment: str = "") -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"n {k.n}")
    for m in k.facets():
        if m:
            out.append(" ".join(map(str, bits_to_verts(m))))
    return "\n".join(out) + "\n"
