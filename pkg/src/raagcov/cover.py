"""Linearized cellular chain/cochain complexes of abelian covers.

For a complex K on [n] and a coordinate map f: [n] -> [m], the cover's
cellular chains are faces of K tensored with R = k[s_1..s_m]:

  homological model   (faces x monomials, d(e_I ox g) drops a vertex i,
                       multiplies by s_{f(i)}, signs as in the simplicial
                       boundary); degree bookkeeping: |I| drops 1, poly
                       degree rises 1.
  compact support     (same basis, differential = left multiplication by
                       sum of e_i ox s_{f(i)}); |I| and degree both rise 1.

Localization is exact and preserves dimension, so every computation stays
in the polynomial grading: each Hilbert-function value is the exact rank
defect of finite slice matrices. Both differentials are homogeneous for
the Z^m-multigrading induced by f, so slice matrices split into tiny
blocks — that decomposition is what makes degree-10 windows cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .complexes import SimplicialComplex, bits_to_verts
from .exterior import CoordinateMap, HilbertFunction
from .linalg import sum_block_ranks


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the given total degree, lexicographic order."""
    if degree < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(num_vars), degree):
        exp = [0] * num_vars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return tuple(sorted(out))


def _bump(alpha: tuple[int, ...], var: int) -> tuple[int, ...]:
    return alpha[:var] + (alpha[var] + 1,) + alpha[var + 1:]


class CoverComplex:
    """Rank cache for the chain and compact-support cochain slices."""

    def __init__(self, k: SimplicialComplex, f: CoordinateMap, fld):
        if k.is_void:
            raise ValueError("void complex")
        if f.n != k.n:
            raise ValueError("coordinate map domain must match vertex count")
        self.k = k
        self.f = f
        self.field = fld
        self.top = k.dim + 1
        self._down: dict[tuple[int, int], int] = {}
        self._up: dict[tuple[int, int], int] = {}

    def chain_dim(self, p: int, j: int) -> int:
        if j < 0 or not 0 <= p <= self.top:
            return 0
        return len(self.k.faces_of_size(p)) * len(monomials(self.f.m, j))

    def _fiber_weight(self, face: int) -> tuple[int, ...]:
        w = [0] * self.f.m
        for v in bits_to_verts(face):
            w[self.f(v) - 1] += 1
        return tuple(w)

    def rank_down(self, p: int, j: int) -> int:
        """Rank of the boundary slice (p, j) -> (p-1, j+1)."""
        if j < 0 or p < 1 or p > self.top:
            return 0
        key = (p, j)
        if key not in self._down:
            one = self.field.one()
            neg = self.field.neg(one)
            cols = []
            for face in self.k.faces_of_size(p):
                weight = self._fiber_weight(face)
                for alpha in monomials(self.f.m, j):
                    mdkey = tuple(a + w for a, w in zip(alpha, weight))
                    col = {}
                    for pos, v in enumerate(bits_to_verts(face)):
                        target = (face ^ (1 << (v - 1)), _bump(alpha, self.f(v) - 1))
                        coeff = neg if pos % 2 else one
                        col[target] = self.field.add(col.get(target, self.field.zero()), coeff)
                    col = {t: c for t, c in col.items() if c}
                    cols.append((mdkey, col))
            self._down[key] = sum_block_ranks(self.field, cols)
        return self._down[key]

    def rank_up(self, q: int, j: int) -> int:
        """Rank of the compact-support slice (q, j) -> (q+1, j+1)."""
        if j < 0 or q < 0 or q + 1 > self.top:
            return 0
        key = (q, j)
        if key not in self._up:
            one = self.field.one()
            neg = self.field.neg(one)
            faces = self.k.faces
            cols = []
            for face in self.k.faces_of_size(q):
                weight = self._fiber_weight(face)
                for alpha in monomials(self.f.m, j):
                    mdkey = tuple(a - w for a, w in zip(alpha, weight))
                    col = {}
                    for v in range(1, self.k.n + 1):
                        bit = 1 << (v - 1)
                        if face & bit or (face | bit) not in faces:
                            continue
                        sign = one if (face & (bit - 1)).bit_count() % 2 == 0 else neg
                        target = (face | bit, _bump(alpha, self.f(v) - 1))
                        col[target] = self.field.add(col.get(target, self.field.zero()), sign)
                    col = {t: c for t, c in col.items() if c}
                    if col:
                        cols.append((mdkey, col))
            self._up[key] = sum_block_ranks(self.field, cols)
        return self._up[key]

    def homology_slice(self, q: int, j: int) -> int:
        return self.chain_dim(q, j) - self.rank_down(q, j) - self.rank_down(q + 1, j - 1)

    def compact_slice(self, q: int, j: int) -> int:
        return self.chain_dim(q, j) - self.rank_up(q, j) - self.rank_up(q - 1, j - 1)


def cover_homology(k: SimplicialComplex, f: CoordinateMap, fld, q: int,
                   j_max: int, session: CoverComplex | None = None) -> HilbertFunction:
    """Hilbert function j -> dim H_q of the cover chain complex, j <= j_max."""
    if q < 0:
        raise ValueError("homological degree must be nonnegative")
    if j_max < 0:
        raise ValueError("degree bound must be nonnegative")
    cc = session if session is not None else CoverComplex(k, f, fld)
    return HilbertFunction(tuple(cc.homology_slice(q, j) for j in range(j_max + 1)))


def compact_support_cohomology(k: SimplicialComplex, f: CoordinateMap, fld, q: int,
                               j_max: int, session: CoverComplex | None = None) -> HilbertFunction:
    """Hilbert function j -> dim H^q_c of the cover, j <= j_max."""
    if q < 0:
        raise ValueError("cohomological degree must be nonnegative")
    if j_max < 0:
        raise ValueError("degree bound must be nonnegative")
    cc = session if session is not None else CoverComplex(k, f, fld)
    return HilbertFunction(tuple(cc.compact_slice(q, j) for j in range(j_max + 1)))


@dataclass(frozen=True)
class GrowthEstimate:
    """Polynomial growth degree of cumulative Hilbert values.

    kind is 'zero' (the module vanishes on the window), 'degree' (the
    finite differences of the cumulative sums stabilized at zero), or
    'inconclusive' (window too short; never a silent guess).
    """

    kind: str
    degree: int | None = None

    @property
    def conclusive(self) -> bool:
        return self.kind != "inconclusive"


def growth_degree(h: HilbertFunction, min_zero_tail: int = 2) -> GrowthEstimate:
    """Least d with the (d+1)-st difference of cumulative sums ending in zeros.

    A trailing run of at least min_zero_tail zeros certifies the degree;
    running out of window first yields the inconclusive flag.
    """
    vals = list(h.window())
    if not any(vals):
        return GrowthEstimate("zero")
    seq = []
    acc = 0
    for v in vals:
        acc += v
        seq.append(acc)
    degree = 0
    while True:
        seq = [b - a for a, b in zip(seq, seq[1:])]
        if len(seq) < min_zero_tail:
            return GrowthEstimate("inconclusive")
        tail = 0
        for v in reversed(seq):
            if v != 0:
                break
            tail += 1
        if tail >= min_zero_tail:
            return GrowthEstimate("degree", degree)
        degree += 1
