"""Reduced simplicial (co)homology of finite complexes.

All homology is reduced (augmented chain complex), so the irrelevant
complex {emptyset} has H~_{-1} = k and every nonvoid complex with a vertex
has H~_{-1} = 0. This degree -1 convention is load-bearing: the dual form
of Hochster's formula counts it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, bits_to_verts
from .linalg import QQ, ZZ, ExactMatrix, IntegerRing, SmithForm, rank, smith_normal_form


@dataclass(frozen=True)
class HomologyProfile:
    """degree -> (free rank, torsion factors); torsion empty over a field."""

    ring_label: str
    entries: dict = field(default_factory=dict)

    def rank(self, q: int) -> int:
        return self.entries.get(q, (0, ()))[0]

    def torsion(self, q: int) -> tuple[int, ...]:
        return self.entries.get(q, (0, ()))[1]

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(q for q, (r, t) in self.entries.items() if r or t))

    def is_zero(self) -> bool:
        return not self.nonzero_degrees()

    def total_rank(self) -> int:
        return sum(r for r, _ in self.entries.values())


def boundary_matrix(k: SimplicialComplex, p: int, ring=QQ) -> ExactMatrix:
    """Matrix of the boundary from p-faces to (p-1)-faces.

    Faces are ordered lexicographically by vertex tuple; the sign on
    dropping vertex i is (-1)^(number of preceding elements). p = 0 is the
    augmentation onto the empty face.
    """
    if k.is_void:
        raise ValueError("void complex has no boundary matrices")
    if not -1 <= p <= k.dim + 1:
        raise ValueError(f"degree {p} out of range -1..{k.dim + 1}")
    if p == -1:
        return ExactMatrix(ring, 0, len(k.faces_of_size(0)))
    cols = k.faces_of_size(p + 1)
    rows = k.faces_of_size(p)
    row_index = {m: i for i, m in enumerate(rows)}
    entries = {}
    for j, m in enumerate(cols):
        for pos, v in enumerate(bits_to_verts(m)):
            entries[(row_index[m ^ (1 << (v - 1))], j)] = -1 if pos % 2 else 1
    return ExactMatrix(ring, len(rows), len(cols), entries)


def reduced_homology(k: SimplicialComplex, ring=QQ) -> HomologyProfile:
    """Reduced homology profile over a field or over Z (with torsion)."""
    if k.is_void:
        return HomologyProfile(ring.label, {})
    d = k.dim
    counts = {q: len(k.faces_of_size(q + 1)) for q in range(-1, d + 1)}
    integral = isinstance(ring, IntegerRing)
    ranks = {}
    snfs: dict[int, SmithForm] = {}
    for p in range(0, d + 1):
        mat = boundary_matrix(k, p, ZZ if integral else ring)
        if integral:
            snfs[p] = smith_normal_form(mat)
            ranks[p] = snfs[p].rank
        else:
            ranks[p] = rank(mat)
    ranks[-1] = 0
    ranks[d + 1] = 0
    entries = {}
    for q in range(-1, d + 1):
        free = counts[q] - ranks[q] - ranks[q + 1]
        torsion = snfs[q + 1].torsion if integral and (q + 1) in snfs else ()
        if free or torsion:
            entries[q] = (free, tuple(torsion))
    return HomologyProfile(ring.label, entries)


def reduced_cohomology_z(k: SimplicialComplex) -> HomologyProfile:
    """Integral reduced cohomology via the transposed (cochain) route.

    Exists as a self-check: universal coefficients force
    rank H^q = rank H~_q and torsion H^q = torsion H~_(q-1).
    """
    if k.is_void:
        return HomologyProfile("z", {})
    d = k.dim
    counts = {q: len(k.faces_of_size(q + 1)) for q in range(-1, d + 1)}
    snfs = {p: smith_normal_form(boundary_matrix(k, p, ZZ).transpose())
            for p in range(0, d + 1)}
    ranks = {p: snfs[p].rank for p in snfs}
    ranks[-1] = 0
    ranks[d + 1] = 0
    entries = {}
    for q in range(-1, d + 1):
        free = counts[q] - ranks[q] - ranks[q + 1]
        torsion = snfs[q].torsion if q in snfs else ()
        if free or torsion:
            entries[q] = (free, tuple(torsion))
    return HomologyProfile("z", entries)


def euler_characteristic_reduced(k: SimplicialComplex) -> int:
    """Alternating face-count sum including the empty face (q = -1 term)."""
    if k.is_void:
        return 0
    # face of size s sits in degree q = s - 1
    return sum((-1) ** (m.bit_count() - 1) for m in k.faces)
