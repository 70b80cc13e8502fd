"""Exterior Stanley-Reisner rings and multiplication-by-a cohomology.

k<K> = E/J_K has one basis monomial e_I per face I of K, graded by |I|.
A degree-1 element a turns k<K> into a two-term-periodic complex (a^2 = 0);
its per-degree cohomology detects singular/regular elements, and summing
link homology over the support of a recovers the same numbers. Regular
sequences are tested on explicitly computed quotients, degree by degree,
with exact ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import (
    SimplicialComplex,
    bits_to_verts,
    full_simplex,
    induced_subcomplex,
    verts_to_bits,
)
from .homology import reduced_homology
from .linalg import EchelonReducer


@dataclass(frozen=True)
class CoordinateMap:
    """A surjection f: [n] -> [m]; images[i-1] = f(i)."""

    images: tuple[int, ...]
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("target must have at least one element")
        if any(not 1 <= v <= self.m for v in self.images):
            raise ValueError("image out of range")
        if set(self.images) != set(range(1, self.m + 1)):
            raise ValueError(f"map onto [{self.m}] is not surjective")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def fibers(self) -> list[tuple[int, ...]]:
        return [tuple(i for i in range(1, self.n + 1) if self.images[i - 1] == j)
                for j in range(1, self.m + 1)]

    @classmethod
    def identity(cls, n: int) -> "CoordinateMap":
        return cls(tuple(range(1, n + 1)), n)

    @classmethod
    def constant(cls, n: int) -> "CoordinateMap":
        """The Bestvina-Brady direction: every generator maps to 1."""
        return cls((1,) * n, 1)

    @classmethod
    def from_string(cls, text: str) -> "CoordinateMap":
        images = tuple(int(tok) for tok in text.split(","))
        return cls(images, max(images))


def _shuffle_sign(a: int, b: int) -> int:
    """Sign of sorting e_a * e_b into e_{a|b}: parity of inversions."""
    sign = 1
    rest = a
    while rest:
        bit = rest & (-rest)
        rest ^= bit
        # elements of b strictly below this element of a
        if (b & (bit - 1)).bit_count() % 2:
            sign = -sign
    return sign


class ExteriorSRRing:
    """Exterior Stanley-Reisner ring of a complex over a field."""

    def __init__(self, komplex: SimplicialComplex, fld):
        if komplex.is_void:
            raise ValueError("void complex")
        self.complex = komplex
        self.field = fld
        self.n = komplex.n
        self.top = komplex.dim + 1
        self._basis = {d: komplex.faces_of_size(d) for d in range(self.top + 1)}
        self._index = {d: {m: i for i, m in enumerate(b)}
                       for d, b in self._basis.items()}

    def basis(self, degree: int) -> tuple[int, ...]:
        return self._basis.get(degree, ())

    def dim_of_degree(self, degree: int) -> int:
        return len(self.basis(degree))

    def hilbert_function(self) -> tuple[int, ...]:
        return tuple(len(self._basis[d]) for d in range(self.top + 1))

    def element(self, coeffs: dict) -> "ExteriorElement":
        return ExteriorElement(self, {
            m: self.field.element(v) for m, v in coeffs.items() if v
        })

    def zero(self) -> "ExteriorElement":
        return ExteriorElement(self, {})

    def one(self) -> "ExteriorElement":
        return self.element({0: 1})

    def generator(self, i: int) -> "ExteriorElement":
        mask = verts_to_bits([i], self.n)
        return self.element({mask: 1})

    def linear_form(self, coeffs_by_vertex: dict) -> "ExteriorElement":
        """sum over vertices of coeff * e_i, nonfaces dropped."""
        out = {}
        for i, c in coeffs_by_vertex.items():
            mask = verts_to_bits([i], self.n)
            if self.complex.has_face(mask) and c:
                out[mask] = c
        return self.element(out)

    def __eq__(self, other):
        return (isinstance(other, ExteriorSRRing)
                and self.complex == other.complex
                and self.field.label == other.field.label)


@dataclass(frozen=True)
class ExteriorElement:
    """Sparse element of an exterior Stanley-Reisner ring."""

    ring: ExteriorSRRing
    coeffs: dict

    def degree(self) -> int | None:
        """Common degree if homogeneous, else None; zero element gives None."""
        degs = {m.bit_count() for m in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        if self.ring != other.ring:
            raise ValueError("mismatched rings")
        f = self.ring.field
        out = dict(self.coeffs)
        for m, v in other.coeffs.items():
            nv = f.add(out.get(m, f.zero()), v)
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
        return ExteriorElement(self.ring, out)

    def scale(self, c) -> "ExteriorElement":
        f = self.ring.field
        c = f.element(c)
        if not c:
            return self.ring.zero()
        return ExteriorElement(self.ring, {m: f.mul(v, c) for m, v in self.coeffs.items()})


def multiply(u: ExteriorElement, v: ExteriorElement) -> ExteriorElement:
    """Graded-commutative product; nonface monomials annihilate."""
    if u.ring != v.ring:
        raise ValueError("mismatched rings")
    ring = u.ring
    f = ring.field
    out: dict[int, object] = {}
    faces = ring.complex.faces
    for m1, c1 in u.coeffs.items():
        for m2, c2 in v.coeffs.items():
            if m1 & m2:
                continue
            m = m1 | m2
            if m not in faces:
                continue
            c = f.mul(c1, c2)
            if _shuffle_sign(m1, m2) < 0:
                c = f.neg(c)
            nv = f.add(out.get(m, f.zero()), c)
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
    return ExteriorElement(ring, out)


def exterior_sr_ring(komplex: SimplicialComplex, fld) -> ExteriorSRRing:
    return ExteriorSRRing(komplex, fld)


@dataclass(frozen=True)
class CoordinateIdealData:
    """Fiber sums h_j = sum of e_i over f(i) = j, and their product.

    The product generates the annihilator of the ideal (h_1, ..., h_m) in
    the full exterior algebra; it is the element whose principal ideal the
    cover chain complexes resolve against.
    """

    ring: ExteriorSRRing  # full exterior algebra on n generators
    fiber_sums: tuple[ExteriorElement, ...]
    annihilator_generator: ExteriorElement


def coordinate_ideal_data(f: CoordinateMap, fld) -> CoordinateIdealData:
    ring = ExteriorSRRing(full_simplex(f.n), fld)
    sums = []
    for fiber in f.fibers():
        sums.append(ring.linear_form({i: 1 for i in fiber}))
    prod = ring.one()
    for h in sums:
        prod = multiply(prod, h)
    if prod.is_zero():
        raise AssertionError("product of fiber sums vanished; fibers overlap?")
    return CoordinateIdealData(ring, tuple(sums), prod)


@dataclass(frozen=True)
class HilbertFunction:
    """Nonnegative dimensions indexed by degree 0, 1, ..., len(dims)-1."""

    dims: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.dims):
            return self.dims[j]
        raise IndexError(f"degree {j} beyond computed window")

    def __len__(self) -> int:
        return len(self.dims)

    def window(self) -> tuple[int, ...]:
        return self.dims

    def is_zero(self) -> bool:
        return not any(self.dims)

    def first_nonzero(self) -> int | None:
        for j, v in enumerate(self.dims):
            if v:
                return j
        return None

    def total(self) -> int:
        return sum(self.dims)


def aligned_compare(a: HilbertFunction, b: HilbertFunction):
    """Compare two Hilbert windows up to a constant degree shift.

    Aligns the first nonzero degrees and compares over the overlapping
    window. Returns (equal, shift b_start - a_start, first_discrepancy,
    overlap_length); two zero windows compare equal with shift None.
    """
    ja, jb = a.first_nonzero(), b.first_nonzero()
    if ja is None and jb is None:
        return True, None, None, min(len(a), len(b))
    if ja is None or jb is None:
        return False, None, ja if jb is None else jb, 0
    shift = jb - ja
    overlap = min(len(a) - ja, len(b) - jb)
    for t in range(overlap):
        if a[ja + t] != b[jb + t]:
            return False, shift, ja + t, overlap
    return True, shift, None, overlap


def _mult_matrix_columns(ring: ExteriorSRRing, a: ExteriorElement, degree: int):
    """Columns of multiplication by a from degree to degree+1 pieces."""
    for mask in ring.basis(degree):
        image = multiply(a, ExteriorElement(ring, {mask: ring.field.one()}))
        yield {m: v for m, v in image.coeffs.items()}


def _complex_cohomology_dims(ring: ExteriorSRRing, a: ExteriorElement) -> list[int]:
    """dim H^d of (ring, *a) for d = 0..top, via exact ranks."""
    ranks = {}
    for d in range(ring.top + 1):
        red = EchelonReducer(ring.field)
        for col in _mult_matrix_columns(ring, a, d):
            red.add(col)
        ranks[d] = red.rank
    ranks[-1] = 0
    return [ring.dim_of_degree(d) - ranks[d] - ranks[d - 1]
            for d in range(ring.top + 1)]


def mult_cohomology(ring: ExteriorSRRing, a: ExteriorElement) -> HilbertFunction:
    """Cohomology dimensions of (E/J, multiplication by degree-1 a)."""
    if a.ring != ring:
        raise ValueError("element from a different ring")
    if a.degree() != 1:
        raise ValueError("differential must be homogeneous of degree 1")
    return HilbertFunction(tuple(_complex_cohomology_dims(ring, a)))


def link_formula_cohomology(k: SimplicialComplex, supp: Iterable[int], fld) -> HilbertFunction:
    """Link-homology evaluation of the multiplication complex cohomology.

    H^q = sum over faces s disjoint from the support of
    dim H~^{q - |s| - 1} of { t within supp : t union s in K }.
    Depends on the support only, never on the coefficient values.
    """
    supp_mask = supp if isinstance(supp, int) else verts_to_bits(supp, k.n)
    if supp_mask == 0:
        raise ValueError("support must be nonempty")
    top = k.dim + 1
    dims = [0] * (top + 1)
    for sigma in sorted(k.faces):
        if sigma & supp_mask:
            continue
        local_faces = frozenset(
            t for t in k.faces if t & ~supp_mask == 0 and (t | sigma) in k.faces)
        local = SimplicialComplex(k.n, local_faces)
        sub = induced_subcomplex(local, supp_mask).complex
        profile = reduced_homology(sub, fld)
        s = sigma.bit_count()
        for q in range(top + 1):
            dims[q] += profile.rank(q - s - 1)
    return HilbertFunction(tuple(dims))


def _ideal_reducers(ring: ExteriorSRRing, gens: list[ExteriorElement]):
    """Per-degree echelon bases of the ideal generated by degree-1 gens."""
    reducers = {}
    for d in range(ring.top + 2):
        red = EchelonReducer(ring.field)
        if d >= 1:
            for g in gens:
                for mask in ring.basis(d - 1):
                    prod = multiply(g, ExteriorElement(ring, {mask: ring.field.one()}))
                    if prod.coeffs:
                        red.add(dict(prod.coeffs))
        reducers[d] = red
    return reducers


def _quotient_mult_cohomology(ring: ExteriorSRRing, prior: list[ExteriorElement],
                              a: ExteriorElement) -> HilbertFunction:
    """Cohomology of multiplication by a on (E/J)/(prior ideal)."""
    f = ring.field
    reducers = _ideal_reducers(ring, prior)
    qdims = {d: ring.dim_of_degree(d) - reducers[d].rank
             for d in range(ring.top + 1)}
    induced_rank = {}
    for d in range(ring.top + 1):
        red = reducers.get(d + 1, EchelonReducer(f)).copy()
        base = red.rank
        for col in _mult_matrix_columns(ring, a, d):
            red.add(col)
        induced_rank[d] = red.rank - base
    induced_rank[-1] = 0
    dims = [qdims[d] - induced_rank[d] - induced_rank[d - 1]
            for d in range(ring.top + 1)]
    return HilbertFunction(tuple(dims))


@dataclass(frozen=True)
class RegularSequenceReport:
    """Per-prefix verdicts for the fiber sums acting on k<K>."""

    prefix_regular: tuple[bool, ...]
    prefix_cohomology: tuple[HilbertFunction, ...]

    @property
    def sequence_regular(self) -> bool:
        return all(self.prefix_regular)


def is_regular_sequence(k: SimplicialComplex, f: CoordinateMap, fld) -> RegularSequenceReport:
    """Check h_1, ..., h_m for regularity on successive quotients of k<K>.

    h_j is regular iff multiplication by h_j on k<K>/(h_1..h_{j-1}) has
    vanishing cohomology in every degree; the full sequence being regular
    is equivalent to the cover homology being finite-dimensional.
    """
    if f.n != k.n:
        raise ValueError("coordinate map domain must match the vertex set")
    ring = exterior_sr_ring(k, fld)
    sums = [ring.linear_form({i: 1 for i in fiber}) for fiber in f.fibers()]
    verdicts = []
    cohoms = []
    for j in range(len(sums)):
        h = _quotient_mult_cohomology(ring, sums[:j], sums[j])
        cohoms.append(h)
        verdicts.append(h.is_zero())
    return RegularSequenceReport(tuple(verdicts), tuple(cohoms))
