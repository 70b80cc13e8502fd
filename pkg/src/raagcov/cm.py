"""Cohen-Macaulay detection and the duality between covers and Tor modules.

Three independent CM tests: the Reisner link criterion, the Eagon-Reiner
linear-resolution test on the Alexander dual, and vanishing of the Cartan
complex (k<K> ox S, multiplication by omega = sum e_i ox u_i) away from
the top position. For CM complexes the Cartan complex resolves its top
cohomology module F; resolving R over S by the Koszul complex on the
kernel of u_i -> s_{f(i)} then turns F's presentation into Tor modules
whose Hilbert functions must match the compact-support cohomology of the
cover, up to one constant, measured grading shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import SimplicialComplex, alexander_dual, f_vector, link
from .cover import CoverComplex, compact_support_cohomology, monomials
from .exterior import CoordinateMap, HilbertFunction, aligned_compare
from .homology import reduced_homology
from .linalg import EchelonReducer


def is_cm_reisner(k: SimplicialComplex, fld) -> bool:
    """Reisner criterion: every link has homology only in its top degree."""
    if k.is_void:
        raise ValueError("void complex")
    for sigma in sorted(k.faces):
        lk = link(k, sigma).complex
        profile = reduced_homology(lk, fld)
        top = lk.dim
        if any(deg < top for deg in profile.nonzero_degrees()):
            return False
    return True


def is_cm_eagon_reiner(k: SimplicialComplex, fld) -> bool:
    """Eagon-Reiner: K is CM iff the dual Stanley-Reisner ideal is linear.

    Computes the Betti table of S/I_{K*} by Hochster's formula; a linear
    resolution concentrates every column p >= 1 in the single internal
    index forced by the generator degree.
    """
    from .betti import hochster_betti

    if k.is_full_simplex():
        raise ValueError("full simplex: the dual ideal is zero")
    dual = alexander_dual(k)
    table = hochster_betti(dual, fld)
    q_values = {q for (p, q) in table.entries if p >= 1}
    return len(q_values) <= 1


def cartan_profile(k: SimplicialComplex, fld, j_max: int) -> dict[int, HilbertFunction]:
    """Position -> Hilbert function of the Cartan complex cohomology.

    The Cartan complex is the compact-support chain model for the identity
    coordinate map, so the slice machinery is shared.
    """
    if k.is_void:
        raise ValueError("void complex")
    session = CoverComplex(k, CoordinateMap.identity(k.n), fld)
    top = k.dim + 1
    return {p: HilbertFunction(tuple(session.compact_slice(p, j)
                                     for j in range(j_max + 1)))
            for p in range(top + 1)}


def cartan_concentrated(k: SimplicialComplex, fld, j_max: int) -> bool:
    """True iff the Cartan cohomology vanishes away from position dim+1."""
    profile = cartan_profile(k, fld, j_max)
    top = k.dim + 1
    return all(h.is_zero() for p, h in profile.items() if p != top)


class CartanModule:
    """Top Cartan cohomology as a presented graded module over S.

    Degree-j slice = (top faces ox S_j) / image(omega); the image columns
    are echelonized once per degree, non-pivot basis labels give concrete
    quotient coordinates, and degree-1 module actions become small dense
    matrices in those coordinates. Nothing abstract is materialized.
    """

    def __init__(self, k: SimplicialComplex, fld):
        if k.is_void:
            raise ValueError("void complex")
        self.k = k
        self.field = fld
        self.n = k.n
        self.d = k.dim
        self.top_faces = k.faces_of_size(self.d + 1)
        self.below = k.faces_of_size(self.d)
        self._reducers: dict[int, EchelonReducer] = {}
        self._quotient_basis: dict[int, list] = {}
        self._actions: dict[tuple, list[dict]] = {}

    def _reducer(self, j: int) -> EchelonReducer:
        if j not in self._reducers:
            f = self.field
            one = f.one()
            red = EchelonReducer(f)
            if j >= 1:
                faces = self.k.faces
                for face in self.below:
                    for alpha in monomials(self.n, j - 1):
                        col: dict = {}
                        for v in range(1, self.n + 1):
                            bit = 1 << (v - 1)
                            if face & bit or (face | bit) not in faces:
                                continue
                            sign = one if (face & (bit - 1)).bit_count() % 2 == 0 \
                                else f.neg(one)
                            alpha2 = alpha[:v - 1] + (alpha[v - 1] + 1,) + alpha[v:]
                            col[(face | bit, alpha2)] = sign
                        if col:
                            red.add(col)
            self._reducers[j] = red
        return self._reducers[j]

    def quotient_basis(self, j: int) -> list:
        if j not in self._quotient_basis:
            red = self._reducer(j)
            pivots = set(red.pivot_labels)
            self._quotient_basis[j] = [
                (face, alpha)
                for face in self.top_faces
                for alpha in monomials(self.n, j)
                if (face, alpha) not in pivots
            ]
        return self._quotient_basis[j]

    def dim(self, j: int) -> int:
        return len(self.quotient_basis(j)) if j >= 0 else 0

    def hilbert(self, j_max: int) -> HilbertFunction:
        return HilbertFunction(tuple(self.dim(j) for j in range(j_max + 1)))

    def to_coords(self, vec: dict, j: int) -> dict[int, object]:
        residual = self._reducer(j).reduce(vec)
        index = {lbl: i for i, lbl in enumerate(self.quotient_basis(j))}
        return {index[lbl]: v for lbl, v in residual.items()}

    def action(self, form: tuple, j: int) -> list[dict]:
        """Matrix of multiplication by sum coeff * u_var from slice j to j+1.

        form is a canonical tuple ((var, coeff), ...); returns one sparse
        column (dict over quotient indices at j+1) per quotient basis
        element at j.
        """
        key = (form, j)
        if key not in self._actions:
            f = self.field
            cols = []
            for face, alpha in self.quotient_basis(j):
                vec: dict = {}
                for var, coeff in form:
                    alpha2 = alpha[:var - 1] + (alpha[var - 1] + 1,) + alpha[var:]
                    lbl = (face, alpha2)
                    val = f.add(vec.get(lbl, f.zero()), f.element(coeff))
                    if val:
                        vec[lbl] = val
                    else:
                        vec.pop(lbl, None)
                cols.append(self.to_coords(vec, j + 1))
            self._actions[key] = cols
        return self._actions[key]

    def tor_dims(self, forms: list[tuple], i: int, c_max: int) -> HilbertFunction:
        """Hilbert window of Tor_i against the Koszul complex on the forms.

        Positions are exterior powers of the span of the (degree-1,
        pairwise commuting) forms; total degree c pairs Koszul position l
        with module degree c - l.
        """
        r = len(forms)
        if i < 0 or i > r:
            return HilbertFunction((0,) * (c_max + 1))
        from itertools import combinations

        f = self.field
        dims = []
        for c in range(c_max + 1):
            def space_dim(l: int) -> int:
                if l < 0 or l > r or c - l < 0:
                    return 0
                return comb(r, l) * self.dim(c - l)

            def differential_rank(l: int) -> int:
                # d_l : position l -> position l-1 at total degree c
                if l < 1 or l > r or c - l < 0:
                    return 0
                src_deg = c - l
                tgt_subsets = {sub: s for s, sub in
                               enumerate(combinations(range(r), l - 1))}
                tgt_block = self.dim(src_deg + 1)
                red = EchelonReducer(f)
                for subset in combinations(range(r), l):
                    acts = [self.action(forms[t], src_deg) for t in subset]
                    for b in range(self.dim(src_deg)):
                        col: dict = {}
                        for pos, t in enumerate(subset):
                            rest = subset[:pos] + subset[pos + 1:]
                            base = tgt_subsets[rest] * tgt_block
                            sign_neg = pos % 2 == 1
                            for idx, v in acts[pos][b].items():
                                val = f.neg(v) if sign_neg else v
                                lbl = base + idx
                                cur = f.add(col.get(lbl, f.zero()), val)
                                if cur:
                                    col[lbl] = cur
                                else:
                                    col.pop(lbl, None)
                        if col:
                            red.add(col)
                return red.rank

            h = space_dim(i) - differential_rank(i) - differential_rank(i + 1)
            dims.append(h)
        return HilbertFunction(tuple(dims))


def coordinate_kernel_forms(f: CoordinateMap) -> list[tuple]:
    """Spanning-forest basis of the degree-1 kernel of u_i -> s_{f(i)}.

    Within each fiber, adjacent vertices in sorted order give u_a - u_b;
    the basis has n - m elements and the choice is fixed for determinism.
    """
    forms = []
    for fiber in f.fibers():
        for a, b in zip(fiber, fiber[1:]):
            forms.append(((a, 1), (b, -1)))
    return forms


@dataclass(frozen=True)
class DualityVerdict:
    """Comparison of H^q_c of the cover against Tor_{d+1-q}(F, R)."""

    q: int
    tor_index: int
    equal: bool
    shift: int | None
    first_discrepancy: int | None
    overlap: int
    compact_support: HilbertFunction
    tor_side: HilbertFunction


def duality_check(k: SimplicialComplex, f: CoordinateMap, fld, q: int,
                  j_max: int, module: CartanModule | None = None,
                  session: CoverComplex | None = None) -> DualityVerdict:
    """Verify one degree of the cover/Tor duality for a CM complex."""
    if not is_cm_reisner(k, fld):
        raise ValueError("duality check requires a Cohen-Macaulay complex")
    d = k.dim
    hc = compact_support_cohomology(k, f, fld, q, j_max, session=session)
    i = d + 1 - q
    mod = module if module is not None else CartanModule(k, fld)
    forms = coordinate_kernel_forms(f)
    tor = mod.tor_dims(forms, i, j_max) if 0 <= i <= len(forms) \
        else HilbertFunction((0,) * (j_max + 1))
    equal, shift, first_bad, overlap = aligned_compare(hc, tor)
    return DualityVerdict(q, i, equal, shift, first_bad, overlap, hc, tor)


@dataclass(frozen=True)
class VanishingVerdict:
    """Witnesses against the CM vanishing range, if any."""

    ok: bool
    witnesses: tuple  # (q, j, dim)
    checked_q: tuple[int, ...]


def vanishing_range_check(k: SimplicialComplex, f: CoordinateMap, fld,
                          j_max: int = 8) -> VanishingVerdict:
    """Compact-support cohomology must vanish for q <= m-n+d and q > d+1."""
    if not is_cm_reisner(k, fld):
        raise ValueError("vanishing range requires a Cohen-Macaulay complex")
    d = k.dim
    low = f.m - f.n + d
    session = CoverComplex(k, f, fld)
    witnesses = []
    checked = []
    for q in range(0, d + 3):
        if q <= low or q > d + 1:
            checked.append(q)
            for j in range(j_max + 1):
                dim = session.compact_slice(q, j)
                if dim:
                    witnesses.append((q, j, dim))
    return VanishingVerdict(not witnesses, tuple(witnesses), tuple(checked))


def stanley_reisner_quotient_hilbert(k: SimplicialComplex, j_max: int) -> HilbertFunction:
    """Hilbert function of S/I_K: monomials whose support is a face."""
    fv = f_vector(k)
    dims = []
    for j in range(j_max + 1):
        if j == 0:
            dims.append(1)
            continue
        total = 0
        for s in range(1, len(fv)):
            total += fv[s] * comb(j - 1, s - 1)
        dims.append(total)
    return HilbertFunction(tuple(dims))


def stanley_reisner_ideal_hilbert(k: SimplicialComplex, j_max: int) -> HilbertFunction:
    """Hilbert function of the ideal I_K inside S = k[t_1..t_n]."""
    quotient = stanley_reisner_quotient_hilbert(k, j_max)
    dims = [comb(k.n + j - 1, j) - quotient[j] for j in range(j_max + 1)]
    return HilbertFunction(tuple(dims))


def is_homology_sphere(k: SimplicialComplex, fld) -> bool:
    """All links (the complex included) look like spheres of the right dim."""
    if k.is_void:
        raise ValueError("void complex")
    d = k.dim
    for sigma in sorted(k.faces):
        lk = link(k, sigma).complex
        expected = d - sigma.bit_count()
        if lk.dim != expected:
            return False
        profile = reduced_homology(lk, fld)
        if profile.nonzero_degrees() != (expected,) or profile.rank(expected) != 1:
            return False
    return True


@dataclass(frozen=True)
class GorensteinVerdict:
    ok: bool
    shift: int | None
    first_discrepancy: int | None
    cartan_module: HilbertFunction
    dual_ideal: HilbertFunction


def gorenstein_fk_check(k: SimplicialComplex, fld, j_max: int = 8) -> GorensteinVerdict:
    """For a homology sphere, F matches the dual ideal as an S-module.

    Compares the Hilbert function of the top Cartan cohomology with that
    of I_{K*} inside S, after aligning the first nonzero degrees; the
    grading shift is reported, not assumed.
    """
    if not is_homology_sphere(k, fld):
        raise ValueError("input is not a homology sphere over the chosen field")
    mod = CartanModule(k, fld)
    fk = mod.hilbert(j_max)
    ideal = stanley_reisner_ideal_hilbert(alexander_dual(k), j_max)
    equal, shift, first_bad, _ = aligned_compare(fk, ideal)
    return GorensteinVerdict(equal, shift, first_bad, fk, ideal)


@dataclass(frozen=True)
class TorDimensionReport:
    """Total Tor_i(F, k) dimensions against the dual exterior ideal."""

    ok: bool
    measured_shift: int | None
    stated_twist_offset: int | None
    tor_totals: dict
    dual_ideal_dims: dict


def lemma_dimension_check(k: SimplicialComplex, fld, c_max: int | None = None) -> TorDimensionReport:
    """Check total Tor^S(F, k) dimensions against graded pieces of J_{K*}.

    Tor is computed from the Cartan presentation against the Koszul
    resolution of the residue field (all n variables); the dual exterior
    ideal dimension in degree q is binom(n, q) - f_{q-1}(K*). The shift is
    measured by first-nonzero alignment and must be constant; the offset
    from the nominal twist n - d + 1 is reported alongside.
    """
    if k.is_full_simplex():
        raise ValueError("full simplex: the dual ideal is zero")
    n, d = k.n, k.dim
    mod = CartanModule(k, fld)
    forms = [((v, 1),) for v in range(1, n + 1)]
    window = c_max if c_max is not None else n + 2
    totals = {}
    for i in range(0, n + 1):
        t = mod.tor_dims(forms, i, window).total()
        if t:
            totals[i] = t
    dual = alexander_dual(k)
    fv = f_vector(dual)
    ideal_dims = {}
    for qd in range(0, n + 1):
        dim = comb(n, qd) - (fv[qd] if qd < len(fv) else 0)
        if dim:
            ideal_dims[qd] = dim
    if not totals or not ideal_dims:
        return TorDimensionReport(not totals and not ideal_dims, None, None,
                                  totals, ideal_dims)
    shift = min(ideal_dims) - min(totals)
    ok = ideal_dims == {i + shift: t for i, t in totals.items()}
    return TorDimensionReport(ok, shift, shift - (n - d + 1), totals, ideal_dims)
