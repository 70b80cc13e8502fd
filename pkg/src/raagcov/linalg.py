"""Exact linear algebra over Q, prime fields F_p, and Z.

Everything downstream (simplicial homology, Hochster sweeps, graded chain
slices) reduces to ranks, kernels and Smith normal forms computed here.
No floating point anywhere; Q uses arbitrary-precision rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class RationalField:
    """The field Q, elements represented as fractions.Fraction."""

    label = "q"
    char = 0

    def element(self, x):
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p; elements are ints reduced to 0..p-1."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.label = f"p:{p}"
        self.char = p

    def element(self, x):
        return int(x) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def __repr__(self):
        return f"GF({self.p})"


class IntegerRing:
    """Marker ring for integer matrices (Smith normal form only)."""

    label = "z"
    char = 0

    def element(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError("non-integer entry in Z matrix")
            return x.numerator
        return int(x)

    def __repr__(self):
        return "ZZ"


QQ = RationalField()
ZZ = IntegerRing()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def parse_field(spec: str):
    """Parse a field spec: 'q', 'p' (= F_2), 'p:<prime>', or 'z'."""
    spec = spec.strip().lower()
    if spec == "q":
        return QQ
    if spec == "z":
        return ZZ
    if spec == "p":
        return GF(2)
    if spec.startswith("p:"):
        return GF(int(spec[2:]))
    raise ValueError(f"unknown field spec {spec!r}")


@dataclass
class ExactMatrix:
    """Sparse exact matrix: entries maps (row, col) -> nonzero ring element."""

    ring: object
    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            v = self.ring.element(v)
            if v:
                clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def from_dense(cls, ring, dense) -> "ExactMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = v
        return cls(ring, rows, cols, entries)

    @classmethod
    def from_columns(cls, ring, rows: int, columns) -> "ExactMatrix":
        """columns: iterable of dicts row -> value."""
        entries = {}
        cols = 0
        for j, col in enumerate(columns):
            cols = j + 1
            for i, v in col.items():
                if v:
                    entries[(i, j)] = v
        return cls(ring, rows, cols, entries)

    def to_dense(self):
        zero = 0 if isinstance(self.ring, IntegerRing) else self.ring.zero()
        out = [[zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.ring,
            self.cols,
            self.rows,
            {(c, r): v for (r, c), v in self.entries.items()},
        )

    def row_dicts(self) -> list[dict]:
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        f = self.ring
        by_row = self.row_dicts()
        other_rows = other.row_dicts()
        entries = {}
        for i in range(self.rows):
            acc: dict[int, object] = {}
            for k, a in by_row[i].items():
                for j, b in other_rows[k].items():
                    acc[j] = f.add(acc.get(j, f.zero()), f.mul(a, b))
            for j, v in acc.items():
                if v:
                    entries[(i, j)] = v
        return ExactMatrix(f, self.rows, other.cols, entries)

    def is_zero(self) -> bool:
        return not self.entries


def _require_field(m: ExactMatrix):
    if isinstance(m.ring, IntegerRing):
        raise ValueError("field coefficients required (use smith_normal_form over Z)")


def rank(m: ExactMatrix) -> int:
    """Rank over a field via sparse elimination with Markowitz pivoting.

    Pivot = entry minimizing (nnz(row)-1)*(nnz(col)-1), ties broken by
    (row, col) index, so the elimination path is reproducible.
    """
    _require_field(m)
    f = m.ring
    active = {i: row for i, row in enumerate(m.row_dicts()) if row}
    col_count: dict[int, int] = {}
    for row in active.values():
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1
    rk = 0
    while active:
        best = None
        for i in sorted(active):
            row = active[i]
            rscore = len(row) - 1
            for c in sorted(row):
                score = rscore * (col_count[c] - 1)
                key = (score, i, c)
                if best is None or key < best:
                    best = key
        _, pi, pc = best
        pivot_row = active.pop(pi)
        for c in pivot_row:
            col_count[c] -= 1
        pv = pivot_row[pc]
        rk += 1
        for i in list(active):
            row = active[i]
            if pc not in row:
                continue
            factor = f.div(row[pc], pv)
            for c in row:
                col_count[c] -= 1
            for c, v in pivot_row.items():
                nv = f.sub(row.get(c, f.zero()), f.mul(factor, v))
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            if row:
                for c in row:
                    col_count[c] = col_count.get(c, 0) + 1
            else:
                del active[i]
    return rk


def _rref(m: ExactMatrix):
    """Reduced row echelon form; returns (pivot_col -> row dict, free cols)."""
    f = m.ring
    active = [row for row in m.row_dicts() if row]
    pivots: dict[int, dict] = {}
    for c in range(m.cols):
        candidates = [(len(r), i) for i, r in enumerate(active) if c in r]
        if not candidates:
            continue
        _, idx = min(candidates)
        row = active.pop(idx)
        pv = row[c]
        row = {cc: f.div(v, pv) for cc, v in row.items()}
        for other in list(pivots.values()) + active:
            if c in other:
                factor = other[c]
                for cc, v in row.items():
                    nv = f.sub(other.get(cc, f.zero()), f.mul(factor, v))
                    if nv:
                        other[cc] = nv
                    else:
                        other.pop(cc, None)
        active = [r for r in active if r]
        pivots[c] = row
    free = [c for c in range(m.cols) if c not in pivots]
    return pivots, free


def kernel_basis(m: ExactMatrix) -> list[dict]:
    """Basis of the right null space, one sparse vector per free column."""
    _require_field(m)
    f = m.ring
    pivots, free = _rref(m)
    basis = []
    for fc in free:
        vec = {fc: f.one()}
        for pc, row in pivots.items():
            v = row.get(fc)
            if v:
                vec[pc] = f.neg(v)
        basis.append(dict(sorted(vec.items())))
    return basis


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""

    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d != 1)

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a divisibility chain")


def smith_normal_form(m: ExactMatrix) -> SmithForm:
    """Smith normal form over Z by elementary operations.

    Pivot choice is magnitude-minimizing with (row, col) tie-break; the
    divisibility chain is enforced before each pivot is retired.
    """
    if not isinstance(m.ring, IntegerRing):
        raise ValueError("smith_normal_form requires integer entries")
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = int(v)
        cols.setdefault(c, {})[r] = int(v)

    def set_entry(r, c, v):
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, {})[r] = v
        else:
            if r in rows and c in rows[r]:
                del rows[r][c]
                if not rows[r]:
                    del rows[r]
            if c in cols and r in cols[c]:
                del cols[c][r]
                if not cols[c]:
                    del cols[c]

    def row_op(dst, src, q):
        # row dst -= q * row src
        for c, v in list(rows.get(src, {}).items()):
            set_entry(dst, c, rows.get(dst, {}).get(c, 0) - q * v)

    def col_op(dst, src, q):
        for r, v in list(cols.get(src, {}).items()):
            set_entry(r, dst, rows.get(r, {}).get(dst, 0) - q * v)

    factors = []
    while rows:
        best = None
        for r in sorted(rows):
            for c in sorted(rows[r]):
                key = (abs(rows[r][c]), r, c)
                if best is None or key < best:
                    best = key
        _, pr, pc = best
        while True:
            pv = rows[pr][pc]
            off_col = [r for r in cols.get(pc, {}) if r != pr]
            off_row = [c for c in rows.get(pr, {}) if c != pc]
            if not off_col and not off_row:
                # pivot must divide every remaining entry
                culprit = None
                for r in sorted(rows):
                    for c in sorted(rows[r]):
                        if rows[r][c] % pv != 0:
                            culprit = r
                            break
                    if culprit is not None:
                        break
                if culprit is None:
                    break
                row_op(pr, culprit, -1)
                continue
            progressed = False
            for r in sorted(off_col):
                v = cols[pc][r]
                q = v // pv
                row_op(r, pr, q)
                if rows.get(r, {}).get(pc):
                    # remainder is smaller in magnitude: swap pivot role
                    pr = r
                    progressed = True
                    break
            if progressed:
                continue
            for c in sorted(off_row):
                v = rows[pr][c]
                q = v // pv
                col_op(c, pc, q)
                if rows.get(pr, {}).get(c):
                    pc = c
                    break
        factors.append(abs(rows[pr][pc]))
        # retire pivot row and column
        for c in list(rows.get(pr, {})):
            set_entry(pr, c, 0)
        for r in list(cols.get(pc, {})):
            set_entry(r, pc, 0)
    factors.sort()
    return SmithForm(tuple(factors))


class EchelonReducer:
    """Incrementally maintained RREF spanning set over a field.

    Vectors are sparse dicts label -> value over any totally ordered label
    set. Used for streaming ranks, membership tests and canonical residues
    modulo a subspace.
    """

    def __init__(self, fld):
        self.field = fld
        self.rows: dict = {}  # pivot label -> vector, pivot coeff 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivot_labels(self):
        return self.rows.keys()

    def reduce(self, vec: dict) -> dict:
        """Canonical residue of vec modulo the span (RREF makes it unique)."""
        f = self.field
        v = {k: x for k, x in vec.items() if x}
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                return v
            k = min(hits)
            factor = v[k]
            row = self.rows[k]
            for kk, x in row.items():
                nv = f.sub(v.get(kk, f.zero()), f.mul(factor, x))
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)

    def add(self, vec: dict) -> bool:
        """Insert vec; returns True iff it enlarged the span."""
        f = self.field
        r = self.reduce(vec)
        if not r:
            return False
        pivot = min(r)
        pv = r[pivot]
        r = {k: f.div(x, pv) for k, x in r.items()}
        for row in self.rows.values():
            if pivot in row:
                factor = row[pivot]
                for kk, x in r.items():
                    nv = f.sub(row.get(kk, f.zero()), f.mul(factor, x))
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
        self.rows[pivot] = r
        return True

    def copy(self) -> "EchelonReducer":
        dup = EchelonReducer(self.field)
        dup.rows = {k: dict(v) for k, v in self.rows.items()}
        return dup


def sum_block_ranks(fld, keyed_columns) -> int:
    """Total rank of a block-diagonal map given homogeneous columns.

    keyed_columns: iterable of (block_key, column) where column is a sparse
    dict row_label -> coeff and columns with equal keys hit a common row
    block. Blocks are processed in sorted key order (determinism contract).
    """
    groups: dict = {}
    for key, col in keyed_columns:
        groups.setdefault(key, []).append(col)
    total = 0
    for key in sorted(groups):
        red = EchelonReducer(fld)
        for col in groups[key]:
            red.add(col)
        total += red.rank
    return total
