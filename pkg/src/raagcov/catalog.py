"""Built-in complexes used throughout the test suite and docs."""

from __future__ import annotations

from itertools import combinations

from .complexes import SimplicialComplex, build_complex, full_simplex

# minimal 6-vertex triangulation of the real projective plane
RP2_FACETS = [
    (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 4, 6),
    (2, 3, 4), (2, 3, 6), (2, 4, 5), (3, 5, 6), (4, 5, 6),
]

_FIXED = {
    "two-points": (2, [(1,), (2,)]),
    "path3": (3, [(1, 2), (2, 3)]),
    "fourcycle": (4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
    "boundary-delta3": (4, [f for f in combinations(range(1, 5), 3)]),
    "two-disjoint-edges": (4, [(1, 2), (3, 4)]),
    "rp2-six-vertex": (6, RP2_FACETS),
}


def names() -> tuple[str, ...]:
    return tuple(sorted(_FIXED)) + ("delta<k>  (full simplex on k vertices)",)


def get(name: str) -> SimplicialComplex:
    """Fetch a named complex; 'delta<k>' gives the full simplex on k vertices."""
    if name in _FIXED:
        n, facets = _FIXED[name]
        return build_complex(n, facets)
    if name.startswith("delta"):
        try:
            k = int(name[len("delta"):])
        except ValueError:
            raise KeyError(name) from None
        if not 1 <= k <= 16:
            raise KeyError(name)
        return full_simplex(k)
    raise KeyError(name)


def standard_catalog() -> list[tuple[str, SimplicialComplex]]:
    """The sweep list used by the verification suite (all n <= 6).

    delta instances are pinned at n = 2, 3, 4 here; tests that exercise
    larger vertex counts pull delta7/delta8 explicitly.
    """
    order = ["two-points", "path3", "fourcycle", "delta2", "delta3", "delta4",
             "boundary-delta3", "two-disjoint-edges", "rp2-six-vertex"]
    return [(name, get(name)) for name in order]
