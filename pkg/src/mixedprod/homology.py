"""Reduced simplicial homology ranks over the rationals.

Boundary matrices are integer matrices; ranks are computed exactly via
fraction-free elimination (mixedprod.kernels.rank_int), never floating
point.  Rank vectors are memoized on a relabeling-canonical key of the
facet set, which is what makes the exhaustive oracle sweeps cheap: the
links showing up there repeat heavily.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .ideals import InvalidInput, ResourceCapExceeded, mask_of

HOMOLOGY_VERTEX_CAP = 16

_ranks_cache: dict = {}


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed incidence matrix from d-faces (columns) to (d-1)-faces (rows)."""

    rows: tuple
    cols: tuple
    entries: tuple


def _faces_by_dim(c):
    """dim -> canonically sorted list of faces, including the empty face."""
    seen = {frozenset()}
    for f in c.facets:
        fl = sorted(f)
        for k in range(1, len(fl) + 1):
            for sub in combinations(fl, k):
                seen.add(frozenset(sub))
    by_dim: dict[int, list] = {}
    for f in seen:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort(key=sorted)
    return by_dim


def boundary_matrix(c, d: int) -> BoundaryMatrix:
    """The d-th boundary map of the augmented (reduced) chain complex.

    Sign convention: removing the k-th smallest vertex of a face
    contributes (-1)^k.  For d=0 the single row is the empty face and
    all entries are 1 (augmentation).
    """
    from .complexes import dim as cdim

    if not 0 <= d <= cdim(c):
        raise InvalidInput(f"boundary dimension {d} out of range for dim {cdim(c)}")
    by_dim = _faces_by_dim(c)
    rows = tuple(by_dim[d - 1])
    cols = tuple(by_dim[d])
    row_index = {f: i for i, f in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        verts = sorted(f)
        for k, v in enumerate(verts):
            entries[row_index[f - {v}]][j] = -1 if k % 2 else 1
    return BoundaryMatrix(rows, cols, tuple(tuple(r) for r in entries))


def rank_exact(mat: BoundaryMatrix) -> int:
    if not mat.rows or not mat.cols:
        return 0
    return kernels.rank_int(mat.entries)


def _canonical_key(c):
    verts = sorted(set().union(*c.facets)) if c.facets else []
    relabel = {v: i for i, v in enumerate(verts)}
    return tuple(sorted(mask_of(relabel[v] for v in f) for f in c.facets))


def reduced_homology_ranks(c, cap_vertices: int = HOMOLOGY_VERTEX_CAP) -> dict[int, int]:
    """Ranks of the reduced homology groups, as a dict over d = -1..dim.

    rank H~_d = (#d-faces) - rank del_d - rank del_{d+1}; the (-1)-st
    rank is 1 for the [set()] complex and 0 otherwise.
    """
    from .complexes import dim as cdim

    if c.universe.size > cap_vertices:
        raise ResourceCapExceeded(
            f"homology needs {c.universe.size} vertices, cap is {cap_vertices}")
    key = _canonical_key(c)
    cached = _ranks_cache.get(key)
    if cached is not None:
        return dict(cached)
    top = cdim(c)
    if top == -1:
        ranks = {-1: 1}
    else:
        by_dim = _faces_by_dim(c)
        counts = {d: len(by_dim.get(d, [])) for d in range(-1, top + 1)}
        bd_rank = {d: rank_exact(boundary_matrix(c, d)) for d in range(0, top + 1)}
        bd_rank[top + 1] = 0
        ranks = {-1: 1 - bd_rank[0]}
        for d in range(0, top + 1):
            ranks[d] = counts[d] - bd_rank[d] - bd_rank[d + 1]
    _ranks_cache[key] = dict(ranks)
    return ranks
