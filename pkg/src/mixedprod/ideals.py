"""Squarefree monomial ideals over a two-block variable universe.

Variables are indexed 0..n-1 for the x-block and n..n+m-1 for the
y-block.  A squarefree monomial is identified with its support, a
frozenset of variable indices; an ideal is stored by its unique minimal
(divisibility-antichain) generating set.  All values are immutable and
every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable

from . import kernels

Monomial = FrozenSet[int]
PrimeComponent = FrozenSet[int]

DUAL_VERTEX_CAP = 24


class MixedProdError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(MixedProdError):
    """Malformed value: bad index, universe mismatch, bad argument."""


class DomainError(MixedProdError):
    """Operation undefined for this value (zero/unit ideal, non-pure complex)."""


class ResourceCapExceeded(MixedProdError):
    """An explicit enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class VariableUniverse:
    """n x-variables followed by m y-variables, indexed 0..n+m-1."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise InvalidInput(f"need n, m >= 0 and n + m >= 1, got n={self.n} m={self.m}")

    @property
    def size(self) -> int:
        return self.n + self.m

    @property
    def x_indices(self) -> range:
        return range(self.n)

    @property
    def y_indices(self) -> range:
        return range(self.n, self.n + self.m)

    def is_x(self, i: int) -> bool:
        return 0 <= i < self.n

    def var_name(self, i: int) -> str:
        self.check_index(i)
        return f"x{i + 1}" if i < self.n else f"y{i - self.n + 1}"

    def check_index(self, i: int) -> None:
        if not 0 <= i < self.size:
            raise InvalidInput(f"variable index {i} out of range for universe {self.n}+{self.m}")


def sort_key(s: Iterable[int]):
    return tuple(sorted(s))


def mask_of(support: Iterable[int]) -> int:
    mask = 0
    for i in support:
        mask |= 1 << i
    return mask


def support_of(mask: int) -> Monomial:
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.add(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class SquarefreeIdeal:
    universe: VariableUniverse
    generators: FrozenSet[Monomial]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return frozenset() in self.generators

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def sorted_generators(self) -> list[Monomial]:
        return sorted(self.generators, key=sort_key)

    def __repr__(self):
        gens = ["*".join(self.universe.var_name(i) for i in sorted(g)) or "1"
                for g in self.sorted_generators()]
        return f"SquarefreeIdeal({self.universe.n}+{self.universe.m}; {', '.join(gens) or '0'})"


def antichain(supports: Iterable[FrozenSet[int]]) -> frozenset:
    """Minimal elements of a family of sets under inclusion (deduplicated)."""
    sets = set(supports)
    return frozenset(g for g in sets if not any(h < g for h in sets))


def minimalize(universe: VariableUniverse, raw: Iterable[Iterable[int]]) -> SquarefreeIdeal:
    """The ideal generated by ``raw``, reduced to its minimal generating set."""
    supports = []
    for g in raw:
        s = frozenset(g)
        for i in s:
            universe.check_index(i)
        supports.append(s)
    return SquarefreeIdeal(universe, antichain(supports))


def _check_same_universe(a: SquarefreeIdeal, b: SquarefreeIdeal) -> None:
    if a.universe != b.universe:
        raise InvalidInput(f"universe mismatch: {a.universe} vs {b.universe}")


def ideal_sum(a: SquarefreeIdeal, b: SquarefreeIdeal) -> SquarefreeIdeal:
    _check_same_universe(a, b)
    return SquarefreeIdeal(a.universe, antichain(a.generators | b.generators))


def ideal_product(a: SquarefreeIdeal, b: SquarefreeIdeal) -> SquarefreeIdeal:
    """Product of squarefree ideals: pairwise support unions, minimalized.

    Exact for the squarefree world this package lives in; callers keep
    factors on disjoint variable blocks.
    """
    _check_same_universe(a, b)
    return SquarefreeIdeal(a.universe, antichain(g | h for g in a.generators for h in b.generators))


def ideal_intersect(a: SquarefreeIdeal, b: SquarefreeIdeal) -> SquarefreeIdeal:
    """Intersection via pairwise lcms; valid for squarefree monomial ideals."""
    _check_same_universe(a, b)
    if a.is_zero or b.is_zero:
        return SquarefreeIdeal(a.universe, frozenset())
    return SquarefreeIdeal(a.universe, antichain(g | h for g in a.generators for h in b.generators))


def alexander_dual(ideal: SquarefreeIdeal, cap_vertices: int = DUAL_VERTEX_CAP) -> SquarefreeIdeal:
    """Dual of a proper nonzero squarefree ideal.

    Generators of the dual are the minimal transversals (minimal hitting
    sets) of the generator supports.
    """
    if ideal.is_zero:
        raise DomainError("dual of the zero ideal is undefined")
    if ideal.is_unit:
        raise DomainError("dual of the unit ideal is undefined")
    if ideal.universe.size > cap_vertices:
        raise ResourceCapExceeded(
            f"dual needs {ideal.universe.size} variables, cap is {cap_vertices}")
    masks = [mask_of(g) for g in ideal.sorted_generators()]
    hs = kernels.minimal_hitting_sets(masks, ideal.universe.size)
    return SquarefreeIdeal(ideal.universe, frozenset(support_of(h) for h in hs))


def minimal_primes(ideal: SquarefreeIdeal, cap_vertices: int = DUAL_VERTEX_CAP) -> list[PrimeComponent]:
    """Minimal primes of a proper nonzero squarefree ideal, canonically sorted.

    These are the supports of the minimal generators of the dual.
    """
    return sorted(alexander_dual(ideal, cap_vertices).generators, key=sort_key)


def stanley_reisner_complex(ideal: SquarefreeIdeal):
    """The simplicial complex whose non-faces generate ``ideal``.

    Facets are the vertex-set complements of the minimal primes; the
    zero ideal corresponds to the full simplex, the maximal ideal to the
    (-1)-dimensional complex with facet list [set()].
    """
    from .complexes import make_complex

    if ideal.is_unit:
        raise DomainError("the unit ideal has no associated complex here")
    full = frozenset(range(ideal.universe.size))
    if ideal.is_zero:
        return make_complex(ideal.universe, [full])
    return make_complex(ideal.universe, [full - p for p in minimal_primes(ideal)])


def ideal_of_complex(c) -> SquarefreeIdeal:
    """Minimal non-faces of a complex; inverse of stanley_reisner_complex.

    A set is a non-face iff it meets the complement of every facet, so
    the minimal non-faces are the minimal transversals of the facet
    complements.
    """
    full_mask = (1 << c.universe.size) - 1
    comps = [full_mask & ~mask_of(f) for f in c.facets]
    hs = kernels.minimal_hitting_sets(comps, c.universe.size)
    return SquarefreeIdeal(c.universe, frozenset(support_of(h) for h in hs))
