"""Mixed product ideals and their closed-form classification.

A mixed product ideal is a sum of I_q * J_r summands, where I_q (J_r)
is generated by all squarefree degree-q (degree-r) monomials in the
x-block (y-block).  After normalization the exponent pairs satisfy
0 <= q_1 < ... < q_s <= n and 0 <= r_s < ... < r_1 <= m.

Everything ideal-specific lives here: the derived profile vectors
(q_bar, r_bar, sigma) and their inverse, the closed-form Alexander
dual, the primary decomposition, the unmixed / Cohen-Macaulay /
sequentially-Cohen-Macaulay verdicts, the facet partition, and the
constructive shelling order.  All verdicts are O(s') profile
arithmetic; only the explicitly capped operations enumerate anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional, Tuple

from .ideals import (
    DomainError,
    InvalidInput,
    PrimeComponent,
    ResourceCapExceeded,
    SquarefreeIdeal,
    VariableUniverse,
    antichain,
    sort_key,
)

GENERATOR_CAP = 100_000
FACET_VERTEX_CAP = 20


class ZeroIdealError(DomainError):
    """Every summand vanishes: the result is the zero ideal."""


class NonProperIdealError(DomainError):
    """A summand is I_0 * J_0 = S: the result is not a proper ideal."""


@dataclass(frozen=True)
class MixedProductSpec:
    """A normalized mixed product ideal: the universe plus (q_i, r_i) pairs."""

    universe: VariableUniverse
    summands: Tuple[Tuple[int, int], ...]

    @property
    def s(self) -> int:
        return len(self.summands)

    @property
    def qs(self) -> Tuple[int, ...]:
        return tuple(q for q, _ in self.summands)

    @property
    def rs(self) -> Tuple[int, ...]:
        return tuple(r for _, r in self.summands)

    def __repr__(self):
        terms = "+".join(f"I{q}J{r}" for q, r in self.summands)
        return f"MixedProductSpec(n={self.universe.n}, m={self.universe.m}, {terms})"


@dataclass(frozen=True)
class QRProfile:
    """Derived profile of a spec: block descriptors of the facet partition.

    Block k of the Stanley-Reisner complex consists of all vertex sets
    with q_bar[k] x-vertices and r_bar[k] y-vertices, so sigma gives the
    facet sizes, dim_ring their maximum and height the codimension.
    """

    universe: VariableUniverse
    s_prime: int
    q_bar: Tuple[int, ...]
    r_bar: Tuple[int, ...]

    @property
    def sigma(self) -> Tuple[int, ...]:
        return tuple(q + r for q, r in zip(self.q_bar, self.r_bar))

    @property
    def dim_ring(self) -> int:
        return max(self.sigma)

    @property
    def height(self) -> int:
        return self.universe.size - self.dim_ring


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Closed-form minimal primes, grouped into the x / mixed / y blocks."""

    px: Tuple[PrimeComponent, ...]
    pxy: Tuple[PrimeComponent, ...]
    py: Tuple[PrimeComponent, ...]

    @property
    def components(self) -> list[PrimeComponent]:
        return sorted(self.px + self.pxy + self.py, key=sort_key)


@dataclass(frozen=True)
class ClassificationReport:
    spec: MixedProductSpec
    profile: QRProfile
    unmixed: Verdict
    cohen_macaulay: Verdict
    sequentially_cm: Verdict
    oracle_verdicts: Optional[dict] = field(default=None)


def normalize(universe: VariableUniverse, pairs) -> MixedProductSpec:
    """Canonical spec from raw (q, r) pairs.

    Zero summands (q > n or r > m) are dropped, dominated summands are
    removed, and the rest are sorted so the q's strictly increase and
    the r's strictly decrease.
    """
    pairs = list(pairs)
    if not pairs:
        raise InvalidInput("at least one (q, r) summand is required")
    kept = set()
    for q, r in pairs:
        if q < 0 or r < 0:
            raise InvalidInput(f"negative exponent in summand ({q}, {r})")
        if q == 0 and r == 0:
            raise NonProperIdealError("summand I0*J0 = S makes the ideal non-proper")
        if q > universe.n or r > universe.m:
            continue
        kept.add((q, r))
    if not kept:
        raise ZeroIdealError("every summand vanishes (q > n or r > m throughout)")
    minimal = [p for p in kept
               if not any(o != p and o[0] <= p[0] and o[1] <= p[1] for o in kept)]
    return MixedProductSpec(universe, tuple(sorted(minimal)))


def expand_generators(spec: MixedProductSpec, cap: int = GENERATOR_CAP) -> SquarefreeIdeal:
    """The full minimal generating set: all q-subset x r-subset products."""
    n, m = spec.universe.n, spec.universe.m
    total = sum(comb(n, q) * comb(m, r) for q, r in spec.summands)
    if total > cap:
        raise ResourceCapExceeded(f"{total} generators exceed the cap of {cap}")
    gens = set()
    for q, r in spec.summands:
        for xs in combinations(range(n), q):
            for ys in combinations(range(n, n + m), r):
                gens.add(frozenset(xs + ys))
    # normalization guarantees no cross-summand divisibility
    assert len(antichain(gens)) == len(gens) == total
    return SquarefreeIdeal(spec.universe, frozenset(gens))


def qr_profile(spec: MixedProductSpec) -> QRProfile:
    """The derived (s', q_bar, r_bar) profile of a normalized spec."""
    n, m = spec.universe.n, spec.universe.m
    qs, rs = spec.qs, spec.rs
    s = spec.s
    q_ext = list(qs) + [n + 1]   # q_{s+1} = n + 1
    r_ext = [m + 1] + list(rs)   # r_0 = m + 1
    if qs[0] > 0 and rs[-1] > 0:
        sp = s + 1
    elif qs[0] == 0 and rs[-1] == 0:
        sp = s - 1
    else:
        sp = s
    if qs[0] > 0:
        q_bar = tuple(q_ext[i] - 1 for i in range(sp))       # q_i - 1
        r_bar = tuple(r_ext[i] - 1 for i in range(sp))       # r_{i-1} - 1
    else:
        q_bar = tuple(q_ext[i + 1] - 1 for i in range(sp))   # q_{i+1} - 1
        r_bar = tuple(r_ext[i + 1] - 1 for i in range(sp))   # r_i - 1
    return QRProfile(spec.universe, sp, q_bar, r_bar)


def spec_from_profile(profile: QRProfile) -> MixedProductSpec:
    """Inverse of qr_profile: recover the exponent pairs from the vectors."""
    n, m = profile.universe.n, profile.universe.m
    q, r = profile.q_bar, profile.r_bar
    sp = profile.s_prime
    if not (len(q) == len(r) == sp >= 1):
        raise InvalidInput("profile vectors must have length s_prime >= 1")
    if any(q[i] >= q[i + 1] for i in range(sp - 1)) or not 0 <= q[0] <= q[-1] <= n:
        raise InvalidInput("q_bar must be strictly increasing within 0..n")
    if any(r[i] <= r[i + 1] for i in range(sp - 1)) or not 0 <= r[-1] <= r[0] <= m:
        raise InvalidInput("r_bar must be strictly decreasing within 0..m")
    if r[0] == m and q[-1] == n:
        s = sp - 1
    elif r[0] < m and q[-1] < n:
        s = sp + 1
    else:
        s = sp
    q_of = lambda i: q[i - 1] if 1 <= i <= sp else -1   # q(0) = -1
    r_of = lambda i: r[i - 1] if 1 <= i <= sp else -1   # r(s'+1) = -1
    if r[0] == m:
        pairs = [(q_of(i) + 1, r_of(i + 1) + 1) for i in range(1, s + 1)]
    else:
        pairs = [(q_of(i - 1) + 1, r_of(i) + 1) for i in range(1, s + 1)]
    return MixedProductSpec(profile.universe, tuple(pairs))


def closed_form_dual(spec: MixedProductSpec) -> MixedProductSpec:
    """The Alexander dual as a mixed product spec, via the closed form.

    Raw dual summands are (n-q_1+1, 0), then (n-q_{i+1}+1, m-r_i+1) for
    i = 1..s-1, then (0, m-r_s+1); normalization drops the summands
    whose exponent exceeds its block (those arise exactly when q_1 = 0
    or r_s = 0).
    """
    n, m = spec.universe.n, spec.universe.m
    qs, rs = spec.qs, spec.rs
    s = spec.s
    raw = [(n - qs[0] + 1, 0)]
    raw += [(n - qs[i + 1] + 1, m - rs[i] + 1) for i in range(s - 1)]
    raw += [(0, m - rs[-1] + 1)]
    return normalize(spec.universe, raw)


def closed_form_primary_decomposition(
        spec: MixedProductSpec, cap: int = GENERATOR_CAP) -> PrimaryDecomposition:
    """Minimal primes from the closed form, grouped into P_x / P_xy / P_y."""
    n, m = spec.universe.n, spec.universe.m
    qs, rs = spec.qs, spec.rs
    s = spec.s
    total = comb(n, n - qs[0] + 1) + comb(m, m - rs[-1] + 1)
    total += sum(comb(n, n - qs[i + 1] + 1) * comb(m, m - rs[i] + 1) for i in range(s - 1))
    if total > cap:
        raise ResourceCapExceeded(f"{total} components exceed the cap of {cap}")
    xsubs = lambda k: [frozenset(t) for t in combinations(range(n), k)]
    ysubs = lambda k: [frozenset(t) for t in combinations(range(n, n + m), k)]
    px = tuple(sorted(xsubs(n - qs[0] + 1), key=sort_key)) if qs[0] > 0 else ()
    py = tuple(sorted(ysubs(m - rs[-1] + 1), key=sort_key)) if rs[-1] > 0 else ()
    pxy = tuple(sorted(
        (x | y
         for i in range(s - 1)
         for x in xsubs(n - qs[i + 1] + 1)
         for y in ysubs(m - rs[i] + 1)),
        key=sort_key))
    return PrimaryDecomposition(px, pxy, py)


def is_unmixed_closed_form(spec: MixedProductSpec) -> Verdict:
    """Unmixedness: all three height conditions of the closed form."""
    n, m = spec.universe.n, spec.universe.m
    qs, rs = spec.qs, spec.rs
    h = qr_profile(spec).height
    sizes = [n - qs[i + 1] + 1 + m - rs[i] + 1 for i in range(spec.s - 1)]
    if qs[0] > 0:
        sizes.append(n - qs[0] + 1)
    if rs[-1] > 0:
        sizes.append(m - rs[-1] + 1)
    assert h == min(sizes)
    for i in range(spec.s - 1):
        if m + n - (qs[i + 1] + rs[i]) + 2 != h:
            return Verdict(False, ("mixed-block height", i + 1))
    if qs[0] > 0 and n - qs[0] + 1 != h:
        return Verdict(False, ("x-block height", 1))
    if rs[-1] > 0 and m - rs[-1] + 1 != h:
        return Verdict(False, ("y-block height", spec.s))
    return Verdict(True)


def is_cm_closed_form(spec: MixedProductSpec, perturb: bool = False) -> Verdict:
    """Cohen-Macaulayness: unit q-steps and unit r-steps along the profile.

    ``perturb`` deliberately breaks the q-step condition; it exists only
    so the sweep harness can prove it would catch a wrong closed form.
    """
    p = qr_profile(spec)
    q_step = 2 if perturb else 1
    for i in range(p.s_prime - 1):
        if p.q_bar[i + 1] != p.q_bar[i] + q_step or p.r_bar[i + 1] != p.r_bar[i] - 1:
            return Verdict(False, ("step", i + 1))
    return Verdict(True)


def is_scm_closed_form(spec: MixedProductSpec) -> Verdict:
    """Sequential CM: a unit step in q or r at every i, and unimodal sigma."""
    p = qr_profile(spec)
    for i in range(p.s_prime - 1):
        if p.q_bar[i] != p.q_bar[i + 1] - 1 and p.r_bar[i] != p.r_bar[i + 1] + 1:
            return Verdict(False, ("step", i + 1))
    sig = p.sigma
    i = 0
    while i + 1 < len(sig) and sig[i + 1] >= sig[i]:
        i += 1
    peak = i
    while i + 1 < len(sig) and sig[i + 1] <= sig[i]:
        i += 1
    if i + 1 < len(sig):
        return Verdict(False, ("valley", (peak + 1, i + 1, i + 2)))
    return Verdict(True)


def facet_partition(spec: MixedProductSpec,
                    cap_vertices: int = FACET_VERTEX_CAP) -> list[list[frozenset]]:
    """Block k of the facet partition: all sets of q_bar[k] x's and r_bar[k] y's."""
    n, m = spec.universe.n, spec.universe.m
    if n + m > cap_vertices:
        raise ResourceCapExceeded(f"facet enumeration needs {n + m} vertices, cap is {cap_vertices}")
    p = qr_profile(spec)
    blocks = []
    for q, r in zip(p.q_bar, p.r_bar):
        block = [frozenset(xs + ys)
                 for xs in combinations(range(n), q)
                 for ys in combinations(range(n, n + m), r)]
        blocks.append(sorted(block, key=sort_key))
    return blocks


def _facet_sort_key(universe, f, y_first):
    xs = tuple(sorted(i for i in f if universe.is_x(i)))
    ys = tuple(sorted(i for i in f if not universe.is_x(i)))
    return (ys, xs) if y_first else (xs, ys)


def shelling_order(spec: MixedProductSpec,
                   cap_vertices: int = FACET_VERTEX_CAP) -> Optional[list[frozenset]]:
    """The constructive shelling order, when one of the step conditions holds.

    With unit q-steps: blocks in ascending order, facets within a block
    by x-part then y-part lexicographically.  With unit r-steps the
    mirror image (swap the roles of x and y, which reverses the block
    order).  Returns None when neither condition holds.
    """
    p = qr_profile(spec)
    q_steps = all(p.q_bar[i + 1] == p.q_bar[i] + 1 for i in range(p.s_prime - 1))
    r_steps = all(p.r_bar[i + 1] == p.r_bar[i] - 1 for i in range(p.s_prime - 1))
    if not q_steps and not r_steps:
        return None
    blocks = facet_partition(spec, cap_vertices)
    if not q_steps:
        blocks = blocks[::-1]
    order = []
    for block in blocks:
        order.extend(sorted(block, key=lambda f: _facet_sort_key(spec.universe, f, not q_steps)))
    return order


def skeleton_profile(spec: MixedProductSpec, l: int):
    """Merged (q_bar', r_bar') profile of the facet blocks of the (l-1)-skeleton.

    A block with sigma(k) >= l contributes the pairs (q', l - q') for q'
    from max(0, l - r(k)) to min(q(k), l); duplicates across blocks are
    merged and the result sorted by q'.
    """
    p = qr_profile(spec)
    if not 0 <= l <= p.dim_ring:
        raise InvalidInput(f"skeleton level {l} out of range 0..{p.dim_ring}")
    pairs = set()
    for q, r in zip(p.q_bar, p.r_bar):
        if q + r >= l:
            for qp in range(max(0, l - r), min(q, l) + 1):
                pairs.add((qp, l - qp))
    merged = sorted(pairs)
    return tuple(q for q, _ in merged), tuple(r for _, r in merged)


def classify(spec: MixedProductSpec, oracle_verdicts: Optional[dict] = None) -> ClassificationReport:
    return ClassificationReport(
        spec=spec,
        profile=qr_profile(spec),
        unmixed=is_unmixed_closed_form(spec),
        cohen_macaulay=is_cm_closed_form(spec),
        sequentially_cm=is_scm_closed_form(spec),
        oracle_verdicts=oracle_verdicts,
    )
