"""Exhaustive verification sweeps: closed forms against brute-force oracles.

Every normalized spec within the configured bounds is enumerated and
each closed-form statement is compared against an independent oracle:

  - the dual formula against minimal-hitting-set Alexander duality,
  - the primary decomposition against the dual's minimal primes,
  - the CM verdict against purity + strong connectivity (fast) and
    against Reisner link homology (full),
  - the sequential-CM verdict against the pure-skeleton test,
  - the unmixedness verdict against equal component sizes,
  - the facet partition, intersection bound and constructive shelling
    order against the actual facet set.

Any disagreement is recorded as a mismatch; the sweep exits nonzero on
the first nonempty mismatch list.  ``perturb=True`` deliberately breaks
the CM closed form so the harness can demonstrate it detects bugs.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import complexes, ideals, products
from .homology import HOMOLOGY_VERTEX_CAP
from .products import MixedProductSpec

ORACLE_LEVELS = ("none", "fast", "full")


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 4
    max_m: int = 4
    max_s: int = 3
    oracle_level: str = "fast"
    workers: int = 1
    perturb: bool = False
    cap_vertices: int = HOMOLOGY_VERTEX_CAP
    cap_facets: int = complexes.SHELLING_FACET_CAP

    def __post_init__(self):
        if self.max_n < 1 or self.max_m < 1 or self.max_s < 1:
            raise ideals.InvalidInput("sweep bounds must be >= 1")
        if self.oracle_level not in ORACLE_LEVELS:
            raise ideals.InvalidInput(f"oracle level must be one of {ORACLE_LEVELS}")


@dataclass
class SweepResult:
    configs_checked: int = 0
    mismatches: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    records: list = field(default_factory=list)
    elapsed: float = 0.0


def enumerate_specs(max_n, max_m, max_s):
    """All normalized specs in lexicographic (n, m, s, q-list, r-list) order."""
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            universe = ideals.VariableUniverse(n, m)
            for s in range(1, max_s + 1):
                for qs in combinations(range(n + 1), s):
                    for rs_inc in combinations(range(m + 1), s):
                        rs = tuple(reversed(rs_inc))
                        if qs[0] == 0 and rs[0] == 0:
                            continue  # the unit summand I0*J0
                        yield MixedProductSpec(universe, tuple(zip(qs, rs)))


def _mismatch(spec, check, closed, oracle, witness=None):
    return {
        "spec": spec_as_dict(spec),
        "check": check,
        "closed_form": closed,
        "oracle": oracle,
        "witness": repr(witness) if witness is not None else None,
    }


def spec_as_dict(spec):
    return {"n": spec.universe.n, "m": spec.universe.m,
            "pairs": [list(p) for p in spec.summands]}


def check_spec(spec: MixedProductSpec, oracle_level: str = "fast",
               perturb: bool = False,
               cap_vertices: int = HOMOLOGY_VERTEX_CAP,
               cap_facets: int = complexes.SHELLING_FACET_CAP) -> dict:
    """Run every applicable cross-check on one spec.

    Returns a record with the closed-form verdicts and the lists of
    mismatches and skipped (capped) oracle checks.
    """
    mismatches = []
    skipped = []
    profile = products.qr_profile(spec)
    unmixed = products.is_unmixed_closed_form(spec)
    cm = products.is_cm_closed_form(spec, perturb=perturb)
    scm = products.is_scm_closed_form(spec)

    # structural identities need no enumeration
    if products.spec_from_profile(profile) != spec:
        mismatches.append(_mismatch(spec, "profile_roundtrip", None, None))
    if products.closed_form_dual(products.closed_form_dual(spec)) != spec:
        mismatches.append(_mismatch(spec, "dual_involution", None, None))
    if cm.holds and not unmixed.holds:
        mismatches.append(_mismatch(spec, "cm_implies_unmixed", cm.holds, unmixed.holds))
    if cm.holds and not scm.holds:
        mismatches.append(_mismatch(spec, "cm_implies_scm", cm.holds, scm.holds))

    oracle = {}
    if oracle_level in ("fast", "full") and spec.universe.size <= cap_vertices:
        ideal = products.expand_generators(spec)
        dual_closed = products.expand_generators(products.closed_form_dual(spec))
        dual_oracle = ideals.alexander_dual(ideal)
        oracle["dual_generators"] = dual_closed == dual_oracle
        if not oracle["dual_generators"]:
            mismatches.append(_mismatch(spec, "dual_generators",
                                        sorted(map(sorted, dual_closed.generators)),
                                        sorted(map(sorted, dual_oracle.generators))))

        primes = ideals.minimal_primes(ideal)
        decomp = products.closed_form_primary_decomposition(spec)
        oracle["primary_decomposition"] = decomp.components == primes
        if not oracle["primary_decomposition"]:
            mismatches.append(_mismatch(spec, "primary_decomposition",
                                        [sorted(c) for c in decomp.components],
                                        [sorted(c) for c in primes]))

        sizes = {len(p) for p in primes}
        oracle["unmixed"] = len(sizes) == 1
        if unmixed.holds != oracle["unmixed"]:
            mismatches.append(_mismatch(spec, "unmixed", unmixed.holds,
                                        oracle["unmixed"], unmixed.witness))

        complex_ = ideals.stanley_reisner_complex(ideal)
        blocks = products.facet_partition(spec)
        tiled = sorted((f for b in blocks for f in b), key=ideals.sort_key)
        oracle["facet_partition"] = tiled == list(complex_.facets)
        if not oracle["facet_partition"]:
            mismatches.append(_mismatch(spec, "facet_partition",
                                        [sorted(f) for f in tiled],
                                        [sorted(f) for f in complex_.facets]))

        bound_ok, bound_witness = _intersection_bound(profile, blocks)
        oracle["intersection_bound"] = bound_ok
        if not bound_ok:
            mismatches.append(_mismatch(spec, "intersection_bound", None, None, bound_witness))

        pure = complexes.is_pure(complex_)
        strong = pure and complexes.is_strongly_connected(complex_)
        oracle["cm_strongly_connected"] = strong
        if cm.holds != strong:
            mismatches.append(_mismatch(spec, "cm_strongly_connected",
                                        cm.holds, strong, cm.witness))

        order = products.shelling_order(spec)
        if order is not None:
            ok, witness = complexes.verify_shelling_order(complex_, order)
            oracle["shelling_order"] = ok
            if not ok:
                mismatches.append(_mismatch(spec, "shelling_order", True, False, witness))

        if oracle_level == "full":
            ok, witness = complexes.reisner_cm(complex_, cap_vertices)
            oracle["cm_reisner"] = ok
            if cm.holds != ok:
                mismatches.append(_mismatch(spec, "cm_reisner", cm.holds, ok, witness))

            ok, witness = complexes.duval_scm(complex_, cap_vertices)
            oracle["scm_duval"] = ok
            if scm.holds != ok:
                mismatches.append(_mismatch(spec, "scm_duval", scm.holds, ok, witness))

            if cm.holds and len(complex_.facets) <= cap_facets:
                result = complexes.find_shelling(complex_, cap_facets)
                oracle["shellable"] = result.status == "shellable"
                if result.status != "shellable":
                    mismatches.append(_mismatch(spec, "shellable", True, result.status))
    elif oracle_level in ("fast", "full"):
        skipped.append({"spec": spec_as_dict(spec), "reason": "vertex cap"})

    return {
        "spec": spec_as_dict(spec),
        "profile": profile_as_dict(profile),
        "verdicts": {"unmixed": unmixed.holds, "cohen_macaulay": cm.holds,
                     "sequentially_cm": scm.holds},
        "oracle": oracle,
        "mismatches": mismatches,
        "skipped": skipped,
    }


def _intersection_bound(profile, blocks):
    """dim(F cap G) <= q(i) + r(j) - 1 for F in block i, G in block j, i < j."""
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            limit = profile.q_bar[i] + profile.r_bar[j]
            for f in blocks[i]:
                for g in blocks[j]:
                    if len(f & g) > limit:
                        return False, (i + 1, j + 1, sorted(f), sorted(g))
    return True, None


def _check_spec_args(args):
    n, m, summands, level, perturb, cap_vertices, cap_facets = args
    spec = MixedProductSpec(ideals.VariableUniverse(n, m), summands)
    return check_spec(spec, level, perturb, cap_vertices, cap_facets)


def run_sweep(config: SweepConfig, record_sink=None) -> SweepResult:
    """Enumerate and check every spec within bounds.

    ``record_sink`` (optional callable) receives each per-spec record as
    it is produced, in enumeration order.
    """
    start = time.monotonic()
    result = SweepResult()
    specs = list(enumerate_specs(config.max_n, config.max_m, config.max_s))
    if config.workers > 1:
        args = [(s.universe.n, s.universe.m, s.summands, config.oracle_level,
                 config.perturb, config.cap_vertices, config.cap_facets) for s in specs]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_check_spec_args, args, chunksize=16))
    else:
        records = [check_spec(s, config.oracle_level, config.perturb,
                              config.cap_vertices, config.cap_facets) for s in specs]
    for record in records:
        result.configs_checked += 1
        result.mismatches.extend(record["mismatches"])
        result.skipped.extend(record["skipped"])
        result.records.append(record)
        if record_sink is not None:
            record_sink(record)
    result.elapsed = time.monotonic() - start
    return result


def profile_as_dict(profile):
    return {
        "s_prime": profile.s_prime,
        "q_bar": list(profile.q_bar),
        "r_bar": list(profile.r_bar),
        "sigma": list(profile.sigma),
        "height": profile.height,
        "dim": profile.dim_ring,
    }
