"""Mixed product specifics: profiles, closed forms, partitions, shellings."""

import pytest

from mixedprod import (
    InvalidInput,
    NonProperIdealError,
    QRProfile,
    VariableUniverse,
    ZeroIdealError,
    alexander_dual,
    closed_form_dual,
    closed_form_primary_decomposition,
    expand_generators,
    facet_partition,
    is_cm_closed_form,
    is_scm_closed_form,
    is_unmixed_closed_form,
    minimal_primes,
    normalize,
    qr_profile,
    shelling_order,
    skeleton,
    skeleton_profile,
    spec_from_profile,
    stanley_reisner_complex,
    verify_shelling_order,
)
from mixedprod.sweep import enumerate_specs

U22 = VariableUniverse(2, 2)
U13 = VariableUniverse(1, 3)
U11 = VariableUniverse(1, 1)


def spec(n, m, pairs):
    return normalize(VariableUniverse(n, m), pairs)


def gens(ideal):
    return sorted(sorted(g) for g in ideal.generators)


class TestNormalize:
    def test_domination(self):
        assert spec(2, 2, [(1, 1), (2, 2)]).summands == ((1, 1),)

    def test_zero_summand_dropped(self):
        assert spec(2, 2, [(3, 1), (1, 2)]).summands == ((1, 2),)

    def test_antichain_sorted(self):
        assert spec(3, 3, [(2, 1), (1, 2)]).summands == ((1, 2), (2, 1))

    def test_unit_summand_rejected(self):
        with pytest.raises(NonProperIdealError):
            spec(2, 2, [(0, 0)])

    def test_all_zero_rejected(self):
        with pytest.raises(ZeroIdealError):
            spec(2, 2, [(3, 3)])

    def test_empty_rejected(self):
        with pytest.raises(InvalidInput):
            spec(2, 2, [])

    def test_negative_rejected(self):
        with pytest.raises(InvalidInput):
            spec(2, 2, [(-1, 1)])


class TestExpand:
    def test_single_generator(self):
        assert gens(expand_generators(spec(1, 1, [(1, 1)]))) == [[0, 1]]

    def test_bipartite_edges(self):
        assert gens(expand_generators(spec(2, 2, [(1, 1)]))) == \
            [[0, 2], [0, 3], [1, 2], [1, 3]]

    def test_two_blocks(self):
        assert gens(expand_generators(spec(2, 2, [(0, 2), (2, 0)]))) == [[0, 1], [2, 3]]


class TestProfile:
    def test_both_positive(self):
        p = qr_profile(spec(2, 2, [(1, 1)]))
        assert (p.s_prime, p.q_bar, p.r_bar, p.sigma) == (2, (0, 2), (2, 0), (2, 2))

    def test_thin_star(self):
        p = qr_profile(spec(1, 3, [(1, 1)]))
        assert (p.s_prime, p.q_bar, p.r_bar, p.sigma) == (2, (0, 1), (3, 0), (3, 1))

    def test_maximal_ideal(self):
        p = qr_profile(spec(2, 2, [(0, 1), (1, 0)]))
        assert (p.s_prime, p.q_bar, p.r_bar, p.sigma) == (1, (0,), (0,), (0,))
        assert p.dim_ring == 0 and p.height == 4

    def test_monotone(self):
        for s in enumerate_specs(4, 4, 3):
            p = qr_profile(s)
            assert all(p.q_bar[i] < p.q_bar[i + 1] for i in range(p.s_prime - 1))
            assert all(p.r_bar[i] > p.r_bar[i + 1] for i in range(p.s_prime - 1))
            assert 0 <= p.q_bar[0] and p.q_bar[-1] <= s.universe.n
            assert 0 <= p.r_bar[-1] and p.r_bar[0] <= s.universe.m


class TestProfileInverse:
    def test_examples(self):
        assert spec_from_profile(QRProfile(U22, 2, (0, 2), (2, 0))).summands == ((1, 1),)
        assert spec_from_profile(QRProfile(U22, 1, (0,), (0,))).summands == ((0, 1), (1, 0))

    def test_round_trip_exhaustive(self):
        for s in enumerate_specs(4, 4, 3):
            assert spec_from_profile(qr_profile(s)) == s

    def test_rejects_non_monotone(self):
        with pytest.raises(InvalidInput):
            spec_from_profile(QRProfile(U22, 2, (1, 0), (2, 0)))
        with pytest.raises(InvalidInput):
            spec_from_profile(QRProfile(U22, 2, (0, 1), (0, 2)))


class TestClosedFormDual:
    def test_single_summand(self):
        assert closed_form_dual(spec(3, 2, [(2, 1)])).summands == ((0, 2), (2, 0))

    def test_principal(self):
        assert closed_form_dual(spec(1, 1, [(1, 1)])).summands == ((0, 1), (1, 0))

    def test_involution_exhaustive(self):
        for s in enumerate_specs(4, 4, 3):
            assert closed_form_dual(closed_form_dual(s)) == s

    def test_agrees_with_generic_dual_small(self):
        for s in enumerate_specs(3, 3, 3):
            assert expand_generators(closed_form_dual(s)) == \
                alexander_dual(expand_generators(s))


class TestPrimaryDecomposition:
    def test_bipartite(self):
        d = closed_form_primary_decomposition(spec(2, 2, [(1, 1)]))
        assert [sorted(c) for c in d.components] == [[0, 1], [2, 3]]

    def test_two_summands(self):
        d = closed_form_primary_decomposition(spec(2, 2, [(1, 2), (2, 1)]))
        assert len(d.px) == 1 and len(d.pxy) == 4 and len(d.py) == 1
        assert [sorted(c) for c in d.pxy] == [[0, 2], [0, 3], [1, 2], [1, 3]]

    def test_matches_minimal_primes_small(self):
        for s in enumerate_specs(3, 3, 3):
            d = closed_form_primary_decomposition(s)
            assert d.components == minimal_primes(expand_generators(s))


class TestUnmixed:
    def test_bipartite_unmixed(self):
        assert is_unmixed_closed_form(spec(2, 2, [(1, 1)])).holds

    def test_star_not_unmixed(self):
        v = is_unmixed_closed_form(spec(1, 3, [(1, 1)]))
        assert not v.holds and v.witness is not None

    def test_two_summands_unmixed(self):
        assert is_unmixed_closed_form(spec(2, 2, [(1, 2), (2, 1)])).holds


class TestCM:
    def test_single_edge_cm(self):
        assert is_cm_closed_form(spec(1, 1, [(1, 1)])).holds

    def test_two_disjoint_edges_not_cm(self):
        v = is_cm_closed_form(spec(2, 2, [(1, 1)]))
        assert not v.holds and v.witness == ("step", 1)

    def test_two_summands_cm(self):
        assert is_cm_closed_form(spec(2, 2, [(1, 2), (2, 1)])).holds

    def test_perturb_flips_somewhere(self):
        flipped = [s for s in enumerate_specs(2, 2, 2)
                   if is_cm_closed_form(s).holds != is_cm_closed_form(s, perturb=True).holds]
        assert flipped


class TestSCM:
    def test_star_scm(self):
        assert is_scm_closed_form(spec(1, 3, [(1, 1)])).holds

    def test_disjoint_edges_not_scm(self):
        v = is_scm_closed_form(spec(2, 2, [(1, 1)]))
        assert not v.holds and v.witness == ("step", 1)

    def test_cm_implies_scm_exhaustive(self):
        for s in enumerate_specs(4, 4, 3):
            if is_cm_closed_form(s).holds:
                assert is_scm_closed_form(s).holds
                assert is_unmixed_closed_form(s).holds

    def test_valley_witness(self):
        # sigma = (3, 2, 3): stepwise condition holds but unimodality fails
        s = spec(3, 3, [(1, 2), (2, 1)])
        p = qr_profile(s)
        assert p.sigma == (3, 2, 3)
        v = is_scm_closed_form(s)
        assert not v.holds and v.witness[0] == "valley"
        km, k, kp = v.witness[1]
        assert p.sigma[km - 1] > p.sigma[k - 1] < p.sigma[kp - 1]


class TestFacetPartition:
    def test_bipartite_blocks(self):
        blocks = facet_partition(spec(2, 2, [(1, 1)]))
        assert [[sorted(f) for f in b] for b in blocks] == [[[2, 3]], [[0, 1]]]

    def test_block_sizes(self):
        blocks = facet_partition(spec(2, 2, [(1, 2), (2, 1)]))
        assert [len(b) for b in blocks] == [1, 4, 1]

    def test_tiles_oracle_facets(self):
        from mixedprod.ideals import sort_key
        for s in enumerate_specs(3, 3, 3):
            c = stanley_reisner_complex(expand_generators(s))
            tiled = sorted((f for b in facet_partition(s) for f in b), key=sort_key)
            assert tiled == list(c.facets)


class TestShellingOrder:
    def test_worked_example(self):
        order = shelling_order(spec(2, 2, [(1, 2), (2, 1)]))
        assert [sorted(f) for f in order] == \
            [[2, 3], [0, 2], [0, 3], [1, 2], [1, 3], [0, 1]]

    def test_non_pure_star(self):
        order = shelling_order(spec(1, 3, [(1, 1)]))
        assert [sorted(f) for f in order] == [[1, 2, 3], [0]]
        c = stanley_reisner_complex(expand_generators(spec(1, 3, [(1, 1)])))
        assert verify_shelling_order(c, order) == (True, None)

    def test_not_applicable(self):
        assert shelling_order(spec(2, 2, [(1, 1)])) is None

    def test_r_condition_only(self):
        # q jumps by 2 but r steps by 1: only the mirrored construction applies
        s = spec(3, 2, [(1, 2), (3, 1)])
        p = qr_profile(s)
        assert any(p.q_bar[i + 1] != p.q_bar[i] + 1 for i in range(p.s_prime - 1))
        assert all(p.r_bar[i + 1] == p.r_bar[i] - 1 for i in range(p.s_prime - 1))
        order = shelling_order(s)
        c = stanley_reisner_complex(expand_generators(s))
        assert verify_shelling_order(c, order) == (True, None)

    def test_all_applicable_verify(self):
        for s in enumerate_specs(3, 3, 3):
            order = shelling_order(s)
            if order is None:
                continue
            c = stanley_reisner_complex(expand_generators(s))
            assert verify_shelling_order(c, order) == (True, None)


class TestSkeletonProfile:
    def test_star_vertices(self):
        assert skeleton_profile(spec(1, 3, [(1, 1)]), 1) == ((0, 1), (1, 0))

    def test_top_level(self):
        s = spec(2, 2, [(1, 1)])
        p = qr_profile(s)
        qb, rb = skeleton_profile(s, p.dim_ring)
        assert qb == p.q_bar and rb == p.r_bar

    def test_out_of_range(self):
        with pytest.raises(InvalidInput):
            skeleton_profile(spec(1, 1, [(1, 1)]), 5)

    def test_matches_skeleton_facets(self):
        for s in enumerate_specs(3, 3, 2):
            c = stanley_reisner_complex(expand_generators(s))
            p = qr_profile(s)
            n = s.universe.n
            for l in range(0, p.dim_ring + 1):
                qb, rb = skeleton_profile(s, l)
                sk = skeleton(c, l)
                got = sorted(
                    (sum(1 for v in f if v < n), sum(1 for v in f if v >= n))
                    for f in sk.facets)
                expected = sorted(set(zip(qb, rb)))
                assert sorted(set(got)) == expected


def test_ridge_adjacency_on_unmixed_specs():
    # facets from different blocks sharing a ridge force adjacent blocks
    # with unit q/r steps
    for s in enumerate_specs(3, 3, 3):
        if not is_unmixed_closed_form(s).holds:
            continue
        p = qr_profile(s)
        blocks = facet_partition(s)
        size = p.dim_ring
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                for f in blocks[i]:
                    for g in blocks[j]:
                        if len(f & g) == size - 1:
                            assert j == i + 1
                            assert p.q_bar[j] == p.q_bar[i] + 1
                            assert p.r_bar[j] == p.r_bar[i] - 1


def test_intersection_bound_exhaustive():
    for s in enumerate_specs(3, 3, 3):
        p = qr_profile(s)
        blocks = facet_partition(s)
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                for f in blocks[i]:
                    for g in blocks[j]:
                        assert len(f & g) <= p.q_bar[i] + p.r_bar[j]
