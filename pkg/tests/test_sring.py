import math

import pytest
from hypothesis import given, settings, strategies as st

from ratcirc import (
    DivisorLattice,
    NotRationalError,
    basic_sets_from_lattice,
    divisors,
    generate_sring,
    generator_subset,
    group_basis,
    is_rational,
    is_trace_closed,
    orbit_set,
    subgroup,
    sublattices,
    trace,
    trivial_lattice,
)


def union_of_orbits(n, ds):
    out = set()
    for d in ds:
        out |= orbit_set(n, d)
    return frozenset(out)


class TestOrbitSet:
    def test_examples(self):
        assert orbit_set(36, 6) == {6, 30}
        assert orbit_set(9, 9) == {0}
        assert orbit_set(6, 1) == {1, 5}

    def test_size_is_totient(self):
        from ratcirc.arith import totient

        for n in (12, 30, 36):
            for d in divisors(n):
                assert len(orbit_set(n, d)) == totient(n // d)

    def test_rejects_non_divisor(self):
        with pytest.raises(ValueError):
            orbit_set(6, 4)

    def test_orbits_partition_zn(self):
        for n in (1, 7, 24):
            assert sorted(x for d in divisors(n) for x in orbit_set(n, d)) == list(
                range(n)
            )


class TestTrace:
    def test_unit_orbit(self):
        assert trace(6, {1}) == {1, 5}

    def test_single_element_of_z36(self):
        assert trace(36, {6}) == {6, 30}

    def test_striking_set_is_closed(self):
        s = union_of_orbits(36, (2, 3, 4, 6))
        assert trace(36, s) == s
        assert is_trace_closed(36, s)

    @given(st.data())
    @settings(max_examples=50)
    def test_idempotent_and_orbit_union(self, data):
        n = data.draw(st.integers(min_value=1, max_value=30))
        s = frozenset(data.draw(st.lists(st.integers(0, n - 1), max_size=5)))
        t = trace(n, s)
        assert trace(n, t) == t
        for x in t:
            assert orbit_set(n, math.gcd(x, n)) <= t


class TestGenerateSRing:
    def test_hexagon(self):
        ring = generate_sring(6, {1, 5})
        assert [sorted(t) for t in ring.basic_sets] == [[0], [1, 5], [2, 4], [3]]

    def test_complete_graph_gives_trivial_ring(self):
        ring = generate_sring(6, set(range(1, 6)))
        assert ring.rank == 2

    def test_striking_rank_8(self):
        ring = generate_sring(36, union_of_orbits(36, (2, 3, 4, 6)))
        q = lambda d: orbit_set(36, d)
        expected = sorted(
            [
                q(36),
                q(2) | q(4),
                q(3),
                q(6),
                q(9),
                q(12),
                q(18),
                q(1),
            ],
            key=min,
        )
        assert list(ring.basic_sets) == expected

    def test_zero_is_split_off(self):
        ring = generate_sring(8, {0, 1, 7})
        assert ring.basic_sets[0] == frozenset({0})

    def test_axioms_hold(self):
        for n, s in [(6, {1, 5}), (8, {1, 2}), (12, {1, 5, 7, 11}), (5, {1})]:
            generate_sring(n, s).validate()

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_axioms_on_random_sets(self, data):
        n = data.draw(st.integers(min_value=2, max_value=20))
        s = data.draw(st.lists(st.integers(0, n - 1), max_size=6))
        ring = generate_sring(n, s)
        ring.validate()
        # the seed set minus 0 must be a union of classes
        seed = frozenset(x % n for x in s) - {0}
        assert ring.is_union_of_classes(seed)

    def test_trace_refinement_property(self):
        # closing the trace gives a partition coarser or equal to closing s
        for n, s in [(12, {1, 2}), (10, {1, 3}), (9, {1})]:
            fine = generate_sring(n, s)
            coarse = generate_sring(n, trace(n, s))
            for t in coarse.basic_sets:
                assert fine.is_union_of_classes(t)

    def test_trace_closure_equality_iff_trace_closed(self):
        # exhaustive over all subsets for small n
        for n in range(2, 10):
            for bits in range(1 << (n - 1)):
                s = frozenset(x for x in range(1, n) if bits >> (x - 1) & 1)
                same = generate_sring(n, s) == generate_sring(n, trace(n, s))
                assert same == is_trace_closed(n, s), (n, sorted(s))


class TestIsRational:
    def test_hexagon_ring_rational(self):
        assert is_rational(generate_sring(6, {1, 5}))

    def test_trivial_ring_rational(self):
        assert is_rational(generate_sring(9, set(range(1, 9))))

    def test_directed_pentagon_not_rational(self):
        ring = generate_sring(5, {1})
        assert ring.rank == 5
        assert not is_rational(ring)


class TestGroupBasis:
    def test_hexagon(self):
        assert group_basis(generate_sring(6, {1, 5})).lattice.elements == (1, 2, 3, 6)

    def test_trivial(self):
        got = group_basis(generate_sring(10, set(range(1, 10)))).lattice
        assert got.elements == (1, 10)

    def test_striking(self, striking_lattice):
        ring = generate_sring(36, union_of_orbits(36, (2, 3, 4, 6)))
        rs = group_basis(ring)
        assert rs.lattice == striking_lattice
        # the subgroup of order 18 stripped of smaller members is Q_2 u Q_4
        assert orbit_set(36, 2) | orbit_set(36, 4) in set(ring.basic_sets)

    def test_rejects_non_rational(self):
        with pytest.raises(NotRationalError):
            group_basis(generate_sring(5, {1}))


class TestBasicSetsFromLattice:
    def test_full_lattice_of_6(self):
        rs = basic_sets_from_lattice(DivisorLattice(6, (1, 2, 3, 6)))
        assert set(rs.ring.basic_sets) == {
            frozenset({0}),
            frozenset({3}),
            frozenset({2, 4}),
            frozenset({1, 5}),
        }

    def test_trivial(self):
        rs = basic_sets_from_lattice(trivial_lattice(7))
        assert set(rs.ring.basic_sets) == {frozenset({0}), frozenset(range(1, 7))}

    def test_striking(self, striking_lattice):
        rs = basic_sets_from_lattice(striking_lattice)
        assert rs.ring == generate_sring(36, union_of_orbits(36, (2, 3, 4, 6)))

    def test_round_trip_up_to_30(self):
        for n in range(1, 31):
            for lat in sublattices(n):
                assert group_basis(basic_sets_from_lattice(lat).ring).lattice == lat

    def test_rank_and_sizes(self):
        for n in (12, 18, 36):
            for lat in sublattices(n):
                ring = basic_sets_from_lattice(lat).ring
                assert ring.rank == len(lat)
                assert sum(len(t) for t in ring.basic_sets) == n


class TestStructureConstants:
    def test_transpose_symmetry(self):
        ring = generate_sring(12, {1, 11})
        p = ring.structure_constants()
        idx = ring.class_index()
        n = ring.n
        neg = [idx[(-min(t)) % n] for t in ring.basic_sets]
        for (i, j, k), v in p.items():
            # transposing the product reverses the factors and negates classes
            assert p[(neg[j], neg[i], neg[k])] == v

    def test_row_sums(self):
        ring = generate_sring(10, {1, 9})
        p = ring.structure_constants()
        sizes = [len(t) for t in ring.basic_sets]
        r = ring.rank
        for i in range(r):
            for j in range(r):
                total = sum(p[(i, j, k)] * sizes[k] for k in range(r))
                assert total == sizes[i] * sizes[j]


class TestGeneratorSubset:
    def test_trivial_lattice_gives_complete_graph(self):
        assert generator_subset(trivial_lattice(6)) == frozenset(range(1, 6))

    def test_full_lattice_of_6(self):
        s = generator_subset(DivisorLattice(6, (1, 2, 3, 6)))
        assert is_trace_closed(6, s)
        assert 0 not in s
        assert group_basis(generate_sring(6, s)).lattice.elements == (1, 2, 3, 6)

    def test_striking(self, striking_lattice):
        s = generator_subset(striking_lattice)
        assert is_trace_closed(36, s)
        assert group_basis(generate_sring(36, s)).lattice == striking_lattice

    def test_all_lattices_up_to_30(self):
        for n in range(1, 31):
            for lat in sublattices(n):
                generator_subset(lat)  # internal verification raises on failure


class TestJson:
    def test_shape(self):
        d = generate_sring(6, {1, 5}).to_json_dict()
        assert d == {
            "n": 6,
            "rank": 4,
            "basic_sets": [[0], [1, 5], [2, 4], [3]],
            "rational": True,
            "group_basis": [1, 2, 3, 6],
        }

    def test_non_rational_has_null_basis(self):
        d = generate_sring(5, {1}).to_json_dict()
        assert d["rational"] is False
        assert d["group_basis"] is None


def test_subgroup_helper():
    assert subgroup(12, 4) == {0, 3, 6, 9}
    with pytest.raises(ValueError):
        subgroup(12, 5)
