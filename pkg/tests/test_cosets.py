import pytest

from constakit import cosets
from constakit.errors import ParameterError


class TestMultOrder:
    def test_modulus_one(self):
        assert cosets.mult_order(7, 1) == 1

    def test_examples(self):
        assert cosets.mult_order(3, 5) == 4  # 3, 4, 2, 1
        assert cosets.mult_order(7, 9) == 3  # 7, 4, 1

    def test_gcd_requirement(self):
        with pytest.raises(ParameterError):
            cosets.mult_order(6, 9)


class TestUnitGroupGenerator:
    def test_examples(self):
        assert cosets.unit_group_generator(3, 1) == 2
        assert cosets.unit_group_generator(3, 2) == 2  # order 6 mod 9
        assert cosets.unit_group_generator(5, 1) == 2  # 2, 4, 3, 1

    def test_generates_full_group(self):
        for ell, m in [(3, 2), (5, 2), (7, 1), (11, 1)]:
            g = cosets.unit_group_generator(ell, m)
            mod = ell**m
            seen = set()
            acc = 1
            for _ in range(mod):
                acc = (acc * g) % mod
                seen.add(acc)
            assert len(seen) == mod - mod // ell


class TestOrderProfile:
    def test_q7_l3_m2(self):
        p = cosets.order_profile(7, 3, 2)
        assert (p.f, p.s, p.t) == (1, 1, 2)  # 7 = 1 + 3*2
        assert p.lam == (1, 3)
        assert p.delta == (2, 2)
        assert p.e == 4

    def test_q3_l5(self):
        p = cosets.order_profile(3, 5, 1)
        assert p.f == 4 and p.lam == (4,) and p.delta == (1,) and p.e == 1

    def test_q5_l3(self):
        p = cosets.order_profile(5, 3, 1)
        assert p.f == 2 and p.delta == (1,) and p.e == 1

    def test_rejects_l_dividing_q(self):
        with pytest.raises(ParameterError):
            cosets.order_profile(9, 3, 1)

    @pytest.mark.parametrize(
        "q,ell,m",
        [(q, ell, m) for q in (3, 5, 7, 9, 11, 13) for ell in (3, 5, 7, 11)
         for m in (1, 2) if q % ell != 0],
    )
    def test_formula_matches_direct_order_and_counting(self, q, ell, m):
        p = cosets.order_profile(q, ell, m)
        for r in range(1, m + 1):
            assert p.lam[r - 1] == cosets.mult_order(q, ell**r)
        assert 1 + sum(l * d for l, d in zip(p.lam, p.delta)) == ell**m
        assert p.e == sum(p.delta)


class TestCosetTable:
    def test_q7_l3_m2_members(self):
        t = cosets.coset_table(7, 3, 2)
        assert [c.members for c in t.cosets] == [
            (0,), (3,), (6,), (1, 4, 7), (2, 5, 8)
        ]

    def test_q3_l5_with_refinement(self):
        t = cosets.coset_table(3, 5, 1)
        assert [c.members for c in t.cosets] == [(0,), (1, 2, 3, 4)]
        assert t.q2_split == (((0,),), ((1, 4), (2, 3)))

    def test_q5_l3_even_f_splits(self):
        t = cosets.coset_table(5, 3, 1)
        assert t.q2_split == (((0,),), ((1,), (2,)))

    def test_odd_f_no_refinement(self):
        t = cosets.coset_table(7, 3, 1)  # f = 1 odd
        assert t.q2_split is None

    @pytest.mark.parametrize(
        "q,ell,m",
        [(q, ell, m) for q in (3, 5, 7, 9, 11, 13) for ell in (3, 5, 7, 11)
         for m in (1, 2) if q % ell != 0],
    )
    def test_partition_and_sizes(self, q, ell, m):
        t = cosets.coset_table(q, ell, m)
        mod = ell**m
        members = sorted(v for c in t.cosets for v in c.members)
        assert members == list(range(mod))
        for c in t.cosets[1:]:
            assert len(c.members) == t.profile.lam[c.r - 1]
        if t.profile.f % 2 == 0:
            for c, parts in zip(t.cosets[1:], t.q2_split[1:]):
                assert len(parts) == 2
                assert len(parts[0]) == len(parts[1]) == len(c.members) // 2
                assert sorted(parts[0] + parts[1]) == list(c.members)


class TestNegationMap:
    def test_zero_coset_fixed(self):
        t = cosets.coset_table(7, 3, 2)
        assert cosets.negation_coset_map(t)[0] == 0

    def test_q3_l5_fixed_point(self):
        t = cosets.coset_table(3, 5, 1)
        nm = cosets.negation_coset_map(t)
        assert nm[1] == 1  # -1 = 4 lies in the same coset (f even)

    def test_q7_l3_odd_f_swaps(self):
        t = cosets.coset_table(7, 3, 1)
        nm = cosets.negation_coset_map(t)
        assert nm == (0, 2, 1)

    @pytest.mark.parametrize(
        "q,ell,m",
        [(q, ell, m) for q in (3, 5, 7, 9, 11, 13) for ell in (3, 5, 7, 11)
         for m in (1, 2) if q % ell != 0],
    )
    def test_involution_and_odd_f_fixed_points(self, q, ell, m):
        t = cosets.coset_table(q, ell, m)
        nm = cosets.negation_coset_map(t)
        for i, j in enumerate(nm):
            assert nm[j] == i
        if t.profile.f % 2 == 1:
            assert [i for i, j in enumerate(nm) if i == j] == [0]


class TestJson:
    def test_table_json_shape(self):
        js = cosets.coset_table(3, 5, 1).to_json()
        assert js["profile"]["e"] == 1
        assert js["cosets"][1]["members"] == [1, 2, 3, 4]
        assert js["q2_cosets"][1] == [[1, 4], [2, 3]]
