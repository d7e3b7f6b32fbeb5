import itertools

import pytest
from hypothesis import given, strategies as st

from constakit import gf
from constakit.errors import FieldMismatchError, ParameterError
from constakit.polyring import (
    Poly,
    is_self_reciprocal,
    monic_hat,
    reciprocal,
    scale_sub,
)

F3 = gf.make_field(3)
F5 = gf.make_field(5)
F7 = gf.make_field(7)
F9 = gf.make_field(3, 2)


def rand_poly(field, rng, max_deg):
    L = rng.randrange(max_deg + 2)
    return Poly.from_elements(
        field, [field.element_from_index(rng.randrange(field.q)) for _ in range(L)]
    )


def all_monic_polys(field, max_deg):
    for d in range(max_deg + 1):
        for tail in itertools.product(range(field.q), repeat=d):
            yield Poly.from_elements(
                field,
                [field.element_from_index(i) for i in tail] + [field.one],
            )


class TestArithmeticSuite:
    def test_gcd_with_zero_is_monic(self):
        f = Poly.from_ints(F5, [3, 0, 3])
        assert f.gcd(Poly.zero(F5)) == monic_hat(f)
        assert Poly.zero(F5).gcd(f) == monic_hat(f)

    def test_divmod_factorization_identity(self):
        q, r = divmod(Poly.from_ints(F5, [-1, 0, 1]), Poly.from_ints(F5, [-1, 1]))
        assert q == Poly.from_ints(F5, [1, 1])
        assert r.is_zero()

    def test_gcd_x3_x2_over_f7(self):
        g = Poly.from_ints(F7, [-1, 0, 0, 1]).gcd(Poly.from_ints(F7, [-1, 0, 1]))
        assert g == Poly.from_ints(F7, [-1, 1])
        # oracle: 1 is the only common root over all of F_7
        for x in F7.elements():
            both = (
                Poly.from_ints(F7, [-1, 0, 0, 1]).eval(x).is_zero()
                and Poly.from_ints(F7, [-1, 0, 1]).eval(x).is_zero()
            )
            assert both == (x == F7.one)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(Poly.one(F5), Poly.zero(F5))

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            Poly.one(F5) * Poly.one(F7)

    def test_ring_axioms_random(self, rng):
        for field in (F3, F5, F9):
            for _ in range(300):
                f, g, h = (rand_poly(field, rng, 6) for _ in range(3))
                assert (f + g) * h == f * h + g * h
                assert (f * g) * h == f * (g * h)
                assert f + g == g + f

    def test_divmod_identity_random(self, rng):
        for field in (F3, F5, F9):
            for _ in range(300):
                f = rand_poly(field, rng, 9)
                d = rand_poly(field, rng, 4)
                if d.is_zero():
                    continue
                q, r = divmod(f, d)
                assert q * d + r == f
                assert r.degree < d.degree

    @given(
        st.lists(st.integers(0, 4), max_size=8),
        st.lists(st.integers(0, 4), max_size=8),
        st.lists(st.integers(0, 4), max_size=8),
    )
    def test_ring_axioms_hypothesis(self, a, b, c):
        f, g, h = (Poly.from_ints(F5, v) for v in (a, b, c))
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f

    def test_pow_matches_repeated_multiplication(self, rng):
        for field in (F5, F9):
            for _ in range(50):
                f = rand_poly(field, rng, 3)
                acc = Poly.one(field)
                for k in range(8):
                    assert f**k == acc
                    acc = acc * f

    def test_gcd_against_common_divisor_scan(self, rng):
        # gcd divides both inputs and every common divisor divides the gcd
        for field in (F3, F5):
            pairs = 0
            rng_local = rng
            while pairs < 4:
                f = rand_poly(field, rng_local, 5)
                g = rand_poly(field, rng_local, 5)
                if f.is_zero() or g.is_zero():
                    continue
                pairs += 1
                d = f.gcd(g)
                assert (f % d).is_zero() and (g % d).is_zero()
                for cand in all_monic_polys(field, min(f.degree, g.degree)):
                    if cand.degree < 1:
                        continue
                    if (f % cand).is_zero() and (g % cand).is_zero():
                        assert (d % cand).is_zero()


class TestMonicHat:
    def test_example_over_f5(self):
        assert monic_hat(Poly.from_ints(F5, [3, 0, 3])) == Poly.from_ints(F5, [1, 0, 1])

    def test_idempotent_on_monic(self):
        f = Poly.from_ints(F5, [2, 4, 1])
        assert monic_hat(f) == f

    def test_constant_becomes_one(self):
        assert monic_hat(Poly.from_ints(F5, [3])) == Poly.one(F5)

    def test_zero_rejected(self):
        with pytest.raises(ParameterError):
            monic_hat(Poly.zero(F5))


class TestReciprocal:
    def test_self_reciprocal_linear(self):
        f = Poly.from_ints(F5, [-1, 1])
        assert reciprocal(f) == f

    def test_example_over_f3(self):
        assert reciprocal(Poly.from_ints(F3, [2, 1, 1])) == Poly.from_ints(F3, [2, 2, 1])

    def test_binomial_inverts_lambda(self):
        lam = F7.elem(3)
        f = Poly.binomial(F7, 6, -lam)
        assert reciprocal(f) == Poly.binomial(F7, 6, -lam.inverse())

    def test_involution(self, rng):
        for _ in range(200):
            f = rand_poly(F5, rng, 8)
            if f.is_zero() or f.constant().is_zero():
                continue
            assert reciprocal(reciprocal(f)) == monic_hat(f)

    def test_zero_constant_rejected(self):
        with pytest.raises(ParameterError):
            reciprocal(Poly.from_ints(F5, [0, 1]))

    def test_roots_are_inverted_exhaustive(self):
        # root multisets over a splitting extension are inverted
        t = gf.build_tower(F3, 4)  # F_81 splits deg<=4 irreducibles of interest
        T = t.ext
        f = Poly.from_ints(F3, [2, 1, 0, 1, 1])  # arbitrary with f(0) != 0
        fT = Poly.from_elements(T, [t.embed(c) for c in f.coeffs()])
        rT = Poly.from_elements(T, [t.embed(c) for c in reciprocal(f).coeffs()])
        roots_f = sorted(x.vec for x in T.elements() if fT.eval(x).is_zero())
        roots_r = sorted(
            x.inverse().vec for x in T.elements() if rT.eval(x).is_zero()
        )
        assert roots_f == roots_r


class TestScaleSub:
    def test_identity_scale(self):
        f = Poly.from_ints(F5, [1, 2, 3])
        assert scale_sub(f, F5.one) == f

    def test_example_over_f5(self):
        f = scale_sub(Poly.from_ints(F5, [1, 0, 1]), F5.elem(2))
        assert f == Poly.from_ints(F5, [1, 0, 4])
        assert monic_hat(f) == Poly.from_ints(F5, [4, 0, 1])

    def test_degree_preserved_random(self, rng):
        for _ in range(200):
            f = rand_poly(F7, rng, 9)
            a = F7.element_from_index(rng.randrange(1, 7))
            assert scale_sub(f, a).degree == f.degree

    def test_involution_with_inverse(self, rng):
        for field in (F5, F9):
            for _ in range(100):
                f = rand_poly(field, rng, 7)
                a = field.element_from_index(rng.randrange(1, field.q))
                assert scale_sub(scale_sub(f, a), a.inverse()) == f

    def test_zero_scale_rejected(self):
        with pytest.raises(ParameterError):
            scale_sub(Poly.one(F5), F5.zero)


class TestSelfReciprocal:
    def test_examples(self):
        assert is_self_reciprocal(Poly.from_ints(F7, [1, 1]))
        assert not is_self_reciprocal(Poly.from_ints(F7, [-2, 1]))
        assert is_self_reciprocal(Poly.from_ints(F3, [1, 0, 1]))


class TestEvalAndJson:
    def test_eval_horner(self):
        f = Poly.from_ints(F7, [-1, 0, 0, 1])
        assert f.eval(F7.elem(2)).is_zero()
        assert f.eval(F7.elem(3)) == F7.elem(26 % 7)

    def test_json_roundtrip_shape(self):
        f = Poly.from_elements(F9, [F9.elem([1, 2]), F9.one])
        assert f.to_json() == {"coeffs": [[1, 2], [1, 0]]}
