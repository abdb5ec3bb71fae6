"""
Tests para monomials/kernel.py

Minimal generators, membership, sum, product, intersection, colon and
bracket powers of monomial ideals, cross-checked against the Gröbner engine.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))


@pytest.fixture
def mono(ctx2):
    """Factory: mono(ctx, (1, 1, 0), (0, 1, 1)) → MonomialIdeal."""
    from monomials.kernel import mono_minimalize

    def _make(*gens, context=None):
        return mono_minimalize(context or ctx2, gens)

    return _make


XY, YZ = (1, 1, 0), (0, 1, 1)


class TestCanonicalForm:
    def test_drops_multiples_and_duplicates(self, mono):
        I = mono(XY, (2, 1, 0), YZ, XY, (1, 2, 3))
        assert I.generators == (XY, YZ)

    def test_sorted_descending(self, mono):
        # degrevlex: x^2y > xyz > yz^2
        I = mono((0, 1, 2), (2, 1, 0), (1, 1, 1))
        assert I.generators == ((2, 1, 0), (1, 1, 1), (0, 1, 2))

    def test_idempotent(self, ctx2, random_monomial_ideal):
        from monomials.kernel import mono_minimalize

        for _ in range(20):
            I = random_monomial_ideal(ctx2, ngens=5).to_monomial_ideal()
            assert mono_minimalize(ctx2, I.generators) == I

    def test_unit_absorbs_everything(self, mono):
        I = mono(XY, (0, 0, 0), YZ)
        assert I.generators == ((0, 0, 0),)
        assert I.is_unit

    def test_empty_is_zero(self, mono):
        I = mono()
        assert I.is_zero
        assert I.matrix.shape == (0, 3)

    def test_width_checked(self, mono):
        from core.error_handling import ContextMismatchError

        with pytest.raises(ContextMismatchError):
            mono((1, 1))

    def test_str(self, mono):
        assert str(mono(XY, YZ)) == "(x*y, y*z)"


class TestOperations:
    def test_membership(self, mono):
        I = mono(XY, YZ)
        assert (2, 3, 0) in I
        assert (0, 1, 5) in I
        assert (3, 0, 3) not in I
        assert (0, 0, 0) not in I
        assert XY not in mono()

    def test_containment(self, mono):
        from monomials.kernel import mono_contains

        I = mono(XY, YZ)
        assert mono_contains(I, mono((2, 2, 0), (1, 1, 1)))
        assert not mono_contains(I, mono((1, 0, 1)))
        assert mono_contains(I, mono())

    def test_sum_and_product(self, mono):
        from monomials.kernel import mono_product, mono_sum

        I, J = mono(XY), mono(YZ, (2, 0, 0))
        assert mono_sum(I, J).generators == ((2, 0, 0), XY, YZ)
        assert set(mono_product(I, J).generators) == {(3, 1, 0), (1, 2, 1)}

    def test_intersection_is_lcm_of_pairs(self, mono):
        from monomials.kernel import mono_intersection

        assert mono_intersection(mono(XY), mono(YZ)).generators == ((1, 1, 1),)
        assert mono_intersection(mono((1, 0, 0)), mono((2, 0, 0), (0, 1, 0))).generators == ((2, 0, 0), XY)

    def test_colon_by_monomial(self, mono):
        from monomials.kernel import mono_colon_monomial

        I2 = mono((2, 2, 0), (0, 2, 2))
        assert set(mono_colon_monomial(I2, XY).generators) == {XY, (0, 1, 2)}
        assert set(mono_colon_monomial(I2, YZ).generators) == {(2, 1, 0), YZ}
        assert mono_colon_monomial(I2, (0, 0, 0)) == I2

    def test_first_frobenius_colon(self, mono):
        from monomials.kernel import mono_bracket, mono_colon

        I = mono(XY, YZ)
        K1 = mono_colon(mono_bracket(I, 2), I)
        assert K1.generators == ((2, 1, 0), (1, 1, 1), (0, 1, 2))

    def test_colon_edge_cases(self, mono):
        from monomials.kernel import mono_colon

        I = mono(XY, YZ)
        assert mono_colon(I, mono()).is_unit
        assert mono_colon(I, I).is_unit
        assert mono_colon(I, mono((1, 2, 0))).is_unit

    def test_bracket(self, mono):
        from monomials.kernel import mono_bracket

        I = mono(XY, YZ)
        assert mono_bracket(I, 4).generators == ((4, 4, 0), (0, 4, 4))
        assert mono_bracket(I, 1) == I
        with pytest.raises(ValueError):
            mono_bracket(I, 0)

    def test_context_mismatch(self, make_context, mono):
        from core.error_handling import ContextMismatchError
        from monomials.kernel import mono_sum

        with pytest.raises(ContextMismatchError):
            mono_sum(mono(XY), mono(XY, context=make_context(3)))


class TestAlgebraicLaws:
    @pytest.mark.parametrize("p", [2, 3])
    def test_bracket_composes(self, p, make_context, random_monomial_ideal):
        from monomials.kernel import mono_bracket

        ctx = make_context(p)
        for _ in range(10):
            I = random_monomial_ideal(ctx).to_monomial_ideal()
            assert mono_bracket(mono_bracket(I, p), p) == mono_bracket(I, p * p)

    def test_bracket_distributes_over_products(self, ctx2, random_monomial_ideal):
        from monomials.kernel import mono_bracket, mono_product

        for _ in range(10):
            I = random_monomial_ideal(ctx2).to_monomial_ideal()
            J = random_monomial_ideal(ctx2).to_monomial_ideal()
            assert mono_bracket(mono_product(I, J), 2) == mono_product(mono_bracket(I, 2), mono_bracket(J, 2))

    def test_colon_duality(self, ctx2, random_monomial_ideal):
        from monomials.kernel import mono_colon, mono_contains, mono_product

        for _ in range(15):
            I = random_monomial_ideal(ctx2, ngens=4).to_monomial_ideal()
            J = random_monomial_ideal(ctx2, ngens=2).to_monomial_ideal()
            C = mono_colon(I, J)
            assert mono_contains(I, mono_product(C, J))
            assert mono_contains(mono_colon(I, C), J)

    def test_intersection_inside_both(self, ctx2, random_monomial_ideal):
        from monomials.kernel import mono_contains, mono_intersection, mono_product

        for _ in range(15):
            I = random_monomial_ideal(ctx2).to_monomial_ideal()
            J = random_monomial_ideal(ctx2).to_monomial_ideal()
            meet = mono_intersection(I, J)
            assert mono_contains(I, meet) and mono_contains(J, meet)
            assert mono_contains(meet, mono_product(I, J))


class TestAgainstGroebnerEngine:
    """The kernel and the general engine must produce the same ideals."""

    @pytest.mark.parametrize("operation", ["ideal_sum", "ideal_product", "ideal_intersection", "ideal_colon"])
    def test_operations_agree(self, operation, ctx2, random_monomial_ideal):
        import groebner.operations as ops
        from groebner.ideal import ComputePath

        func = getattr(ops, operation)
        for _ in range(8):
            I = random_monomial_ideal(ctx2, ngens=3, max_exp=2)
            J = random_monomial_ideal(ctx2, ngens=2, max_exp=2)
            fast = func(I, J, ComputePath.MONOMIAL)
            slow = func(I, J, ComputePath.GROEBNER)
            assert ops.ideal_equal(fast, slow, ComputePath.GROEBNER)

    def test_bracket_and_membership_agree(self, make_context, random_monomial_ideal, random_polynomial):
        from groebner.ideal import ComputePath
        from groebner.operations import bracket_power, ideal_equal, ideal_membership

        ctx = make_context(3)
        for _ in range(8):
            I = random_monomial_ideal(ctx, max_exp=2)
            assert ideal_equal(
                bracket_power(I, 1, ComputePath.MONOMIAL), bracket_power(I, 1, ComputePath.GROEBNER), ComputePath.GROEBNER
            )
            f = random_polynomial(ctx, terms=3, max_deg=3)
            assert ideal_membership(f, I, ComputePath.MONOMIAL) == ideal_membership(f, I, ComputePath.GROEBNER)


@pytest.mark.slow
@pytest.mark.parametrize("p", [2, 3, 5])
def test_oracle_equivalence_on_many_random_ideals(p, make_context, rng):
    """Random ideals in up to 4 variables, exponents up to 6, up to 5 generators."""
    from algebra.polynomial import Polynomial
    from groebner.ideal import ComputePath, Ideal
    from groebner.operations import (
        bracket_power,
        ideal_colon,
        ideal_equal,
        ideal_intersection,
        ideal_membership,
        ideal_product,
    )

    ctx = make_context(p, "x, y, z, w")

    def random_ideal(max_gens):
        gens = []
        for _ in range(int(rng.integers(1, max_gens + 1))):
            exps = tuple(int(a) for a in rng.integers(0, 7, size=4))
            if any(exps):
                gens.append(Polynomial.from_monomial(ctx, exps))
        return Ideal(ctx, gens or [Polynomial.variable(ctx, "x")])

    M, G = ComputePath.MONOMIAL, ComputePath.GROEBNER
    for _ in range(70):
        I, J = random_ideal(5), random_ideal(2)
        for op in (ideal_colon, ideal_intersection, ideal_product):
            assert ideal_equal(op(I, J, M), op(I, J, G), G)
        assert ideal_equal(bracket_power(I, 1, M), bracket_power(I, 1, G), G)
        m = Polynomial.from_monomial(ctx, [int(a) for a in rng.integers(0, 8, size=4)])
        assert ideal_membership(m, I, M) == ideal_membership(m, I, G)
