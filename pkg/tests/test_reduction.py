"""
Tests para algebra/reduction.py

Division with remainder and exact quotients.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))


class TestNormalForm:
    def test_zero_dividend(self, ctx2, poly):
        from algebra.polynomial import Polynomial
        from algebra.reduction import normal_form

        g = poly("x*y + z", ctx2)
        remainder, cofactors = normal_form(Polynomial.zero(ctx2), [g])
        assert remainder.is_zero
        assert [c.is_zero for c in cofactors] == [True]

    def test_self_reduction(self, make_context, poly):
        from algebra.reduction import normal_form

        ctx = make_context(5)
        g = poly("3*x*y + z^2 + 1", ctx)
        remainder, cofactors = normal_form(g, [g])
        assert remainder.is_zero
        assert cofactors == [poly("1", ctx)]

    def test_one_step_by_hand(self, make_context, poly):
        from algebra.reduction import normal_form

        ctx = make_context(5)
        remainder, cofactors = normal_form(poly("x^2*y", ctx), [poly("x*y - z^2", ctx)])
        assert remainder == poly("x*z^2", ctx)
        assert cofactors == [poly("x", ctx)]

    def test_divisors_tried_in_list_order(self, make_context, poly):
        from algebra.reduction import normal_form

        ctx = make_context(3)
        f = poly("x*y", ctx)
        g1, g2 = poly("x + z", ctx), poly("y + z", ctx)
        _, first = normal_form(f, [g1, g2])
        _, second = normal_form(f, [g2, g1])
        assert first == [poly("y", ctx), poly("2*z", ctx)]
        assert second == [poly("x", ctx), poly("2*z", ctx)]

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_division_identity(self, p, make_context, random_polynomial):
        from algebra.monomial import monomial_divides
        from algebra.reduction import normal_form

        ctx = make_context(p)
        for _ in range(20):
            f = random_polynomial(ctx, terms=6, max_deg=4)
            divisors = [random_polynomial(ctx, terms=3, max_deg=2) for _ in range(3)]
            divisors = [g for g in divisors if not g.is_zero]
            remainder, cofactors = normal_form(f, divisors)

            total = remainder
            for c, g in zip(cofactors, divisors):
                total = total + c * g
            assert total == f

            leading = [g.leading_monomial for g in divisors]
            for m in remainder.monomials():
                assert not any(monomial_divides(lm, m) for lm in leading)

    def test_zero_divisor_rejected(self, ctx2, poly):
        from algebra.polynomial import Polynomial
        from algebra.reduction import reduce_polynomial

        with pytest.raises(ValueError):
            reduce_polynomial(poly("x", ctx2), [Polynomial.zero(ctx2)])

    def test_context_mismatch(self, make_context, poly):
        from algebra.reduction import reduce_polynomial
        from core.error_handling import ContextMismatchError

        with pytest.raises(ContextMismatchError):
            reduce_polynomial(poly("x", make_context(2)), [poly("x", make_context(3))])


class TestExactDivide:
    def test_quotient(self, make_context, poly):
        from algebra.reduction import exact_divide

        ctx = make_context(3)
        g = poly("x*y - z", ctx)
        q = poly("x + 2*z^2", ctx)
        assert exact_divide(g * q, g) == q

    def test_non_divisor_is_internal_error(self, ctx2, poly):
        from algebra.reduction import exact_divide
        from core.error_handling import InternalError

        with pytest.raises(InternalError):
            exact_divide(poly("x", ctx2), poly("y", ctx2))
