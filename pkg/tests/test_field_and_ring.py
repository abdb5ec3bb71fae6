"""
Tests para algebra/field.py, algebra/ring.py y algebra/monomial.py

GF(p) scalars, ring contexts and monomial orders.
"""

import sys
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))


class TestPrimeField:
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 101])
    def test_primes_accepted(self, p):
        from algebra.field import check_characteristic

        assert check_characteristic(p) == p

    @pytest.mark.parametrize("p", [-3, 0, 1, 4, 9, 91])
    def test_non_primes_rejected(self, p):
        from algebra.field import check_characteristic
        from core.error_handling import NonPrimeCharacteristicError

        with pytest.raises(NonPrimeCharacteristicError):
            check_characteristic(p)

    def test_arithmetic_is_mod_p(self):
        from algebra.field import FieldElement, PrimeField

        F = PrimeField(5)
        assert F(7) == FieldElement(2, 5)
        assert F(3) * F(2) == F(1)
        assert F(3) + 4 == F(2)
        assert -F(1) == F(4)
        assert F(2) - F(4) == F(3)

    def test_every_nonzero_element_is_invertible(self):
        from algebra.field import PrimeField

        F = PrimeField(7)
        for a in range(1, 7):
            assert F(a) * F(a).inverse() == F.one
            assert F(a) / F(a) == F.one

    def test_zero_has_no_inverse(self):
        from algebra.field import PrimeField

        with pytest.raises(ZeroDivisionError):
            PrimeField(3).zero.inverse()

    def test_mixing_fields_raises(self):
        from algebra.field import PrimeField

        with pytest.raises(ValueError):
            PrimeField(3)(1) + PrimeField(5)(1)


class TestRingContext:
    def test_basic_properties(self, make_context):
        ctx = make_context(3, "x, y, z")
        assert ctx.p == 3
        assert ctx.nvars == 3
        assert ctx.order.value == "degrevlex"
        assert ctx.variable_monomial("y") == (0, 1, 0)
        assert ctx.one_monomial == (0, 0, 0)

    def test_non_prime_characteristic(self, make_context):
        from core.error_handling import NonPrimeCharacteristicError

        with pytest.raises(NonPrimeCharacteristicError):
            make_context(4)

    @pytest.mark.parametrize("names", [["x", "x"], ["1x"], ["x-y"], [""], []])
    def test_bad_variables(self, names):
        from algebra.ring import RingContext
        from core.error_handling import ConfigurationError

        with pytest.raises(ConfigurationError):
            RingContext(2, tuple(names))

    def test_auxiliary_variable_is_fresh_and_eliminated(self, make_context):
        from algebra.monomial import MonomialOrder

        aux = make_context(2, "x, y").with_auxiliary_variable()
        assert aux.variables == ("t", "x", "y")
        assert aux.order is MonomialOrder.ELIMINATION

        taken = make_context(2, "t, x").with_auxiliary_variable()
        assert taken.variables[0] not in ("t", "x")

    def test_contexts_compare_by_value(self, make_context):
        assert make_context(2) == make_context(2)
        assert make_context(2) != make_context(3)
        assert make_context(2) != make_context(2, order="lex")


class TestMonomialOrders:
    def test_degrevlex_examples(self):
        from algebra.monomial import Ordering, mono_compare

        assert mono_compare((1, 1, 0), (0, 0, 2)) is Ordering.GREATER  # xy > z^2
        assert mono_compare((3, 0, 0), (1, 1, 0)) is Ordering.GREATER  # x^3 > xy
        assert mono_compare((1, 2, 3), (1, 2, 3)) is Ordering.EQUAL

    def test_degrevlex_differs_from_grlex(self):
        from algebra.monomial import MonomialOrder, Ordering, mono_compare

        # x*z^2 vs y^3: grlex prefers the x, degrevlex penalises the z
        assert mono_compare((1, 0, 2), (0, 3, 0), MonomialOrder.GRLEX) is Ordering.GREATER
        assert mono_compare((1, 0, 2), (0, 3, 0), MonomialOrder.DEGREVLEX) is Ordering.LESS

    def test_lex(self):
        from algebra.monomial import MonomialOrder, Ordering, mono_compare

        assert mono_compare((1, 0, 0), (0, 5, 5), MonomialOrder.LEX) is Ordering.GREATER

    def test_elimination_order_puts_first_variable_above_everything(self):
        from algebra.monomial import MonomialOrder, Ordering, mono_compare

        assert mono_compare((1, 0, 0), (0, 9, 9), MonomialOrder.ELIMINATION) is Ordering.GREATER
        assert mono_compare((0, 1, 1), (0, 0, 2), MonomialOrder.ELIMINATION) is Ordering.GREATER

    def test_width_mismatch(self):
        from algebra.monomial import mono_compare
        from core.error_handling import ContextMismatchError

        with pytest.raises(ContextMismatchError):
            mono_compare((1, 0), (1, 0, 0))

    @pytest.mark.parametrize("order", ["lex", "grlex", "degrevlex"])
    def test_total_order_properties(self, order, rng):
        from algebra.monomial import MonomialOrder, Ordering, mono_compare, monomial_mul

        order = MonomialOrder(order)
        for _ in range(200):
            a, b, c = (tuple(int(v) for v in rng.integers(0, 4, size=3)) for _ in range(3))
            ab, ba = mono_compare(a, b, order), mono_compare(b, a, order)
            assert ab == -ba
            if ab is Ordering.EQUAL:
                assert a == b
            if ab is Ordering.LESS and mono_compare(b, c, order) is Ordering.LESS:
                assert mono_compare(a, c, order) is Ordering.LESS
            # a proper divisor is smaller
            if any(c):
                assert mono_compare(a, monomial_mul(a, c), order) is Ordering.LESS

    def test_checked_exponents(self, monkeypatch):
        from algebra.monomial import monomial_mul, monomial_pow
        from config import Config
        from core.error_handling import ExponentOverflowError

        monkeypatch.setattr(Config, "MAX_EXPONENT", 2**31)
        assert monomial_pow((2**15, 1), 2**15) == (2**30, 2**15)
        with pytest.raises(ExponentOverflowError):
            monomial_pow((2**16 + 1, 0), 2**15)
        with pytest.raises(ExponentOverflowError):
            monomial_mul((2**31, 0), (1, 0))

    def test_divisibility_helpers(self):
        from algebra.monomial import coprime, monomial_div, monomial_divides, monomial_gcd, monomial_lcm

        assert monomial_divides((1, 0, 1), (2, 1, 1))
        assert not monomial_divides((0, 2, 0), (2, 1, 1))
        assert monomial_div((2, 1, 1), (1, 0, 1)) == (1, 1, 0)
        assert monomial_div((1, 0, 0), (0, 1, 0)) is None
        assert monomial_lcm((2, 1, 0), (0, 3, 1)) == (2, 3, 1)
        assert monomial_gcd((2, 1, 0), (0, 3, 1)) == (0, 1, 0)
        assert coprime((1, 0, 0), (0, 2, 2))
        assert not coprime((1, 1, 0), (0, 1, 0))

    def test_small_exhaustive_degree_compatibility(self):
        from algebra.monomial import Ordering, mono_compare

        monos = list(product(range(3), repeat=3))
        for a in monos:
            for b in monos:
                if sum(a) > sum(b):
                    assert mono_compare(a, b) is Ordering.GREATER
