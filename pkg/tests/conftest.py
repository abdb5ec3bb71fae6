"""
Pytest configuration and fixtures for frobmaps tests
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Agregar el directorio raíz al path
root_dir = Path(__file__).parent.parent
sys.path.insert(0, str(root_dir))


@pytest.fixture(autouse=True)
def fresh_k_memo():
    """Every test starts with an empty K_e memo."""
    from frobenius.ladder import _K_MEMO

    _K_MEMO.clear()
    yield
    _K_MEMO.clear()


@pytest.fixture
def make_context():
    """Factory: make_context(p, 'x, y, z', order='degrevlex')."""
    from algebra.ring import make_ring

    def _make(p=2, variables="x, y, z", order="degrevlex"):
        names = [v.strip() for v in variables.split(",")] if isinstance(variables, str) else list(variables)
        return make_ring(p, names, order)

    return _make


@pytest.fixture
def ctx2(make_context):
    """GF(2)[x, y, z], degrevlex."""
    return make_context(2)


@pytest.fixture
def poly():
    """Factory: poly('x*y + z^2', context)."""
    from cli.parser import parse_polynomial

    return parse_polynomial


@pytest.fixture
def make_ideal(poly):
    """Factory: make_ideal(context, 'x*y', 'y*z')."""
    from groebner.ideal import Ideal

    def _make(context, *texts):
        return Ideal(context, [poly(t, context) for t in texts])

    return _make


@pytest.fixture
def monomial_example(make_context, make_ideal):
    """Factory for I = (xy, yz) in GF(p)[x, y, z]."""

    def _make(p=2):
        ctx = make_context(p)
        return make_ideal(ctx, "x*y", "y*z")

    return _make


@pytest.fixture
def determinantal_example(make_context, make_ideal):
    """2x2 minors of [[x, y, z], [u, v, w]] over GF(2)."""
    ctx = make_context(2, "x, y, z, u, v, w")
    return make_ideal(ctx, "x*v - y*u", "x*w - z*u", "y*w - z*v")


@pytest.fixture
def mono_gens():
    """Factory: mono_gens(ideal) → set of rendered minimal generators."""
    from algebra.polynomial import render_polynomial

    def _gens(ideal):
        return {render_polynomial(g) for g in ideal.canonical_generators()}

    return _gens


@pytest.fixture
def rng():
    """Seeded generator for randomized property checks."""
    return np.random.default_rng(20240917)


@pytest.fixture
def random_monomial_ideal(rng):
    """Factory: a random monomial Ideal with a few small generators."""
    from algebra.polynomial import Polynomial
    from groebner.ideal import Ideal

    def _make(context, ngens=3, max_exp=3):
        gens = []
        while len(gens) < ngens:
            exps = tuple(int(a) for a in rng.integers(0, max_exp + 1, size=context.nvars))
            if any(exps):
                gens.append(Polynomial.from_monomial(context, exps))
        return Ideal(context, gens)

    return _make


@pytest.fixture
def random_polynomial(rng):
    """Factory: a random polynomial with up to `terms` terms of degree <= max_deg."""
    from algebra.polynomial import Polynomial

    def _make(context, terms=4, max_deg=3):
        p = context.characteristic
        items = []
        for _ in range(terms):
            exps = tuple(int(a) for a in rng.integers(0, max_deg + 1, size=context.nvars))
            items.append((exps, int(rng.integers(1, p)) if p > 2 else 1))
        return Polynomial(context, items)

    return _make
