"""Shared fixtures: the deterministic curve corpus and small builders."""

from fractions import Fraction

import pytest

from amoh import Poly
from amoh.cli import corpus_pairs

Z = Poly.variable(Fraction)


def const(v):
    return Poly.constant(Fraction(v), Fraction)


@pytest.fixture(scope="session")
def corpus():
    """200 labelled curves: 110 automorphism lines with degrees up to 30,
    25 + 25 composed with z^2 / z^3, and 40 degree-(3, 2) obstruction
    curves.  Built once per session; every corpus-driven test sees the
    same pairs."""
    return list(corpus_pairs(200, 0))


@pytest.fixture(scope="session")
def example_curve():
    """The running example: f = z^3, g = z^6 + z^2."""
    return Z**3, Z**6 + Z**2
