"""Planar maps over k(x): Jacobian determinants and derivative memberships."""

from fractions import Fraction

import pytest

from amoh import (
    BiPoly,
    RatFunc,
    eval_bivariate,
    jacobian_det,
    prop21_probe,
    random_tame_automorphism,
)


X, Y = BiPoly.x(), BiPoly.y()


class TestBiPoly:
    def test_from_terms(self):
        p = BiPoly.from_terms({(1, 0): Fraction(2), (0, 2): Fraction(1)})
        assert p == X.scale(RatFunc(2)) + Y * Y

    def test_partials(self):
        p = X * X * Y + Y * Y
        assert p.partial_y() == X * X + Y.scale(2)
        assert p.partial_x() == (X * Y).scale(2)

    def test_y_degree(self):
        assert (X * X).y_degree == 0
        assert (X * Y * Y).y_degree == 2

    def test_pow(self):
        assert (X + Y) ** 2 == X * X + (X * Y).scale(RatFunc(2)) + Y * Y


class TestJacobianDet:
    def test_identity(self):
        assert jacobian_det(X, Y).is_scalar()
        assert jacobian_det(X, Y).scalar_value() == RatFunc(1)

    def test_swap_flips_sign(self):
        assert jacobian_det(Y, X).scalar_value() == RatFunc(-1)

    def test_shear_preserves_det(self):
        assert jacobian_det(X, Y + X * X * X).scalar_value() == RatFunc(1)

    def test_composition_multiplies_scalings(self):
        f, g = X.scale(RatFunc(3)), Y.scale(RatFunc(-2))
        assert jacobian_det(f, g).scalar_value() == RatFunc(-6)

    def test_degenerate_pair_is_zero(self):
        d = jacobian_det(X, X * X)
        assert d == BiPoly.constant(0)


class TestProbe:
    def test_shear(self):
        f, g = X, Y + X * X
        rep = prop21_probe(f, g)
        assert rep.jacobian_constant
        assert rep.fy_member.member and rep.gy_member.member
        # certificates are expressions in the pair itself
        # f_y = 0 and g_y = 1, both trivially in k(x)[f, g]
        assert rep.fy_member.certificate is not None

    def test_degenerate_y_free_pair(self):
        rep = prop21_probe(X, X * X - BiPoly.constant(1))
        assert not rep.jacobian_constant
        assert rep.fy_member.member and rep.gy_member.member

    def test_generator_determinism(self):
        assert random_tame_automorphism(4, 3) == random_tame_automorphism(4, 3)

    def test_probe_holds_on_generated_maps(self):
        for seed in range(12):
            f, g = random_tame_automorphism(seed, 4)
            rep = prop21_probe(f, g)
            assert rep.jacobian_constant
            assert rep.fy_member.member and rep.gy_member.member
            got_f = eval_bivariate(rep.fy_member.certificate, f.yp, g.yp)
            got_g = eval_bivariate(rep.gy_member.certificate, f.yp, g.yp)
            assert got_f == f.partial_y().yp
            assert got_g == g.partial_y().yp

    def test_y_degree_stays_capped(self):
        for seed in range(20):
            f, g = random_tame_automorphism(seed, 5, max_deg=16)
            assert max(f.y_degree, g.y_degree) <= 16
