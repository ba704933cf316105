"""Deciding whether a parametrized plane curve is an embedded line.

A pair (f, g) is an embedded line when k[f, g] = k[z].  Two independent
deciders live here: the derivative criterion (both f' and g' must be
members of k[f, g]) and a constructive elimination loop that repeatedly
kills the leading term of the higher-degree generator and, on success,
assembles an explicit two-variable inverse P with P(f, g) = z.  The two
routes are always cross-checked against each other; disagreement is a bug
and aborts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .decompose import common_parameter
from .errors import InternalInconsistency
from .field_poly import BivarExpr, Poly, eval_bivariate
from .subalgebra import _member_quick

__all__ = [
    "LineReason",
    "LineVerdict",
    "criterion_check",
    "reduce_to_line",
    "is_line",
    "random_line_curve",
]

CRITERION_HOLDS = "CriterionHolds"
DERIVATIVE_NOT_MEMBER = "DerivativeNotMember"
ALGEBRA_TRIVIAL = "AlgebraTrivial"
DIVISIBILITY_FAILURE = "DivisibilityFailure"
UNFAITHFUL_PARAMETER = "UnfaithfulParameter"


@dataclass(frozen=True)
class LineReason:
    """Why a verdict holds.  kind is one of the module constants; the
    remaining fields carry the detail relevant to that kind."""

    kind: str
    which: str | None = None
    m: int | None = None
    n: int | None = None
    deg_h: int | None = None


@dataclass(frozen=True)
class LineVerdict:
    is_line: bool
    inverse: BivarExpr | None
    reason: LineReason


def _criterion_reason(f: Poly, g: Poly, cap=None):
    if f.is_constant and g.is_constant:
        return False, LineReason(ALGEBRA_TRIVIAL)
    if not _member_quick(f.derivative(), f, g, cap)[0]:
        return False, LineReason(DERIVATIVE_NOT_MEMBER, which="f")
    if not _member_quick(g.derivative(), f, g, cap)[0]:
        return False, LineReason(DERIVATIVE_NOT_MEMBER, which="g")
    return True, LineReason(CRITERION_HOLDS)


def criterion_check(f: Poly, g: Poly, cap=None) -> bool:
    """Derivative criterion: true iff the pair generates a nontrivial
    algebra and both derivatives are members of it."""
    return _criterion_reason(f, g, cap)[0]


def _invert_linear(p: Poly, expr: BivarExpr, f: Poly, g: Poly) -> BivarExpr:
    # p = c1*z + c0 and eval(expr, f, g) == p, so z = (expr - c0)/c1.
    c0, c1 = p.coeff(0), p.coeff(1)
    inverse = (expr - BivarExpr.const(c0)).scale(p.field(1) / c1)
    if eval_bivariate(inverse, f, g) != Poly.variable(f.field):
        raise InternalInconsistency("tracked inverse does not evaluate to z")
    return inverse


def reduce_to_line(f: Poly, g: Poly) -> LineVerdict:
    """Constructive decider: repeatedly subtract a power of the smaller
    generator to cancel the larger one's leading term, tracking both
    generators as expressions in the original (f, g).

    Stops successfully when a generator reaches degree 1 (inverting it
    yields the inverse), and unsuccessfully when neither degree divides
    the other, when a sole survivor has degree above 1, or when both
    collapse to constants.  The top degree strictly decreases, so at most
    deg f + deg g steps run.
    """
    field = f.field
    work_f, expr_f = f, BivarExpr.X()
    work_g, expr_g = g, BivarExpr.Y()
    while True:
        fc, gc = work_f.is_constant, work_g.is_constant
        if fc and gc:
            return LineVerdict(False, None, LineReason(ALGEBRA_TRIVIAL))
        if fc or gc:
            p, expr = (work_g, expr_g) if fc else (work_f, expr_f)
            if p.degree == 1:
                return LineVerdict(
                    True, _invert_linear(p, expr, f, g), LineReason(CRITERION_HOLDS)
                )
            return LineVerdict(
                False, None, LineReason(UNFAITHFUL_PARAMETER, deg_h=p.degree)
            )
        if work_f.degree == 1:
            return LineVerdict(
                True, _invert_linear(work_f, expr_f, f, g), LineReason(CRITERION_HOLDS)
            )
        if work_g.degree == 1:
            return LineVerdict(
                True, _invert_linear(work_g, expr_g, f, g), LineReason(CRITERION_HOLDS)
            )
        df, dg = work_f.degree, work_g.degree
        if df == dg:
            # tie: reduce f against g
            c = work_f.lead / work_g.lead
            work_f = work_f - work_g.scale(c)
            expr_f = expr_f - expr_g.scale(c)
            continue
        if df > dg:
            if df % dg:
                return LineVerdict(
                    False, None, LineReason(DIVISIBILITY_FAILURE, m=df, n=dg)
                )
            power = df // dg
            small = work_g.scale(field(1) / work_g.lead)
            sub = small**power
            sub_expr = expr_g.scale(field(1) / work_g.lead) ** power
            lead = work_f.lead
            work_f = work_f - sub.scale(lead)
            expr_f = expr_f - sub_expr.scale(lead)
        else:
            if dg % df:
                return LineVerdict(
                    False, None, LineReason(DIVISIBILITY_FAILURE, m=df, n=dg)
                )
            power = dg // df
            small = work_f.scale(field(1) / work_f.lead)
            sub = small**power
            sub_expr = expr_f.scale(field(1) / work_f.lead) ** power
            lead = work_g.lead
            work_g = work_g - sub.scale(lead)
            expr_g = expr_g - sub_expr.scale(lead)


def is_line(f: Poly, g: Poly, cap=None) -> LineVerdict:
    """Full decision with cross-validation.

    An unfaithful parameter (maximal common inner factor of degree above 1)
    is an immediate no.  Otherwise both the elimination loop and the
    derivative criterion run and must agree; the elimination verdict, which
    carries the inverse, is returned.
    """
    if f.is_constant and g.is_constant:
        return LineVerdict(False, None, LineReason(ALGEBRA_TRIVIAL))
    dec = common_parameter(f, g)
    if dec.h.degree > 1:
        return LineVerdict(
            False, None, LineReason(UNFAITHFUL_PARAMETER, deg_h=dec.h.degree)
        )
    verdict = reduce_to_line(f, g)
    if verdict.is_line != criterion_check(f, g, cap):
        raise InternalInconsistency(
            "elimination and derivative criterion disagree; this is a bug"
        )
    return verdict


def random_line_curve(seed: int, steps: int, max_coeff: int = 5):
    """Random embedded line, built from (z, 0) by invertible moves:
    swapping the generators, scaling one by a nonzero constant, and adding
    to one a polynomial in the other.  Every output satisfies
    k[f, g] = k[z] by construction; degrees stay at most 30 (substitution
    degrees shrink when they would overshoot).  Deterministic in seed.
    """
    rng = random.Random(seed)
    z = Poly.variable()
    cur_f, cur_g = z, Poly.zero()
    for _ in range(steps):
        move = rng.choice(("sub", "sub", "swap", "scale"))
        if move == "swap":
            cur_f, cur_g = cur_g, cur_f
            continue
        if move == "scale":
            c = rng.choice([v for v in range(-max_coeff, max_coeff + 1) if v])
            if rng.random() < 0.5:
                cur_f = cur_f.scale(c)
            else:
                cur_g = cur_g.scale(c)
            continue
        onto_f = rng.random() < 0.5
        other = cur_g if onto_f else cur_f
        pdeg = rng.randint(1, 5)
        while pdeg and pdeg * max(other.degree, 0) > 30:
            pdeg -= 1
        coeffs = [rng.randint(-max_coeff, max_coeff) for _ in range(pdeg + 1)]
        while not coeffs[-1]:
            coeffs[-1] = rng.randint(-max_coeff, max_coeff)
        shift = Poly(coeffs).compose(other)
        if onto_f:
            cur_f = cur_f + shift
        else:
            cur_g = cur_g + shift
    return cur_f, cur_g
