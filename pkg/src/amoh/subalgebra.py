"""Degree-semigroup engine for subalgebras k[f, g] of k[z].

Basis completion here is a one-variable SAGBI computation.  Leading degrees
of elements of k[f, g] form an additive semigroup; a basis is complete when
that semigroup equals the one generated by the basis element degrees.
Completion interleaves two moves until a fixpoint:

* interreduction: an element whose degree is a sum of the other element
  degrees is subducted against them and replaced by its remainder, or
  dropped when the remainder is constant;
* relation resolution: the element degrees are arranged so that each,
  multiplied by the quotient of consecutive gcds along the arrangement, is
  a sum of earlier degrees; the matching difference of monic products drops
  in degree, and a nonconstant irreducible remainder is a new element.

Degree questions reduce to coin-problem dynamic programming.  Every basis
element carries a provenance expression in the two generators, so
membership tests return certificates that re-evaluate exactly.

All public functions are pure; completed bases are cached per (f, g, cap).
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from functools import lru_cache, reduce as _fold

from .errors import (
    InternalInconsistency,
    InternalLimitExceeded,
    NotInSemigroup,
    PreconditionViolated,
    TrivialAlgebra,
)
from .field_poly import BivarExpr, Fraction, Poly

__all__ = [
    "SagbiElement",
    "SagbiBasis",
    "MembershipResult",
    "DeltaSequence",
    "SemigroupRepr",
    "sagbi_basis",
    "subduct",
    "is_member",
    "brute_force_member",
    "delta_sequence",
    "semigroup_represent",
]

CAP_ENV_VAR = "AMOH_ITER_CAP"


@dataclass(frozen=True)
class SagbiElement:
    """One basis element: a monic polynomial, how to build it from (f, g),
    and its degree."""

    poly: Poly
    provenance: BivarExpr
    degree: int


@dataclass(frozen=True)
class SagbiBasis:
    elements: tuple
    f: Poly
    g: Poly
    _scratch: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def degrees(self) -> tuple:
        return tuple(e.degree for e in self.elements)

    def _reducer(self) -> "_Reducer":
        red = self._scratch.get("reducer")
        if red is None:
            red = _Reducer(list(self.elements), self.f.field)
            self._scratch["reducer"] = red
        return red


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    certificate: BivarExpr | None
    obstruction_degree: int | None


@dataclass(frozen=True)
class DeltaSequence:
    """Degrees (deltas) and the gcd chain (ds) of the degree semigroup.

    deltas[0] = deg g and deltas[1] = deg f; each later entry is the
    smallest semigroup degree not divisible by the running gcd.  ds lists
    the gcds of the prefixes deltas[0..i] for i >= 1; it decreases strictly
    and ends at the gcd of the whole semigroup (1 exactly when the
    parameter is faithful).
    """

    deltas: tuple
    ds: tuple
    h: int


@dataclass(frozen=True)
class SemigroupRepr:
    """Nonnegative coordinates of a degree over a delta sequence, with the
    tail entries reduced modulo the gcd-chain quotients (which makes them
    unique)."""

    alphas: tuple


class _Budget:
    """Completion work meter.  Blowing it raises rather than looping."""

    __slots__ = ("remaining",)

    def __init__(self, cap: int):
        self.remaining = cap

    def tick(self, what: str):
        self.remaining -= 1
        if self.remaining < 0:
            raise InternalLimitExceeded(
                f"completion work cap exhausted during {what}; "
                f"raise the cap (argument or {CAP_ENV_VAR}) if the input is legitimate"
            )


def _resolve_cap(f: Poly, g: Poly, cap) -> int:
    if cap is not None:
        return int(cap)
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        return int(env)
    m = max(f.degree, 0)
    n = max(g.degree, 0)
    return max(64, 10 * (m + n) * (m + n))


def _reachable(degrees, bound: int) -> bytearray:
    """table[v] == 1 iff v is a nonnegative integer combination of degrees."""
    table = bytearray(bound + 1)
    table[0] = 1
    for d in degrees:
        for v in range(d, bound + 1):
            if table[v - d]:
                table[v] = 1
    return table


class _Reducer:
    """Subduction engine over elements with pairwise distinct degrees.

    Keeps suffix reachability tables for the greedy factorization (largest
    degree first) and memoizes element powers; both grow on demand.
    """

    def __init__(self, items, scalar_field, budget: _Budget | None = None):
        self.items = list(items)
        self.field = scalar_field
        self.budget = budget
        self.by_degree = {it.degree: it for it in self.items}
        self.degs_desc = sorted(self.by_degree, reverse=True)
        self.tables = None
        self.bound = -1
        self.poly_pows = {}
        self.prov_pows = {}

    def _ensure(self, bound: int):
        if self.tables is not None and bound <= self.bound:
            return
        b = max(bound, 2 * self.bound, 16)
        degs = self.degs_desc
        tables = [None] * (len(degs) + 1)
        tables[len(degs)] = _reachable((), b)
        for k in range(len(degs) - 1, -1, -1):
            t = bytearray(tables[k + 1])
            d = degs[k]
            for v in range(d, b + 1):
                if t[v - d]:
                    t[v] = 1
            tables[k] = t
        self.tables = tables
        self.bound = b

    def representable(self, deg: int) -> bool:
        if deg < 0:
            return False
        self._ensure(deg)
        return bool(self.tables[0][deg])

    def factor(self, deg: int):
        """Counts per degree summing to deg, greedily taking the largest
        degree as often as the remaining suffix allows.  None if deg is not
        representable."""
        if not self.representable(deg):
            return None
        counts = {}
        for k, d in enumerate(self.degs_desc):
            suffix = self.tables[k + 1]
            c = deg // d
            while c > 0 and not suffix[deg - c * d]:
                c -= 1
            if c:
                counts[d] = c
                deg -= c * d
        return counts

    @staticmethod
    def _pow(cache: dict, base, e: int):
        # Subduction sweeps contiguous exponents, so fill the cache
        # incrementally from the highest power already present.
        got = cache.get(e)
        if got is not None:
            return got
        if 1 not in cache:
            cache[1] = base
        k = e
        while k not in cache:
            k -= 1
        acc = cache[k]
        while k < e:
            k += 1
            acc = acc * base
            cache[k] = acc
        return acc

    def product(self, counts, certify: bool = True):
        """Monic product of element powers and the matching provenance.
        With certify=False the provenance slot is None; expanding
        provenance powers is by far the dominant cost on large bases."""
        p = Poly.one(self.field)
        prov = BivarExpr.const(1) if certify else None
        for d, c in counts.items():
            it = self.by_degree[d]
            p = p * self._pow(self.poly_pows.setdefault(d, {}), it.poly, c)
            if certify:
                prov = prov * self._pow(
                    self.prov_pows.setdefault(d, {}), it.provenance, c
                )
        return p, prov

    def reduce(self, u: Poly, certify: bool = True):
        """Subduct u; returns (remainder, consumed) with
        u = eval(consumed) + remainder.  The remainder is constant or has
        leading degree outside the degree semigroup.  certify=False skips
        the consumed combination (returned as None) for callers that only
        need the remainder."""
        r = u
        consumed = BivarExpr.zero() if certify else None
        while not r.is_constant:
            counts = self.factor(r.degree)
            if counts is None:
                break
            if self.budget is not None:
                self.budget.tick("subduction")
            lead = r.lead
            prod, prov = self.product(counts, certify)
            r = r - prod.scale(lead)
            if certify:
                consumed = consumed + prov.scale(lead)
        return r, consumed


def subduct(u: Poly, basis: SagbiBasis):
    """Reduce u against the basis.  Returns (remainder, consumed) with
    u = eval_bivariate(consumed, f, g) + remainder exactly; each step
    strictly decreases the degree, so this always terminates."""
    if u.field is not basis.f.field:
        raise TypeError("polynomial is over a different field than the basis")
    return basis._reducer().reduce(u)


def _insert(work, p: Poly, prov: BivarExpr, scalar_field, budget: _Budget) -> bool:
    """Subduct p against the current work list and append the remainder as
    a fresh monic element.  Constant remainders are absorbed (False)."""
    r, consumed = _Reducer(work, scalar_field, budget).reduce(p)
    if r.is_constant:
        return False
    inv = scalar_field(1) / r.lead
    work.append(SagbiElement(r.monic(), (prov - consumed).scale(inv), r.degree))
    return True


def _interreduce(work, scalar_field, budget: _Budget):
    """Subduct each element against the others until nothing moves."""
    changed = True
    while changed:
        changed = False
        budget.tick("interreduction")
        for el in sorted(work, key=lambda e: -e.degree):
            others = [o for o in work if o is not el]
            if not others:
                continue
            r, consumed = _Reducer(others, scalar_field, budget).reduce(el.poly)
            if r == el.poly:
                continue
            work.remove(el)
            if not r.is_constant:
                inv = scalar_field(1) / r.lead
                work.append(
                    SagbiElement(r.monic(), (el.provenance - consumed).scale(inv), r.degree)
                )
            changed = True
            break


def _telescopic_ok(arrangement, budget: _Budget) -> bool:
    """Whether each degree times its gcd-chain quotient is a sum of the
    degrees before it in the arrangement."""
    running = arrangement[0]
    prefix = [arrangement[0]]
    for d in arrangement[1:]:
        budget.tick("arrangement check")
        nxt = math.gcd(running, d)
        q = running // nxt
        if q == 1:
            # would need d itself over the prefix; impossible after
            # interreduction
            return False
        if not _reachable(prefix, q * d)[q * d]:
            return False
        prefix.append(d)
        running = nxt
    return True


def _find_arrangement(degrees, budget: _Budget):
    preferred = (
        tuple(degrees),
        tuple(sorted(degrees, reverse=True)),
        tuple(sorted(degrees)),
    )
    seen = set()
    for cand in itertools.chain(preferred, itertools.permutations(degrees)):
        if cand in seen:
            continue
        seen.add(cand)
        if _telescopic_ok(cand, budget):
            return cand
    return None


def _complete(f: Poly, g: Poly, cap: int) -> SagbiBasis:
    scalar_field = f.field
    if g.field is not scalar_field:
        raise TypeError("generators must share one coefficient field")
    budget = _Budget(cap)
    work = []
    for p, prov in ((g, BivarExpr.Y()), (f, BivarExpr.X())):
        if not p.is_constant:
            _insert(work, p, prov, scalar_field, budget)
    if not work:
        raise TrivialAlgebra("both generators are constant")

    while True:
        _interreduce(work, scalar_field, budget)
        arrangement = _find_arrangement([e.degree for e in work], budget)
        if arrangement is None:
            raise InternalLimitExceeded(
                "no workable arrangement of basis degrees; this should be "
                "unreachable for subalgebras generated by two polynomials"
            )
        by_degree = {e.degree: e for e in work}
        full = _Reducer(work, scalar_field, budget)
        adjoined = False
        running = arrangement[0]
        for j in range(1, len(arrangement)):
            budget.tick("relation")
            d = arrangement[j]
            nxt = math.gcd(running, d)
            q = running // nxt
            running = nxt
            prefix = _Reducer(
                [by_degree[x] for x in arrangement[:j]], scalar_field, budget
            )
            prod, prov = prefix.product(prefix.factor(q * d))
            el = by_degree[d]
            tau = el.poly**q - prod
            tau_prov = el.provenance**q - prov
            r, consumed = full.reduce(tau)
            if not r.is_constant:
                inv = scalar_field(1) / r.lead
                work.append(
                    SagbiElement(r.monic(), (tau_prov - consumed).scale(inv), r.degree)
                )
                adjoined = True
                break
        if not adjoined:
            break

    elements = tuple(sorted(work, key=lambda e: e.degree))
    return SagbiBasis(elements=elements, f=f, g=g)


def sagbi_basis(f: Poly, g: Poly, cap=None) -> SagbiBasis:
    """Complete basis of k[f, g]: monic elements of pairwise distinct
    degrees whose degrees generate the whole degree semigroup, each with a
    provenance expression rebuilding it from (f, g).

    Deterministic; raises TrivialAlgebra when both generators are constant
    and InternalLimitExceeded if the work cap (`cap` argument, else the
    AMOH_ITER_CAP environment variable, else 10*(deg f + deg g)^2) is hit.
    """
    return _sagbi_cached(f, g, _resolve_cap(f, g, cap))


@lru_cache(maxsize=256)
def _sagbi_cached(f: Poly, g: Poly, cap: int) -> SagbiBasis:
    return _complete(f, g, cap)


def is_member(u: Poly, f: Poly, g: Poly, cap=None) -> MembershipResult:
    """Decide u ∈ k[f, g], with a certificate on success and the degree of
    the irreducible remainder on failure."""
    if f.is_constant and g.is_constant:
        raise TrivialAlgebra("membership in k[constants] is not meaningful here")
    basis = sagbi_basis(f, g, cap)
    r, consumed = subduct(u, basis)
    if r.is_constant:
        c = r.constant_value()
        cert = consumed + BivarExpr.const(c) if c else consumed
        return MembershipResult(True, cert, None)
    return MembershipResult(False, None, r.degree)


def _member_quick(u: Poly, f: Poly, g: Poly, cap=None):
    """Membership decision without the certificate: (member, obstruction
    degree).  Same verdict as is_member at a fraction of the cost."""
    if u.field is not f.field:
        raise TypeError("polynomial is over a different field than the basis")
    if f.is_constant and g.is_constant:
        raise TrivialAlgebra("membership in k[constants] is not meaningful here")
    basis = sagbi_basis(f, g, cap)
    r, _ = basis._reducer().reduce(u, certify=False)
    if r.is_constant:
        return True, None
    return False, r.degree


def _echelon_insert(ech, p: Poly, combo: BivarExpr):
    """Reduce (p, combo) against the echelon rows, keeping
    eval(combo) == p; insert the survivor monically.  Returns the reduced
    pair."""
    while not p.is_zero:
        row = ech.get(p.degree)
        if row is None:
            break
        q, qcombo = row
        c = p.lead
        p = p - q.scale(c)
        combo = combo - qcombo.scale(c)
    if not p.is_zero:
        inv = p.field(1) / p.lead
        ech[p.degree] = (p.scale(inv), combo.scale(inv))
    return p, combo


def _echelon_span(f: Poly, g: Poly, bound: int):
    """Echelon rows (lead degree -> (monic poly, combination)) spanning all
    products f^i g^j of weight i*deg f + j*deg g <= bound.  Constant
    generators contribute exponent zero only."""
    field = f.field
    m = f.degree if not f.is_constant else None
    n = g.degree if not g.is_constant else None
    pairs = []
    i = 0
    while True:
        wf = (m or 0) * i
        if wf > bound:
            break
        j = 0
        while True:
            w = wf + (n or 0) * j
            if w > bound:
                break
            pairs.append((w, i, j))
            if n is None:
                break
            j += 1
        if m is None:
            break
        i += 1
    pairs.sort()
    ech = {}
    fpows = {0: Poly.one(field)}
    gpows = {0: Poly.one(field)}

    def power(cache, base, e):
        if e not in cache:
            cache[e] = power(cache, base, e - 1) * base
        return cache[e]

    for _, i, j in pairs:
        p = power(fpows, f, i) * power(gpows, g, j)
        _echelon_insert(ech, p, BivarExpr.monomial(i, j))
    return ech


def brute_force_member(u: Poly, f: Poly, g: Poly, bound: int):
    """Independent membership search by exact linear algebra over all
    products f^i g^j of weight at most bound.  Returns a certificate or
    None; absence within the bound proves nothing."""
    ech = _echelon_span(f, g, bound)
    r = u
    consumed = BivarExpr.zero()
    while not r.is_zero:
        row = ech.get(r.degree)
        if row is None:
            return None
        q, qcombo = row
        c = r.lead
        r = r - q.scale(c)
        consumed = consumed + qcombo.scale(c)
    if consumed.eval(f, g) != u:
        raise InternalInconsistency("echelon certificate failed to re-evaluate")
    return consumed


def delta_sequence(f: Poly, g: Poly, cap=None) -> DeltaSequence:
    """Delta sequence of the degree semigroup of k[f, g]: the two input
    degrees (g first), then repeatedly the smallest semigroup degree not
    divisible by the running gcd, together with the gcd chain."""
    if f.is_constant or g.is_constant:
        raise TrivialAlgebra("delta sequences need both generators nonconstant")
    basis = sagbi_basis(f, g, cap)
    atoms = basis.degrees
    overall = _fold(math.gcd, atoms)
    top = max(atoms)
    table = _reachable(atoms, top)
    deltas = [g.degree, f.degree]
    d = math.gcd(deltas[0], deltas[1])
    ds = [d]
    while d != overall:
        smallest = next(
            (v for v in range(1, top + 1) if table[v] and v % d), None
        )
        if smallest is None:
            raise InternalInconsistency("gcd chain open but no indivisible degree")
        deltas.append(smallest)
        d = math.gcd(d, smallest)
        ds.append(d)
    return DeltaSequence(tuple(deltas), tuple(ds), len(deltas) - 1)


def semigroup_represent(target: int, delta: DeltaSequence) -> SemigroupRepr:
    """Coordinates alphas with sum(alphas[i] * deltas[i]) == target.

    The tail (positions 2..h) is found back to front by the congruence
    argument: modulo the gcd of the earlier deltas, only the current one
    contributes, and its residue is invertible after dividing the chain
    gcd out.  That makes the tail unique; the head is tie-broken by
    maximizing alphas[0], then alphas[1].  Raises NotInSemigroup when no
    nonnegative solution exists.
    """
    if not isinstance(target, int) or target < 0:
        raise PreconditionViolated("represented degree must be a nonnegative integer")
    deltas, ds, h = delta.deltas, delta.ds, delta.h
    dp_says = bool(_reachable(deltas, target)[target])

    def fail():
        if dp_says:
            raise InternalInconsistency(
                f"descent found no representation of {target} but one exists"
            )
        raise NotInSemigroup(f"{target} is not in the semigroup of {deltas}")

    remaining = target
    tail = []
    for i in range(h, 1, -1):
        gcd_prev = ds[i - 2]
        gcd_cur = ds[i - 1]
        if remaining % gcd_cur:
            fail()
        q = gcd_prev // gcd_cur
        try:
            inv = pow((deltas[i] // gcd_cur) % q, -1, q)
        except ValueError as exc:
            raise InternalInconsistency("gcd chain quotient not coprime") from exc
        alpha = ((remaining // gcd_cur) * inv) % q
        remaining -= alpha * deltas[i]
        if remaining < 0:
            fail()
        tail.append(alpha)
    for head0 in range(remaining // deltas[0], -1, -1):
        rest = remaining - head0 * deltas[0]
        if rest % deltas[1] == 0:
            alphas = (head0, rest // deltas[1], *reversed(tail))
            break
    else:
        fail()
    if not dp_says or sum(a * d for a, d in zip(alphas, deltas)) != target:
        raise InternalInconsistency("representation disagrees with reachability")
    return SemigroupRepr(alphas)
