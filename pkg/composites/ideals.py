"""Fractional ideals of T = K + X·L[X] for finite fields K ⊆ L.

An ideal is the T-module spanned by g_1/X^j, …, g_r/X^j. Every decision is
reduced to linear algebra over GF(p): the members of T of degree at most b
form a GF(p)-space with basis {κ_r} ∪ {β_s·X^k : 1 ≤ k ≤ b}, κ a GF(p)-basis
of K inside L and β a GF(p)-basis of L. Verdicts are relative to a degree
window that is doubled up to config.MAX_WINDOW before non-membership is
reported.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from composites import config
from composites.composite import CompositeRing, RingKind
from composites.errors import (
    IsZeroOrUnit,
    NotSupportedForProperPair,
    QuotientNotFinite,
    RingMismatch,
    SearchSpaceTooLarge,
    WindowTooSmall,
)
from composites.fieldtower import FieldElement
from composites.linalg import as_matrix, in_span, nullspace_mod_p, rref_mod_p, solve_mod_p, span_key
from composites.polyring import Polynomial, factor, gcd

logger = logging.getLogger(__name__)


class Membership(enum.Enum):
    MEMBER = "member"
    NON_MEMBER_WITHIN_BOUND = "non-member-within-bound"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FractionalElement:
    """numerator / X^pole."""

    numerator: Polynomial
    pole: int = 0

    def __str__(self):
        if self.pole == 0:
            return str(self.numerator)
        return f"({self.numerator})/X^{self.pole}"


@dataclass(frozen=True)
class FractionalIdeal:
    ring: CompositeRing
    pole_order: int
    generators: tuple
    degree_window: int

    @property
    def max_degree(self) -> int:
        return max(g.degree for g in self.generators)

    def elements(self):
        return [FractionalElement(g, self.pole_order) for g in self.generators]

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators)
        if self.pole_order == 0:
            return f"({gens})T"
        return f"X^-{self.pole_order}*({gens})T"


def _require_finite(ring, operation):
    if ring.kind is not RingKind.FIELD_FIELD or not ring.is_finite:
        raise RingMismatch(f"ideal arithmetic needs a finite field pair, got {ring}", operation=operation)


def _same_ring(a, b, operation):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} ≠ {b.ring}", operation=operation)


def default_window(generators) -> int:
    return 2 * max(g.degree for g in generators) + 4


@lru_cache(maxsize=config.CACHE_SIZE)
def _k_basis(ring):
    small = ring.pair.small
    return tuple(ring.pair.embed(FieldElement(small, tuple(int(i == r) for i in range(small.n)))) for r in range(small.n))


@lru_cache(maxsize=config.CACHE_SIZE)
def _l_basis(ring):
    big = ring.big
    return tuple(FieldElement(big, tuple(int(i == s) for i in range(big.n))) for s in range(big.n))


@lru_cache(maxsize=config.CACHE_SIZE)
def _t_basis(ring, bound):
    """GF(p)-basis of the members of T of degree at most bound."""
    big = ring.big
    basis = [Polynomial.constant(big, k) for k in _k_basis(ring)]
    for k in range(1, bound + 1):
        basis.extend(Polynomial.monomial(big, b, k) for b in _l_basis(ring))
    return tuple(basis)


def _coords(poly: Polynomial, length: int, n: int):
    v = np.zeros(length * n, dtype=np.int64)
    for k, c in enumerate(poly.coeffs[:length]):
        v[k * n:(k + 1) * n] = c.value
    return v


def _module_contains(ring, generators, target: Polynomial, bound: int) -> bool:
    """target ∈ Σ g_i·T_{≤bound} for polynomial generators."""
    if target.is_zero():
        return True
    products = [g * t for g in generators for t in _t_basis(ring, bound)]
    length = max([target.degree] + [p.degree for p in products]) + 1
    n, p = ring.big.n, ring.big.characteristic
    columns = as_matrix([_coords(prod, length, n) for prod in products], length * n)
    return solve_mod_p(columns.T, _coords(target, length, n), p) is not None


def _as_fractional(ring, f) -> FractionalElement:
    if isinstance(f, FractionalElement):
        element = f
    elif isinstance(f, Polynomial):
        element = FractionalElement(f, 0)
    else:
        element = FractionalElement(f.poly, 0)
    if element.numerator.field != ring.big:
        raise RingMismatch(f"{element} is not over {ring.big}", operation="ideal_membership")
    return element


def _member_at(ideal: FractionalIdeal, f: FractionalElement, bound: int) -> bool:
    top = max(ideal.pole_order, f.pole)
    target = f.numerator.shift(top - f.pole)
    gens = [g.shift(top - ideal.pole_order) for g in ideal.generators]
    return _module_contains(ideal.ring, gens, target, bound)


@dataclass(frozen=True)
class MembershipVerdict:
    verdict: Membership
    bound: int

    def __bool__(self):
        return self.verdict is Membership.MEMBER


def ideal_membership(ideal: FractionalIdeal, f, cofactor_degree_bound: int = None) -> MembershipVerdict:
    """Decide f = Σ g_i·t_i with t_i ∈ T of degree ≤ bound.

    Without an explicit bound the ideal's window is doubled up to
    config.MAX_WINDOW before non-membership is reported.
    """
    f = _as_fractional(ideal.ring, f)
    if cofactor_degree_bound is not None:
        if cofactor_degree_bound < 0:
            raise WindowTooSmall("cofactor bound must be nonnegative", operation="ideal_membership")
        found = _member_at(ideal, f, cofactor_degree_bound)
        return MembershipVerdict(Membership.MEMBER if found else Membership.NON_MEMBER_WITHIN_BOUND, cofactor_degree_bound)
    bound = max(ideal.degree_window, f.numerator.degree, 1)
    while True:
        if _member_at(ideal, f, bound):
            return MembershipVerdict(Membership.MEMBER, bound)
        if bound >= config.MAX_WINDOW:
            return MembershipVerdict(Membership.NON_MEMBER_WITHIN_BOUND, bound)
        logger.debug("escalating membership window %d -> %d", bound, min(2 * bound, config.MAX_WINDOW))
        bound = min(2 * bound, config.MAX_WINDOW)


def _canonicalize(ring, generators, pole, window) -> FractionalIdeal:
    gens = sorted({g for g in generators if not g.is_zero()}, key=lambda g: g.sort_key())
    if not gens:
        raise IsZeroOrUnit("the zero ideal is not a fractional ideal", operation="fractional_ideal")
    while pole > 0 and all(g.order >= 1 for g in gens):
        gens = [Polynomial(g.field, g.coeffs[1:]) for g in gens]
        pole -= 1
    kept = list(gens)
    for g in gens:
        others = [h for h in kept if h != g]
        if others and _module_contains(ring, others, g, window):
            kept = others
    return FractionalIdeal(ring, pole, tuple(kept), window)


def fractional_ideal(ring: CompositeRing, generators, pole: int = 0, window: int = None) -> FractionalIdeal:
    _require_finite(ring, "fractional_ideal")
    generators = [g if isinstance(g, Polynomial) else g.poly for g in generators]
    if pole < 0:
        raise WindowTooSmall("pole order must be nonnegative", operation="fractional_ideal")
    nonzero = [g for g in generators if not g.is_zero()]
    if not nonzero:
        raise IsZeroOrUnit("the zero ideal is not a fractional ideal", operation="fractional_ideal")
    window = default_window(nonzero) if window is None else window
    return _canonicalize(ring, generators, pole, window)


def principal_ideal(ring: CompositeRing, f, pole: int = 0, window: int = None) -> FractionalIdeal:
    return fractional_ideal(ring, [f], pole, window)


def unit_ideal(ring: CompositeRing) -> FractionalIdeal:
    return principal_ideal(ring, Polynomial.one(ring.big))


def maximal_ideal_M(ring: CompositeRing) -> FractionalIdeal:
    """M = X·L[X], spanned by β·X over a basis β of L."""
    _require_finite(ring, "maximal_ideal_M")
    return fractional_ideal(ring, [Polynomial.monomial(ring.big, b, 1) for b in _l_basis(ring)])


def same_ideal(a: FractionalIdeal, b: FractionalIdeal) -> bool:
    """Mutual containment of generators, with window escalation."""
    _same_ring(a, b, "same_ideal")
    return all(ideal_membership(b, f) for f in a.elements()) and all(ideal_membership(a, f) for f in b.elements())


def contains_ideal(a: FractionalIdeal, b: FractionalIdeal) -> bool:
    """b ⊆ a."""
    _same_ring(a, b, "contains_ideal")
    return all(ideal_membership(a, f) for f in b.elements())


def ideal_product(a: FractionalIdeal, b: FractionalIdeal) -> FractionalIdeal:
    _same_ring(a, b, "ideal_product")
    gens = [g * h for g in a.generators for h in b.generators]
    window = max(a.degree_window, b.degree_window, default_window(gens))
    return _canonicalize(a.ring, gens, a.pole_order + b.pole_order, window)


def ideal_power(a: FractionalIdeal, e: int) -> FractionalIdeal:
    """a^e; negative powers only for principal a."""
    ring = a.ring
    if e < 0:
        if len(a.generators) != 1:
            raise NotSupportedForProperPair(f"inverse of non-principal {a}", operation="ideal_power")
        g = a.generators[0]
        # (g/X^j)^-1 = X^j/g, representable only for g = c·X^k
        if g.degree != g.order:
            raise NotSupportedForProperPair(f"{g} has poles away from X = 0", operation="ideal_power")
        inverse = fractional_ideal(ring, [Polynomial.monomial(ring.big, g.leading.inverse(), a.pole_order)], g.order)
        return ideal_power(inverse, -e)
    result = unit_ideal(ring)
    for _ in range(e):
        result = ideal_product(result, a)
    return result


def colon_ideal(ideal: FractionalIdeal) -> FractionalIdeal:
    """(T : I) = {x : x·I ⊆ T}, by the ansatz x = u/X^P with P = 1 + max generator degree.

    x·g/X^j ∈ T means the coefficients of u·g below degree P + j vanish and
    the one at P + j lies in K; coefficients of u above P + j are free, which
    contributes X^(j+1)·L[X].
    """
    ring, j = ideal.ring, ideal.pole_order
    if ideal.degree_window < j + 1:
        raise WindowTooSmall(
            f"window {ideal.degree_window} does not reach degree {j + 1}",
            operation="colon_ideal",
            citation="$P'=\\{x\\in T_0; xP\\subset T\\}$",
        )
    big = ring.big
    n, p = big.n, big.characteristic
    pole = 1 + ideal.max_degree
    top = pole + j
    unknowns = top + 1
    # annihilator of K inside L: c ∈ K iff annihilator @ coords(c) = 0
    k_rows = as_matrix([k.value for k in _k_basis(ring)], n)
    annihilator = nullspace_mod_p(k_rows, p)
    blocks = []
    for g in ideal.generators:
        # coefficient d of u·g as a GF(p)-linear map of u's coordinates
        maps = []
        for d in range(top + 1):
            rows = np.zeros((n, unknowns * n), dtype=np.int64)
            for k in range(min(d, unknowns - 1) + 1):
                c = g.coeff(d - k)
                if c.is_zero():
                    continue
                for s, b in enumerate(_l_basis(ring)):
                    rows[:, k * n + s] = (b * c).value
            maps.append(rows)
        blocks.extend(maps[:top])
        if annihilator.shape[0]:
            blocks.append((annihilator @ maps[top]) % p)
    system = np.vstack(blocks) if blocks else np.zeros((0, unknowns * n), dtype=np.int64)
    solutions = nullspace_mod_p(system, p)
    gens = []
    for v in solutions:
        coeffs = [big.from_coordinates(v[k * n:(k + 1) * n]) for k in range(unknowns)]
        gens.append(Polynomial(big, tuple(coeffs)))
    gens.extend(Polynomial.monomial(big, b, top + 1) for b in _l_basis(ring))
    logger.debug("colon ideal: %d solution vectors, pole %d", len(solutions), pole)
    window = max(ideal.degree_window, default_window(gens))
    return _canonicalize(ring, gens, pole, window)


@dataclass(frozen=True)
class InvertibilityVerdict:
    invertible: bool
    product: FractionalIdeal

    def __bool__(self):
        return self.invertible


def is_invertible(ideal: FractionalIdeal) -> InvertibilityVerdict:
    """I·(T : I) always lies in T, so it equals T iff it contains 1."""
    product = ideal_product(ideal, colon_ideal(ideal))
    one = Polynomial.one(ideal.ring.big)
    return InvertibilityVerdict(bool(ideal_membership(product, one)), product)


def factor_ideal(ideal: FractionalIdeal) -> list:
    """Prime ideals with exponents; T = K[X] must be a PID."""
    ring = ideal.ring
    if not ring.pair.is_identity:
        raise NotSupportedForProperPair(
            f"unique prime factorization is certified only for K = L, not {ring}",
            operation="factor_ideal",
            citation="unambiguous representation in the form product of prime ideals",
        )
    g = Polynomial.zero(ring.big)
    for h in ideal.generators:
        g = gcd(g, h)
    exponents = {}
    for h, m in factor(g).factors:
        exponents[h] = m
    x = Polynomial.x(ring.big)
    exponents[x] = exponents.get(x, 0) - ideal.pole_order
    return [
        (principal_ideal(ring, h), m)
        for h, m in sorted(exponents.items(), key=lambda item: item[0].sort_key())
        if m
    ]


def product_of_primes(ring: CompositeRing, factors) -> FractionalIdeal:
    result = unit_ideal(ring)
    for prime, e in factors:
        result = ideal_product(result, ideal_power(prime, e))
    return result


@dataclass(frozen=True)
class PirVerdict:
    principal: bool
    size: int
    ideal_count: int
    counterexample: tuple = None

    def __bool__(self):
        return self.principal


def _conductor_degree(ideal: FractionalIdeal) -> int:
    ring = ideal.ring
    for d in range(1, config.MAX_WINDOW + 1):
        if all(ideal_membership(ideal, Polynomial.monomial(ring.big, b, d)) for b in _l_basis(ring)):
            return d
    raise QuotientNotFinite(f"no X^d·L inside {ideal} for d ≤ {config.MAX_WINDOW}", operation="quotient_pir_check")


def quotient_pir_check(ideal: FractionalIdeal) -> PirVerdict:
    """Enumerate T/I and check that every ideal of it is generated by one element."""
    ring = ideal.ring
    if ideal.pole_order or not all(ring.pair.contains(g.constant_term) for g in ideal.generators):
        raise QuotientNotFinite(f"{ideal} is not an ideal of T", operation="quotient_pir_check")
    if ideal_membership(ideal, Polynomial.one(ring.big)):
        return PirVerdict(True, 1, 1)
    big = ring.big
    n, p = big.n, big.characteristic
    d = _conductor_degree(ideal)
    width = d * n
    basis = _t_basis(ring, d - 1)
    # T/X^d L[X] in coordinates of L[X]_{<d}; I maps onto the span of g·τ
    w_rows = [_coords(g * t, d, n) for g in ideal.generators for t in basis]
    w_reduced, _ = rref_mod_p(as_matrix(w_rows, width), p)
    complement = []
    for t in basis:
        v = _coords(t, d, n)
        if not in_span(list(w_reduced) + complement, v, p):
            complement.append(v)
    size = p ** len(complement)
    if size > config.QUOTIENT_CAP:
        raise SearchSpaceTooLarge(f"|T/I| = {size} exceeds {config.QUOTIENT_CAP}", operation="quotient_pir_check")

    def to_poly(v):
        return Polynomial(big, tuple(big.from_coordinates(v[k * n:(k + 1) * n]) for k in range(d)))

    def principal_key(v):
        a = to_poly(v)
        rows = list(w_reduced) + [_coords(a * t, d, n) for t in basis]
        return span_key(rows, width, p)

    principal = {}
    for digits in itertools.product(range(p), repeat=len(complement)):
        v = sum((c * row for c, row in zip(digits, complement)), np.zeros(width, dtype=np.int64)) % p
        principal.setdefault(principal_key(v), to_poly(v))
    ideals = set(principal)
    frontier = set(principal)
    while frontier:
        new = set()
        for a in frontier:
            for b in principal:
                key = span_key([*a, *b], width, p)
                if key not in ideals:
                    new.add(key)
        ideals |= new
        frontier = new
    logger.info("quotient T/I of size %d has %d ideals", size, len(ideals))
    for key in sorted(ideals):
        if key not in principal:
            gens = tuple(to_poly(np.array(row)) for row in key)
            return PirVerdict(False, size, len(ideals), gens)
    return PirVerdict(True, size, len(ideals))
