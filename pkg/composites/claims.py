"""Claim-verification harness.

Every claim pairs the verdict a stated result gives its statement about an
instance (asserted) with the verdict an empirical procedure finds (tested).
The two are never reconciled: a disagreement is reported as a
contradiction, never hidden.
"""

import json
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np
import pandas as pd

from composites import config
from composites.composite import (
    CompositeElement,
    CompositeRing,
    IrreducibilityTag,
    RingKind,
    _is_purely_inseparable,
    accp_failure_chain,
    almost_bezout_witness,
    contains,
    divisor_chain_height,
    factor_atoms,
    field_composite,
    hfd_failure_witness,
    integrality_witness,
    irreducible_divisors,
    is_irreducible_in_composite,
    length_set,
    members_of_degree,
    nonassociate_divisors,
    property_report,
    quotient_class,
)
from composites.covers import composite_cover, finite_subring_cover, int_valued_membership, residue_cover
from composites.errors import HypothesisMismatch, SearchSpaceTooLarge, UnsupportedFactorization
from composites.fieldtower import (
    INFINITE,
    ExtensionPair,
    automorphism_group,
    extension_predicates,
    fixed_field,
    unit_coset_index,
)
from composites.ideals import (
    factor_ideal,
    is_invertible,
    maximal_ideal_M,
    principal_ideal,
    product_of_primes,
    quotient_pir_check,
    same_ideal,
)
from composites.polyring import Polynomial
from composites.verdicts import Asserted, ClaimId, ClaimVerdict, Outcome, PropertyReport, Tested

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClaimOptions:
    seed: int = config.DEFAULT_SEED
    degree_bound: int = config.DEFAULT_DEGREE_BOUND
    window: int = config.DEFAULT_WINDOW
    bezout_samples: int = config.BEZOUT_SAMPLES
    exactness_samples: int = config.EXACTNESS_SAMPLES
    assume_isomorphism_extension: bool = False
    assume_quasilocal: bool = False


CITATIONS = {
    ClaimId.P1a: "atomic if and only if $T$ is atomic and $D$ is a field",
    ClaimId.P1b: "satisfies ACCP if and only if $T$ satisfies ACCP and $D$ is a field",
    ClaimId.P2: "If $A+XB[X]$ is a noetherian domain, where $A\\subset B$ are domains, then $A+XB[X]$ is a BFD",
    ClaimId.P3: "Then $R$ is a BFD if and only if $T$ is a BFD and $D$ is a field",
    ClaimId.P4: "Then $R$ is a HFD if and only if $D$ is a field and $T$ is a HFD",
    ClaimId.P5: "Then $R$ is an idf-domain if and only if $T$ is an idf-domain and the multiplicative group "
    "$K^{\\ast}/M^{\\ast}$ is finite",
    ClaimId.P6: "If $D$ is not a field, then $R$ is an idf-domain if and only if $D$ has only a finite number of "
    "nonassociate irreducible elements",
    ClaimId.P7: "Then $R$ is a FFD if and only if $T$ is a FFD, $D$ is a field, and $K^{\\ast}/D^{\\ast}$ is finite",
    ClaimId.P8: "Then $D+XD_S[X]$ is an S-domain",
    ClaimId.T9: "$R=D+XD_S[X]$ is a Hilbert domain if and only if $D$ and $D_S$ are Hilbert domains",
    ClaimId.P10: "Then $R=A+XK[X]$ is a HFD if and only if $A$ is a field",
    ClaimId.P11: "every ring $R$ between $K[X]$ and $L[X]$ is a one-dimensional almost B\\'ezout domain",
    ClaimId.P12a: "the composite cover of $I(K,R)$ is $R+XK[X]$",
    ClaimId.P12b: "the composite cover of $I(B,A)$ is $A+XB[X]$",
    ClaimId.P13: "$R$ is integrally closed if and only if $B$ is integrally closed and $A$ is integrally closed in $B$",
    ClaimId.T_DEDEKIND: "Let $K\\subset L$ be a finite fields extension. Then $K+XL[X]$ be a Dedekind domain.",
    ClaimId.P14a: "If $P$ be a nonzero prime ideal of $T$ and $P'=\\{x\\in T_0; xP\\subset T\\}$, then $PP'=T$",
    ClaimId.P14b: "Every nonzero ideal of $T$ has an unambiguous representation in the form product of prime ideals",
    ClaimId.P14c: "Every nonzero ideal of $T$ is invertible",
    ClaimId.P14d: "If $I$ is an ideal of $T$, then $T/I$ is a principal ideal domain",
    ClaimId.P01: "$T$ be a Dedekind domain if and only if $[L\\colon K]<\\infty$",
    ClaimId.P02: "$T$ be a Dedekind domain if and only if $K\\subset L$ be an algebraic extension",
    ClaimId.P04: "$T$ be a Dedekind domain if and only if $K\\subset L$ be a separable extension",
    ClaimId.P06: "$T$ be a Dedekind domain if and only if $K\\subset L$ be a normal extension",
    ClaimId.P07: "$T$ be a Dedekind domain if and only if $K\\subset L$ be a normal extension",
    ClaimId.P09: "$T$ be a Dedekind domain if and only if $K\\subset L$ be a Galois extension",
    ClaimId.P10G: "$T$ be a Dedekind domain if and only if $K\\subset L$ be a Galois extension",
    ClaimId.SEQ_EXACT: "$0\\rightarrow A+XB[X]\\rightarrow B[X]\\rightarrow B[X]/A+XB[X]\\rightarrow 0$",
    ClaimId.DIAGRAM: "UFD⇒FFD⇒BFD⇒ACCP⇒atomic",
}

# the use the Dedekind proof makes of the integral-closure criterion
DEDEKIND_CLOSURE_CITATION = "By Proposition 13 $K+XL[X]$ is integrally closed"


def as_ring(instance) -> CompositeRing:
    if isinstance(instance, ExtensionPair):
        return field_composite(instance.small, instance.big)
    return instance


def _verdict(claim_id, statement, asserted, tested, witness=None, citation=None) -> ClaimVerdict:
    return ClaimVerdict(claim_id, statement, asserted, tested, citation or CITATIONS[claim_id], witness or {})


def _mismatch(claim_id, ring, reason):
    raise HypothesisMismatch(f"{claim_id} does not apply to {ring}: {reason}", operation="run_claim",
                             citation=CITATIONS[claim_id])


def _require_field_pair(claim_id, ring):
    if not ring.small_is_field:
        _mismatch(claim_id, ring, "the constant ring is not a field")
    return ring.pair


def _require_finite_pair(claim_id, ring):
    pair = _require_field_pair(claim_id, ring)
    if not pair.is_finite:
        _mismatch(claim_id, ring, "ideal arithmetic needs finite fields")
    return pair


def _finite_degree(ring) -> bool:
    return ring.small_is_field and ring.pair.degree is not INFINITE


def _rng(options):
    return np.random.default_rng(options.seed)


def _z_divisor(ring) -> int:
    return 2 if ring.kind is RingKind.Z_IN_Q else ring.inverted_primes[0]


def _nonunits(ring, bound):
    """Every nonzero nonunit of degree 1..bound, or None when the search is out of reach."""
    if not ring.is_finite:
        return None
    try:
        return [e for k in range(1, bound + 1) for e in members_of_degree(ring, k)]
    except SearchSpaceTooLarge as exc:
        logger.warning("exhaustive check skipped: %s", exc.message)
        return None


def _chain_witness(ring, steps=5):
    chain = accp_failure_chain(ring, ring.x(), _z_divisor(ring), steps)
    tag = is_irreducible_in_composite(ring, ring.x()).tag
    return chain, {
        "chain": [str(g) for g in chain.generators],
        "divisor": chain.divisor,
        "certified": chain.certified,
        "tag": str(tag),
    }


def _not_atomic(ring):
    """Z kinds: X is not an atom and every factor of X in X·B[X] is again divisible, so X has no atomic factorization."""
    chain, witness = _chain_witness(ring)
    certified = chain.certified and witness["tag"] == str(IrreducibilityTag.NON_ATOM_DIVISIBLE)
    return (Tested.FAIL if certified else Tested.UNTESTED), witness


def _atomic_factorization(ring, e, seed):
    """factor_atoms of e, or None unless it multiplies back to e with every factor an atom."""
    fact = factor_atoms(ring, e, seed=seed)
    if fact.expand(ring) != e or not all(is_irreducible_in_composite(ring, a) for a in fact.atoms):
        return None
    return fact


def _sampled_factorizations(ring, rng, count=5):
    """factor_atoms round trips on random elements of an infinite field-field ring."""
    pair, big = ring.pair, ring.big
    checked = []
    try:
        for _ in range(count):
            c0 = pair.small.random_element(rng)
            while c0.is_zero():
                c0 = pair.small.random_element(rng)
            coeffs = [pair.embed(c0)] + [big.random_element(rng) for _ in range(2)]
            if coeffs[-1].is_zero():
                coeffs[-1] = big.one()
            e = CompositeElement(ring, Polynomial(big, tuple(coeffs)))
            fact = _atomic_factorization(ring, e, int(rng.integers(1 << 31)))
            if fact is None:
                return False, {"element": str(e)}
            checked.append(str(fact))
    except UnsupportedFactorization as exc:
        logger.warning("sampled factorization skipped: %s", exc.message)
        return None, {"reason": exc.message}
    return True, {"factorizations": checked}


# factorization claims


def _claim_atomic(ring, options):
    statement = "R is atomic"
    if not ring.small_is_field:
        tested, witness = _not_atomic(ring)
        return _verdict(ClaimId.P1a, statement, Asserted.false(), tested, witness)
    elements = _nonunits(ring, options.degree_bound)
    if elements is not None:
        failed = next((e for e in elements if _atomic_factorization(ring, e, options.seed) is None), None)
        holds = failed is None
        witness = {"checked": len(elements), "degree_bound": options.degree_bound}
        if failed is not None:
            witness["element"] = str(failed)
    else:
        holds, witness = _sampled_factorizations(ring, _rng(options))
    return _verdict(ClaimId.P1a, statement, Asserted.true(), Tested.of(holds), witness)


def _claim_accp(ring, options):
    statement = "R satisfies ACCP"
    if not ring.small_is_field:
        chain = accp_failure_chain(ring, ring.x(), _z_divisor(ring), 20)
        witness = {"chain_length": len(chain), "divisor": chain.divisor, "certified": chain.certified}
        tested = Tested.FAIL if chain.certified else Tested.UNTESTED
        return _verdict(ClaimId.P1b, statement, Asserted.false(), tested, witness)
    elements = _nonunits(ring, options.degree_bound)
    if elements is None:
        return _verdict(ClaimId.P1b, statement, Asserted.true(), Tested.UNTESTED)
    heights = [divisor_chain_height(ring, e) for e in elements]
    holds = all(h <= e.degree for h, e in zip(heights, elements))
    return _verdict(ClaimId.P1b, statement, Asserted.true(), Tested.of(holds), {"max_chain": max(heights)})


def _bounded_lengths(ring, options):
    elements = _nonunits(ring, options.degree_bound)
    if elements is None:
        return None, {}
    excess = [max(length_set(ring, e)) - e.degree for e in elements]
    return all(x <= 0 for x in excess), {"checked": len(elements), "max_excess": max(excess)}


def _claim_noetherian_bfd(ring, options):
    if not _finite_degree(ring):
        _mismatch(ClaimId.P2, ring, "R is not noetherian")
    holds, witness = _bounded_lengths(ring, options)
    return _verdict(ClaimId.P2, "R is a BFD", Asserted.true(), Tested.of(holds), witness)


def _claim_bfd(ring, options):
    statement = "R is a BFD"
    if not ring.small_is_field:
        tested, witness = _not_atomic(ring)
        return _verdict(ClaimId.P3, statement, Asserted.false(), tested, witness)
    holds, witness = _bounded_lengths(ring, options)
    return _verdict(ClaimId.P3, statement, Asserted.true(), Tested.of(holds), witness)


def _half_factorial(ring, options, claim_id):
    statement = "R is a HFD"
    if not ring.small_is_field:
        tested, witness = _not_atomic(ring)
        lengths = hfd_failure_witness(ring, _z_divisor(ring), 3)
        witness["factorizations_of_x"] = [f"{a}^{k} * ({cofactor})" for k, a, cofactor in lengths]
        return _verdict(claim_id, statement, Asserted.false(), tested, witness)
    elements = _nonunits(ring, options.degree_bound)
    if elements is None:
        return _verdict(claim_id, statement, Asserted.true(), Tested.UNTESTED)
    for e in elements:
        lengths = length_set(ring, e)
        if len(lengths) != 1 or factor_atoms(ring, e).length not in lengths:
            witness = {"element": str(e), "lengths": sorted(lengths)}
            return _verdict(claim_id, statement, Asserted.true(), Tested.FAIL, witness)
    return _verdict(claim_id, statement, Asserted.true(), Tested.PASS, {"checked": len(elements)})


def _claim_hfd_field(ring, options):
    return _half_factorial(ring, options, ClaimId.P4)


def _claim_hfd(ring, options):
    return _half_factorial(ring, options, ClaimId.P10)


def _claim_idf(ring, options):
    pair = _require_field_pair(ClaimId.P5, ring)
    index = unit_coset_index(pair).index
    asserted = Asserted.of(index is not INFINITE)
    statement = "R is an idf-domain"
    if not ring.is_finite:
        return _verdict(ClaimId.P5, statement, asserted, Tested.UNTESTED, {"coset_index": str(index)})
    x2 = ring.x() ** 2
    divisors = irreducible_divisors(ring, x2)
    witness = {"coset_index": index, "irreducible_divisors_of_x2": [str(d) for d in divisors]}
    return _verdict(ClaimId.P5, statement, asserted, Tested.of(len(divisors) == index), witness)


def _claim_idf_local(ring, options):
    if ring.small_is_field:
        _mismatch(ClaimId.P6, ring, "D is a field")
    witness = {"decision": "y is irreducible in R iff d is irreducible in D"}
    if options.assume_quasilocal:
        # Z has infinitely many nonassociate primes
        asserted = Asserted.false()
    else:
        asserted = Asserted.conditional("T quasilocal")
    return _verdict(ClaimId.P6, "R is an idf-domain", asserted, Tested.UNTESTED, witness)


def _claim_ffd(ring, options):
    statement = "R is a FFD"
    if not ring.small_is_field:
        chain, witness = _chain_witness(ring)
        # X/d^k are pairwise nonassociate divisors of X
        tested = Tested.FAIL if chain.certified else Tested.UNTESTED
        return _verdict(ClaimId.P7, statement, Asserted.false(), tested, witness)
    index = unit_coset_index(ring.pair).index
    asserted = Asserted.of(index is not INFINITE)
    elements = _nonunits(ring, options.degree_bound)
    if elements is None:
        return _verdict(ClaimId.P7, statement, asserted, Tested.UNTESTED, {"coset_index": str(index)})
    q_small, q_big = ring.pair.small.order, ring.big.order
    # units are K*, so each class has q_small - 1 members of degree at most deg e
    bounds = [(q_small * q_big ** e.degree - 1) // (q_small - 1) for e in elements]
    counts = [len(nonassociate_divisors(ring, e)) for e in elements]
    over = [str(e) for e, n, b in zip(elements, counts, bounds) if n > b]
    x2 = len(nonassociate_divisors(ring, ring.x() ** 2))
    # divisor classes of X^2: the unit, the cosets a·X, and X^2 itself
    witness = {"coset_index": index, "divisors_of_x2": x2, "checked": len(elements), "max_divisors": max(counts)}
    if over:
        witness["over_bound"] = over[:3]
    return _verdict(ClaimId.P7, statement, asserted, Tested.of(x2 == index + 2 and not over), witness)


def _claim_s_domain(ring, options):
    if ring.small_is_field and not ring.pair.is_identity:
        _mismatch(ClaimId.P8, ring, "R is not of the form D+XD_S[X]")
    return _verdict(ClaimId.P8, "R is an S-domain", Asserted.true(), Tested.UNTESTED)


def _claim_hilbert(ring, options):
    if ring.small_is_field:
        _mismatch(ClaimId.T9, ring, "R is not of the form D+XD_S[X] with D not a field")
    return _verdict(ClaimId.T9, "R is a Hilbert domain", Asserted.true(), Tested.UNTESTED)


def _claim_almost_bezout(ring, options):
    if not _is_purely_inseparable(ring):
        _mismatch(ClaimId.P11, ring, "the pair is not purely inseparable")
    rng = _rng(options)
    big = ring.big
    gap = ring.pair.small.e - big.e
    failures = []
    for i in range(options.bezout_samples):
        f, g = (_random_poly(big, rng, config.BEZOUT_MAX_DEGREE) for _ in range(2))
        witness = almost_bezout_witness(ring, f, g)
        if not witness.certified or witness.n > gap:
            failures.append({"sample": i, "f": str(f), "g": str(g), "n": witness.n})
    holds = not failures
    payload = {"samples": options.bezout_samples, "max_n": gap}
    if failures:
        payload["failure"] = failures[0]
    return _verdict(ClaimId.P11, "R is an almost Bezout domain", Asserted.true(), Tested.of(holds), payload)


def _random_poly(big, rng, max_degree):
    d = int(rng.integers(0, max_degree + 1))
    coeffs = [big.random_element(rng) for _ in range(d)]
    lead = big.random_element(rng)
    while lead.is_zero():
        lead = big.random_element(rng)
    return Polynomial(big, tuple(coeffs) + (lead,))


# covers


def _claim_residue_cover(ring, options):
    if ring.kind is not RingKind.Z_IN_Q:
        _mismatch(ClaimId.P12a, ring, "the residue cover is built for Z in Q")
    instance = residue_cover(2)
    cert = composite_cover(instance)
    holds = int_valued_membership(instance.variant, instance.witness) and cert.cover == ring and cert.minimal
    witness = {"witness": str(cert.witness), "escape": str(cert.escape_coefficient), "cover": cert.cover.label}
    return _verdict(ClaimId.P12a, "the composite cover of I(Q,Z) is Z+XQ[X]", Asserted.true(),
                    Tested.of(holds), witness)


def _claim_subring_cover(ring, options):
    pair = _require_finite_pair(ClaimId.P12b, ring)
    outside = [x for x in ring.big.elements() if not pair.contains(x)]
    b = outside[0] if outside else ring.big.one()
    instance = finite_subring_cover(pair.small, ring.big, b)
    cert = composite_cover(instance)
    holds = (
        int_valued_membership(instance.variant, instance.witness, instance.pair)
        and cert.cover == ring
        and (cert.minimal or pair.is_identity)
    )
    witness = {"witness": str(cert.witness), "escape": str(cert.escape_coefficient), "cover": cert.cover.label}
    return _verdict(ClaimId.P12b, f"the composite cover of I({ring.big},{pair.small}) is {ring}", Asserted.true(),
                    Tested.of(holds), witness)


# integral closure and the Dedekind family


def _closure_criterion(ring):
    return property_report(ring)["integrally_closed"].asserted.value


def _claim_integrally_closed(ring, options):
    statement = "R is integrally closed"
    criterion = _closure_criterion(ring)
    witness = {"criterion": criterion}
    if not _finite_degree(ring):
        asserted = Asserted.conditional("integral closure of A in B") if criterion is None else Asserted.of(criterion)
        return _verdict(ClaimId.P13, statement, asserted, Tested.UNTESTED, witness)
    found = integrality_witness(ring)
    if found is not None:
        witness["element"] = str(found.element)
        witness["minimal_polynomial"] = str(found.minimal_polynomial)
    return _verdict(ClaimId.P13, statement, Asserted.true(), Tested.of(found is None), witness,
                    citation=DEDEKIND_CLOSURE_CITATION)


def _claim_dedekind(ring, options):
    if not _finite_degree(ring):
        _mismatch(ClaimId.T_DEDEKIND, ring, "the extension is not finite")
    statement = "R is a Dedekind domain"
    found = integrality_witness(ring)
    witness = {}
    if found is not None:
        witness["integral_element"] = str(found.element)
        witness["minimal_polynomial"] = str(found.minimal_polynomial)
    if not ring.is_finite:
        tested = Tested.FAIL if found is not None else Tested.UNTESTED
        return _verdict(ClaimId.T_DEDEKIND, statement, Asserted.true(), tested, witness)
    m = is_invertible(maximal_ideal_M(ring))
    x = is_invertible(principal_ideal(ring, Polynomial.x(ring.big), window=options.window))
    witness["M_times_colon"] = str(m.product)
    witness["M_invertible"] = m.invertible
    witness["X_invertible"] = x.invertible
    holds = m.invertible and x.invertible and found is None
    return _verdict(ClaimId.T_DEDEKIND, statement, Asserted.true(), Tested.of(holds), witness)


def _claim_prime_inverse(ring, options):
    _require_finite_pair(ClaimId.P14a, ring)
    m = is_invertible(maximal_ideal_M(ring))
    witness = {"P": str(maximal_ideal_M(ring)), "P_times_P_prime": str(m.product)}
    return _verdict(ClaimId.P14a, "P*P' = T for the prime P = X*L[X]", Asserted.true(), Tested.of(m.invertible),
                    witness)


def _claim_prime_factorization(ring, options):
    pair = _require_finite_pair(ClaimId.P14b, ring)
    statement = "every nonzero ideal of T is a product of primes"
    if not pair.is_identity:
        return _verdict(ClaimId.P14b, statement, Asserted.true(), Tested.UNTESTED,
                        {"reason": "prime factorization is certified for K = L only"})
    big = ring.big
    x = Polynomial.x(big)
    samples = [principal_ideal(ring, x * x + x), principal_ideal(ring, x), maximal_ideal_M(ring)]
    checked = []
    for ideal in samples:
        factors = factor_ideal(ideal)
        if not same_ideal(product_of_primes(ring, factors), ideal):
            return _verdict(ClaimId.P14b, statement, Asserted.true(), Tested.FAIL, {"ideal": str(ideal)})
        checked.append(" * ".join(f"{p}^{e}" for p, e in factors))
    return _verdict(ClaimId.P14b, statement, Asserted.true(), Tested.PASS, {"factorizations": checked})


def _claim_invertible(ring, options):
    _require_finite_pair(ClaimId.P14c, ring)
    big = ring.big
    x = Polynomial.x(big)
    ideals = [
        maximal_ideal_M(ring),
        principal_ideal(ring, x, window=options.window),
        principal_ideal(ring, x * x, window=options.window),
    ]
    for ideal in ideals:
        verdict = is_invertible(ideal)
        if not verdict.invertible:
            witness = {"ideal": str(ideal), "product": str(verdict.product)}
            return _verdict(ClaimId.P14c, "every nonzero ideal of T is invertible", Asserted.true(), Tested.FAIL,
                            witness)
    return _verdict(ClaimId.P14c, "every nonzero ideal of T is invertible", Asserted.true(), Tested.PASS,
                    {"checked": [str(i) for i in ideals]})


def _claim_quotient_pir(ring, options):
    _require_finite_pair(ClaimId.P14d, ring)
    statement = "T/I is a principal ideal ring"
    ideals = [maximal_ideal_M(ring), principal_ideal(ring, Polynomial.x(ring.big))]
    sizes = []
    for ideal in ideals:
        verdict = quotient_pir_check(ideal)
        if not verdict.principal:
            witness = {"ideal": str(ideal), "nonprincipal": [str(g) for g in verdict.counterexample]}
            return _verdict(ClaimId.P14d, statement, Asserted.true(), Tested.FAIL, witness)
        sizes.append(verdict.size)
    return _verdict(ClaimId.P14d, statement, Asserted.true(), Tested.PASS, {"quotient_sizes": sizes})


def _fixed_field_is_small(claim_id, ring):
    pair = _require_field_pair(claim_id, ring)
    if pair.is_identity:
        return
    if not pair.is_finite:
        _mismatch(claim_id, ring, "L^G = K is decided for finite fields only")
    fixed = fixed_field(pair, automorphism_group(pair))
    if len(fixed) != pair.small.order:
        _mismatch(claim_id, ring, "L^G ≠ K")


def _predicate_claim(claim_id, ring, name, statement):
    pair = ring.pair
    tested = Tested.of(extension_predicates(pair).as_dict()[name])
    return _verdict(claim_id, statement, Asserted.of(_finite_degree(ring)), tested)


def _claim_finite_degree(ring, options):
    pair = _require_field_pair(ClaimId.P01, ring)
    return _verdict(ClaimId.P01, "[L:K] is finite", Asserted.of(_finite_degree(ring)),
                    Tested.of(pair.degree is not INFINITE), {"degree": str(pair.degree)})


def _claim_algebraic(ring, options):
    _fixed_field_is_small(ClaimId.P02, ring)
    return _predicate_claim(ClaimId.P02, ring, "algebraic", "K ⊆ L is algebraic")


def _claim_separable(ring, options):
    pair = _require_field_pair(ClaimId.P04, ring)
    if not pair.small.is_perfect:
        _mismatch(ClaimId.P04, ring, "K is not perfect")
    if not options.assume_isomorphism_extension:
        return _verdict(ClaimId.P04, "K ⊆ L is separable",
                        Asserted.conditional("every K-isomorphism extends to L"), Tested.UNTESTED)
    return _predicate_claim(ClaimId.P04, ring, "separable", "K ⊆ L is separable")


def _claim_normal_embeddings(ring, options):
    pair = _require_field_pair(ClaimId.P06, ring)
    if not pair.is_finite and extension_predicates(pair).normal is not True:
        _mismatch(ClaimId.P06, ring, "some K-embedding of L leaves L")
    return _predicate_claim(ClaimId.P06, ring, "normal", "K ⊆ L is normal")


def _claim_normal(ring, options):
    _fixed_field_is_small(ClaimId.P07, ring)
    return _predicate_claim(ClaimId.P07, ring, "normal", "K ⊆ L is normal")


def _claim_galois_order(ring, options):
    pair = _require_field_pair(ClaimId.P09, ring)
    if not pair.is_identity:
        if not pair.is_finite:
            _mismatch(ClaimId.P09, ring, "|G| is computed for finite fields only")
        if len(automorphism_group(pair)) != pair.degree:
            _mismatch(ClaimId.P09, ring, "|G| ≠ [L:K]")
    if not options.assume_isomorphism_extension:
        return _verdict(ClaimId.P09, "K ⊆ L is Galois",
                        Asserted.conditional("every K-isomorphism extends to L"), Tested.UNTESTED)
    return _predicate_claim(ClaimId.P09, ring, "galois", "K ⊆ L is Galois")


def _claim_galois(ring, options):
    _fixed_field_is_small(ClaimId.P10G, ring)
    return _predicate_claim(ClaimId.P10G, ring, "galois", "K ⊆ L is Galois")


# structural claims


def _sample_coefficient(ring, rng):
    if ring.kind is RingKind.Z_LOCALIZED:
        p = ring.inverted_primes[int(rng.integers(len(ring.inverted_primes)))]
        return ring.big.from_fraction(Fraction(int(rng.integers(-20, 21)), p ** int(rng.integers(0, 3))))
    return ring.big.random_element(rng)


def _claim_exact_sequence(ring, options):
    rng = _rng(options)
    big = ring.big
    mismatches, members = [], 0
    for i in range(options.exactness_samples):
        coeffs = tuple(_sample_coefficient(ring, rng) for _ in range(int(rng.integers(1, 4))))
        if i % 2 and ring.small_is_field:
            # every other sample is pushed into R through its constant term
            k = ring.pair.small.random_element(rng)
            coeffs = (ring.pair.embed(k),) + coeffs[1:]
        elif i % 2:
            coeffs = (big(int(rng.integers(-20, 21))),) + coeffs[1:]
        poly = Polynomial(big, coeffs)
        member = contains(ring, poly)
        members += member
        if quotient_class(ring, poly).is_zero != member:
            mismatches.append(str(poly))
    witness = {"samples": options.exactness_samples, "members": members}
    if mismatches:
        witness["mismatch"] = mismatches[0]
    return _verdict(ClaimId.SEQ_EXACT, "A+XB[X] is the kernel of B[X] -> B[X]/(A+XB[X])", Asserted.true(),
                    Tested.of(not mismatches), witness)


def _claim_diagram(ring, options):
    violations = property_report(ring).diagram_violations()
    return _verdict(ClaimId.DIAGRAM, "the property verdicts respect the implication diagram", Asserted.true(),
                    Tested.of(not violations), {"violations": violations})


CLAIMS = {
    ClaimId.P1a: _claim_atomic,
    ClaimId.P1b: _claim_accp,
    ClaimId.P2: _claim_noetherian_bfd,
    ClaimId.P3: _claim_bfd,
    ClaimId.P4: _claim_hfd_field,
    ClaimId.P5: _claim_idf,
    ClaimId.P6: _claim_idf_local,
    ClaimId.P7: _claim_ffd,
    ClaimId.P8: _claim_s_domain,
    ClaimId.T9: _claim_hilbert,
    ClaimId.P10: _claim_hfd,
    ClaimId.P11: _claim_almost_bezout,
    ClaimId.P12a: _claim_residue_cover,
    ClaimId.P12b: _claim_subring_cover,
    ClaimId.P13: _claim_integrally_closed,
    ClaimId.T_DEDEKIND: _claim_dedekind,
    ClaimId.P14a: _claim_prime_inverse,
    ClaimId.P14b: _claim_prime_factorization,
    ClaimId.P14c: _claim_invertible,
    ClaimId.P14d: _claim_quotient_pir,
    ClaimId.P01: _claim_finite_degree,
    ClaimId.P02: _claim_algebraic,
    ClaimId.P04: _claim_separable,
    ClaimId.P06: _claim_normal_embeddings,
    ClaimId.P07: _claim_normal,
    ClaimId.P09: _claim_galois_order,
    ClaimId.P10G: _claim_galois,
    ClaimId.SEQ_EXACT: _claim_exact_sequence,
    ClaimId.DIAGRAM: _claim_diagram,
}


def run_claim(instance, claim_id, options: ClaimOptions = None) -> ClaimVerdict:
    ring = as_ring(instance)
    claim_id = ClaimId(str(claim_id))
    verdict = CLAIMS[claim_id](ring, options or ClaimOptions())
    logger.debug("%s on %s: asserted=%s tested=%s", claim_id, ring, verdict.asserted, verdict.tested)
    return verdict


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def render_record(verdict: ClaimVerdict) -> str:
    witness = json.dumps(verdict.witness, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=str)
    return (
        f"CLAIM {verdict.claim_id} asserted={verdict.asserted} tested={verdict.tested} "
        f'cite="{_escape(verdict.citation)}" witness={witness}'
    )


@dataclass(frozen=True)
class SuiteReport:
    ring: CompositeRing
    verdicts: tuple
    skipped: tuple = field(default=())

    @property
    def summary(self) -> dict:
        counts = {o.value: 0 for o in Outcome}
        for v in self.verdicts:
            counts[v.outcome.value] += 1
        return counts

    @property
    def contradictions(self) -> list:
        return [v.claim_id for v in self.verdicts if v.outcome is Outcome.CONTRADICT]

    def records(self) -> list:
        lines = [render_record(v) for v in self.verdicts]
        s = self.summary
        lines.append(f"SUMMARY agree={s['agree']} contradict={s['contradict']} untested={s['untested']}")
        return lines

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "claim": str(v.claim_id),
                "statement": v.statement,
                "asserted": str(v.asserted),
                "tested": str(v.tested),
                "outcome": v.outcome.value,
            }
            for v in self.verdicts
        ]
        return pd.DataFrame(rows, columns=["claim", "statement", "asserted", "tested", "outcome"])


def run_suite(instance, options: ClaimOptions = None) -> SuiteReport:
    ring = as_ring(instance)
    options = options or ClaimOptions()
    verdicts, skipped = [], []
    for claim_id in ClaimId:
        try:
            verdicts.append(run_claim(ring, claim_id, options))
        except HypothesisMismatch as exc:
            logger.debug("skipping %s: %s", claim_id, exc.message)
            skipped.append(claim_id)
    report = SuiteReport(ring, tuple(verdicts), tuple(skipped))
    logger.info("suite on %s: %s", ring, report.summary)
    config.log_resource_usage(f"suite {ring}")
    return report


# property vertex -> claim that tests it
PROPERTY_CLAIMS = {
    "atomic": ClaimId.P1a,
    "accp": ClaimId.P1b,
    "bfd": ClaimId.P3,
    "hfd": ClaimId.P10,
    "idf": ClaimId.P5,
    "ffd": ClaimId.P7,
    "integrally_closed": ClaimId.P13,
    "dedekind": ClaimId.T_DEDEKIND,
    "s_domain": ClaimId.P8,
    "hilbert": ClaimId.T9,
}


def tested_property_report(instance, options: ClaimOptions = None) -> PropertyReport:
    """property_report with tested verdicts and witnesses filled in from the matching claims."""
    ring = as_ring(instance)
    report = property_report(ring)
    entries = dict(report.entries)
    for name, claim_id in PROPERTY_CLAIMS.items():
        try:
            verdict = run_claim(ring, claim_id, options)
        except HypothesisMismatch:
            continue
        entries[name] = replace(entries[name], tested=verdict.tested, witness=verdict.witness)
    return PropertyReport(ring, entries)


def render_property(name: str, entry) -> str:
    witness = json.dumps(entry.witness, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=str)
    return (
        f"PROPERTY {name} asserted={entry.asserted} tested={entry.tested} "
        f'cite="{_escape(entry.citation)}" witness={witness}'
    )
