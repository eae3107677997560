from composites.composite import field_composite
from composites.config import BUILD_DIR, configure_logging, log_resource_usage, logger
from composites.fieldtower import gf
from composites.ideals import (
    colon_ideal,
    factor_ideal,
    is_invertible,
    maximal_ideal_M,
    principal_ideal,
    product_of_primes,
    quotient_pir_check,
    same_ideal,
)
from composites.polyring import Polynomial

IDEALS_PATH = BUILD_DIR / "ideals.txt"


def main():
    configure_logging()
    logger.info("--- Step 4: Ideal Arithmetic ---")
    BUILD_DIR.mkdir(parents=True, exist_ok=True)
    lines = []

    gf2 = gf(2)
    ring = field_composite(gf2, gf2)
    ideal = principal_ideal(ring, Polynomial(gf2, (0, 1, 1)))
    factors = factor_ideal(ideal)
    round_trip = same_ideal(product_of_primes(ring, factors), ideal)
    lines.append(f"K=L: {ideal} = " + " * ".join(f"{p}^{e}" for p, e in factors) + f" round_trip={round_trip}")
    lines.append(f"K=L: (X) invertible={is_invertible(principal_ideal(ring, Polynomial.x(gf2))).invertible}")

    ring = field_composite(gf2, gf(2, 2))
    m = maximal_ideal_M(ring)
    verdict = is_invertible(m)
    lines.append(f"K<L: (T:M) = {colon_ideal(m)}")
    lines.append(f"K<L: M invertible={verdict.invertible} product={verdict.product}")
    pir = quotient_pir_check(principal_ideal(ring, Polynomial.x(ring.big)))
    lines.append(f"K<L: T/(X)T size={pir.size} ideals={pir.ideal_count} principal={pir.principal}")

    for line in lines:
        logger.info(line)
    IDEALS_PATH.write_text("\n".join(lines) + "\n")
    logger.info(f"Saved to {IDEALS_PATH}")
    log_resource_usage("Ideals", (factor_ideal, colon_ideal, is_invertible, quotient_pir_check))


if __name__ == "__main__":
    main()
