import numpy as np

from composites.composite import accp_failure_chain, almost_bezout_witness, field_composite, z_in_q
from composites.config import BEZOUT_SAMPLES, BUILD_DIR, DEFAULT_SEED, configure_logging, log_resource_usage, logger
from composites.fieldtower import funcsub
from composites.polyring import Polynomial

CHAINS_PATH = BUILD_DIR / "chains.txt"


def main():
    configure_logging()
    logger.info("--- Step 3: ACCP Chain & Almost Bezout ---")
    BUILD_DIR.mkdir(parents=True, exist_ok=True)
    lines = []

    ring = z_in_q()
    chain = accp_failure_chain(ring, ring.x(), 2, 20)
    lines += [f"IDEAL ({g})" for g in chain.generators]
    lines.append(f"CERTIFIED {str(chain.certified).lower()}")
    logger.info(f"Chain of {len(chain)} principal ideals, certified={chain.certified}")

    ring = field_composite(funcsub(2, 1), funcsub(2, 0))
    rng = np.random.default_rng(DEFAULT_SEED)
    big = ring.big
    passed = 0
    for _ in range(BEZOUT_SAMPLES):
        f, g = (
            Polynomial(big, tuple(big.random_element(rng) for _ in range(int(rng.integers(0, 4)))) + (big.one(),))
            for _ in range(2)
        )
        witness = almost_bezout_witness(ring, f, g)
        passed += witness.certified and witness.n <= 1
    lines.append(f"BEZOUT {passed}/{BEZOUT_SAMPLES}")
    logger.info(f"Almost Bezout witnesses certified on {passed}/{BEZOUT_SAMPLES} pairs")

    CHAINS_PATH.write_text("\n".join(lines) + "\n")
    logger.info(f"Saved to {CHAINS_PATH}")
    log_resource_usage("Chains", (accp_failure_chain, almost_bezout_witness))


if __name__ == "__main__":
    main()
