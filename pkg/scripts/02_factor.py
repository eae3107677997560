from composites.composite import factor_atoms, field_composite, is_irreducible_in_composite, length_set, members_of_degree
from composites.config import BUILD_DIR, DEFAULT_SEED, configure_logging, log_resource_usage, logger
from composites.fieldtower import gf

LENGTHS_PATH = BUILD_DIR / "lengths.txt"
MAX_DEGREE = 4


def main():
    configure_logging()
    logger.info("--- Step 2: Atoms and Length Sets ---")
    BUILD_DIR.mkdir(parents=True, exist_ok=True)
    ring = field_composite(gf(2), gf(2, 2))
    lines = []
    for k in range(1, MAX_DEGREE + 1):
        elements = members_of_degree(ring, k)
        atoms = sum(bool(is_irreducible_in_composite(ring, e, verify=k < MAX_DEGREE)) for e in elements)
        mismatches = [e for e in elements if length_set(ring, e) != {factor_atoms(ring, e, seed=DEFAULT_SEED).length}]
        line = f"degree {k}: elements={len(elements)} atoms={atoms} non-singleton={len(mismatches)}"
        logger.info(line)
        lines.append(line)
        if mismatches:
            logger.error(f"length sets disagree with factor_atoms, first at {mismatches[0]}")
    LENGTHS_PATH.write_text("\n".join(lines) + "\n")
    logger.info(f"Saved to {LENGTHS_PATH}")
    log_resource_usage("Factor", (is_irreducible_in_composite, length_set, factor_atoms))


if __name__ == "__main__":
    main()
