from composites.config import BUILD_DIR, configure_logging, log_resource_usage, logger
from composites.fieldtower import (
    automorphism_group,
    degree,
    extension_predicates,
    funcsub,
    gf,
    make_extension,
    numberfield,
    q,
    unit_coset_index,
)

PREDICATES_PATH = BUILD_DIR / "predicates.txt"

PAIRS = {
    "GF(2) in GF(4)": (gf(2), gf(2, 2)),
    "GF(3) in GF(9)": (gf(3), gf(3, 2)),
    "F_2(t^2) in F_2(t)": (funcsub(2, 1), funcsub(2, 0)),
    "Q in Q(cbrt 2)": (q(), numberfield([-2, 0, 0, 1])),
}


def main():
    configure_logging()
    logger.info("--- Step 1: Extension Predicates ---")
    BUILD_DIR.mkdir(parents=True, exist_ok=True)
    lines = []
    for name, (small, big) in PAIRS.items():
        pair = make_extension(small, big)
        flags = extension_predicates(pair).as_dict()
        line = f"{name}: degree={degree(pair)} " + " ".join(f"{k}={v}" for k, v in flags.items())
        if pair.is_finite:
            line += f" |G|={len(automorphism_group(pair))} cosets={unit_coset_index(pair).index}"
        logger.info(line)
        lines.append(line)
    PREDICATES_PATH.write_text("\n".join(lines) + "\n")
    logger.info(f"Saved to {PREDICATES_PATH}")
    log_resource_usage("Predicates", (extension_predicates, automorphism_group, unit_coset_index))


if __name__ == "__main__":
    main()
