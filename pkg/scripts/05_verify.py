import sys

from composites.claims import run_suite
from composites.composite import field_composite, z_in_q
from composites.config import BUILD_DIR, RECORDS_PATH, REPORT_PATH, configure_logging, log_resource_usage, logger
from composites.fieldtower import funcsub, gf

INSTANCES = {
    "identity": field_composite(gf(2), gf(2)),
    "proper": field_composite(gf(2), gf(2, 2)),
    "inseparable": field_composite(funcsub(2, 1), funcsub(2, 0)),
    "z-in-q": z_in_q(),
}


def main():
    configure_logging()
    logger.info("--- Step 5: Claim Suites ---")
    BUILD_DIR.mkdir(parents=True, exist_ok=True)
    records, tables = [], []
    contradicted = False
    for name, ring in INSTANCES.items():
        report = run_suite(ring)
        records.append(f"# {name}: {ring}")
        records.extend(report.records())
        tables.append(f"{name}: {ring}\n{report.to_frame().to_string(index=False)}\n")
        if report.contradictions:
            contradicted = True
            logger.warning(f"{name}: contradictions on {', '.join(map(str, report.contradictions))}")
        else:
            logger.info(f"{name}: no contradictions")
    RECORDS_PATH.write_text("\n".join(records) + "\n")
    REPORT_PATH.write_text("\n".join(tables))
    logger.info(f"Saved to {RECORDS_PATH} and {REPORT_PATH}")
    log_resource_usage("Verify", (run_suite,))
    return 1 if contradicted else 0


if __name__ == "__main__":
    sys.exit(main())
