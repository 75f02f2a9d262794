"""Exhaustive region-equivalence sweep with timing.

Projects the ten-row split-rate system for every gains tuple up to
``--max-gain`` and compares it with the closed form.  The uncorrected
private+cross rows are projected too, to count where they go wrong.

    python scripts/region_sweep.py --max-gain 6
"""

import argparse
import itertools
import json
import time

from detic.channel import ChannelGains
from detic.rate_region import closed_form_region, compound_mac_region, project_compound, region_equal


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-gain", type=int, default=6)
    ap.add_argument("--skip-literal", action="store_true")
    args = ap.parse_args()

    rng = range(args.max_gain + 1)
    t0 = time.perf_counter()
    mismatches, literal_mismatches, total = [], [], 0
    for t in itertools.product(rng, repeat=4):
        g = ChannelGains(*t)
        closed = closed_form_region(g)
        total += 1
        if not region_equal(project_compound(compound_mac_region(g)), closed):
            mismatches.append(t)
        if not args.skip_literal and not region_equal(project_compound(compound_mac_region(g, literal=True)), closed):
            literal_mismatches.append(t)
    elapsed = time.perf_counter() - t0
    print(
        json.dumps(
            {
                "channels": total,
                "mismatches": len(mismatches),
                "literal_row_mismatches": None if args.skip_literal else len(literal_mismatches),
                "literal_examples": [list(t) for t in literal_mismatches[:5]],
                "seconds": round(elapsed, 2),
            },
            indent=2,
        )
    )


if __name__ == "__main__":
    main()
