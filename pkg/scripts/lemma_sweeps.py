"""Run the entropy-lemma sweeps and print a JSON summary.

Each sum-entropy sweep reports two pass counts.  ``passed`` is the bound
against the total span, and ``lemma_passed`` is the bound against the support
size of the sum.

    python scripts/lemma_sweeps.py
"""

import json

from detic.info import lemma_report


def main():
    report = {name: s.to_dict() for name, s in lemma_report().items()}
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
