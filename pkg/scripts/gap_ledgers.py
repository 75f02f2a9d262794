"""Print every gap ledger as an aligned table."""

from detic.gaussian import COMPLEX, DET_TO_GAUSS, GAUSS_TO_DET, REAL, gap_ledger, theorem_gap

for mode in (REAL, COMPLEX):
    for direction in (DET_TO_GAUSS, GAUSS_TO_DET):
        print(gap_ledger(direction, mode).to_text())
        print()
    print(f"per-user gap between the capacity regions ({mode}): {float(theorem_gap(mode))} bits\n")
