"""Dimensions of invariant forms of G31 and of <a, b> in degrees 0..12.

Only degrees 1 and 8 of G31 are asserted by the test suite; the rest is
printed for inspection.

    python scripts/molien_table.py
"""

import time

from maschke.certify import molien_coefficients
from maschke.groupcore import builtin_generators, closure


def main():
    for name in ("G31", "AB"):
        t0 = time.perf_counter()
        group = closure(builtin_generators(name))
        dims = molien_coefficients(group, 12)
        dt = time.perf_counter() - t0
        print(f"{name} (order {group.order}, {dt:.1f} s)")
        print("  degree    " + " ".join(f"{d:>3}" for d in range(13)))
        print("  invariants" + " ".join(f"{v:>3}" for v in dims))


if __name__ == "__main__":
    main()
