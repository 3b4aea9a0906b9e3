"""One line per catalog entry: (m, ratio), CM check and every exact self-check."""

from __future__ import annotations

import argparse
import time

from leafvol.catalog import get_entry, list_entries, verify_entry
from leafvol.exactnum import format_rational
from leafvol.volume import volume_ratio


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", default=list_entries())
    parser.add_argument("--depth", type=int, default=200, help="series depth for the exact checks")
    args = parser.parse_args()
    for name in args.names:
        start = time.perf_counter()
        entry = get_entry(name)
        report = volume_ratio(entry.hilbert_series())
        checks = verify_entry(entry, args.depth)
        failed = [k for k, ok in checks.items() if not ok]
        status = "ok" if not failed else "FAIL " + ",".join(failed)
        print(
            f"{entry.name:22s} m={report.m:<2d} ratio={format_rational(report.ratio):>8s} "
            f"checks={len(checks):2d} {status:6s} {time.perf_counter() - start:6.2f}s"
        )


if __name__ == "__main__":
    main()
