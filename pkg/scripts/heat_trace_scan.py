"""Scan Z(s) s^(m/2) toward its s -> 0 limit A Gamma(m/2 + 1).

    python3 scripts/heat_trace_scan.py --entry hopf_complex --s 1e-1 1e-2 1e-3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from leafvol.catalog import get_entry
from leafvol.spectrum import harmonic_multiplicities, heat_target, heat_trace, heat_truncation, scaled_heat_trace
from leafvol.volume import volume_ratio


@dataclass
class Config:
    entry: str = "hopf_complex"
    s_values: list[float] = field(default_factory=lambda: [1e-1, 3e-2, 1e-2, 3e-3, 1e-3])
    tail_tol: float = 1e-8


def run(cfg: Config):
    entry = get_entry(cfg.entry)
    H = entry.hilbert_series()
    report = volume_ratio(H)
    target = heat_target(report)
    n = entry.ambient_n
    K = max(heat_truncation(n, s, cfg.tail_tol) for s in cfg.s_values)
    spec = harmonic_multiplicities(H, n, K)
    rows = []
    for s in cfg.s_values:
        ht = heat_trace(spec, s)
        scaled = scaled_heat_trace(ht, report.m)
        rows.append((s, ht.value, scaled, scaled / target - 1, ht.truncation_bound))
    return report, target, K, rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--entry", default=Config.entry)
    parser.add_argument("--s", type=float, nargs="+", default=Config().s_values)
    parser.add_argument("--tail-tol", type=float, default=Config.tail_tol)
    args = parser.parse_args()
    report, target, K, rows = run(Config(args.entry, args.s, args.tail_tol))
    print(f"{args.entry}: m={report.m}, A={report.weyl_constant}, target={target:.6f}, K={K}")
    print(f"{'s':>10s} {'Z(s)':>14s} {'Z s^(m/2)':>12s} {'rel.err':>10s} {'tail':>10s}")
    for s, z, scaled, err, tail in rows:
        print(f"{s:10.1e} {z:14.6g} {scaled:12.6f} {err:10.2e} {tail:10.1e}")


if __name__ == "__main__":
    main()
