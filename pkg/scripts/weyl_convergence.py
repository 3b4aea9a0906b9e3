"""Relative Weyl-law error |N(lambda_k) / (A lambda_k^(m/2)) - 1| for catalog entries.

    python3 scripts/weyl_convergence.py --k 10 100 300 1000 --entries hopf_complex B2
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from leafvol.catalog import get_entry, list_entries
from leafvol.spectrum import counting_function, harmonic_multiplicities, weyl_relative_error
from leafvol.volume import volume_ratio


@dataclass
class Config:
    ks: list[int] = field(default_factory=lambda: [10, 30, 100, 300, 1000])
    entries: list[str] = field(default_factory=list_entries)


def run(cfg: Config) -> list[tuple[str, int, list[float]]]:
    K = max(cfg.ks)
    out = []
    for name in cfg.entries:
        entry = get_entry(name)
        H = entry.hilbert_series()
        report = volume_ratio(H)
        spec = harmonic_multiplicities(H, entry.ambient_n, K)
        errs = []
        for k in cfg.ks:
            t = spec.eigenvalue(k)
            errs.append(float(weyl_relative_error(counting_function(spec, t), report, t)))
        out.append((name, report.m, errs))
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, nargs="+", default=Config().ks)
    parser.add_argument("--entries", nargs="+", default=list_entries())
    args = parser.parse_args()
    cfg = Config(ks=sorted(args.k), entries=args.entries)
    header = f"{'entry':22s} {'m':>2s} " + " ".join(f"{'k=' + str(k):>10s}" for k in cfg.ks) + "  monotone"
    print(header)
    for name, m, errs in run(cfg):
        monotone = all(a > b for a, b in zip(errs, errs[1:]))
        print(f"{name:22s} {m:2d} " + " ".join(f"{e:10.2e}" for e in errs) + f"  {'yes' if monotone else 'no'}")


if __name__ == "__main__":
    main()
