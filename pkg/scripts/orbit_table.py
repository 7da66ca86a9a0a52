"""Tabulate K, R and sum |Std(mu)|^2 against the central binomial prediction over a parameter grid."""

import argparse
from dataclasses import dataclass

from nilblob import alcove


@dataclass(frozen=True)
class Config:
    e_min: int = 4
    e_max: int = 7
    max_K: int = 4
    cross_check_up_to: int = 14  # also compare with the residue filter for n up to this


def run(cfg: Config) -> bool:
    ok = True
    print(f"{'n':>3} {'e':>2} {'m':>2} {'K':>2} {'R':>2}  {'shapes':>6} {'sum':>6} {'want':>6}  filter")
    for e in range(cfg.e_min, cfg.e_max + 1):
        for m in range(2, e - 1):
            for n in range(e - m, e - m + (cfg.max_K + 1) * e):
                p = alcove.BlobParams(n, e, m)
                K, R, _ = alcove.classify(p)
                got, want = alcove.std_square_sum(p), alcove.expected_square_sum(p)
                agree = "-"
                if n <= cfg.cross_check_up_to:
                    agree = "ok" if alcove.enumerate_std(p) == alcove.enumerate_std_direct(p) else "DIFF"
                ok &= got == want and agree != "DIFF"
                flag = "" if got == want else "  <-- mismatch"
                print(f"{n:>3} {e:>2} {m:>2} {K:>2} {R:>2}  {len(alcove.enumerate_std(p)):>6} {got:>6} {want:>6}  {agree}{flag}")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--e-min", type=int, default=Config.e_min)
    ap.add_argument("--e-max", type=int, default=Config.e_max)
    ap.add_argument("--max-K", type=int, default=Config.max_K)
    ap.add_argument("--cross-check-up-to", type=int, default=Config.cross_check_up_to)
    a = ap.parse_args()
    raise SystemExit(0 if run(Config(a.e_min, a.e_max, a.max_K, a.cross_check_up_to)) else 1)
