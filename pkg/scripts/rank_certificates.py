"""Rank of the nil-blob images of all m_st words, against C(2K, K) (singular) or 2 C(2K, K) (regular)."""

import argparse
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from nilblob import alcove
from nilblob.algebra import element_rank


@dataclass(frozen=True)
class Config:
    e: int = 5
    m: int = 2
    max_K: int = 3
    jobs: int = 1


def certificate(p: alcove.BlobParams) -> tuple[alcove.BlobParams, int, int, int, float]:
    start = time.perf_counter()
    imgs = alcove.all_mst_images(p)
    return p, len(imgs), element_rank(imgs), alcove.expected_square_sum(p), time.perf_counter() - start


def run(cfg: Config) -> bool:
    params = [alcove.BlobParams(n, cfg.e, cfg.m)
              for n in range(cfg.e - cfg.m + cfg.e, cfg.e - cfg.m + (cfg.max_K + 1) * cfg.e)]
    with ProcessPoolExecutor(cfg.jobs) as pool:
        rows = list(pool.map(certificate, params))
    ok = True
    for p, count, rank, want, secs in rows:
        K, R, singular = alcove.classify(p)
        ok &= rank == want
        kind = "singular" if singular else "regular"
        print(f"n={p.n:>3} K={K} R={R} {kind:<8} words={count:>4} rank={rank:>4} want={want:>4} "
              f"{'PASS' if rank == want else 'FAIL'}  {secs:.2f}s")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--e", type=int, default=Config.e)
    ap.add_argument("--m", type=int, default=Config.m)
    ap.add_argument("--max-K", type=int, default=Config.max_K)
    ap.add_argument("--jobs", type=int, default=Config.jobs)
    a = ap.parse_args()
    raise SystemExit(0 if run(Config(a.e, a.m, a.max_K, a.jobs)) else 1)
