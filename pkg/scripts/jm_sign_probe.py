"""Which coefficient c in L_{i+1} = U_i L_i + L_i U_i + c U_i (L_1 + ... + L_{i-1}) gives the JM identities."""

import argparse
from dataclasses import dataclass

from nilblob.algebra import Element, commutator
from nilblob.jm import L_elements, Y_elements


@dataclass(frozen=True)
class Config:
    n: int = 5
    coefficients: tuple[int, ...] = (-2, -1, 0, 1, 2)


def properties(n: int, c: int) -> dict[str, bool]:
    L = L_elements(n, c)
    zero = Element.zero(n)
    J = sum(L, zero)
    Y = Y_elements(n)
    return {
        "commute": all(commutator(a, b).is_zero() for a in L for b in L),
        "L_i^2": all(L[i] * L[i] == (L[i] * sum(L[:i], zero)).scale(-2) for i in range(1, n)),
        "J^2=0": (J * J).is_zero(),
        "L=Y-Y": all(L[i] == Y[i] - Y[i - 1] for i in range(1, n)),
    }


def run(cfg: Config) -> None:
    for c in cfg.coefficients:
        props = properties(cfg.n, c)
        print(f"c={c:+d}  " + "  ".join(f"{k}:{'yes' if v else 'no'}" for k, v in props.items()))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--c", type=int, nargs="*", default=list(Config.coefficients))
    a = ap.parse_args()
    run(Config(a.n, tuple(a.c)))
