"""Property suites shared by the test-suite, the `verify` subcommand and the scripts."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import alcove
from .algebra import NILBLOB, BlobRules, Element, ExtElement, Rules, commutator, element_rank, gaussian_int
from .diagrams import enumerate_diagrams
from .jm import J_element, L_elements, Y_elements
from .presentation import enumerate_normal, evaluate, factorize_diagram, generator_element, normal_table


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def relation_checks(n: int, rules: Rules = NILBLOB) -> list[Check]:
    """The five defining relations on the generator images."""
    U = [generator_element(n, i, rules) for i in range(n)]
    if isinstance(rules, BlobRules):
        loop, c0, c101 = -gaussian_int(2, rules.q), -gaussian_int(rules.m, rules.q), gaussian_int(rules.m - 1, rules.q)
    else:
        loop, c0, c101 = -2, 0, 0
    out = []
    out.append(Check(f"n={n} U_i^2 = {loop} U_i", all(U[i] * U[i] == U[i].scale(loop) for i in range(1, n))))
    out.append(Check(
        f"n={n} U_i U_j U_i = U_i for |i-j|=1, i,j>0",
        all(U[i] * U[j] * U[i] == U[i] for i in range(1, n) for j in range(1, n) if abs(i - j) == 1),
    ))
    out.append(Check(
        f"n={n} U_i U_j = U_j U_i for |i-j|>1",
        all(U[i] * U[j] == U[j] * U[i] for i in range(n) for j in range(n) if abs(i - j) > 1),
    ))
    if n >= 2:
        out.append(Check(f"n={n} U_1 U_0 U_1 = {c101} U_1", U[1] * U[0] * U[1] == U[1].scale(c101)))
    out.append(Check(f"n={n} U_0^2 = {c0} U_0", U[0] * U[0] == U[0].scale(c0)))
    return out


def associativity_check(n: int, rules: Rules = NILBLOB) -> Check:
    basis = enumerate_diagrams(n)
    bad = 0
    for a in basis:
        for b in basis:
            ab = rules.basis_product(a, b)
            for c in basis:
                bc = rules.basis_product(b, c)
                left = None if ab is None else rules.basis_product(ab[1], c)
                right = None if bc is None else rules.basis_product(a, bc[1])
                lv = None if left is None else (ab[0] * left[0], left[1])
                rv = None if right is None else (bc[0] * right[0], right[1])
                if lv != rv:
                    bad += 1
    return Check(f"n={n} associativity over {len(basis)}^3 basis triples", bad == 0, f"{bad} failures" if bad else "")


def dimension_checks(n: int) -> list[Check]:
    d, nm = len(enumerate_diagrams(n)), len(enumerate_normal(n))
    return [
        Check(f"n={n} |basis diagrams| = C(2n,n) = {comb(2 * n, n)}", d == comb(2 * n, n), f"got {d}"),
        Check(f"n={n} |normal monomials| = C(2n,n)", nm == comb(2 * n, n), f"got {nm}"),
    ]


def extended_dimension_check(n: int) -> Check:
    """{d, J d} over all basis diagrams d is linearly independent in the extended algebra."""
    lifted = [ExtElement.lift(Element.basis(d)) for d in enumerate_diagrams(n)]
    J = ExtElement.J(n)
    r = element_rank(lifted + [J * x for x in lifted])
    return Check(f"n={n} extended basis count = 2 C(2n,n) = {2 * comb(2 * n, n)}", r == 2 * comb(2 * n, n), f"rank {r}")


def injectivity_check(n: int) -> Check:
    try:
        table = normal_table(n)
    except Exception as exc:  # TableMiss carries the colliding monomials
        return Check(f"n={n} normal monomials map injectively", False, str(exc))
    ok = len(table) == comb(2 * n, n) and all(c != 0 for c, _ in table.values())
    return Check(f"n={n} normal monomials map injectively with nonzero scalars", ok, f"{len(table)} images")


def factorization_check(n: int) -> Check:
    bad = 0
    for d in enumerate_diagrams(n):
        try:
            w, c = factorize_diagram(d)
            x = evaluate(w)
            bad += not (c != 0 and x == Element.basis(d, c))
        except Exception:
            bad += 1
    return Check(f"n={n} factorize_diagram sound on every basis diagram", bad == 0, f"{bad} failures" if bad else "")


def jm_checks(n: int) -> list[Check]:
    L, Y = L_elements(n), Y_elements(n)
    zero = Element.zero(n)
    U = [generator_element(n, i) for i in range(n)]
    J = J_element(n)
    return [
        Check(f"n={n} L_i commute and Y_i commute", all(
            commutator(a, b).is_zero() for fam in (L, Y) for a in fam for b in fam
        )),
        Check(f"n={n} L_i^2 = -2 L_i (L_1 + ... + L_(i-1))", all(
            L[i] * L[i] == (L[i] * sum(L[:i], zero)).scale(-2) for i in range(1, n)
        )),
        Check(f"n={n} Y_i^2 = 0", all((y * y).is_zero() for y in Y)),
        Check(f"n={n} (sum L_i)^2 = 0", (J * J).is_zero()),
        Check(f"n={n} [U_i, L_i + L_(i+1) + L_(i+2)] = 0", all(
            commutator(U[i], L[i - 1] + L[i] + L[i + 1]).is_zero() for i in range(1, n - 1)
        )),
        Check(f"n={n} Y_(i+1) U_i = U_i Y_i + Y_i - Y_(i+1)", all(
            Y[i] * U[i] == U[i] * Y[i - 1] + Y[i - 1] - Y[i] for i in range(1, n)
        )),
        Check(f"n={n} Y_(i+1) = (U_i + 1) Y_i (U_i + 1)", all(
            Y[i] == (U[i] + 1) * Y[i - 1] * (U[i] + 1) for i in range(1, n)
        )),
    ]


def orbit_checks(p: alcove.BlobParams) -> list[Check]:
    K, R, singular = alcove.classify(p)
    got, want = alcove.std_square_sum(p), alcove.expected_square_sum(p)
    return [
        Check(f"{p.n, p.e, p.m} reflection orbit = residue filter",
              alcove.enumerate_std(p) == alcove.enumerate_std_direct(p)),
        Check(f"{p.n, p.e, p.m} sum |Std(mu)|^2 = {want}", got == want, f"K={K} R={R} got {got}"),
    ]


def rank_check(p: alcove.BlobParams) -> Check:
    K, R, singular = alcove.classify(p)
    imgs = alcove.all_mst_images(p)
    r, want = element_rank(imgs), alcove.expected_square_sum(p)
    algebra = "NB" if singular else "extended NB"
    return Check(f"{p.n, p.e, p.m} m_st images span {want} in {algebra}_{K}", r == want, f"rank {r} of {len(imgs)}")
