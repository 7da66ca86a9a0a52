"""
Generator words, the evaluation map into diagrams, normal monomials, normal forms
and the constructive factorization of a diagram into generators.

Letters are integers: i >= 0 stands for U_i, and `J` (= -1) for the central
square-zero generator of the extended algebra.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import NILBLOB, Element, ExtElement, Rules, BlobRules, as_scalar, gaussian_int
from .diagrams import (
    BlobDiagram,
    HalfDiagram,
    contact_points,
    cup_cap,
    enumerate_diagrams,
    identity,
    split_halves,
    walk_of_half,
)
from .errors import IndexOutOfRange, InvalidDiagram, TableMiss

J = -1


@dataclass(frozen=True)
class GeneratorWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for a in self.letters:
            if a != J and not 0 <= a < self.n:
                raise IndexOutOfRange(f"U{a} needs 0 <= index < {self.n}")

    @property
    def has_J(self) -> bool:
        return J in self.letters

    def __str__(self) -> str:
        return format_word(self.letters)

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.n, self.letters + other.letters)


_TOKEN = re.compile(r"^(?:([uv])(\d+)|(j))$")


def parse_word(text: str, n: int) -> GeneratorWord:
    """Whitespace-separated tokens such as 'U0 U1 J'; case-insensitive. 'V' is an alias of 'U'."""
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok.strip().lower())
        if not m:
            raise ValueError(f"bad token {tok!r}")
        letters.append(J if m.group(3) else int(m.group(2)))
    return GeneratorWord(n, tuple(letters))


def format_word(letters: Sequence[int]) -> str:
    return " ".join("J" if a == J else f"U{a}" for a in letters)


def generator_diagram(n: int, i: int) -> BlobDiagram:
    """phi(U_0) is the identity with its first line marked; phi(U_i) is a cup/cap at (i, i+1)."""
    if not 0 <= i < n:
        raise IndexOutOfRange(f"U{i} needs 0 <= index < {n}")
    return identity(n, marked=True) if i == 0 else cup_cap(n, i)


def generator_element(n: int, i: int, rules: Rules = NILBLOB) -> Element:
    """Image of a generator. In the classical blob algebra V_0 carries the scalar -[m]."""
    coeff = Fraction(1)
    if i == 0 and isinstance(rules, BlobRules):
        coeff = -gaussian_int(rules.m, rules.q)
    return Element.basis(generator_diagram(n, i), coeff, rules)


def evaluate(w: GeneratorWord | str, n: int | None = None, rules: Rules = NILBLOB, extended: bool = False):
    """Product of the generator images, left factor on top."""
    if isinstance(w, str):
        w = parse_word(w, n)
    if w.has_J and rules is not NILBLOB:
        raise ValueError("J only exists in the extended nil-blob algebra")
    out = Element.one(w.n, rules)
    for a in w.letters:
        if a != J:
            out = out * generator_element(w.n, a, rules)
    if w.has_J or extended:
        k = w.letters.count(J)
        if k == 0:
            return ExtElement.lift(out)
        if k == 1:
            return ExtElement(Element.zero(w.n), out)
        return ExtElement(Element.zero(w.n), Element.zero(w.n))
    return out


def word_degree(w: GeneratorWord | Sequence[int]) -> int:
    letters = w.letters if isinstance(w, GeneratorWord) else w
    return sum(2 for a in letters if a in (0, J))


# --- normal monomials ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class NormalMonomial:
    I: tuple[int, ...]
    J: tuple[int, ...]

    def letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for i, j in zip(self.I, self.J):
            out.extend(range(i, j - 1, -1))
        return tuple(out)

    def word(self, n: int) -> GeneratorWord:
        return GeneratorWord(n, self.letters())

    def __str__(self) -> str:
        return format_word(self.letters()) or "1"


def _admissible_next(prev: tuple[int, int] | None, n: int):
    lo_i = 0 if prev is None else prev[0] + 1
    for i in range(lo_i, n):
        for j in range(0, i + 1):
            if prev is None or j > prev[1] or (j == 0 and prev[1] == 0):
                yield i, j


@functools.lru_cache(maxsize=None)
def enumerate_normal(n: int) -> tuple[NormalMonomial, ...]:
    """All normal monomials in U_0..U_{n-1}, including 1; there are C(2n, n)."""
    out = []

    def rec(I: tuple[int, ...], Jt: tuple[int, ...]):
        out.append(NormalMonomial(I, Jt))
        prev = (I[-1], Jt[-1]) if I else None
        for i, j in _admissible_next(prev, n):
            rec(I + (i,), Jt + (j,))

    rec((), ())
    return tuple(sorted(out, key=lambda nm: (len(nm.letters()), nm.letters())))


@functools.lru_cache(maxsize=None)
def normal_table(n: int) -> dict[BlobDiagram, tuple[Fraction, NormalMonomial]]:
    """diagram -> (c, nm) with evaluate(nm) = c·diagram."""
    table = {}
    for nm in enumerate_normal(n):
        x = evaluate(nm.word(n))
        if len(x.terms) != 1:
            raise TableMiss(f"normal monomial {nm} does not evaluate to a single diagram")
        (d, c), = x.terms.items()
        if d in table:
            raise TableMiss(f"normal monomials {table[d][1]} and {nm} hit the same diagram")
        table[d] = (c, nm)
    return table


def normal_form(w: GeneratorWord | str, n: int | None = None) -> tuple[Fraction, NormalMonomial] | None:
    """(c, nm) with evaluate(w) = c·evaluate(nm), or None when evaluate(w) = 0."""
    if isinstance(w, str):
        w = parse_word(w, n)
    if w.has_J:
        raise ValueError("normal forms are computed for J-free words")
    x = evaluate(w)
    if x.is_zero():
        return None
    (d, c), = x.terms.items()
    try:
        c_nm, nm = normal_table(w.n)[d]
    except KeyError:
        raise TableMiss(f"no normal monomial for {d!r}") from None
    return c / c_nm, nm


# --- factorization -------------------------------------------------------------


def marker_word(i: int) -> tuple[int, ...]:
    """(U1 U3 .. U_{2i+1}) U0 (U2 U4 .. U_{2i+2}) (U1 U3 .. U_{2i+1}).

    Evaluates to the diagram with cups and caps at (1,2), ..., (2i+1, 2i+2), a
    marked through line at 2i+3 and straight lines after it. For i = -1 this is U0.
    """
    odd = tuple(range(1, 2 * i + 2, 2))
    even = tuple(range(2, 2 * i + 3, 2))
    return odd + (0,) + even + odd


def _fill(current: list[int], target: Sequence[int], lo: int, hi: int) -> list[int]:
    """Raise valleys of `current` inside (lo, hi) until it meets `target`; one layer at a time."""
    letters = []
    while True:
        layer = [
            i
            for i in range(lo + 1, hi)
            if current[i - 1] == current[i] + 1 == current[i + 1] and target[i] > current[i]
        ]
        if not layer:
            break
        for i in layer:
            current[i] += 2
        letters.extend(layer)
    if list(current[lo : hi + 1]) != list(target[lo : hi + 1]):
        raise InvalidDiagram("walk filling did not reach the target walk")
    return letters


def _half_word(h: HalfDiagram, n_arcs: int, mark_through: bool) -> tuple[list[int], list[int]]:
    """Letters that turn the cup half of the core into `h` when multiplied below it.

    Returns (letters, absorbed) where `absorbed` lists core letters that a leading
    marker makes redundant.
    """
    n = h.n
    target = walk_of_half(h)
    current = [j % 2 if j <= 2 * n_arcs else j - 2 * n_arcs for j in range(n + 1)]
    contacts = contact_points(target)
    bounds = [(c, nxt) for c, nxt in zip(contacts, contacts[1:])]
    if contacts[-1] < n:
        bounds.append((contacts[-1], n))
    marked_left_ends = {a for a, _ in h.marks}
    letters: list[int] = []
    absorbed: list[int] = []
    for lo, hi in reversed(bounds):
        letters.extend(_fill(current, target, lo, hi))
        is_last = hi == n and target[n] > 0
        needs_mark = (lo + 1) in marked_left_ends or (is_last and mark_through)
        if needs_mark:
            i = (lo - 2) // 2
            if not letters and not absorbed:
                absorbed = list(range(1, 2 * i + 2, 2))
            letters.extend(marker_word(i))
    return letters, absorbed


def factorize_diagram(d: BlobDiagram) -> tuple[GeneratorWord, Fraction]:
    """A word w and a nonzero scalar c with evaluate(w) = c·d."""
    n = d.n
    top, bottom, k = split_halves(d)
    n_arcs = (n - abs(k)) // 2
    core = list(range(1, 2 * n_arcs, 2))
    below, absorbed = _half_word(bottom, n_arcs, k < 0)
    above, _ = _half_word(top, n_arcs, False)
    if absorbed:
        core = [a for a in core if a not in absorbed]
    letters = list(reversed(above)) + core + below
    x = evaluate(GeneratorWord(n, tuple(letters)))
    if len(x.terms) != 1 or d not in x.terms:
        raise InvalidDiagram(f"factorization failed for {d!r}")
    # drop letters that only rescale the result, e.g. U2 U1 U2 -> U2
    i = 0
    while i < len(letters):
        shorter = letters[:i] + letters[i + 1 :]
        y = evaluate(GeneratorWord(n, tuple(shorter)))
        if len(y.terms) == 1 and d in y.terms:
            letters, x = shorter, y
        else:
            i += 1
    return GeneratorWord(n, tuple(letters)), x.terms[d]
