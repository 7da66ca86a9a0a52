"""
Exact linear combinations of blob diagrams and the three multiplication rule sets.

Stacking puts the left factor on top: in x*y the bottom points of x are glued to
the top points of y. Products of two basis diagrams are a scalar times a single
diagram, so `Rules.basis_product` is memoized and serves as the structure table.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .diagrams import BlobDiagram, exposed_positions, identity
from .errors import MarkNotLeftExposed, SingularParameter, SizeMismatch, ZeroQ

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]


def as_scalar(x: ScalarLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def gaussian_int(k: int, q: ScalarLike) -> Fraction:
    """[k] = q^(k-1) + q^(k-3) + ... + q^(1-k), with [0] = 0 and [-k] = -[k]."""
    q = as_scalar(q)
    if q == 0:
        raise ZeroQ("[k] is undefined at q = 0")
    if k < 0:
        return -gaussian_int(-k, q)
    return sum((q ** (k - 1 - 2 * j) for j in range(k)), Fraction(0))


# --- concatenation -------------------------------------------------------------


@dataclass(frozen=True)
class ConcatResult:
    """Stacked picture before loop/mark rules: arcs with raw mark counts, and loops."""

    n: int
    match: tuple[int, ...]
    arc_marks: tuple[tuple[int, int], ...]  # (left end, count) for arcs with count > 0
    loops: tuple[int, ...]  # mark count of each closed loop


@functools.lru_cache(maxsize=1 << 20)
def concatenate(d1: BlobDiagram, d2: BlobDiagram) -> ConcatResult:
    if d1.n != d2.n:
        raise SizeMismatch(f"cannot stack n={d1.n} over n={d2.n}")
    n = d1.n
    N = 2 * n
    diagrams = (d1, d2)
    seen = (bytearray(N), bytearray(N))

    def marked(k: int, p: int) -> int:
        d = diagrams[k]
        return 1 if min(p, d.match[p]) in d.marks else 0

    def glue(k: int, p: int) -> tuple[int, int] | None:
        # a point that is not on the outer boundary continues in the other diagram
        if k == 0 and p < n:
            return 1, N - 1 - p
        if k == 1 and p >= n:
            return 0, N - 1 - p
        return None

    match = [-1] * N
    arc_marks = []
    for start in range(N):
        if match[start] != -1:
            continue
        k, p = (0, start) if start >= n else (1, start)
        count = 0
        while True:
            seen[k][p] = 1
            q = diagrams[k].match[p]
            seen[k][q] = 1
            count += marked(k, p)
            nxt = glue(k, q)
            if nxt is None:
                break
            k, p = nxt
        match[start], match[q] = q, start
        if count:
            arc_marks.append((min(start, q), count))

    loops = []
    for k in (0, 1):
        for p in range(N):
            if seen[k][p]:
                continue
            count = 0
            kk, pp = k, p
            while not seen[kk][pp]:
                seen[kk][pp] = 1
                q = diagrams[kk].match[pp]
                seen[kk][q] = 1
                count += marked(kk, pp)
                kk, pp = glue(kk, q)
            loops.append(count)
    return ConcatResult(n, tuple(match), tuple(sorted(arc_marks)), tuple(loops))


def _surviving(c: ConcatResult, marks: Iterable[int]) -> BlobDiagram:
    marks = frozenset(marks)
    if marks:
        exposed = exposed_positions(c.match)
        if not marks <= exposed:
            raise MarkNotLeftExposed("a product placed a mark on an enclosed arc")
    return BlobDiagram(c.n, c.match, marks)


# --- rule sets -----------------------------------------------------------------


class Rules:
    """How loops and multiply-marked arcs are resolved after concatenation."""

    name = "abstract"

    def resolve(self, c: ConcatResult) -> tuple[Fraction, BlobDiagram] | None:
        raise NotImplementedError

    def basis_product(self, d1: BlobDiagram, d2: BlobDiagram) -> tuple[Fraction, BlobDiagram] | None:
        return _basis_product(self, d1, d2)


@functools.lru_cache(maxsize=1 << 20)
def _basis_product(rules: Rules, d1: BlobDiagram, d2: BlobDiagram):
    return rules.resolve(concatenate(d1, d2))


@dataclass(frozen=True)
class NilBlobRules(Rules):
    name = "nilblob"

    def resolve(self, c):
        if any(c.loops) or any(cnt > 1 for _, cnt in c.arc_marks):
            return None
        coeff = Fraction((-2) ** len(c.loops))
        return coeff, _surviving(c, (a for a, _ in c.arc_marks))


@dataclass(frozen=True)
class BlobRules(Rules):
    """Classical blob algebra with parameters q and m."""

    q: Fraction
    m: int
    name = "blob"

    def __post_init__(self):
        object.__setattr__(self, "q", as_scalar(self.q))
        if self.q == 0:
            raise ZeroQ("q must be nonzero")
        if self.q in (1, -1):
            raise SingularParameter("q = ±1 is excluded")
        if gaussian_int(self.m, self.q) == 0:
            raise SingularParameter(f"[m] vanishes at m={self.m}, q={self.q}")

    @property
    def unmarked_loop(self) -> Fraction:
        return -gaussian_int(2, self.q)

    @property
    def marked_loop(self) -> Fraction:
        return -gaussian_int(self.m - 1, self.q) / gaussian_int(self.m, self.q)

    def resolve(self, c):
        coeff = Fraction(1)
        for marks in c.loops:
            coeff *= self.marked_loop if marks else self.unmarked_loop
        if coeff == 0:
            return None
        return coeff, _surviving(c, (a for a, _ in c.arc_marks))


NILBLOB = NilBlobRules()


# --- elements ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Element:
    """A finite linear combination of diagrams multiplied under `rules`."""

    n: int
    terms: Mapping[BlobDiagram, Fraction] = field(default_factory=dict)
    rules: Rules = NILBLOB

    def __post_init__(self):
        clean = {d: as_scalar(c) for d, c in self.terms.items() if c != 0}
        for d in clean:
            if d.n != self.n:
                raise SizeMismatch("term size differs from element size")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, d: BlobDiagram, coeff: ScalarLike = 1, rules: Rules = NILBLOB) -> "Element":
        return cls(d.n, {d: as_scalar(coeff)}, rules)

    @classmethod
    def one(cls, n: int, rules: Rules = NILBLOB) -> "Element":
        return cls.basis(identity(n), 1, rules)

    @classmethod
    def zero(cls, n: int, rules: Rules = NILBLOB) -> "Element":
        return cls(n, {}, rules)

    def _check(self, other: "Element"):
        if other.n != self.n:
            raise SizeMismatch(f"n={self.n} vs n={other.n}")
        if other.rules != self.rules:
            raise ValueError("elements live in different algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.rules == other.rules and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.one(self.n, self.rules) * other
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, 0) + c
        return Element(self.n, out, self.rules)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.n, {d: -c for d, c in self.terms.items()}, self.rules)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: ScalarLike) -> "Element":
        c = as_scalar(c)
        return Element(self.n, {d: c * v for d, v in self.terms.items()}, self.rules)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, ExtElement):
            return ExtElement.lift(self) * other
        self._check(other)
        out: dict[BlobDiagram, Fraction] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                r = self.rules.basis_product(d1, d2)
                if r is None:
                    continue
                c, d = r
                out[d] = out.get(d, 0) + c1 * c2 * c
        return Element(self.n, out, self.rules)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = Element.one(self.n, self.rules)
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self) -> list[tuple[BlobDiagram, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def coordinates(self, basis_index: Mapping[BlobDiagram, int]) -> list[Fraction]:
        v = [Fraction(0)] * len(basis_index)
        for d, c in self.terms.items():
            v[basis_index[d]] = c
        return v

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·{d!r}" for d, c in self.sorted_terms())


def commutator(x, y):
    return x * y - y * x


def mul_nilblob(x: Element, y: Element) -> Element:
    if x.rules != NILBLOB or y.rules != NILBLOB:
        x, y = Element(x.n, x.terms), Element(y.n, y.terms)
    return x * y


def mul_blob(x: Element, y: Element, q: ScalarLike, m: int) -> Element:
    rules = BlobRules(as_scalar(q), m)
    return Element(x.n, x.terms, rules) * Element(y.n, y.terms, rules)


@dataclass(frozen=True, eq=False)
class ExtElement:
    """a0 + a1·J with J central and J² = 0, over the nil-blob algebra."""

    a0: Element
    a1: Element

    def __post_init__(self):
        if self.a0.n != self.a1.n:
            raise SizeMismatch("components differ in n")

    @property
    def n(self) -> int:
        return self.a0.n

    @classmethod
    def lift(cls, x: Element) -> "ExtElement":
        return cls(x, Element.zero(x.n))

    @classmethod
    def J(cls, n: int) -> "ExtElement":
        return cls(Element.zero(n), Element.one(n))

    @classmethod
    def one(cls, n: int) -> "ExtElement":
        return cls.lift(Element.one(n))

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.n != self.n:
                raise SizeMismatch(f"n={self.n} vs n={other.n}")
            return other
        if isinstance(other, Element):
            return ExtElement.lift(other)
        if isinstance(other, (int, Fraction)):
            return ExtElement.one(self.n).scale(other)
        raise TypeError(type(other))

    def is_zero(self) -> bool:
        return self.a0.is_zero() and self.a1.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, (ExtElement, Element)):
            return NotImplemented
        other = self._coerce(other)
        return self.a0 == other.a0 and self.a1 == other.a1

    def __hash__(self):
        return hash((self.a0, self.a1))

    def __add__(self, other):
        other = self._coerce(other)
        return ExtElement(self.a0 + other.a0, self.a1 + other.a1)

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(-self.a0, -self.a1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: ScalarLike) -> "ExtElement":
        return ExtElement(self.a0.scale(c), self.a1.scale(c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        return ExtElement(self.a0 * other.a0, self.a0 * other.a1 + self.a1 * other.a0)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self._coerce(other) * self

    def __repr__(self):
        return f"[{self.a0!r}] + [{self.a1!r}]·J"


def mul_extended(x: ExtElement, y: ExtElement) -> ExtElement:
    return x * y


def element_degree(x: Element | ExtElement) -> int | None:
    """Common degree of all terms (two per mark, two per J), or None if mixed or zero."""
    degrees = set()
    if isinstance(x, ExtElement):
        degrees |= {2 * len(d.marks) for d in x.a0.terms}
        degrees |= {2 * len(d.marks) + 2 for d in x.a1.terms}
    else:
        degrees |= {2 * len(d.marks) for d in x.terms}
    return degrees.pop() if len(degrees) == 1 else None


def exact_rank(rows: Iterable[Iterable[Fraction]]) -> int:
    """Rank over the rationals (sympy's dense domain matrix over QQ)."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    data = [[QQ(c.numerator, c.denominator) for c in r] for r in rows]
    return DomainMatrix(data, (len(data), len(data[0])), QQ).rank()


def element_rank(elements: Iterable[Element | ExtElement]) -> int:
    """Dimension of the span of a family of elements."""
    elements = list(elements)
    keys: dict[tuple[int, BlobDiagram], int] = {}
    vecs = []
    for x in elements:
        parts = [(0, x.a0), (1, x.a1)] if isinstance(x, ExtElement) else [(0, x)]
        v = {}
        for tag, part in parts:
            for d, c in part.terms.items():
                idx = keys.setdefault((tag, d), len(keys))
                v[idx] = c
        vecs.append(v)
    rows = [[v.get(i, Fraction(0)) for i in range(len(keys))] for v in vecs]
    return exact_rank(rows)
