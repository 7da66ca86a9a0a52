"""
One-column tableaux as Pascal-triangle paths, the alcove geometry on them, region
factorizations of d(t), codification matrices and the m_st -> generator-word map
into the (extended) nil-blob algebra.

A path is stored as its steps: +1 for an entry in column 2, -1 for column 1.
In grid coordinates (c2, c1) = (#column-2 steps, #column-1 steps) the cell with
lower-left corner (a, b) is filled by the simple transposition s_{a+b+1}.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .algebra import Element, ExtElement
from .errors import (
    IndexOutOfRange,
    MixedInnerOuter,
    NotCentral,
    NotInOrbit,
    ShapeMismatch,
    SingularParameter,
    TooSmallN,
)
from .jm import Y_elements
from .presentation import generator_element


@dataclass(frozen=True)
class BlobParams:
    n: int
    e: int
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 1 < self.m < self.e - 1:
            raise SingularParameter(f"need 1 < m < e-1, got m={self.m}, e={self.e}")

    @property
    def kappa(self) -> tuple[int, int]:
        return (0, self.m)

    def wall(self, j: int) -> int:
        """x-coordinate of the wall M_j."""
        return (j - 1) * self.e + self.m

    def is_wall(self, x: int) -> bool:
        return (x - self.m) % self.e == 0

    def wall_index(self, x: int) -> int:
        if not self.is_wall(x):
            raise ValueError(f"x={x} is not on a wall")
        return (x - self.m) // self.e + 1

    def f(self, j: int) -> int:
        """Time at which every orbit path meets its j-th wall."""
        return -self.m + j * self.e

    def in_fundamental_alcove(self, x: int) -> bool:
        return self.m - self.e < x < self.m

    def with_n(self, n: int) -> "BlobParams":
        return BlobParams(n, self.e, self.m)


@dataclass(frozen=True, order=True)
class Shape:
    mu1: int
    mu2: int

    @property
    def n(self) -> int:
        return self.mu1 + self.mu2

    @property
    def x(self) -> int:
        return self.mu2 - self.mu1

    def __str__(self) -> str:
        return f"(1^{self.mu1},1^{self.mu2})"


@dataclass(frozen=True, order=True)
class PathTableau:
    steps: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.steps):
            raise ValueError("steps must be +1 (column 2) or -1 (column 1)")

    @classmethod
    def from_heights(cls, heights: Sequence[int]) -> "PathTableau":
        if not heights or heights[0] != 0:
            raise ValueError("heights must start at 0")
        return cls(tuple(b - a for a, b in zip(heights, heights[1:])))

    @classmethod
    def from_columns(cls, n: int, column2: Iterable[int]) -> "PathTableau":
        c2 = set(column2)
        if not c2 <= set(range(1, n + 1)):
            raise ValueError("column entries must lie in 1..n")
        return cls(tuple(1 if k in c2 else -1 for k in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def heights(self) -> list[int]:
        out = [0]
        for s in self.steps:
            out.append(out[-1] + s)
        return out

    @property
    def shape(self) -> Shape:
        c2 = sum(1 for s in self.steps if s == 1)
        return Shape(self.n - c2, c2)

    @property
    def x(self) -> int:
        return sum(self.steps)

    def columns(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        col1 = tuple(k for k, s in enumerate(self.steps, 1) if s == -1)
        col2 = tuple(k for k, s in enumerate(self.steps, 1) if s == 1)
        return col1, col2

    def boxes(self) -> dict[tuple[int, int], int]:
        """Box (row, column) -> entry."""
        col1, col2 = self.columns()
        out = {(r, 1): k for r, k in enumerate(col1, 1)}
        out.update({(r, 2): k for r, k in enumerate(col2, 1)})
        return out

    def truncate(self, k: int) -> "PathTableau":
        return PathTableau(self.steps[:k])

    def __str__(self) -> str:
        return " ".join(str(h) for h in self.heights)


def initial_tableau(shape: Shape) -> PathTableau:
    """t^mu: entries filled along rows, so the path zigzags -1, +1 and then runs straight."""
    k = min(shape.mu1, shape.mu2)
    tail = (-1,) * (shape.mu1 - k) + (1,) * (shape.mu2 - k)
    return PathTableau((-1, 1) * k + tail)


def lambda_tableau(p: BlobParams) -> PathTableau:
    return PathTableau((-1,) * p.n)


# --- residues, classification, path intervals ------------------------------------


def residue_sequence(t: PathTableau, p: BlobParams) -> tuple[int, ...]:
    """res of box (r, 1) is -(r-1), of box (r, 2) is m-(r-1); reduced mod e."""
    out = []
    c1 = c2 = 0
    for s in t.steps:
        if s == -1:
            c1 += 1
            out.append((1 - c1) % p.e)
        else:
            c2 += 1
            out.append((p.m + 1 - c2) % p.e)
    return tuple(out)


def lambda_residues(p: BlobParams) -> tuple[int, ...]:
    return tuple((1 - k) % p.e for k in range(1, p.n + 1))


def classify(p: BlobParams) -> tuple[int, int, bool]:
    """(K, R, singular) from n - (e - m) = K e + R."""
    if p.n < p.e - p.m:
        raise TooSmallN(f"n={p.n} < e-m={p.e - p.m}: the path never reaches a wall")
    K, R = divmod(p.n - (p.e - p.m), p.e)
    return K, R, R == 0


def path_intervals(p: BlobParams) -> tuple[list[list[int]], list[int] | None]:
    """Full path intervals B_1..B_K and, in the regular case, B_last."""
    K, R, singular = classify(p)
    blocks = [list(range(p.f(i) + 1, p.f(i) + p.e + 1)) for i in range(1, K + 1)]
    last = None if singular else list(range(p.f(K + 1) + 1, p.n + 1))
    return blocks, last


# --- standard tableaux with residue sequence i^lambda ----------------------------


def reflect(t: PathTableau, k: int, p: BlobParams) -> PathTableau:
    """Reflect the part of the path after time k through the wall it touches at k."""
    h = t.heights
    if not p.is_wall(h[k]):
        raise ValueError(f"p({k}) = {h[k]} is not on a wall")
    return PathTableau(t.steps[:k] + tuple(-s for s in t.steps[k:]))


def _group(paths: Iterable[PathTableau]) -> dict[Shape, list[PathTableau]]:
    out: dict[Shape, list[PathTableau]] = {}
    for t in paths:
        out.setdefault(t.shape, []).append(t)
    return {mu: sorted(ts) for mu, ts in sorted(out.items())}


@functools.lru_cache(maxsize=None)
def _orbit(p: BlobParams) -> frozenset[PathTableau]:
    seen = {lambda_tableau(p)}
    frontier = list(seen)
    while frontier:
        t = frontier.pop()
        h = t.heights
        for k in range(1, p.n):
            if p.is_wall(h[k]):
                u = reflect(t, k, p)
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)
    return frozenset(seen)


def enumerate_std(p: BlobParams) -> dict[Shape, list[PathTableau]]:
    """Std(i^lambda) as the reflection orbit of P_lambda, grouped by shape."""
    return _group(_orbit(p))


def enumerate_std_direct(p: BlobParams) -> dict[Shape, list[PathTableau]]:
    """Std(i^lambda) by filtering all paths on their residue sequence (depth-first, pruned)."""
    target = lambda_residues(p)
    found: list[PathTableau] = []

    def rec(steps: list[int], c1: int, c2: int):
        k = len(steps)
        if k == p.n:
            found.append(PathTableau(tuple(steps)))
            return
        if (1 - (c1 + 1)) % p.e == target[k]:
            rec(steps + [-1], c1 + 1, c2)
        if (p.m + 1 - (c2 + 1)) % p.e == target[k]:
            rec(steps + [1], c1, c2 + 1)

    rec([], 0, 0)
    return _group(found)


def ordered_shapes(p: BlobParams) -> list[Shape]:
    """mu_0 = lambda, mu_1, ... ordered by decreasing distance of the endpoint from the axis."""
    return sorted(enumerate_std(p), key=lambda mu: (-abs(mu.x), mu.x))


def std_square_sum(p: BlobParams) -> int:
    return sum(len(ts) ** 2 for ts in enumerate_std(p).values())


def expected_square_sum(p: BlobParams) -> int:
    K, _, singular = classify(p)
    return comb(2 * K, K) * (1 if singular else 2)


def path_from_walls(p: BlobParams, walls: Sequence[int], tail: int = 0) -> PathTableau:
    """Orbit path through M_{walls[0]} at f(1), M_{walls[1]} at f(2), ..., then `tail` straight steps.

    walls[0] must be 0. A nonzero tail is signed: positive runs right, negative left.
    """
    if not walls or walls[0] != 0:
        raise ValueError("an orbit path first meets the wall M_0")
    steps = [-1] * (p.e - p.m)
    for a, b in zip(walls, walls[1:]):
        if abs(a - b) != 1:
            raise ValueError("consecutive walls must be adjacent")
        steps += [1 if b > a else -1] * p.e
    steps += [1 if tail > 0 else -1] * abs(tail)
    return PathTableau(tuple(steps))


def walls_of(t: PathTableau, p: BlobParams) -> list[int]:
    """Wall indices at f(1), f(2), ... up to the last wall time within the path."""
    h = t.heights
    out = []
    j = 1
    while p.f(j) <= t.n:
        out.append(p.wall_index(h[p.f(j)]) if p.is_wall(h[p.f(j)]) else None)
        j += 1
    return out


# --- permutations and reduced expressions ----------------------------------------


def apply_word(t: PathTableau, word: Sequence[int]) -> dict[tuple[int, int], int]:
    """Right action: t s_{i1} s_{i2} ... swaps the entries i and i+1 letter by letter."""
    boxes = t.boxes()
    where = {v: b for b, v in boxes.items()}
    for i in word:
        if not 1 <= i < t.n:
            raise IndexOutOfRange(f"s_{i} needs 1 <= i < {t.n}")
        bi, bj = where[i], where[i + 1]
        boxes[bi], boxes[bj] = i + 1, i
        where[i], where[i + 1] = bj, bi
    return boxes


def one_line(t: PathTableau) -> list[int]:
    """d(t) in one-line notation: d(i) = t((t^mu)^{-1}(i))."""
    init = initial_tableau(t.shape).boxes()
    tb = t.boxes()
    inv = {v: b for b, v in init.items()}
    return [tb[inv[i]] for i in range(1, t.n + 1)]


def word_one_line(shape: Shape, word: Sequence[int]) -> list[int]:
    init = initial_tableau(shape)
    boxes = apply_word(init, word)
    inv = {v: b for b, v in init.boxes().items()}
    return [boxes[inv[i]] for i in range(1, shape.n + 1)]


def inversion_count(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def _corner_flip(h: list[int], k: int) -> int | None:
    """New height at k if the path has a corner there, else None."""
    if 0 < k < len(h) - 1 and h[k - 1] == h[k + 1]:
        return 2 * h[k - 1] - h[k]
    return None


def reduced_expression(t: PathTableau, target: PathTableau) -> list[int]:
    """Area-decreasing corner flips from t to target, smallest index first."""
    if t.shape != target.shape:
        raise ShapeMismatch(f"{t.shape} != {target.shape}")
    h, goal = t.heights, target.heights
    word = []
    while h != goal:
        for k in range(1, t.n):
            new = _corner_flip(h, k)
            if new is not None and abs(new - goal[k]) < abs(h[k] - goal[k]):
                h[k] = new
                word.append(k)
                break
        else:  # pragma: no cover - paths with equal endpoints always admit a flip
            raise RuntimeError("no area-decreasing flip")
    return word


# --- regions and favourite reduced expressions -----------------------------------


@dataclass(frozen=True)
class Factor:
    kind: str  # "H", "U'" or "U"
    index: int
    letters: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class RegionFactorization:
    tableau: PathTableau
    factors: tuple[Factor, ...]

    @property
    def theta(self) -> tuple[Factor, ...]:
        return tuple(f for f in self.factors if f.kind != "U")

    @property
    def u(self) -> tuple[Factor, ...]:
        return tuple(f for f in self.factors if f.kind == "U")

    @property
    def is_central(self) -> bool:
        return not self.u

    def word(self) -> list[int]:
        return [s for f in self.factors for s in f.letters]

    def theta_word(self) -> list[int]:
        return [s for f in self.theta for s in f.letters]

    def __str__(self) -> str:
        return " ".join(map(str, self.factors)) or "1"


def _column_levels(t: PathTableau) -> list[int]:
    """For each grid column a, the c1 value at which the path takes its step a -> a+1."""
    out, c1 = [], 0
    for s in t.steps:
        if s == 1:
            out.append(c1)
        else:
            c1 += 1
    return out


def cells_between(t: PathTableau, u: PathTableau) -> set[tuple[int, int]]:
    if t.shape != u.shape:
        raise ShapeMismatch(f"{t.shape} != {u.shape}")
    out = set()
    for a, (x, y) in enumerate(zip(_column_levels(t), _column_levels(u))):
        out.update((a, b) for b in range(min(x, y), max(x, y)))
    return out


def region_of(cell: tuple[int, int], p: BlobParams) -> tuple[str, int]:
    """Label a cell by the diamond of the wall grid containing it.

    Diamonds have corners (alpha e, beta e - m); the ones on the central zigzag
    are split by it into an h part (towards where P_lambda starts) and a u' part.
    """
    a, b = cell
    alpha, beta = a // p.e, (b + p.m) // p.e
    i = alpha + beta
    if alpha == beta:
        return ("H" if b >= a + 1 else "U'"), i
    if beta == alpha + 1:
        return ("H" if b <= a else "U'"), i
    return "U", i


def _fill(h: list[int], cells: set[tuple[int, int]]) -> list[int]:
    """Flip every cell of `cells`, one layer of current corners at a time."""

    def corner_cell(k: int) -> tuple[int, int] | None:
        if _corner_flip(h, k) is None:
            return None
        # vertex k sits at (c2, c1) = ((k + h)/2, (k - h)/2); the cell lies on the flipped side
        c2, c1 = (k + h[k]) // 2, (k - h[k]) // 2
        return (c2, c1 - 1) if h[k - 1] > h[k] else (c2 - 1, c1)

    letters = []
    todo = set(cells)
    while todo:
        layer = [k for k in range(1, len(h) - 1) if corner_cell(k) in todo]
        if not layer:
            break
        for k in layer:
            c = corner_cell(k)
            if c in todo:
                h[k] = _corner_flip(h, k)
                todo.discard(c)
                letters.append(k)
    return letters


def region_factorize(t: PathTableau, p: BlobParams) -> RegionFactorization:
    """Favourite reduced expression of d(t): all h regions, then u', then u as they open up."""
    if t.n != p.n or t not in _orbit(p):
        raise NotInOrbit("tableau is not in Std(i^lambda)")
    start = initial_tableau(t.shape)
    regions: dict[tuple[str, int], set] = {}
    for c in cells_between(start, t):
        regions.setdefault(region_of(c, p), set()).add(c)
    h = start.heights
    factors = []
    for kind in ("H", "U'"):
        for key in sorted(k for k in regions if k[0] == kind):
            letters = _fill(h, regions[key])
            if len(letters) != len(regions[key]):
                raise NotInOrbit(f"region {key} could not be filled")
            factors.append(Factor(kind, key[1], tuple(letters)))
    pending = sorted(k for k in regions if k[0] == "U")
    while pending:
        for key in pending:
            letters = _fill(h, set(regions[key]))
            if letters:
                if len(letters) != len(regions[key]):
                    raise NotInOrbit(f"region {key} only partly fillable")
                factors.append(Factor("U", key[1], tuple(letters)))
                pending.remove(key)
                break
        else:
            raise NotInOrbit("u regions could not be ordered")
    if h != t.heights:
        raise NotInOrbit("region filling did not reach the tableau")
    return RegionFactorization(t, tuple(factors))


def block_swap(i: int, p: BlobParams) -> list[int]:
    """One-line form of the order-preserving swap of B_i and B_{i+1}."""
    perm = list(range(1, p.n + 1))
    for r in range(1, p.e + 1):
        a, b = p.f(i) + r, p.f(i + 1) + r
        perm[a - 1], perm[b - 1] = b, a
    return perm


def letters_permutation(n: int, letters: Sequence[int]) -> list[int]:
    """One-line form of s_{i1} s_{i2} ... composed as position swaps, left to right."""
    perm = list(range(1, n + 1))
    for i in letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def centralize(t: PathTableau, p: BlobParams) -> PathTableau:
    """t_1: the path with every u region returned to its inner boundary."""
    rf = region_factorize(t, p)
    h = initial_tableau(t.shape).heights
    for k in rf.theta_word():
        h[k] = _corner_flip(h, k)
    return PathTableau.from_heights(h)


def is_central_geometric(t: PathTableau, p: BlobParams) -> bool:
    """Stays between M_{-1} and M_2, except for the final straight run."""
    h = t.heights
    end = t.n
    while end > 0 and t.steps[end - 1] == t.steps[-1]:
        end -= 1
    lo, hi = p.wall(-1), p.wall(2)
    return all(lo <= x <= hi for x in h[: end + 1])


# --- codification matrices -------------------------------------------------------


@dataclass(frozen=True)
class Sym:
    kind: str  # "H", "U'", "U" or "Y"
    index: int
    star: bool = False

    def __str__(self) -> str:
        return f"{self.kind}{self.index}{'*' if self.star else ''}"

    @classmethod
    def parse(cls, text: str) -> "Sym":
        star = text.endswith("*")
        body = text.rstrip("*")
        for kind in ("U'", "H", "U", "Y"):
            if body.startswith(kind) and body[len(kind):].isdigit():
                return cls(kind, int(body[len(kind):]), star)
        raise ValueError(f"bad symbol {text!r}")


@dataclass(frozen=True)
class CodMatrix:
    """Rows of symbols (None for an empty box); 2 rows for c(t), 4 rows for c(s, t)."""

    rows: tuple[tuple[Sym | None, ...], ...]

    @property
    def k(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def columns(self) -> list[list[Sym | None]]:
        return [[r[j] for r in self.rows] for j in range(self.k)]

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[str | Sym | None]]) -> "CodMatrix":
        def sym(x):
            return Sym.parse(x) if isinstance(x, str) else x

        height = len(cols[0])
        return cls(tuple(tuple(sym(c[r]) for c in cols) for r in range(height)))

    def __str__(self) -> str:
        width = max((len(str(s)) for r in self.rows for s in r if s), default=1)
        return "\n".join(" ".join((str(s) if s else ".").ljust(width) for s in r) for r in self.rows)


def code_matrix(t: PathTableau, p: BlobParams) -> CodMatrix:
    """c(t): H_i in row 1 and U'_i in row 2 of column i+1."""
    rf = region_factorize(t, p)
    if not rf.is_central:
        raise NotCentral("c(t) is only defined for central tableaux")
    k = len(rf.theta)
    top: list[Sym | None] = [None] * k
    bottom: list[Sym | None] = [None] * k
    for f in rf.theta:
        if not 0 <= f.index < k or top[f.index] or bottom[f.index]:
            raise NotCentral(f"unexpected factor {f} in a central tableau")
        (top if f.kind == "H" else bottom)[f.index] = Sym(f.kind, f.index)
    return CodMatrix((tuple(top), tuple(bottom)))


def _starred(row: Sequence[Sym | None]) -> tuple[Sym | None, ...]:
    return tuple(Sym(s.kind, s.index, True) if s else None for s in row)


def codify(s: PathTableau, t: PathTableau, p: BlobParams) -> CodMatrix:
    """c(s, t): c*(s) (rows U'*, H*) stacked on c(t) (rows H, U')."""
    if s.shape != t.shape:
        raise ShapeMismatch(f"{s.shape} != {t.shape}")
    cs, ct = code_matrix(s, p), code_matrix(t, p)
    if cs.k != ct.k:
        raise ShapeMismatch("central tableaux of one shape have the same number of factors")
    return CodMatrix((_starred(cs.rows[1]), _starred(cs.rows[0]), ct.rows[0], ct.rows[1]))


# --- generator words -------------------------------------------------------------

Token = tuple[str, int]  # ("U", i) for U_i^lambda, ("Y", j) for the dot generator on B_j


@dataclass(frozen=True)
class TruncatedWord:
    """A signed-undetermined linear combination of words in U_i^lambda and Y_j^lambda."""

    K: int
    regular: bool
    terms: tuple[tuple[int, tuple[Token, ...]], ...]
    sign_undetermined: bool = True

    def __post_init__(self):
        top = self.K + 1 if self.regular else self.K
        for _, word in self.terms:
            for kind, i in word:
                if kind == "U" and not 1 <= i < self.K:
                    raise IndexOutOfRange(f"U{i}^lambda needs 1 <= i < K={self.K}")
                if kind == "Y" and not 1 <= i <= top:
                    raise IndexOutOfRange(f"Y{i}^lambda needs 1 <= j <= {top}")
                if kind not in ("U", "Y"):
                    raise ValueError(f"bad token {kind}")

    @classmethod
    def single(cls, K: int, regular: bool, word: Sequence[Token]) -> "TruncatedWord":
        return cls(K, regular, ((1, tuple(word)),))

    @property
    def word(self) -> tuple[Token, ...]:
        if len(self.terms) != 1:
            raise ValueError("a linear combination has no single word")
        return self.terms[0][1]

    def __str__(self) -> str:
        parts = []
        for c, w in self.terms:
            body = " ".join(f"{k}{i}" for k, i in w) or "1"
            parts.append(("-" if c < 0 else "+") + " " + (f"{abs(c)} " if abs(c) != 1 else "") + body)
        text = " ".join(parts).lstrip("+ ")
        return f"±({text})" if self.sign_undetermined and len(self.terms) > 1 else (
            f"± {text}" if self.sign_undetermined else text
        )


def matrix_word(c: CodMatrix) -> list[Token]:
    """Steps 0-4: pair up the columns of c(s, t) into U_i and Y_j letters."""
    if len(c.rows) != 4:
        raise ValueError("expected the stacked 4-row matrix c(s, t)")
    cols = [list(col) for col in c.columns()] + [[None] * 4]  # step 0
    # step 1: {U'*, H} -> U in the top row, {H*, U'} -> U in the bottom row
    for col in cols:
        a, b, cc, d = col
        if a and a.kind == "U'" and cc and cc.kind == "H":
            col[0], col[2] = Sym("U", a.index), None
        elif b and b.kind == "H" and d and d.kind == "U'":
            col[3], col[1] = Sym("U", d.index), None
    # step 2: right to left, {H*, H} -> Y_{i+1} in a middle box of the next column
    for j in range(len(cols) - 2, -1, -1):
        col = cols[j]
        if col[1] and col[1].kind == "H" and col[2] and col[2].kind == "H":
            i = col[1].index
            col[1] = col[2] = None
            nxt = cols[j + 1]
            slot = 1 if nxt[1] is None else 2
            if nxt[slot] is not None:
                raise ValueError("no free middle box for Y")
            nxt[slot] = Sym("Y", i + 1)
    # step 3: {U'*, U', Y_i} -> U_i in the middle
    for col in cols:
        if col[0] and col[0].kind == "U'" and col[3] and col[3].kind == "U'":
            i = col[0].index
            ys = [x for x in (col[1], col[2]) if x and x.kind == "Y" and x.index == i]
            if not ys:
                raise ValueError(f"column with U'{i}* and U'{i} carries no Y{i}")
            col[:] = [None, Sym("U", i), None, None]
    # step 4: top row, then the middle rows column by column, then the bottom row
    word: list[Token] = []
    for col in cols:
        if col[0]:
            word.append((col[0].kind, col[0].index))
    for col in cols:
        for x in (col[1], col[2]):
            if x:
                word.append((x.kind, x.index))
    for col in cols:
        if col[3]:
            word.append((col[3].kind, col[3].index))
    for kind, _ in word:
        if kind not in ("U", "Y"):
            raise ValueError(f"unpaired symbol left in the matrix: {word}")
    return word


def generator_word(s: PathTableau, t: PathTableau, p: BlobParams) -> TruncatedWord:
    """m_st for central s, t of one shape (singular lambda), up to sign."""
    K, _, singular = classify(p)
    if not singular:
        raise ValueError("use generator_word_regular for regular lambda")
    return TruncatedWord.single(K, False, matrix_word(codify(s, t, p)))


def cellular_word(s: PathTableau, t: PathTableau, p: BlobParams) -> TruncatedWord:
    """m_st for any s, t of one shape: rev(u(s)) . m_{s1 t1} . u(t)."""
    if s.shape != t.shape:
        raise ShapeMismatch(f"{s.shape} != {t.shape}")
    K, _, singular = classify(p)
    if not singular:
        raise ValueError("use generator_word_regular for regular lambda")
    rs, rt = region_factorize(s, p), region_factorize(t, p)
    core = matrix_word(codify(centralize(s, p), centralize(t, p), p))
    left = [("U", f.index) for f in reversed(rs.u)]
    right = [("U", f.index) for f in rt.u]
    return TruncatedWord.single(K, False, left + core + right)


def is_inner(t: PathTableau, p: BlobParams) -> bool:
    """Regular case: the last R steps run towards the central axis."""
    K, R, singular = classify(p)
    if singular:
        raise ValueError("inner/outer only makes sense for regular lambda")
    nbar = p.n - R
    j = p.wall_index(t.heights[nbar])
    towards = -1 if j >= 1 else 1
    return t.steps[-1] == towards


def generator_word_regular(s: PathTableau, t: PathTableau, p: BlobParams) -> TruncatedWord:
    """m_st for regular lambda via the singular word at n - R, plus a dot on B_last for inner pairs."""
    K, R, singular = classify(p)
    if singular:
        raise ValueError("use generator_word for singular lambda")
    orbit = _orbit(p)
    if s not in orbit or t not in orbit:
        raise NotInOrbit("tableau is not in Std(i^lambda)")
    if s.shape != t.shape:
        raise ShapeMismatch(f"{s.shape} != {t.shape}")
    inner_s, inner_t = is_inner(s, p), is_inner(t, p)
    if inner_s != inner_t:
        raise MixedInnerOuter("one inner and one outer tableau")
    pbar = p.with_n(p.n - R)
    bar = cellular_word(s.truncate(pbar.n), t.truncate(pbar.n), pbar).word
    if not inner_s:
        return TruncatedWord.single(K, True, bar)
    if p.in_fundamental_alcove(s.x) or K == 0:
        return TruncatedWord.single(K, True, (("Y", K + 1),) + bar)
    return TruncatedWord(K, True, ((1, (("Y", K + 1),) + bar), (-1, (("Y", K),) + bar)))


def mst_word(s: PathTableau, t: PathTableau, p: BlobParams) -> TruncatedWord:
    _, _, singular = classify(p)
    return cellular_word(s, t, p) if singular else generator_word_regular(s, t, p)


# --- images in the nil-blob algebra ----------------------------------------------


def token_image(tok: Token, p: BlobParams) -> Element | ExtElement:
    K, _, singular = classify(p)
    kind, i = tok
    if kind == "U":
        if not 1 <= i < K:
            raise IndexOutOfRange(f"U{i}^lambda needs 1 <= i < K={K}")
        return generator_element(K, i).scale((-1) ** p.e)
    if kind == "Y":
        if 1 <= i <= K:
            return Y_elements(K)[i - 1]
        if i == K + 1 and not singular:
            return ExtElement.J(K)
        raise IndexOutOfRange(f"Y{i}^lambda out of range for K={K}")
    raise ValueError(f"bad token {kind}")


def map_to_nilblob(w: TruncatedWord, p: BlobParams) -> Element | ExtElement:
    """Inverse of the isomorphism: U_i^lambda -> (-1)^e U_i, Y_j^lambda -> Y_j, Y_{K+1}^lambda -> J."""
    K, _, singular = classify(p)
    if K < 1:
        raise IndexOutOfRange("the truncated algebra has no generators for K = 0")
    if w.K != K:
        raise IndexOutOfRange(f"word built for K={w.K}, parameters give K={K}")
    zero = Element.zero(K) if singular else ExtElement.lift(Element.zero(K))
    total = zero
    for c, word in w.terms:
        x = Element.one(K) if singular else ExtElement.one(K)
        for tok in word:
            x = x * token_image(tok, p)
        total = total + x.scale(c)
    return total


def all_mst_images(p: BlobParams) -> list[Element | ExtElement]:
    out = []
    for ts in enumerate_std(p).values():
        for s in ts:
            for t in ts:
                out.append(map_to_nilblob(mst_word(s, t, p), p))
    return out
