"""
Blob diagrams: marked planar perfect matchings on n bottom and n top points.

Points are stored by their position in the linear order obtained by cutting the
boundary circle on the left edge (between top point 1 and bottom point 1):

    b1, b2, ..., bn, tn, ..., t2, t1   ->   0, 1, ..., 2n-1

so bottom point i sits at position i-1 and top point i at position 2n-i. In this
order a planar matching is a balanced bracket word, and an arc is left-exposed
exactly when it sits at bracket depth zero. An arc is identified by the position
of its left end, which is how marks are stored.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateMark, InvalidDiagram, MarkNotLeftExposed, NotPerfectMatching, NotPlanar

Label = tuple[str, int]  # ("b", i) or ("t", i), 1-based


def label_to_pos(n: int, label: Label) -> int:
    side, i = label
    if not 1 <= i <= n:
        raise InvalidDiagram(f"point index {i} out of range for n={n}")
    if side == "b":
        return i - 1
    if side == "t":
        return 2 * n - i
    raise InvalidDiagram(f"unknown side {side!r}")


def pos_to_label(n: int, pos: int) -> Label:
    return ("b", pos + 1) if pos < n else ("t", 2 * n - pos)


def parse_label(text: str) -> Label:
    text = text.strip().lower()
    if len(text) < 2 or text[0] not in "bt" or not text[1:].isdigit():
        raise InvalidDiagram(f"bad point label {text!r}")
    return text[0], int(text[1:])


def format_label(label: Label) -> str:
    return f"{label[0]}{label[1]}"


def is_planar(match: Sequence[int]) -> bool:
    stack: list[int] = []
    for i, j in enumerate(match):
        if i < j:
            stack.append(j)
        elif not stack or stack.pop() != i:
            return False
    return True


def _depth_zero_arcs(match: Sequence[int]) -> frozenset[int]:
    out = set()
    depth = 0
    for i, j in enumerate(match):
        if i < j:
            if depth == 0:
                out.add(i)
            depth += 1
        else:
            depth -= 1
    return frozenset(out)


@dataclass(frozen=True)
class BlobDiagram:
    """A validated blob diagram. Build through `make_diagram` or `from_pairs`."""

    n: int
    match: tuple[int, ...]
    marks: frozenset[int]

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.match) if i < j]

    def is_through(self, arc_left: int) -> bool:
        return arc_left < self.n <= self.match[arc_left]

    def through_arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in self.arcs() if i < self.n <= j]

    @property
    def n_through(self) -> int:
        return len(self.through_arcs())

    def pairs(self) -> list[tuple[Label, Label]]:
        """Canonical pair list: each pair sorted, list sorted."""
        out = []
        for i, j in self.arcs():
            a, b = sorted((pos_to_label(self.n, i), pos_to_label(self.n, j)))
            out.append((a, b))
        return sorted(out)

    def marked_pairs(self) -> list[tuple[Label, Label]]:
        out = []
        for i in self.marks:
            a, b = sorted((pos_to_label(self.n, i), pos_to_label(self.n, self.match[i])))
            out.append((a, b))
        return sorted(out)

    def sort_key(self) -> tuple:
        return (self.pairs(), self.marked_pairs())

    def __repr__(self) -> str:
        def fmt(p):
            return f"{format_label(p[0])}-{format_label(p[1])}"

        body = " ".join(fmt(p) for p in self.pairs())
        marks = " ".join(fmt(p) for p in self.marked_pairs())
        return f"BlobDiagram(n={self.n}: {body}" + (f" | marks {marks})" if marks else ")")


def make_diagram(n: int, match: Sequence[int], marks: Iterable[int] = ()) -> BlobDiagram:
    """Validate position-encoded data. `marks` lists arc left-end positions."""
    match = tuple(match)
    if len(match) != 2 * n or sorted(match) != list(range(2 * n)):
        raise NotPerfectMatching("matching must be an involution on all 2n points")
    if any(match[match[i]] != i or match[i] == i for i in range(2 * n)):
        raise NotPerfectMatching("matching must be a fixed-point-free involution")
    if not is_planar(match):
        raise NotPlanar("pairs interleave in the boundary order")
    marks = list(marks)
    marks = [min(i, match[i]) for i in marks]
    if len(set(marks)) != len(marks):
        raise DuplicateMark("an arc carries more than one mark")
    exposed = _depth_zero_arcs(match)
    for i in marks:
        if i not in exposed:
            raise MarkNotLeftExposed(f"arc {pos_to_label(n, i)}-{pos_to_label(n, match[i])} is not left-exposed")
    return BlobDiagram(n, match, frozenset(marks))


def from_pairs(n: int, pairs: Iterable[Sequence], marks: Iterable[Sequence] = ()) -> BlobDiagram:
    """Build a diagram from label pairs such as [("b1", "t3"), ...] or [(("b", 1), ("t", 3)), ...]."""

    def lab(x) -> Label:
        return parse_label(x) if isinstance(x, str) else (x[0], int(x[1]))

    match = [-1] * (2 * n)
    for a, b in pairs:
        i, j = label_to_pos(n, lab(a)), label_to_pos(n, lab(b))
        if i == j or match[i] != -1 or match[j] != -1:
            raise NotPerfectMatching(f"point used twice in pair {a}-{b}")
        match[i], match[j] = j, i
    if -1 in match:
        raise NotPerfectMatching("some point is unmatched")
    mark_pos = []
    for a, b in marks:
        i, j = label_to_pos(n, lab(a)), label_to_pos(n, lab(b))
        if match[i] != j:
            raise InvalidDiagram(f"marked pair {a}-{b} is not an arc of the diagram")
        mark_pos.append(min(i, j))
    return make_diagram(n, match, mark_pos)


def validate(d: BlobDiagram) -> BlobDiagram:
    return make_diagram(d.n, d.match, d.marks)


def left_exposed_arcs(d: BlobDiagram) -> set[tuple[Label, Label]]:
    return {tuple(sorted((pos_to_label(d.n, i), pos_to_label(d.n, d.match[i])))) for i in _depth_zero_arcs(d.match)}


def exposed_positions(match: Sequence[int]) -> frozenset[int]:
    """Left ends of the left-exposed arcs of a (possibly unvalidated) planar matching."""
    return _depth_zero_arcs(match)


def involution(d: BlobDiagram) -> BlobDiagram:
    """Reflect in a horizontal line: bottom point i <-> top point i."""
    n = d.n

    def flip(p: int) -> int:
        return 2 * n - 1 - p  # b_i sits at i-1, t_i at 2n-i

    match = [0] * (2 * n)
    for i, j in enumerate(d.match):
        match[flip(i)] = flip(j)
    marks = [min(flip(i), flip(d.match[i])) for i in d.marks]
    return BlobDiagram(n, tuple(match), frozenset(marks))


def identity(n: int, marked: bool = False) -> BlobDiagram:
    match = tuple(2 * n - 1 - i for i in range(2 * n))
    return BlobDiagram(n, match, frozenset([0]) if marked else frozenset())


def cup_cap(n: int, i: int) -> BlobDiagram:
    """Cup and cap at (i, i+1), straight lines elsewhere; 1 <= i < n."""
    match = list(identity(n).match)
    bi, bj = i - 1, i
    ti, tj = 2 * n - i, 2 * n - i - 1
    match[bi], match[bj] = bj, bi
    match[ti], match[tj] = tj, ti
    return BlobDiagram(n, tuple(match), frozenset())


def _matchings(points: int) -> Iterator[tuple[int, ...]]:
    seq = [-1] * points

    def place(i: int, size: int) -> Iterator[None]:
        if size == 0:
            yield
            return
        for left in range(size):
            l, r = i, i + 1 + 2 * left
            seq[l], seq[r] = r, l
            for _ in place(l + 1, left):
                for _ in place(r + 1, size - left - 1):
                    yield

    for _ in place(0, points // 2):
        yield tuple(seq)


@functools.lru_cache(maxsize=None)
def enumerate_diagrams(n: int) -> tuple[BlobDiagram, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for match in _matchings(2 * n):
        exposed = sorted(_depth_zero_arcs(match))
        for mask in range(1 << len(exposed)):
            marks = frozenset(a for k, a in enumerate(exposed) if mask >> k & 1)
            out.append(BlobDiagram(n, match, marks))
    out.sort(key=BlobDiagram.sort_key)
    return tuple(out)


# --- half diagrams -------------------------------------------------------------


@dataclass(frozen=True)
class HalfDiagram:
    """One side of a diagram, indexed 1..n along that side from left to right."""

    n: int
    k: int
    arcs: frozenset[tuple[int, int]]
    marks: frozenset[tuple[int, int]]
    free_points: tuple[int, ...]

    def right_endpoints(self) -> set[int]:
        return {b for _, b in self.arcs}

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.arcs:
            out[a], out[b] = b, a
        return out


def split_halves(d: BlobDiagram) -> tuple[HalfDiagram, HalfDiagram, int]:
    n = d.n
    through = sorted(d.through_arcs())
    t = len(through)
    k = -t if through and through[0][0] in d.marks else t

    def side(is_top: bool) -> HalfDiagram:
        arcs, marks, free = set(), set(), []
        for i, j in d.arcs():
            li, lj = pos_to_label(n, i), pos_to_label(n, j)
            if li[0] != lj[0]:
                free.append((lj if is_top else li)[1])
                continue
            if (li[0] == "t") != is_top:
                continue
            arc = tuple(sorted((li[1], lj[1])))
            arcs.add(arc)
            if i in d.marks:
                marks.add(arc)
        return HalfDiagram(n, k, frozenset(arcs), frozenset(marks), tuple(sorted(free)))

    return side(True), side(False), k


def join_halves(top: HalfDiagram, bottom: HalfDiagram, k: int) -> BlobDiagram:
    n = top.n
    if bottom.n != n or len(top.free_points) != abs(k) or len(bottom.free_points) != abs(k):
        raise InvalidDiagram("half diagrams do not fit together")
    pairs, marks = [], []
    for a, b in top.arcs:
        pairs.append((("t", a), ("t", b)))
    for a, b in top.marks:
        marks.append((("t", a), ("t", b)))
    for a, b in bottom.arcs:
        pairs.append((("b", a), ("b", b)))
    for a, b in bottom.marks:
        marks.append((("b", a), ("b", b)))
    for r, (bt, tp) in enumerate(zip(bottom.free_points, top.free_points)):
        pairs.append((("b", bt), ("t", tp)))
        if r == 0 and k < 0:
            marks.append((("b", bt), ("t", tp)))
    return from_pairs(n, pairs, marks)


def half_from_right_endpoints(n: int, right_ends: Iterable[int], k: int | None = None) -> HalfDiagram:
    """Rebuild an unmarked half from its second-column entries (the right endpoints)."""
    right = set(right_ends)
    stack, arcs = [], set()
    for i in range(1, n + 1):
        if i in right:
            if not stack:
                raise InvalidDiagram("right endpoint without a partner")
            arcs.add((stack.pop(), i))
        else:
            stack.append(i)
    free = tuple(stack)
    return HalfDiagram(n, len(free) if k is None else k, frozenset(arcs), frozenset(), free)


def walk_of_half(h: HalfDiagram) -> list[int]:
    """Heights of the two-column walk; step i goes down iff i closes an arc."""
    closers = h.right_endpoints()
    heights = [0]
    for i in range(1, h.n + 1):
        heights.append(heights[-1] + (-1 if i in closers else 1))
    return heights


def contact_points(heights: Sequence[int]) -> list[int]:
    return [i for i, h in enumerate(heights) if h == 0]


# --- ASCII rendering -----------------------------------------------------------


def render_ascii(d: BlobDiagram) -> str:
    """Two-row sketch: '(' and ')' for arc ends, '|' for through lines, '●' before a marked arc."""
    top, bottom, _ = split_halves(d)
    marked_through = set()
    if d.marks:
        for i in d.marks:
            if d.is_through(i):
                marked_through.add(i + 1)

    def row(h: HalfDiagram, is_top: bool) -> str:
        cells = []
        lefts = {a for a, _ in h.arcs}
        marked_lefts = {a for a, _ in h.marks}
        for i in range(1, h.n + 1):
            if i in lefts:
                cell = "(" if i not in marked_lefts else "●("
            elif i in h.free_points:
                cell = "|"
                if not is_top and i in marked_through:
                    cell = "●|"
            else:
                cell = ")"
            cells.append(cell.rjust(2))
        return " ".join(cells)

    return "top    " + row(top, True) + "\nbottom " + row(bottom, False)
