"""JSON readers and writers; every writer's output is accepted by the matching reader."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from . import alcove
from .algebra import NILBLOB, Element, ExtElement, Rules
from .diagrams import BlobDiagram, format_label, from_pairs


def fraction_to_json(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def fraction_from_json(s: str | int) -> Fraction:
    return Fraction(s)


def diagram_to_json(d: BlobDiagram) -> dict[str, Any]:
    return {
        "n": d.n,
        "pairs": sorted([format_label(a), format_label(b)] for a, b in d.pairs()),
        "marks": sorted([format_label(a), format_label(b)] for a, b in d.marked_pairs()),
    }


def diagram_from_json(obj: dict[str, Any]) -> BlobDiagram:
    return from_pairs(obj["n"], obj["pairs"], obj.get("marks", []))


def element_to_json(x: Element | ExtElement) -> Any:
    if isinstance(x, ExtElement):
        return {"n": x.n, "a0": element_to_json(x.a0), "a1": element_to_json(x.a1)}
    return [{"coeff": fraction_to_json(c), "diagram": diagram_to_json(d)} for d, c in x.sorted_terms()]


def element_from_json(obj: Any, n: int | None = None, rules: Rules = NILBLOB) -> Element | ExtElement:
    if isinstance(obj, dict):
        return ExtElement(element_from_json(obj["a0"], obj["n"]), element_from_json(obj["a1"], obj["n"]))
    if not obj:
        if n is None:
            raise ValueError("the zero element needs an explicit n")
        return Element.zero(n, rules)
    out = None
    for term in obj:
        x = Element.basis(diagram_from_json(term["diagram"]), fraction_from_json(term["coeff"]), rules)
        out = x if out is None else out + x
    return out


def params_to_json(p: alcove.BlobParams) -> dict[str, int]:
    return {"n": p.n, "e": p.e, "m": p.m}


def params_from_json(obj: dict[str, int]) -> alcove.BlobParams:
    return alcove.BlobParams(obj["n"], obj["e"], obj["m"])


def tableau_to_json(t: alcove.PathTableau) -> list[int]:
    return t.heights


def tableau_from_json(obj: list[int]) -> alcove.PathTableau:
    return alcove.PathTableau.from_heights(obj)


def orbit_to_json(p: alcove.BlobParams) -> dict[str, Any]:
    K, R, singular = alcove.classify(p)
    std = alcove.enumerate_std(p)
    return {
        "params": params_to_json(p),
        "K": K,
        "R": R,
        "singular": singular,
        "shapes": [
            {"shape": [mu.mu1, mu.mu2], "x": mu.x, "tableaux": [tableau_to_json(t) for t in std[mu]]}
            for mu in alcove.ordered_shapes(p)
        ],
    }


def orbit_from_json(obj: dict[str, Any]) -> dict[alcove.Shape, list[alcove.PathTableau]]:
    return {
        alcove.Shape(*s["shape"]): [tableau_from_json(h) for h in s["tableaux"]] for s in obj["shapes"]
    }


def token_to_json(tok: alcove.Token) -> str:
    return f"{tok[0]}{tok[1]}"


def token_from_json(s: str) -> alcove.Token:
    return s[0], int(s[1:])


def word_to_json(w: alcove.TruncatedWord) -> dict[str, Any]:
    return {
        "K": w.K,
        "regular": w.regular,
        "sign": "±1" if w.sign_undetermined else "1",
        "terms": [{"coeff": c, "tokens": [token_to_json(t) for t in word]} for c, word in w.terms],
    }


def word_from_json(obj: dict[str, Any]) -> alcove.TruncatedWord:
    return alcove.TruncatedWord(
        obj["K"],
        obj["regular"],
        tuple((int(t["coeff"]), tuple(token_from_json(s) for s in t["tokens"])) for t in obj["terms"]),
        obj.get("sign", "±1") == "±1",
    )


def codmatrix_to_json(c: alcove.CodMatrix) -> list[list[str | None]]:
    return [[str(s) if s else None for s in row] for row in c.rows]


def codmatrix_from_json(obj: list[list[str | None]]) -> alcove.CodMatrix:
    return alcove.CodMatrix(tuple(tuple(alcove.Sym.parse(s) if s else None for s in row) for row in obj))


def factorization_to_json(rf: alcove.RegionFactorization) -> dict[str, Any]:
    return {
        "tableau": tableau_to_json(rf.tableau),
        "factors": [{"kind": f.kind, "index": f.index, "letters": list(f.letters)} for f in rf.factors],
        "central": rf.is_central,
    }
