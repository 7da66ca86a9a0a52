"""Command-line front end: `nilblob <command> ...`; JSON on stdout, exit code 2 on any error."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import alcove, checks
from . import serialize as ser
from .algebra import NILBLOB, BlobRules, Element, ExtElement
from .diagrams import enumerate_diagrams, render_ascii
from .errors import NilBlobError
from .jm import J_element, L_elements, Y_elements
from .presentation import evaluate, factorize_diagram, format_word, normal_form, parse_word


def _dump(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, sort_keys=True))


def _heights(text: str) -> alcove.PathTableau:
    return alcove.PathTableau.from_heights([int(x) for x in text.replace(",", " ").split()])


def _params(a) -> alcove.BlobParams:
    return alcove.BlobParams(a.n, a.e, a.m)


def _render(x: Element | ExtElement) -> str:
    if isinstance(x, ExtElement):
        return "a0:\n" + _render(x.a0) + "\nJ *\n" + _render(x.a1)
    if x.is_zero():
        return "0"
    return "\n".join(f"{c} *\n{render_ascii(d)}" for d, c in x.sorted_terms())


def _emit_element(x, a) -> None:
    if a.ascii:
        print(_render(x))
    else:
        _dump(ser.element_to_json(x))


def _words(a) -> list[str]:
    if a.words:
        return a.words
    return [line.strip() for line in sys.stdin if line.strip()]


def cmd_mul(a) -> None:
    if a.algebra == "blob":
        if a.q is None or a.m is None:
            raise SystemExit("--q and --m are required for the blob algebra")
        rules = BlobRules(Fraction(a.q), a.m)
    else:
        rules = NILBLOB
    factors = [ser.element_from_json(json.load(open(f, encoding="utf-8")), a.n, rules) for f in a.file]
    for w in (a.words if a.file else _words(a)):
        factors.append(evaluate(parse_word(w, a.n), rules=rules, extended=a.algebra == "extended"))
    if not factors:
        raise SystemExit("nothing to multiply")
    out = factors[0]
    for y in factors[1:]:
        out = out * y
    _emit_element(out, a)


def _suite(args: tuple) -> list[checks.Check]:
    name, n, e, m = args
    if name == "relations":
        return checks.relation_checks(n)
    if name == "jm":
        return checks.jm_checks(n)
    if name == "dims":
        return checks.dimension_checks(n) + [checks.extended_dimension_check(n), checks.injectivity_check(n)]
    if name == "factorize":
        return [checks.factorization_check(n)]
    p = alcove.BlobParams(n, e, m)
    if name == "orbit":
        return checks.orbit_checks(p)
    if name == "rank":
        return [checks.rank_check(p)]
    raise ValueError(name)


def cmd_verify(a) -> None:
    if a.suite in ("orbit", "rank"):
        if a.e is None or a.m is None:
            raise SystemExit("--e and --m are required for this suite")
        jobs = [(a.suite, a.n, a.e, a.m)]
    else:
        jobs = [(a.suite, k, None, None) for k in range(1, a.n + 1)]
    if a.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(a.jobs) as pool:
            results = [c for batch in pool.map(_suite, jobs) for c in batch]
    else:
        results = [c for j in jobs for c in _suite(j)]
    if a.json:
        _dump([{"name": c.name, "ok": c.ok, "detail": c.detail} for c in results])
    else:
        for c in results:
            print(c.line())
    if not all(c.ok for c in results):
        sys.exit(1)


def cmd_factorize(a) -> None:
    if a.all:
        out = []
        for d in enumerate_diagrams(a.n):
            w, c = factorize_diagram(d)
            out.append({"diagram": ser.diagram_to_json(d), "word": format_word(w.letters), "scalar": ser.fraction_to_json(c)})
        _dump(out)
        return
    src = open(a.file, encoding="utf-8") if a.file else sys.stdin
    d = ser.diagram_from_json(json.load(src))
    w, c = factorize_diagram(d)
    if a.ascii:
        print(render_ascii(d))
        print(f"= 1/{c} * {format_word(w.letters)}" if c != 1 else f"= {format_word(w.letters)}")
    else:
        _dump({"diagram": ser.diagram_to_json(d), "word": format_word(w.letters), "scalar": ser.fraction_to_json(c)})


def cmd_normal_form(a) -> None:
    out = []
    for text in _words(a):
        res = normal_form(parse_word(text, a.n))
        if res is None:
            out.append({"word": text, "zero": True})
        else:
            c, nm = res
            out.append({"word": text, "zero": False, "coeff": ser.fraction_to_json(c), "normal": str(nm)})
    _dump(out)


def cmd_paths(a) -> None:
    _dump(ser.orbit_to_json(_params(a)))


def cmd_redexpr(a) -> None:
    target = _heights(a.target)
    start = _heights(a.start) if a.start else alcove.initial_tableau(target.shape)
    word = alcove.reduced_expression(start, target)
    _dump({"word": word, "length": len(word), "inversions": alcove.inversion_count(alcove.one_line(target))})


def cmd_factor(a) -> None:
    rf = alcove.region_factorize(_heights(a.t), _params(a))
    _dump(ser.factorization_to_json(rf))


def cmd_codify(a) -> None:
    p = _params(a)
    c = alcove.codify(_heights(a.s), _heights(a.t), p)
    if a.ascii:
        print(c)
    else:
        _dump(ser.codmatrix_to_json(c))


def cmd_word(a) -> None:
    p = _params(a)
    w = alcove.mst_word(_heights(a.s), _heights(a.t), p)
    out = ser.word_to_json(w)
    if a.image:
        out["image"] = ser.element_to_json(alcove.map_to_nilblob(w, p))
    _dump(out)


def cmd_jm(a) -> None:
    if a.family == "J":
        x = J_element(a.n)
    else:
        fam = L_elements(a.n) if a.family == "L" else Y_elements(a.n)
        if not 1 <= a.index <= a.n:
            raise SystemExit(f"index must lie in 1..{a.n}")
        x = fam[a.index - 1]
    _emit_element(x, a)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nilblob", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, *, n=True, alcove_params=False):
        if n:
            p.add_argument("--n", type=int, required=True)
        if alcove_params:
            p.add_argument("--e", type=int, required=True)
            p.add_argument("--m", type=int, required=True)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="machine-readable output (default)")
        g.add_argument("--ascii", action="store_true", help="human-readable rendering")

    p = sub.add_parser("mul", help="multiply generator words and element files")
    common(p)
    p.add_argument("--algebra", choices=["nilblob", "blob", "extended"], default="nilblob")
    p.add_argument("--q", type=str)
    p.add_argument("--m", type=int)
    p.add_argument("--file", action="append", default=[], help="element JSON, multiplied before the words")
    p.add_argument("words", nargs="*", help="words such as 'U1 U0'; read from stdin when absent")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=["relations", "jm", "dims", "factorize", "orbit", "rank"])
    common(p)
    p.add_argument("--e", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("factorize", help="write a diagram as a generator word")
    common(p, n=False)
    p.add_argument("file", nargs="?", help="diagram JSON (stdin when absent)")
    p.add_argument("--all", action="store_true", help="factorize every basis diagram of size --n")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("normal-form", help="reduce words to c * normal monomial")
    common(p)
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("paths", help="Std(i^lambda) grouped by shape")
    common(p, alcove_params=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("redexpr", help="reduced expression from t^mu (or --start) to a target path")
    common(p, n=False)
    p.add_argument("target", help="height list, e.g. '0 -1 0 1'")
    p.add_argument("--start")
    p.set_defaults(func=cmd_redexpr)

    p = sub.add_parser("regions", help="favourite reduced expression of d(t) by regions")
    common(p, alcove_params=True)
    p.add_argument("t")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("codify", help="codification matrix c(s, t) of two central tableaux")
    common(p, alcove_params=True)
    p.add_argument("s")
    p.add_argument("t")
    p.set_defaults(func=cmd_codify)

    p = sub.add_parser("word", help="m_st as a word in U_i^lambda and Y_j^lambda")
    common(p, alcove_params=True)
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--image", action="store_true", help="also print the nil-blob image")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("jm", help="print L_i, Y_i or J = sum L_i")
    common(p)
    p.add_argument("family", choices=["L", "Y", "J"])
    p.add_argument("index", type=int, nargs="?", default=1)
    p.set_defaults(func=cmd_jm)
    return ap


def main(argv: list[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    try:
        a.func(a)
    except (NilBlobError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
