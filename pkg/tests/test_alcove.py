from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from nilblob import serialize as ser
from nilblob.algebra import Element, ExtElement, element_rank
from nilblob.alcove import (
    BlobParams,
    CodMatrix,
    PathTableau,
    Shape,
    Sym,
    TruncatedWord,
    all_mst_images,
    apply_word,
    block_swap,
    cellular_word,
    centralize,
    classify,
    code_matrix,
    codify,
    enumerate_std,
    enumerate_std_direct,
    expected_square_sum,
    generator_word,
    generator_word_regular,
    initial_tableau,
    inversion_count,
    is_central_geometric,
    is_inner,
    lambda_residues,
    lambda_tableau,
    letters_permutation,
    map_to_nilblob,
    matrix_word,
    mst_word,
    one_line,
    ordered_shapes,
    path_from_walls,
    path_intervals,
    reduced_expression,
    reflect,
    region_factorize,
    residue_sequence,
    std_square_sum,
    word_one_line,
)
from nilblob.errors import (
    IndexOutOfRange,
    MixedInnerOuter,
    NotCentral,
    NotInOrbit,
    ShapeMismatch,
    SingularParameter,
    TooSmallN,
)
from nilblob.jm import Y_elements
from nilblob.presentation import generator_element


def admissible(max_K, max_e=7):
    """Every (n, e, m) with 1 < m < e - 1 and K <= max_K."""
    out = []
    for e in range(4, max_e + 1):
        for m in range(2, e - 1):
            for n in range(e - m, e - m + (max_K + 1) * e):
                out.append(BlobParams(n, e, m))
    return out


def residue_oracle(t, p):
    """Contents read straight off the boxes: column 1 starts at 0, column 2 at m."""
    res = [None] * t.n
    for (row, col), k in t.boxes().items():
        base = 0 if col == 1 else p.m
        res[k - 1] = (base - (row - 1)) % p.e
    return tuple(res)


def tokens(text):
    return tuple((w[0], int(w[1:])) for w in text.split())


# --- parameters, residues, intervals ---------------------------------------------


def test_params_validation():
    with pytest.raises(SingularParameter):
        BlobParams(5, 5, 1)
    with pytest.raises(SingularParameter):
        BlobParams(5, 5, 4)
    assert BlobParams(5, 5, 2).kappa == (0, 2)


def test_lambda_residues():
    p = BlobParams(9, 5, 2)
    assert lambda_residues(p) == tuple((-k) % 5 for k in range(9))
    assert residue_sequence(lambda_tableau(p), p) == lambda_residues(p)
    assert residue_sequence(PathTableau.from_heights([0, -1]), BlobParams(1, 5, 2)) == (0,)


def test_residues_of_mu4():
    p = BlobParams(23, 5, 2)
    want = tuple([0, 4, 3, 2, 1] * 5)[:23]
    ts = enumerate_std(p)[Shape(13, 10)]
    assert len(ts) == 6
    assert all(residue_sequence(t, p) == want for t in ts)


@given(st.sampled_from(admissible(2, 6)).flatmap(
    lambda p: st.tuples(st.just(p), st.lists(st.sampled_from([-1, 1]), min_size=p.n, max_size=p.n))))
def test_residue_matches_box_oracle(pt):
    p, steps = pt
    t = PathTableau(tuple(steps))
    assert residue_sequence(t, p) == residue_oracle(t, p)


def test_classify_examples():
    assert classify(BlobParams(23, 5, 2)) == (4, 0, True)
    assert classify(BlobParams(25, 5, 2)) == (4, 2, False)
    assert classify(BlobParams(3, 4, 2)) == (0, 1, False)
    with pytest.raises(TooSmallN):
        classify(BlobParams(2, 5, 2))


def test_path_intervals_examples():
    blocks = [list(range(4, 9)), list(range(9, 14)), list(range(14, 19)), list(range(19, 24))]
    assert path_intervals(BlobParams(23, 5, 2)) == (blocks, None)
    assert path_intervals(BlobParams(25, 5, 2)) == (blocks, [24, 25])
    assert path_intervals(BlobParams(10, 4, 2)) == ([list(range(3, 7)), list(range(7, 11))], None)


# --- the orbit Std(i^lambda) -----------------------------------------------------


def test_K0_regular_orbit_is_lambda_path_only():
    # fails: the reflection -1, -1, +1 has the same residues, see test_K0_regular_orbit
    p = BlobParams(3, 4, 2)
    orbit = [t for ts in enumerate_std(p).values() for t in ts]
    assert orbit == [lambda_tableau(p)]


def test_K0_regular_orbit():
    p = BlobParams(3, 4, 2)
    orbit = {t for ts in enumerate_std(p).values() for t in ts}
    assert orbit == {lambda_tableau(p), PathTableau((-1, -1, 1))}
    assert std_square_sum(p) == 2


def test_std_of_23_5_2():
    p = BlobParams(23, 5, 2)
    assert std_square_sum(p) == comb(8, 4) == 70
    assert [s.x for s in ordered_shapes(p)][:2] == [-23, 17]


@pytest.mark.parametrize("p", [p for p in admissible(4) if p.n <= 14], ids=str)
def test_orbit_equals_residue_filter(p):
    assert enumerate_std(p) == enumerate_std_direct(p)


@pytest.mark.parametrize("p", admissible(4), ids=str)
def test_square_sum(p):
    K, R, singular = classify(p)
    assert std_square_sum(p) == comb(2 * K, K) * (1 if singular else 2)


def test_reflection_preserves_residues():
    p = BlobParams(18, 5, 2)
    want = lambda_residues(p)
    for ts in enumerate_std(p).values():
        for t in ts:
            assert residue_sequence(t, p) == want
            for j in range(1, 4):
                k = p.f(j)
                if k < p.n:
                    assert residue_sequence(reflect(t, k, p), p) == want


# --- reduced expressions ----------------------------------------------------------


def test_reduced_expression_identity():
    t = initial_tableau(Shape(5, 6))
    assert reduced_expression(t, t) == []


def test_reduced_expression_young_example():
    shape = Shape(5, 6)
    init = initial_tableau(shape)
    printed_word = [2, 4, 3, 7, 9, 8, 10, 9]
    boxes = apply_word(init, printed_word)
    target = PathTableau.from_columns(11, [k for (r, c), k in boxes.items() if c == 2])
    assert target.boxes() == boxes
    w = reduced_expression(init, target)
    assert len(w) == 8 == inversion_count(one_line(target))
    assert word_one_line(shape, w) == word_one_line(shape, printed_word) == one_line(target)
    # smallest-index tie-breaking reproduces the printed word
    assert w == printed_word


def test_reduced_expression_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        reduced_expression(initial_tableau(Shape(2, 1)), initial_tableau(Shape(1, 2)))


@pytest.mark.parametrize("p", admissible(3, 6), ids=str)
def test_reduced_expressions_on_orbits(p):
    for mu, ts in enumerate_std(p).items():
        init = initial_tableau(mu)
        for t in ts:
            w = reduced_expression(init, t)
            assert len(w) == inversion_count(one_line(t))
            assert word_one_line(mu, w) == one_line(t)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.lists(st.sampled_from([-1, 1]), min_size=n, max_size=n)))
def test_reduced_expression_random_paths(steps):
    t = PathTableau(tuple(steps))
    w = reduced_expression(initial_tableau(t.shape), t)
    assert len(w) == inversion_count(one_line(t))
    assert word_one_line(t.shape, w) == one_line(t)


# --- region factorizations ---------------------------------------------------------

P64 = BlobParams(64, 6, 2)
S64 = path_from_walls(P64, [0, 1, 0, 1, 2, 1, 0, -1, 0, -1, -2])
T64 = path_from_walls(P64, [0, -1, 0, 1, 2, 1, 0, -1, -2, -3, -2])


def test_region_factorization_central_example():
    rf = region_factorize(S64, P64)
    assert str(rf) == "H0 H1 H2 H3 H5 H6 U'4 U'7"
    assert rf.is_central and not rf.u
    assert is_central_geometric(S64, P64)


def test_region_factorization_non_central_example():
    rf = region_factorize(T64, P64)
    assert " ".join(map(str, rf.theta)) == "H0 H2 H3 H5 H6 U'1 U'4 U'7"
    assert " ".join(map(str, rf.u)) == "U8 U9"
    assert not rf.is_central and not is_central_geometric(T64, P64)
    for f in rf.u:
        assert letters_permutation(P64.n, f.letters) == block_swap(f.index, P64)


def test_U_prime_1_region_is_filled_in_layers():
    rf = region_factorize(T64, P64)
    (f,) = [f for f in rf.factors if str(f) == "U'1"]

    def layer(i, j):
        return list(range(i, j + 1, 2))

    want = (layer(8, 12) + layer(7, 13) + layer(6, 14) + layer(5, 15) + layer(6, 14)
            + layer(7, 13) + layer(8, 12) + layer(9, 11) + [10])
    assert list(f.letters) == want


def test_smallest_nontrivial_factorization():
    p = BlobParams(8, 5, 2)
    t = path_from_walls(p, [0, 1])
    rf = region_factorize(t, p)
    assert [str(f) for f in rf.factors] == ["H0"] and rf.is_central
    assert codify(t, t, p) == CodMatrix.from_columns([[None, "H0*", "H0", None]])
    assert str(generator_word(t, t, p)) == "± Y1"


def test_region_factorize_rejects_foreign_path():
    p = BlobParams(8, 5, 2)
    with pytest.raises(NotInOrbit):
        region_factorize(PathTableau((1,) * 8), p)


@pytest.mark.parametrize("p", admissible(3, 6), ids=str)
def test_factorization_reassembles(p):
    for ts in enumerate_std(p).values():
        for t in ts:
            rf = region_factorize(t, p)
            w = rf.word()
            assert word_one_line(t.shape, w) == one_line(t)
            assert len(w) == inversion_count(one_line(t))
            assert rf.is_central == is_central_geometric(t, p)
            if rf.factors:
                assert sum(f.kind == "H" and f.index == 0 for f in rf.theta) == 1
            assert sorted(f.index for f in rf.theta) == list(range(len(rf.theta)))
            if classify(p)[2]:
                assert region_factorize(centralize(t, p), p).is_central


# --- codification and the matrix algorithm ------------------------------------------

P48 = BlobParams(48, 5, 2)
S48 = path_from_walls(P48, [0, 1, 0, -1, 0, 1, 2, 1, 0, 1])
T48 = path_from_walls(P48, [0, -1, 0, -1, 0, 1, 0, 1, 2, 1])
CODE_ALG = [
    [None, "H0*", "H0", None],
    [None, "H1*", None, "U'1"],
    [None, "H2*", "H2", None],
    ["U'3*", None, None, "U'3"],
    [None, "H4*", "H4", None],
    [None, "H5*", "H5", None],
    ["U'6*", None, "H6", None],
    [None, "H7*", "H7", None],
    [None, "H8*", None, "U'8"],
]
CODE_ALG_WORD = "U6 Y1 U3 Y5 Y6 Y8 U1 U8"


def test_code_matrix_rows():
    c = code_matrix(S64, P64)
    assert [str(x) if x else None for x in c.rows[0]] == ["H0", "H1", "H2", "H3", None, "H5", "H6", None]
    assert [str(x) if x else None for x in c.rows[1]] == [None] * 4 + ["U'4", None, None, "U'7"]
    with pytest.raises(NotCentral):
        code_matrix(T64, P64)


def test_code_matrix_of_trimmed_tableau():
    c = code_matrix(centralize(T64, P64), P64)
    assert [str(x) if x else None for x in c.rows[0]] == ["H0", None, "H2", "H3", None, "H5", "H6", None]
    assert [str(x) if x else None for x in c.rows[1]] == [None, "U'1", None, None, "U'4", None, None, "U'7"]


def test_matrix_algorithm_on_printed_matrix():
    w = matrix_word(CodMatrix.from_columns(CODE_ALG))
    assert w == list(tokens(CODE_ALG_WORD))


def test_codify_reconstructs_printed_matrix():
    assert codify(S48, T48, P48) == CodMatrix.from_columns(CODE_ALG)
    w = generator_word(S48, T48, P48)
    assert w.word == tokens(CODE_ALG_WORD) and w.sign_undetermined
    assert str(w) == "± " + CODE_ALG_WORD


def test_codify_errors():
    with pytest.raises(NotCentral):
        codify(S64, T64, P64)
    with pytest.raises(ShapeMismatch):
        codify(S64, path_from_walls(P64, [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]), P64)


def test_klr_example_word():
    t = centralize(T64, P64)
    w = generator_word(S64, t, P64)
    printed = TruncatedWord.single(10, False, tokens("Y1 U1 Y3 U4 Y6 U7"))
    assert sorted(w.word) == sorted(printed.word)
    assert map_to_nilblob(w, P64) == map_to_nilblob(printed, P64)
    full = cellular_word(S64, T64, P64)
    assert full.word == w.word + tokens("U8 U9")


# --- regular case ---------------------------------------------------------------------

P15 = BlobParams(15, 5, 2)


def shape_paths(p, x):
    (mu,) = [mu for mu in enumerate_std(p) if mu.x == x]
    return enumerate_std(p)[mu]


def test_outer_lambda_path_matches_singular_word():
    lam = lambda_tableau(P15)
    assert not is_inner(lam, P15)
    pbar = P15.with_n(13)
    w = generator_word_regular(lam, lam, P15)
    bar = cellular_word(lambda_tableau(pbar), lambda_tableau(pbar), pbar)
    assert w.word == bar.word and w.regular


def test_inner_in_fundamental_alcove_gets_top_dot():
    for s in shape_paths(P15, -1):
        assert is_inner(s, P15) and P15.in_fundamental_alcove(s.x)
        w = generator_word_regular(s, s, P15)
        assert w.word[0] == ("Y", 3)
        bar = cellular_word(s.truncate(13), s.truncate(13), P15.with_n(13))
        assert w.word[1:] == bar.word


def test_inner_outside_fundamental_alcove_gets_difference():
    for x in (5, -11):
        (s,) = shape_paths(P15, x)
        assert is_inner(s, P15) and not P15.in_fundamental_alcove(s.x)
        w = generator_word_regular(s, s, P15)
        (c1, w1), (c2, w2) = w.terms
        assert (c1, w1[0], c2, w2[0]) == (1, ("Y", 3), -1, ("Y", 2)) and w1[1:] == w2[1:]


def test_regular_errors():
    inner = shape_paths(P15, -1)[0]
    with pytest.raises(ShapeMismatch):
        generator_word_regular(inner, lambda_tableau(P15), P15)
    with pytest.raises(NotInOrbit):
        generator_word_regular(PathTableau((1,) * 15), PathTableau((1,) * 15), P15)
    # an inner and an outer tableau never share a shape, so build a fake outer one
    fake = PathTableau(inner.steps[:-2] + (-inner.steps[-2], -inner.steps[-1]))
    with pytest.raises((MixedInnerOuter, NotInOrbit, ShapeMismatch)):
        generator_word_regular(inner, fake, P15)


def test_inner_and_outer_never_share_a_shape():
    for p in [P15, BlobParams(25, 5, 2), BlobParams(12, 6, 2), BlobParams(7, 4, 2)]:
        for ts in enumerate_std(p).values():
            assert len({is_inner(t, p) for t in ts}) == 1


# --- images in the nil-blob algebra -------------------------------------------------


def test_map_examples():
    p = BlobParams(22, 6, 2)  # K = 3, e even
    K, _, _ = classify(p)
    assert K == 3
    assert map_to_nilblob(TruncatedWord.single(K, False, tokens("U1")), p) == generator_element(K, 1)
    assert map_to_nilblob(TruncatedWord.single(K, False, tokens("Y1 Y1")), p).is_zero()
    assert map_to_nilblob(TruncatedWord.single(K, False, tokens("U1 Y1 U1")), p).is_zero()
    q = BlobParams(18, 5, 2)
    assert map_to_nilblob(TruncatedWord.single(3, False, tokens("U1")), q) == generator_element(3, 1).scale(-1)


def test_map_errors():
    with pytest.raises(IndexOutOfRange):
        TruncatedWord.single(3, False, tokens("U3"))
    with pytest.raises(IndexOutOfRange):
        TruncatedWord.single(3, False, tokens("Y4"))
    with pytest.raises(IndexOutOfRange):
        map_to_nilblob(TruncatedWord.single(0, True, tokens("Y1")), BlobParams(3, 4, 2))


def test_top_dot_maps_to_J():
    w = TruncatedWord.single(2, True, tokens("Y3"))
    assert map_to_nilblob(w, P15) == ExtElement.J(2)


@pytest.mark.parametrize("p", [BlobParams(23, 5, 2), BlobParams(28, 6, 2)], ids=str)
def test_image_relations(p):
    K, _, _ = classify(p)
    sign = (-1) ** (p.e - 1)
    U = {i: map_to_nilblob(TruncatedWord.single(K, False, (("U", i),)), p) for i in range(1, K)}
    Y1 = map_to_nilblob(TruncatedWord.single(K, False, (("Y", 1),)), p)
    for i in U:
        assert U[i] * U[i] == U[i].scale(2 * sign)
        for j in U:
            if abs(i - j) == 1:
                assert U[i] * U[j] * U[i] == U[i]
            if abs(i - j) > 1:
                assert U[i] * U[j] == U[j] * U[i]
        if i > 1:
            assert Y1 * U[i] == U[i] * Y1
    assert (Y1 * Y1).is_zero()
    assert (U[1] * Y1 * U[1]).is_zero()
    Y = Y_elements(K)
    for i in range(1, K):
        u = generator_element(K, i)
        assert Y[i] * u == u * Y[i - 1] + Y[i - 1] - Y[i]


@pytest.mark.parametrize(
    "p,rank",
    [(BlobParams(8, 5, 2), 2), (BlobParams(13, 5, 2), 6), (BlobParams(18, 5, 2), 20),
     (BlobParams(22, 6, 2), 20), (BlobParams(10, 5, 2), 4), (BlobParams(15, 5, 2), 12)],
    ids=str,
)
def test_rank_of_mst_images(p, rank):
    assert expected_square_sum(p) == rank
    assert element_rank(all_mst_images(p)) == rank


def test_central_words_sandwich():
    p = BlobParams(18, 5, 2)
    for ts in enumerate_std(p).values():
        for s in ts:
            for t in ts:
                w = mst_word(s, t, p)
                if region_factorize(s, p).is_central and region_factorize(t, p).is_central:
                    assert w.word == generator_word(s, t, p).word


# --- serialization ----------------------------------------------------------------------


def test_json_roundtrips():
    p = BlobParams(13, 5, 2)
    assert ser.params_from_json(ser.params_to_json(p)) == p
    assert ser.orbit_from_json(ser.orbit_to_json(p)) == enumerate_std(p)
    c = codify(S48, T48, P48)
    assert ser.codmatrix_from_json(ser.codmatrix_to_json(c)) == c
    w = generator_word_regular(shape_paths(P15, 5)[0], shape_paths(P15, 5)[0], P15)
    assert ser.word_from_json(ser.word_to_json(w)) == w
    assert Sym.parse("U'3*") == Sym("U'", 3, True)
