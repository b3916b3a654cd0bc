"""Whitehead product expressions: parsing, chains, supports, verdicts."""

import pytest

from momentangle import complexes as cx
from momentangle.errors import (ArityError, DuplicateVertex, NotNestedForm,
                                ParseError)
from momentangle.fixtures import (sphere_with_diameter,
                                  sphere_with_diameter_plus_triangle,
                                  unrealizable_complex)
from momentangle.koszul import parse_chain
from momentangle.whitehead import (DEFINED, NONTRIVIAL, NOT_REALIZED,
                                   REALIZED, TRIVIAL, UNDEFINED, Bracket,
                                   Leaf, bracket_count, dimension,
                                   enumerate_products, hurewicz_chain,
                                   is_defined, is_nested, is_trivial, leaves,
                                   make_bracket, minimal_complex, parse,
                                   realize_evidence, sphere_support)


def test_parse_basic():
    w = parse("[1, 2, [3, 4, 5]]")
    assert str(w) == "[1, 2, [3, 4, 5]]"
    assert leaves(w) == (1, 2, 3, 4, 5)
    assert bracket_count(w) == 2
    assert is_nested(w)


def test_parse_whitespace_and_nesting():
    w = parse(" [ 1 ,[2, 3],[4,5] ] ")
    assert str(w) == "[1, [2, 3], [4, 5]]"
    assert not is_nested(w)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("1, 2")
    with pytest.raises(ParseError):
        parse("[1, 2")
    with pytest.raises(ParseError):
        parse("[1, 2] junk")
    with pytest.raises(ParseError):
        parse("[1, x]")
    with pytest.raises(ArityError):
        parse("[1]")
    with pytest.raises(DuplicateVertex):
        parse("[1, [1, 2]]")


def test_parse_error_positions():
    with pytest.raises(ParseError) as exc:
        parse("[1, 2")
    assert exc.value.position == 5


def test_make_bracket_canonical_order():
    w = make_bracket([Bracket((Leaf(4), Leaf(5))), Leaf(2), Leaf(1)])
    assert str(w) == "[1, 2, [4, 5]]"


def test_dimension():
    assert dimension(parse("[1, 2, 3]")) == 5
    assert dimension(parse("[1, 2, [3, 4, 5]]")) == 8
    assert dimension(parse("[1, [2, [3, 4, 5, 6]]]")) == 9


def test_hurewicz_chain_example():
    chain = hurewicz_chain(parse("[1, 2, [3, 4, 5]]"))
    expected = parse_chain("D1S2D3D4S5 + D1S2D3S4D5 + D1S2S3D4D5 "
                           "+ S1D2D3D4S5 + S1D2D3S4D5 + S1D2S3D4D5")
    assert chain == expected
    assert chain.degree() == dimension(parse("[1, 2, [3, 4, 5]]"))
    assert not chain.boundary()


def test_hurewicz_chain_is_cycle_for_towers():
    for text in ("[1, 2]", "[1, 2, 3, 4]", "[1, [2, 3, 4]]",
                 "[1, 2, [3, 4, [5, 6, 7]]]"):
        chain = hurewicz_chain(parse(text))
        assert not chain.boundary()
        assert chain.degree() == dimension(parse(text))


def test_hurewicz_chain_requires_nested_form():
    with pytest.raises(NotNestedForm):
        hurewicz_chain(parse("[1, [2, 3], [4, 5]]"))


def test_minimal_complex_leaf_bracket():
    M = minimal_complex(parse("[1, 2, 3]"))
    assert M.faces == cx.boundary_simplex((1, 2, 3)).faces


def test_minimal_complex_two_levels():
    # [1, [2, 3]]: two points joined with the boundary of an edge, plus the
    # filled vertex 1 -- three isolated points
    M = minimal_complex(parse("[1, [2, 3]]"))
    assert M.maximal_faces() == [(1,), (2,), (3,)]


def test_minimal_complex_matches_fig1():
    M = minimal_complex(parse("[1, 2, [3, 4, 5]]"))
    assert M.faces == sphere_with_diameter().faces


def test_sphere_support_non_nested():
    # two bracket arguments join their supports
    M = sphere_support(parse("[1, [2, 3], [4, 5]]"))
    assert M.has_face((2, 4)) and not M.has_face((2, 3))


def test_is_trivial():
    K = cx.simplex((1, 2, 3))
    assert is_trivial(parse("[1, 2, 3]"), K).verdict == TRIVIAL
    S = cx.boundary_simplex((1, 2, 3))
    rep = is_trivial(parse("[1, 2, 3]"), S)
    assert rep.verdict == NONTRIVIAL
    assert rep.witness("missing face") == (1, 2, 3)


def test_is_defined_examples():
    K = sphere_with_diameter()
    assert is_defined(parse("[1, 2, [3, 4, 5]]"), K).verdict == DEFINED
    assert is_defined(parse("[3, 4, 5]"), K).verdict == DEFINED
    # [1, 2, 3, 4] needs the drop-one product [1, 2, 3] trivial, but the
    # triangle {1,2,3} is not a face of K
    rep = is_defined(parse("[1, 2, 3, 4]"), K)
    assert rep.verdict == UNDEFINED
    assert rep.witness("subproduct") in ((1, 2, 3), (1, 2, 4))


def test_is_defined_counterexample_witness():
    X = unrealizable_complex()
    rep = is_defined(parse("[1, [2, 3, 4, 5, 6]]"), X)
    assert rep.verdict == UNDEFINED
    assert rep.witness("minimal complex embedding") is not None


def test_two_argument_bracket_always_defined_on_its_vertices():
    K = cx.from_maximal_faces(2, [[1], [2]])
    assert is_defined(parse("[1, 2]"), K).verdict == DEFINED


def test_realize_evidence_positive():
    L = sphere_with_diameter_plus_triangle()
    rep = realize_evidence(parse("[1, 2, [3, 4, 5]]"), L)
    assert rep.verdict == REALIZED
    assert rep.witness("class is primitive") is True


def test_realize_evidence_trivial_class():
    rep = realize_evidence(parse("[1, 2, 3]"), cx.simplex((1, 2, 3)))
    assert rep.verdict == NOT_REALIZED


def test_enumerate_products_counterexample():
    X = unrealizable_complex()
    candidates = enumerate_products(X, 10, 2)
    assert len(candidates) == 56
    defined = [c for c in candidates if c.defined.verdict == DEFINED]
    assert sorted(str(c.expr) for c in defined) == [
        "[1, 2, 3, [4, 5, 6]]", "[4, 5, 6, [1, 2, 3]]"]
    assert all(c.trivial_arguments for c in defined)
    assert not any(c.is_viable for c in candidates)


def test_enumerate_products_dimension_filter():
    K = sphere_with_diameter()
    for c in enumerate_products(K, 8, 2):
        assert dimension(c.expr) == 8
