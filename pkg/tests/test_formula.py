import pytest
from hypothesis import given

from strategies import formulas, terms
from stratcat.formula import (
    EMPTYSET,
    Abst,
    And,
    App,
    Enum,
    Eq,
    Forall,
    Implies,
    Mem,
    Not,
    Pair,
    ParseError,
    Pow,
    Sng,
    Union_,
    Var,
    alpha_equivalent,
    canonical_render,
    canonicalize,
    free_vars,
    parse,
    parse_term,
    render,
    render_term,
    universe,
)

x, y, z, w = Var("x"), Var("y"), Var("z"), Var("w")


class TestParse:
    def test_membership(self):
        assert parse("x in y") == Mem(x, y)

    def test_russell(self):
        assert parse("not (x in x)") == Not(Mem(x, x))

    def test_universe_abstract(self):
        assert parse("y = { z | z = z }") == Eq(y, Abst("z", Eq(z, z)))
        assert parse("y = { z | z = z }").right == universe("z")

    def test_enumerations_and_pairs(self):
        assert parse("{} = {x, {y}}") == Eq(EMPTYSET, Enum((x, Sng(y))))
        assert parse("<x, y> in z") == Mem(Pair(x, y), z)
        assert parse("U(x) = P(y)") == Eq(Union_(x), Pow(y))

    def test_application_is_left_associative(self):
        assert parse_term("f`x`y") == App(App(Var("f"), x), y)
        assert parse_term("f`(g`x)") == App(Var("f"), App(Var("g"), x))

    def test_precedence(self):
        f = parse("x in y and y in z or z = w -> x = y")
        assert isinstance(f, Implies)
        assert parse("not x in y and y in z") == And(Not(Mem(x, y)), Mem(y, z))
        assert parse("a in b -> b in c -> c in d").right == parse("b in c -> c in d")

    def test_quantifier_body_extends_right(self):
        assert parse("forall x. x in y and y in z") == Forall("x", And(Mem(x, y), Mem(y, z)))

    def test_parenthesised_formula_versus_term(self):
        assert parse("(x in y)") == Mem(x, y)
        assert parse("(f`x) = y") == Eq(App(Var("f"), x), y)

    def test_unicode_aliases(self):
        assert parse("∀x. x ∈ y ∧ ¬ y = z → ⟨x, y⟩ = z") == parse("forall x. x in y and not y = z -> <x, y> = z")
        assert parse("∃x. x ∈ y ∨ x = y ↔ x = x") == parse("exists x. x in y or x = y <-> x = x")

    @pytest.mark.parametrize(
        "text, line, column, expected",
        [
            ("x in", 1, 5, "ident"),
            ("x = y z", 1, 7, "and"),
            ("forall . x = x", 1, 8, "ident"),
            ("{x | }", 1, 6, "not"),
            ("x in y and\n  y @ z", 2, 5, None),
        ],
    )
    def test_errors_carry_position_and_expectations(self, text, line, column, expected):
        with pytest.raises(ParseError) as info:
            parse(text)
        err = info.value
        assert (err.line, err.column) == (line, column)
        if expected:
            assert expected in err.expected


class TestRender:
    def test_examples(self):
        assert render(Mem(x, y)) == "x in y"
        assert render(Not(Mem(x, x))) == "not (x in x)"
        assert render_term(Abst("z", Eq(z, z))) == "{ z | z = z }"

    def test_nested_application_is_parenthesised(self):
        assert render_term(App(Var("f"), App(Var("g"), x))) == "f`(g`x)"

    def test_quantifier_on_the_left_is_parenthesised(self):
        f = And(Forall("x", Mem(x, y)), Mem(z, w))
        assert render(f) == "(forall x. x in y) and z in w"
        assert parse(render(f)) == f

    @given(formulas)
    def test_parse_inverts_render(self, f):
        assert parse(render(f)) == f

    @given(terms)
    def test_terms_round_trip(self, t):
        assert parse_term(render_term(t)) == t

    @given(formulas)
    def test_render_is_a_fixpoint_on_canonical_text(self, f):
        text = render(f)
        assert render(parse(text)) == text


class TestVariables:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x in y", {"x", "y"}),
            ("forall x. x in y", {"y"}),
            ("y = { z | z in w }", {"y", "w"}),
            ("(forall x. x in y) and x = z", {"x", "y", "z"}),
        ],
    )
    def test_free_vars(self, text, expected):
        assert free_vars(parse(text)) == expected

    def test_alpha_equivalence(self):
        assert alpha_equivalent(parse("forall x. x in y"), parse("forall z. z in y"))
        assert not alpha_equivalent(parse("forall x. x in y"), parse("forall y. y in y"))
        assert canonical_render(parse("{ a | a in b }  = c")) == canonical_render(parse("{ q | q in b } = c"))

    def test_canonicalize_avoids_capture(self):
        f = parse("forall x. exists v0. x in v0 and v0 in v1")
        g = canonicalize(f)
        assert free_vars(g) == {"v1"}
        assert alpha_equivalent(f, g)
        assert render(g) == "forall v0. exists v2. v0 in v2 and v2 in v1"

    @given(formulas)
    def test_canonical_form_preserves_free_variables(self, f):
        assert free_vars(canonicalize(f)) == free_vars(f)
        assert parse(canonical_render(f)) == canonicalize(f)
