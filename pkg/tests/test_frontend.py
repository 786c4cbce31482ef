import json
import random

import pytest

from qlie.core import HH, XM, XP, QLieVector, expected_table, standard_embedding, structure_table
from qlie.documents import (
    TableDocument,
    representation_from_json,
    representation_to_json,
    table_document,
    table_from_document,
)
from qlie.errors import DimensionError, ParseError
from qlie.parser import BinOp, Neg, Num, Pow, Sym, eval_ast, evaluate, parse, to_adword
from qlie.pbw import E, F, K, KINV, AdWord
from qlie.qcoeff import ONE, Q, S, ZERO, ExtScalar
from qlie.render import render
from qlie.rep import builtin_rep2, mat_equal, verify_representation
from qlie.sampling import random_alg_element, random_ratfunc_scalar, random_vector

qi = ExtScalar.q_power(-1)


def strip(node):
    """AST with offsets zeroed, for structural comparison."""
    if isinstance(node, Num):
        return Num(node.value)
    if isinstance(node, Sym):
        return Sym(node.name)
    if isinstance(node, Neg):
        return Neg(strip(node.operand))
    if isinstance(node, Pow):
        return Pow(strip(node.base), node.exponent)
    return BinOp(node.op, strip(node.left), strip(node.right))


class TestParse:
    def test_commutator_shape(self):
        got = strip(parse("E F - F E", "algebra"))
        assert got == BinOp("-", BinOp("*", Sym("E"), Sym("F")), BinOp("*", Sym("F"), Sym("E")))

    def test_scalar_division(self):
        node = parse("(q - q^-1)/(q + q^-1)", "scalar")
        assert isinstance(node, BinOp) and node.op == "/"

    def test_algebra_division_rejected(self):
        with pytest.raises(ParseError, match="division"):
            parse("E / F", "algebra")

    def test_precedence(self):
        # ^ binds tighter than unary minus, which binds tighter than *
        assert strip(parse("-q^2", "scalar")) == Neg(Pow(Sym("q"), 2))
        assert strip(parse("2 q + 1", "scalar")) == BinOp("+", BinOp("*", Num(2), Sym("q")), Num(1))
        assert evaluate("-q^2", "scalar") == -(Q * Q)

    def test_parenthesised_exponent(self):
        assert evaluate("q^(-2)", "scalar") == ExtScalar.q_power(-2)

    def test_aliases(self):
        assert evaluate("X+ X-") == E * F

    def test_k_powers(self):
        assert evaluate("K^-2") == KINV * KINV
        assert evaluate("Kinv^2 K^3") == K

    def test_negative_power_of_e(self):
        with pytest.raises(ParseError, match="negative powers"):
            parse("E^-1")

    def test_wrong_mode(self):
        with pytest.raises(ParseError, match="not allowed in algebra mode"):
            parse("Xp_h", "algebra")
        with pytest.raises(ParseError, match="not allowed in qlie mode"):
            parse("E", "qlie")
        with pytest.raises(ParseError, match="not allowed in scalar mode"):
            parse("K", "scalar")

    def test_unknown_symbol_offset(self):
        with pytest.raises(ParseError) as info:
            parse("q + z", "scalar")
        assert info.value.offset == 4

    def test_offset_is_in_bytes(self):
        with pytest.raises(ParseError) as info:
            parse("q + é", "scalar")
        assert info.value.offset == 4
        with pytest.raises(ParseError) as info:
            parse("é + %", "scalar")
        assert info.value.offset == 0

    def test_syntax_errors(self):
        for text in ["q +", "(q", "q)", "q ^ E", "", "q^s"]:
            with pytest.raises(ParseError):
                parse(text, "algebra")

    def test_qlie_products_rejected(self):
        with pytest.raises(ParseError):
            parse("Xp_h Xm_h", "qlie")
        with pytest.raises(ParseError):
            parse("Xp_h^2", "qlie")


class TestEval:
    def test_commutator(self):
        c = (Q - qi).inverse()
        assert evaluate("E F - F E") == (K * K).scale(c) - (KINV * KINV).scale(c)

    def test_h_image(self):
        x = evaluate("q X+ X- - q^-1 X- X+").scale(2 / (Q + qi))
        assert x == standard_embedding().images[2]

    def test_zero_scalar(self):
        assert evaluate("0", "scalar") == ZERO

    def test_qlie_vector(self):
        assert evaluate("2q Xp_h - s H_h", "qlie") == XP.scale(2 * Q) - HH.scale(S)
        assert evaluate("0", "qlie") == QLieVector()

    def test_qlie_scalar_rejected(self):
        with pytest.raises(ParseError):
            evaluate("q", "qlie")
        with pytest.raises(ParseError):
            evaluate("Xp_h + 1", "qlie")

    def test_division_by_zero(self):
        with pytest.raises(ParseError):
            evaluate("1/(q - q)", "scalar")

    def test_eval_ast_mode(self):
        assert eval_ast(parse("q"), "algebra") == E * F - F * E + (Q * ONE) - (E * F - F * E)

    def test_adword(self):
        w = to_adword("s Kinv E")
        assert w == AdWord.word(("Kinv", "E"), S)
        w = to_adword("K^-2 H - X+")
        assert w == AdWord.word(("Kinv", "Kinv", "H")) - AdWord.letter("E")


class TestRender:
    def test_vector_latex(self):
        assert render(HH, "latex") == "H_h"

    def test_table_entry_text(self):
        t = structure_table()
        assert render(t[2, 0]) == "2q * Xp_h"

    def test_scalar_text(self):
        assert render(2 * (Q - qi)) == "2q - 2q^-1"
        assert render(2 / (Q + qi)) == "2q/(q^2 + 1)"
        assert render(ZERO) == "0"

    def test_deterministic_monomial_order(self):
        x = evaluate("E + F + K")
        # lexicographic on (a, b, c): E=(0,0,1) < K=(0,1,0) < F=(1,0,0)
        assert render(x) == "E + K + F"

    def test_roundtrip_scalars(self):
        rng = random.Random(101)
        for _ in range(40):
            x = random_ratfunc_scalar(rng)
            assert evaluate(render(x), "scalar") == x

    def test_roundtrip_algebra(self):
        rng = random.Random(102)
        for _ in range(30):
            x = random_alg_element(rng) * evaluate("s + q^-1", "scalar")
            assert evaluate(render(x), "algebra") == x

    def test_roundtrip_vectors(self):
        rng = random.Random(103)
        for _ in range(30):
            v = random_vector(rng)
            assert evaluate(render(v), "qlie") == v

    def test_latex_table(self):
        text = render(structure_table(), "latex")
        assert text.startswith(r"\begin{array}")
        assert r"\left(2q - 2q^{-1}\right)\,H_h" in text


class TestDocuments:
    def test_table_roundtrip(self):
        t = structure_table()
        doc = table_document(t, seed=3, series_order=4)
        again = table_from_document(TableDocument.loads(doc.dumps()))
        assert again == t
        assert json.loads(doc.dumps())["metadata"] == {
            "tool": "qlie", "version": "0.1.0", "twist": ["1"], "seed": 3
        }

    def test_table_series_view(self):
        doc = table_document(structure_table(), series_order=4).to_dict()
        assert doc["series"]["entries"][2][2][2] == ["0", "4", "0", "2/3", "0"]
        assert doc["series"]["entries"][2][0][0] == ["2", "2", "1", "1/3", "1/12"]

    def test_json_is_stable(self):
        assert render(structure_table(), "json") == render(expected_table(), "json")

    def test_representation_roundtrip(self):
        r = builtin_rep2()
        again = representation_from_json(representation_to_json(r))
        for a, b in zip(r.images, again.images):
            assert mat_equal(a, b)
        assert verify_representation(again, structure_table()).passed

    def test_representation_contract(self):
        doc = {
            "dimension": 1,
            "pi": {"Xp_h": [["0"]], "Xm_h": [["0"]], "H_h": [["0"]]},
            "conj": {"1,1": [["1"]]},
        }
        r = representation_from_json(json.dumps(doc))
        assert verify_representation(r, structure_table()).passed

    def test_representation_bad_shape(self):
        doc = {
            "dimension": 2,
            "pi": {"Xp_h": [["0"]], "Xm_h": [["0"]], "H_h": [["0"]]},
            "conj": {},
        }
        with pytest.raises(DimensionError):
            representation_from_json(json.dumps(doc))

    def test_scalar_and_vector_json(self):
        assert json.loads(render(Q, "json")) == "q"
        assert json.loads(render(XM.scale(Q), "json")) == {"Xp_h": "0", "Xm_h": "q", "H_h": "0"}
        assert json.loads(render(E, "json")) == [{"monomial": [0, 0, 1], "coeff": "1"}]
