import random
from fractions import Fraction

import pytest
from hypothesis import given

from qlie.core import (
    BASIS,
    HH,
    XM,
    XP,
    QLieVector,
    bracket,
    check_qantisymmetry,
    classical_expected,
    classical_limit,
    decompose,
    expected_table,
    qconj_L,
    standard_embedding,
    structure_table,
    twisted_embedding,
)
from qlie.errors import ClosureError, PoleError, TwistError
from qlie.pbw import E, F, K, KINV, AlgElement, casimir
from qlie.qcoeff import ONE, Q, S, ZERO, ExtScalar, eval_q1, h_series
from qlie.sampling import random_vector

from .conftest import laurent

qi = ExtScalar.q_power(-1)
sigma = 2 / (Q + qi)
c_ef = (Q - qi).inverse()


@pytest.fixture(scope="module")
def emb():
    return standard_embedding()


@pytest.fixture(scope="module")
def table(emb):
    return structure_table(emb)


class TestEmbedding:
    def test_h_image(self, emb):
        want = (F * E).scale(sigma * (Q - qi)) + (K * K).scale(sigma * Q * c_ef) - (
            KINV * KINV
        ).scale(sigma * Q * c_ef)
        assert emb.images[2] == want

    def test_xp_image(self, emb):
        assert emb.images[0] == AlgElement({(0, -1, 1): S})

    def test_xm_image(self, emb):
        # K^-1 F = q F K^-1
        assert emb.images[1] == AlgElement({(1, -1, 0): S * Q})

    def test_twist(self, emb):
        assert emb.twist == (ONE,)
        assert twisted_embedding([1]) is emb

    def test_twist_must_sum_to_one(self):
        with pytest.raises(TwistError):
            twisted_embedding([1, 1])
        with pytest.raises(TwistError):
            twisted_embedding([])

    def test_twisted_images(self):
        e = twisted_embedding([0, 1])
        base = standard_embedding()
        c = casimir()
        for img, b in zip(e.images, base.images):
            assert img == b * c


class TestDecompose:
    def test_basis_element(self, emb):
        assert decompose(emb.images[2], emb) == HH

    def test_zero(self, emb):
        assert decompose(AlgElement(), emb) == QLieVector()

    def test_casimir_not_in_span(self, emb):
        with pytest.raises(ClosureError) as info:
            decompose(casimir(), emb)
        assert not info.value.residual.is_zero()

    def test_residual_is_attached(self, emb):
        u = emb.images[0] + E * E
        with pytest.raises(ClosureError) as info:
            decompose(u, emb)
        assert info.value.residual == E * E


class TestBracket:
    def test_xp_xm(self, emb):
        assert bracket(XP, XM, emb) == HH

    def test_hh(self, emb):
        assert bracket(HH, HH, emb) == HH.scale(2 * (Q - qi))

    def test_xp_xp(self, emb):
        assert bracket(XP, XP, emb).is_zero()

    def test_table_entries(self, table):
        assert table[2, 0] == XP.scale(2 * Q)
        assert table[0, 2] == XP.scale(-2 * qi)
        assert table[1, 2] == XM.scale(2 * Q)
        assert table[2, 1] == XM.scale(-2 * qi)
        assert table[1, 0] == -HH
        assert table[1, 1].is_zero()

    def test_table_matches_published(self, table):
        assert table == expected_table()

    def test_hh_is_not_antisymmetric(self, table):
        c = table[2, 2].zero
        assert c != ZERO
        assert c == 2 * (Q - qi)
        assert eval_q1(c) == 0

    @given(laurent(), laurent())
    def test_bilinear(self, lam, mu):
        e = standard_embedding()
        rng = random.Random(5)
        a, a2, b = random_vector(rng), random_vector(rng), random_vector(rng)
        left = bracket(a.scale(lam) + a2.scale(mu), b, e)
        assert left == bracket(a, b, e).scale(lam) + bracket(a2, b, e).scale(mu)
        right = bracket(b, a.scale(lam) + a2.scale(mu), e)
        assert right == bracket(b, a, e).scale(lam) + bracket(b, a2, e).scale(mu)

    def test_random_pairs_close(self, emb, table):
        rng = random.Random(17)
        for _ in range(40):
            a, b = random_vector(rng), random_vector(rng)
            assert bracket(a, b, emb) == table.apply(a, b)


class TestTwist:
    @pytest.mark.parametrize(
        "p",
        [[1], [0, 1], [Fraction(1, 2), Fraction(1, 2)], [-1, 2]],
        ids=["1", "C", "half", "-1+2C"],
    )
    def test_same_table(self, p, table):
        assert structure_table(twisted_embedding(p)) == table

    def test_q_dependent_twist(self, table):
        p = [Q, 1 - Q]
        assert structure_table(twisted_embedding(p)) == table

    def test_s_dependent_twist(self, table):
        p = [S, 1 - S]
        assert structure_table(twisted_embedding(p)) == table

    def test_random_pairs_on_twist(self):
        e = twisted_embedding([0, 1])
        t = structure_table(e)
        rng = random.Random(23)
        for _ in range(10):
            a, b = random_vector(rng), random_vector(rng)
            assert bracket(a, b, e) == t.apply(a, b)


class TestQConjugation:
    def test_coordinate(self):
        assert qconj_L(QLieVector(Q, 0, 0)) == QLieVector(qi, 0, 0)

    @pytest.mark.parametrize("v", BASIS)
    def test_basis_fixed(self, v):
        assert qconj_L(v) == v

    def test_involution(self):
        rng = random.Random(2)
        for _ in range(20):
            v = random_vector(rng)
            assert qconj_L(qconj_L(v)) == v


class TestQAntisymmetry:
    def test_h_xp(self, emb):
        rep = check_qantisymmetry(HH, XP, emb)
        assert rep.passed
        assert rep.left == XP.scale(2 * qi) == rep.right

    def test_h_h(self, emb):
        rep = check_qantisymmetry(HH, HH, emb)
        assert rep.passed
        assert rep.left == HH.scale(2 * (qi - Q))

    @pytest.mark.parametrize("a", BASIS)
    @pytest.mark.parametrize("b", BASIS)
    def test_basis_pairs(self, a, b, emb):
        assert check_qantisymmetry(a, b, emb).passed

    def test_random_pairs(self, emb):
        rng = random.Random(99)
        for _ in range(50):
            assert check_qantisymmetry(random_vector(rng), random_vector(rng), emb).passed

    def test_plain_antisymmetry_fails(self, emb):
        # the q-conjugation is essential: [a, b] != -[b, a] in general
        assert bracket(HH, XP, emb) != -bracket(XP, HH, emb)


class TestClassicalLimit:
    def test_limit(self, table):
        lim = classical_limit(table)
        assert lim.passed
        assert lim.constants[0][1][2] == 1
        assert lim.constants[2][2][2] == 0
        assert lim.constants == classical_expected()

    def test_jacobi_detects_broken_table(self, table):
        from qlie.core import StructureTable

        rows = [list(r) for r in table.entries]
        rows[2][0] = XP.scale(3)  # [H, X+] = 3 X+
        rows[0][2] = XP.scale(-3)
        lim = classical_limit(StructureTable(tuple(map(tuple, rows))))
        assert lim.antisymmetric
        assert not lim.matches_sl2
        assert not lim.jacobi

    def test_pole_names_entry(self, table):
        from qlie.core import StructureTable

        rows = [list(r) for r in table.entries]
        rows[1][1] = XM.scale((Q - qi).inverse())
        with pytest.raises(PoleError, match=r"\[Xm_h, Xm_h\]"):
            classical_limit(StructureTable(tuple(map(tuple, rows))))

    def test_series_order_zero(self, table):
        lim = classical_limit(table)
        for (i, j, k), c in table.constants():
            assert h_series(c, 3)[0] == lim.constants[i][j][k]
