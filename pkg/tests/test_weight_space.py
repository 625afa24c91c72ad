from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ggrad.errors import GroupError, WeightFormatError, WeightLengthError
from ggrad.weight_space import GroupId, descriptor, inner, parse_weight, unit, weight, zero

ALL_GROUPS = (
    [GroupId(f, n) for f in ("so", "spin") for n in range(3, 13)]
    + [GroupId(f, m) for f in ("u", "sp", "sp1sp") for m in range(1, 5)]
    + [GroupId("su", m) for m in range(3, 5)]
    + [GroupId("g2"), GroupId("spin7")]
)

TAU_TOTAL = {"u": lambda s: 2 * s, "su": lambda s: 2 * s, "sp": lambda s: 2 * s, "sp1sp": lambda s: 4 * s,
             "so": lambda s: s, "spin": lambda s: s, "g2": lambda s: 7, "spin7": lambda s: 8}


def leading_minors(gram):
    import sympy
    M = sympy.Matrix(gram)
    return [M[:k, :k].det() for k in range(1, M.rows + 1)]


class TestDescriptorExamples:
    def test_so7(self):
        g = descriptor(GroupId("so", 7))
        assert (g.rank, g.n, g.dim_g) == (3, 7, 21)
        assert g.weyl_vector == weight("5/2", "3/2", "1/2")

    def test_g2(self):
        g = descriptor(GroupId("g2"))
        assert (g.n, g.dim_g) == (7, 14)
        assert len(g.tau_weights) == 7
        assert (zero(2), 1) in g.tau_weights

    def test_spin7_structure(self):
        g = descriptor(GroupId("spin7"))
        assert (g.n, g.rank) == (8, 3)
        h = Fraction(1, 2)
        expected = {(a * h, b * h, c * h) for a in (1, -1) for b in (1, -1) for c in (1, -1)}
        assert {w for w, _ in g.tau_weights} == expected
        assert all(m == 1 for _, m in g.tau_weights)

    def test_cached_and_immutable(self):
        a = descriptor(GroupId("so", 9))
        assert a is descriptor(GroupId("so", 9))
        with pytest.raises(AttributeError):
            a.n = 3


class TestDescriptorInvariants:
    @pytest.mark.parametrize("gid", ALL_GROUPS, ids=str)
    def test_weyl_vector_is_half_sum_of_positive_roots(self, gid):
        g = descriptor(gid)
        half = tuple(sum(a[i] for a in g.positive_roots) / 2 for i in range(g.rank))
        assert half == g.weyl_vector

    @pytest.mark.parametrize("gid", ALL_GROUPS, ids=str)
    def test_tau_multiplicities(self, gid):
        g = descriptor(gid)
        assert sum(m for _, m in g.tau_weights) == TAU_TOTAL[gid.family](gid.size)

    @pytest.mark.parametrize("gid", ALL_GROUPS, ids=str)
    def test_gram_symmetric(self, gid):
        g = descriptor(gid)
        assert all(g.gram[i][j] == g.gram[j][i] for i in range(g.rank) for j in range(g.rank))

    @pytest.mark.parametrize("gid", [g for g in ALL_GROUPS if g.family != "su"], ids=str)
    def test_gram_positive_definite(self, gid):
        assert all(d > 0 for d in leading_minors(descriptor(gid).gram))

    @pytest.mark.parametrize("m", [3, 4])
    def test_su_gram_is_trace_form_with_central_kernel(self, m):
        # positive on the traceless hyperplane, zero on (1, …, 1)
        g = descriptor(GroupId("su", m))
        ones = weight([1] * m)
        assert inner(g, ones, ones) == 0
        assert all(d > 0 for d in leading_minors(g.gram)[:-1])

    @pytest.mark.parametrize("gid", ALL_GROUPS, ids=str)
    def test_inner_positive_on_tau_weights(self, gid):
        g = descriptor(gid)
        assert all(inner(g, w, w) > 0 for w, _ in g.tau_weights if any(w))

    @pytest.mark.parametrize("gid", ALL_GROUPS, ids=str)
    def test_simple_roots_are_positive(self, gid):
        g = descriptor(gid)
        assert set(g.simple_roots) <= set(g.positive_roots)


class TestInner:
    def test_orthonormal_basis(self):
        g = descriptor(GroupId("so", 7))
        assert inner(g, unit(3, 0), unit(3, 1)) == 0
        assert inner(g, unit(3, 0), unit(3, 0)) == 1

    def test_weyl_vector_pairing(self):
        g = descriptor(GroupId("so", 7))
        assert inner(g, g.weyl_vector, unit(3, 0)) == Fraction(5, 2)

    def test_length_mismatch(self):
        g = descriptor(GroupId("so", 7))
        with pytest.raises(WeightLengthError):
            inner(g, weight(1, 0), weight(1, 0, 0))

    @given(st.sampled_from(ALL_GROUPS), st.data())
    def test_symmetric_bilinear(self, gid, data):
        g = descriptor(gid)
        coord = st.fractions(min_value=-5, max_value=5, max_denominator=4)
        vec = st.lists(coord, min_size=g.rank, max_size=g.rank).map(tuple)
        a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
        k = data.draw(coord)
        assert inner(g, a, b) == inner(g, b, a)
        assert inner(g, zero(g.rank), a) == 0
        ab = tuple(x + k * y for x, y in zip(a, b))
        assert inner(g, ab, c) == inner(g, a, c) + k * inner(g, b, c)


class TestGroupId:
    @pytest.mark.parametrize("args", [("so", 2), ("spin", 1), ("u", 0), ("su", 2), ("sp", 0),
                                      ("sp1sp", 0), ("g2", 7), ("so", None), ("e8", 1), ("so", 3.5)])
    def test_rejects(self, args):
        with pytest.raises(GroupError):
            GroupId(*args)

    def test_su2_hint(self):
        with pytest.raises(GroupError, match="Sp\\(1\\)"):
            GroupId("su", 2)

    def test_names(self):
        assert str(GroupId("spin", 7)) == "Spin(7)"
        assert str(GroupId("spin7")) == "Spin(7)-structure"
        assert str(GroupId("SO", 5)) == "SO(5)"


class TestParseWeight:
    def test_rationals(self):
        assert parse_weight("3/2, 1/2,-1/2") == weight("3/2", "1/2", "-1/2")

    def test_error_names_coordinate(self):
        with pytest.raises(WeightFormatError, match="coordinate 3"):
            parse_weight("1,0,x")

    def test_empty(self):
        with pytest.raises(WeightFormatError):
            parse_weight("  ")
