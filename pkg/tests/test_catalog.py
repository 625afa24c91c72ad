from fractions import Fraction

import pytest

from ggrad.casimir import conformal_weight
from ggrad.catalog import (
    NAMES, YAMABE_NOTE, adjoint, codifferential_steps, d_steps, form_highest_weights, laplacian_sweep,
    lookup, second_order_invariant, target_names,
)
from ggrad.dominance import certify, dominant_sweep
from ggrad.errors import NotRelevant, OutOfRange
from ggrad.selection import relevant_weights
from ggrad.weight_space import GroupId, descriptor, unit, weight, zero

from test_weight_space import ALL_GROUPS

H = Fraction(1, 2)


class TestLookup:
    def test_dirac_7(self):
        op = lookup("dirac", 7)
        assert op.lam.weight == (H, H, H)
        assert op.epsilon == zero(3)
        assert op.expected_weight == -3
        assert op.endomorphism_type

    def test_d_on_two_forms(self):
        op = lookup("exterior-derivative", 7, p=2)
        assert (op.lam.weight, op.epsilon, op.expected_weight) == (weight(1, 1, 0), unit(3, 2), -2)
        assert not op.endomorphism_type

    def test_rarita_schwinger_7(self):
        op = lookup("rarita-schwinger", 7)
        assert (op.lam.weight, op.epsilon, op.expected_weight) == (weight("3/2", "1/2", "1/2"), zero(3), -3)

    def test_kahler(self):
        op = lookup("kahler-plus", 3, index=2, lam=(5, 3, 0))
        assert op.expected_weight == 3 - 2 + 1
        op = lookup("kahler-minus", 3, index=2, lam=(5, 3, 0))
        assert op.expected_weight == -3 + 2 - 3

    @pytest.mark.parametrize("n", range(4, 13, 2))
    def test_even_spin_operators(self, n):
        m = n // 2
        for ch, s in (("+", -1), ("-", 1)):
            d = lookup("dirac", n, chirality=ch)
            assert d.epsilon == unit(m, m - 1, s)
            assert d.expected_weight == Fraction(1 - n, 2)
            assert lookup("penrose-twistor", n, chirality=ch).expected_weight == H
            assert lookup("rarita-schwinger", n, chirality=ch).expected_weight == Fraction(1 - n, 2)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_every_entry_consistent(self, n):
        # lookup itself asserts agreement with the Casimir path
        for p in range(0, n):
            assert lookup("exterior-derivative", n, p=p).expected_weight == -p
        for p in range(1, n + 1):
            assert lookup("codifferential", n, p=p).expected_weight == p - n
        for p in range(1, n):
            assert lookup("form-twistor", n, p=p).expected_weight == 1
        for name in ("dirac", "penrose-twistor", "rarita-schwinger"):
            lookup(name, n)
        for i in range(1, n + 1):
            lookup("kahler-plus", n, index=i)
            lookup("kahler-minus", n, index=i)

    @pytest.mark.parametrize("kwargs", [
        dict(name="exterior-derivative", size=7, p=7),
        dict(name="codifferential", size=7, p=0),
        dict(name="form-twistor", size=7, p=None),
        dict(name="dirac", size=2),
        dict(name="kahler-plus", size=3, index=4),
        dict(name="no-such-operator", size=7),
        dict(name="dirac", size=7, chirality="x"),
    ])
    def test_out_of_range(self, kwargs):
        with pytest.raises(OutOfRange):
            lookup(kwargs.pop("name"), kwargs.pop("size"), **kwargs)

    def test_kahler_not_relevant(self):
        with pytest.raises(NotRelevant):
            lookup("kahler-plus", 2, index=2, lam=(1, 1))

    def test_names(self):
        assert len(NAMES) == 8


class TestForms:
    def test_middle_degree_splits(self):
        assert form_highest_weights(6, 3) == [weight(1, 1, 1), weight(1, 1, -1)]
        assert form_highest_weights(7, 4) == [weight(1, 1, 1)]

    def test_d_then_delta_are_adjoint(self):
        for n in range(3, 10):
            for p in range(0, n):
                for lam, eps in d_steps(n, p):
                    gid = GroupId("so", n)
                    mu, back, _ = adjoint(descriptor(gid), certify(gid, lam), eps)
                    assert (mu.weight, back) in codifferential_steps(n, p + 1)

    def test_target_names(self):
        gid = GroupId("so", 7)
        assert target_names(gid, weight(1, 1, 0), unit(3, 2)) == ["d on 2-forms", "δ on 5-forms"]
        assert target_names(GroupId("spin", 7), (H, H, H), zero(3)) == ["Dirac"]
        assert target_names(GroupId("u", 2), weight(0, 0), unit(2, 0)) == ["holomorphic", "type-(0,1)-valued"]
        assert target_names(GroupId("g2"), weight(1, 0), zero(2)) == []


class TestAdjoint:
    def test_d_to_codifferential(self):
        for n in range(5, 13):
            m = n // 2
            for p in range(0, m - 1):
                gid = GroupId("so", n)
                lam = certify(gid, [1] * p + [0] * (m - p))
                mu, back, w = adjoint(descriptor(gid), lam, unit(m, p))
                assert mu.weight == weight([1] * (p + 1) + [0] * (m - p - 1))
                assert back == unit(m, p, -1)
                assert w == -n + p + 1

    def test_dirac_self_paired(self):
        gid = GroupId("spin", 7)
        lam = certify(gid, (H, H, H))
        assert adjoint(descriptor(gid), lam, zero(3)) == (lam, zero(3), -3)

    def test_vector_to_symmetric(self):
        gid = GroupId("so", 7)
        mu, back, w = adjoint(descriptor(gid), certify(gid, (1, 0, 0)), unit(3, 0))
        assert (mu.weight, back, w) == (weight(2, 0, 0), unit(3, 0, -1), -7)

    def test_not_relevant(self):
        gid = GroupId("so", 7)
        with pytest.raises(NotRelevant):
            adjoint(descriptor(gid), certify(gid, (1, 0, 0)), zero(3))

    @pytest.mark.parametrize("gid", [g for g in ALL_GROUPS if descriptor(g).rank <= 4], ids=str)
    def test_involution(self, gid):
        g = descriptor(gid)
        for lam in dominant_sweep(gid, 2):
            for eps in relevant_weights(gid, lam):
                mu, back, _ = adjoint(g, lam, eps)
                lam2, eps2, w2 = adjoint(g, mu, back)
                assert (lam2, eps2) == (lam, eps)
                assert w2 == conformal_weight(g, lam, eps).value


class TestSecondOrder:
    def test_delta_d_middle_minus_one(self):
        gid = GroupId("so", 6)
        assert second_order_invariant(descriptor(gid), certify(gid, (1, 1, 0)), unit(3, 2), unit(3, 2, -1))

    def test_d_delta_middle_plus_one(self):
        # Λ⁵ R⁸ ≅ λ₃: δ lowers to Λ⁴ (one selfdual half), d raises back
        gid = GroupId("so", 8)
        g = descriptor(gid)
        lam = certify(gid, (1, 1, 1, 0))
        for lw, e1 in codifferential_steps(8, 5):
            mid = certify(gid, [a + b for a, b in zip(lw, e1)])
            for e2 in relevant_weights(gid, mid):
                if tuple(a + b for a, b in zip(mid.weight, e2)) == lam.weight:
                    assert second_order_invariant(g, lam, e1, e2)

    def test_delta_d_fails_on_one_forms(self):
        gid = GroupId("so", 6)
        assert not second_order_invariant(descriptor(gid), certify(gid, (1, 0, 0)), unit(3, 1), unit(3, 1, -1))

    def test_not_relevant_pair(self):
        gid = GroupId("so", 6)
        with pytest.raises(NotRelevant, match="ε2"):
            second_order_invariant(descriptor(gid), certify(gid, (1, 0, 0)), unit(3, 1), zero(3))

    @pytest.mark.parametrize("n", range(3, 13))
    def test_laplacian_sweep(self, n):
        rows = laplacian_sweep(n)
        assert [r.p for r in rows if r.delta_d] == ([n // 2 - 1] if n % 2 == 0 else [])
        assert [r.p for r in rows if r.d_delta] == ([n // 2 + 1] if n % 2 == 0 else [])

    def test_yamabe_note(self):
        assert "scalar curvature" in YAMABE_NOTE
