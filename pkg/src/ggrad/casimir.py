"""Casimir numbers and conformal weights.

Conformal weights are computed twice: from Casimir eigenvalues of the
representations involved, and from the closed-form row formulas for each
group.  ``conformal_weight`` also cross-checks the Casimir difference against
its algebraically expanded form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from . import selection
from .dominance import DominantWeight
from .errors import InternalInconsistency, NotRelevant, WrongGroup
from .weight_space import HALF, GroupDescriptor, Weight, add, check_length, inner, weight


@dataclass(frozen=True)
class ConformalWeight:
    value: Fraction

    def __str__(self):
        return str(self.value)


def _c(g: GroupDescriptor, w: Weight) -> Fraction:
    return inner(g, w, add(w, add(g.weyl_vector, g.weyl_vector)))


def _c_tau(g: GroupDescriptor) -> Fraction:
    c = _c(g, g.tau_highest)
    if c == 0:
        raise InternalInconsistency(f"{g.id}: c(τ) vanishes")
    return c


def _c_norm(g: GroupDescriptor, w: Weight) -> Fraction:
    return 2 * Fraction(g.dim_g, g.tau_dim) * _c(g, w) / _c_tau(g)


def casimir_number(g: GroupDescriptor, lam) -> Fraction:
    """Freudenthal: c(λ) = ⟨λ, λ + 2δ⟩."""
    w = lam.weight if isinstance(lam, DominantWeight) else weight(lam)
    check_length(g, w)
    return _c(g, w)


def casimir_normalized(g: GroupDescriptor, lam) -> Fraction:
    """c^{Λ²}(λ) = 2 (dim g / n) c(λ) / c(τ)."""
    w = lam.weight if isinstance(lam, DominantWeight) else weight(lam)
    check_length(g, w)
    return _c_norm(g, w)


def _difference_form(g: GroupDescriptor, lam: Weight, eps: Weight) -> Fraction:
    return (_c_norm(g, add(lam, eps)) - _c_norm(g, lam) - _c_norm(g, g.tau_highest)) / 2


def _expanded_form(g: GroupDescriptor, lam: Weight, eps: Weight) -> Fraction:
    ct = _c_tau(g)
    num = inner(g, eps, eps) + 2 * inner(g, add(lam, g.weyl_vector), eps) - ct
    return Fraction(g.dim_g, g.tau_dim) * num / ct


def general_formula(g: GroupDescriptor, lam: Weight, eps: Weight) -> Fraction:
    """The Casimir expression for w_ε(λ) with no relevance check.

    Both forms are evaluated and must agree.
    """
    a = _difference_form(g, lam, eps)
    b = _expanded_form(g, lam, eps)
    if a != b:
        raise InternalInconsistency(f"{g.id}: Casimir forms disagree at λ={lam}, ε={eps}: {a} vs {b}")
    return a


def _require_relevant(g: GroupDescriptor, lam: DominantWeight, eps: Weight) -> Weight:
    eps = weight(eps)
    check_length(g, eps)
    if not selection.is_relevant(g.id, lam, eps):
        raise NotRelevant(f"{g.id}: ε = {_fmt(eps)} is not relevant for λ = {lam}")
    return eps


def conformal_weight(g: GroupDescriptor, lam: DominantWeight, epsilon) -> ConformalWeight:
    """w_ε(λ) from Casimir eigenvalues."""
    eps = _require_relevant(g, lam, epsilon)
    return ConformalWeight(general_formula(g, lam.weight, eps))


# -- closed forms ------------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    label: str      # e.g. "w_{2,+}"
    formula: str    # human-readable row formula
    value: Fraction


def _fmt(w: Weight) -> str:
    return "(" + ", ".join(str(c) for c in w) + ")"


def _unit_index(eps: Weight) -> Tuple[int, int]:
    """For ε = ±e_i return (i, ±1) with i 1-based; (0, 0) for ε = 0."""
    nz = [(k, c) for k, c in enumerate(eps) if c != 0]
    if not nz:
        return 0, 0
    if len(nz) != 1 or abs(nz[0][1]) != 1:
        raise NotRelevant(f"{_fmt(eps)} is not a weight of τ")
    k, c = nz[0]
    return k + 1, (1 if c > 0 else -1)


def _pm(s: int) -> str:
    return "+" if s > 0 else "-"


def _so_closed(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    n = g.n
    i, s = _unit_index(eps)
    if i == 0:
        return ClosedForm("w_0", "(1-n)/2", Fraction(1 - n, 2))
    li = lam[i - 1]
    if s > 0:
        return ClosedForm(f"w_{{{i},+}}", "1+λ_i-i", 1 + li - i)
    return ClosedForm(f"w_{{{i},-}}", "1-n-(λ_i-i)", 1 - n - (li - i))


def _u_closed(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    m = g.rank
    if g.id.family == "su":
        # the row formulas hold for the traceless representative
        shift = sum(lam) / m
        lam = tuple(c - shift for c in lam)
    i, s = _unit_index(eps)
    li = lam[i - 1]
    if s > 0:
        return ClosedForm(f"w_{{{i},+}}", "λ_i-i+1", li - i + 1)
    return ClosedForm(f"w_{{{i},-}}", "-λ_i+i-m", -li + i - m)


def _sp_closed(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    m = g.rank
    i, s = _unit_index(eps)
    li = lam[i - 1]
    if s > 0:
        return ClosedForm(f"w_{{{i},+}}", "λ_i-i+1", li - i + 1)
    return ClosedForm(f"w_{{{i},-}}", "-λ_i+i-2m-1", -li + i - 2 * m - 1)


def _sp1sp_closed(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    m = g.rank - 1
    s = 1 if eps[0] > 0 else -1
    i, t = _unit_index((Fraction(0),) + tuple(eps[1:]))
    if abs(eps[0]) != 1 or i == 0:
        raise NotRelevant(f"{_fmt(eps)} is not a weight of τ")
    i -= 1
    beta, li = lam[0], lam[i]
    sb = s * beta / m
    sm = Fraction(s, m)
    one_m = Fraction(1, m)
    if t > 0:
        return ClosedForm(f"w_{{{_pm(s)},{i},+}}", "1/2(λ_i±β/m-i+1-1/m±1/m)",
                          (li + sb - i + 1 - one_m + sm) / 2)
    return ClosedForm(f"w_{{{_pm(s)},{i},-}}", "1/2(-λ_i±β/m+i-2m-1-1/m±1/m)",
                      (-li + sb + i - 2 * m - 1 - one_m + sm) / 2)


# formula index k for G2 and the τ-weight +ε attached to w_{k,+}
G2_INDEX: Dict[Weight, int] = {
    weight(1, 0): 1, weight(0, 1): 2, weight(1, -1): 3,
}
_G2_CONST = {1: Fraction(5, 3), 2: Fraction(4, 3), 3: Fraction(1, 3)}
_G2_TEXT = {1: "(2λ1+λ2)", 2: "(λ1+2λ2)", 3: "(λ1-λ2)"}


def _g2_closed(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    if not any(eps):
        # not in the printed row; equals -dim(g)/n, the value forced at ε = 0
        return ClosedForm("w_0", "-2", Fraction(-2))
    if eps in G2_INDEX:
        k, s = G2_INDEX[eps], 1
    elif tuple(-c for c in eps) in G2_INDEX:
        k, s = G2_INDEX[tuple(-c for c in eps)], -1
    else:
        raise NotRelevant(f"{_fmt(eps)} is not a weight of τ")
    l1, l2 = lam
    lin = {1: 2 * l1 + l2, 2: l1 + 2 * l2, 3: l1 - l2}[k]
    value = -(Fraction(5, 3) - s * _G2_CONST[k]) + s * lin / 3
    return ClosedForm(f"w_{{{k},{_pm(s)}}}", f"-(5/3∓{_G2_CONST[k]})±1/3{_G2_TEXT[k]}", value)


# formula index k for the Spin(7)-structure row, keyed by the signs of ε2, ε3
# relative to ε1
SPIN7_INDEX: Dict[Tuple[int, int], int] = {(1, 1): 1, (1, -1): 2, (-1, 1): 3, (-1, -1): 4}
_SPIN7_CONST = {1: Fraction(9, 4), 2: Fraction(7, 4), 3: Fraction(3, 4), 4: Fraction(1, 4)}
_SPIN7_TEXT = {1: "(λ1+λ2+λ3)", 2: "(λ1+λ2-λ3)", 3: "(λ1-λ2+λ3)", 4: "(λ1-λ2-λ3)"}


def _spin7_closed(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    if any(abs(c) != HALF for c in eps):
        raise NotRelevant(f"{_fmt(eps)} is not a weight of τ")
    s = 1 if eps[0] > 0 else -1
    t2 = 1 if eps[1] * s > 0 else -1
    t3 = 1 if eps[2] * s > 0 else -1
    k = SPIN7_INDEX[(t2, t3)]
    l1, l2, l3 = lam
    lin = l1 + t2 * l2 + t3 * l3
    value = -(Fraction(9, 4) - s * _SPIN7_CONST[k]) + s * lin / 2
    return ClosedForm(f"w_{{{k},{_pm(s)}}}", f"-(9/4∓{_SPIN7_CONST[k]})±1/2{_SPIN7_TEXT[k]}", value)


_CLOSED = {
    "so": _so_closed, "spin": _so_closed, "u": _u_closed, "su": _u_closed,
    "sp": _sp_closed, "sp1sp": _sp1sp_closed, "g2": _g2_closed, "spin7": _spin7_closed,
}


def closed_form(g: GroupDescriptor, lam: Weight, eps: Weight) -> ClosedForm:
    """Row formula for (group, ε) evaluated at λ, with no relevance check."""
    return _CLOSED[g.id.family](g, weight(lam), weight(eps))


def conformal_weight_closed(g: GroupDescriptor, lam: DominantWeight, epsilon) -> ConformalWeight:
    eps = _require_relevant(g, lam, epsilon)
    return ConformalWeight(closed_form(g, lam.weight, eps).value)


# -- ordering ----------------------------------------------------------------

def _so_values(g: GroupDescriptor, lam: Weight) -> Tuple[List[Fraction], List[Fraction], Fraction]:
    m = g.rank
    plus = [closed_form(g, lam, _e(m, i, 1)).value for i in range(m)]
    minus = [closed_form(g, lam, _e(m, i, -1)).value for i in range(m)]
    return plus, minus, Fraction(1 - g.n, 2)


def _e(m: int, i: int, s: int) -> Weight:
    return tuple(Fraction(s) if k == i else Fraction(0) for k in range(m))


def _strict_desc(xs: List[Fraction]) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


def ordering_check(g: GroupDescriptor, lam: DominantWeight) -> bool:
    """Check the ordering of the SO/Spin conformal weights at λ."""
    if not g.id.is_spin_or_so:
        raise WrongGroup(f"ordering_check applies to SO(n) and Spin(n), not {g.id}")
    w = lam.weight
    plus, minus, w0 = _so_values(g, w)
    if g.n % 2:
        ok = _strict_desc(plus) and plus[-1] > w0 and w0 >= minus[-1] and _strict_desc(minus[::-1])
        return ok and (w0 == minus[-1]) == (w[-1] == 0)
    head = plus[:-1]
    tail = minus[:-1][::-1]
    pair = (plus[-1], minus[-1])
    ok = _strict_desc(head) and _strict_desc(tail)
    if head:
        ok = ok and head[-1] > max(pair)
    if tail:
        ok = ok and min(pair) > tail[0]
    return ok and plus[-1] - minus[-1] == 2 * w[-1]
