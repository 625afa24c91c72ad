"""Named operators, formal adjoints and second-order composability."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import casimir, selection
from .dominance import DominantWeight, certify
from .errors import InternalInconsistency, NotRelevant, OutOfRange
from .weight_space import HALF, GroupDescriptor, GroupId, Weight, add, descriptor, neg, unit, weight, zero

NAMES = (
    "exterior-derivative", "codifferential", "form-twistor", "dirac",
    "penrose-twistor", "rarita-schwinger", "kahler-plus", "kahler-minus",
)

YAMABE_NOTE = (
    "Neither dδ nor δd is conformally invariant on p-forms outside the listed "
    "degrees, so the Hodge Laplacian is not. On functions the conformal "
    "Laplacian 4(n-1)/(n-2)Δ + scal is; it involves scalar curvature and is "
    "not computed here."
)

KERNEL_NOTE = (
    "A conformally invariant gradient has a kernel whose dimension depends "
    "only on the conformal class; kernels are not computed here."
)


@dataclass(frozen=True)
class NamedOperator:
    name: str
    group: GroupId
    lam: DominantWeight
    epsilon: Weight
    expected_weight: Fraction
    endomorphism_type: bool
    detail: str = ""


# -- forms ---------------------------------------------------------------------

def form_highest_weights(n: int, p: int) -> List[Weight]:
    """Highest weights of the SO(n)-irreducible pieces of Λ^p R^n (0 ≤ p ≤ n)."""
    if not 0 <= p <= n:
        raise OutOfRange(f"form degree must satisfy 0 <= p <= {n}, got {p}")
    m = n // 2
    q = min(p, n - p)
    base = weight([1] * q + [0] * (m - q))
    if n % 2 == 0 and q == m and m > 0:
        return [base, base[:-1] + (Fraction(-1),)]
    return [base]


def _steps(n: int, p: int, target: int) -> List[Tuple[Weight, Weight]]:
    gid = GroupId("so", n)
    goal = set(form_highest_weights(n, target))
    out = []
    for lam in form_highest_weights(n, p):
        dw = certify(gid, lam)
        for eps in selection.relevant_weights(gid, dw):
            if add(lam, eps) in goal:
                out.append((lam, eps))
    return out


def d_steps(n: int, p: int) -> List[Tuple[Weight, Weight]]:
    """(λ, ε) pairs realizing d: Λ^p → Λ^{p+1}."""
    return _steps(n, p, p + 1)


def codifferential_steps(n: int, p: int) -> List[Tuple[Weight, Weight]]:
    """(λ, ε) pairs realizing δ: Λ^p → Λ^{p-1}."""
    return _steps(n, p, p - 1)


def _pick(steps, chirality: Optional[str], what: str):
    if len(steps) == 1:
        return steps[0]
    sign = -1 if chirality == "-" else 1
    for lam, eps in steps:
        # choose by the sign of the selfdual coordinate on either end
        last = lam[-1] if lam[-1] != 0 else add(lam, eps)[-1]
        if last == sign:
            return lam, eps
    raise InternalInconsistency(f"no {what} step with chirality {chirality}")


# -- spinors -------------------------------------------------------------------

def _spin_weights(n: int, head: Fraction, chirality: Optional[str]) -> Tuple[Weight, Weight]:
    m = n // 2
    lam = [head] + [HALF] * (m - 1)
    if n % 2:
        return weight(lam), zero(m)
    if chirality == "-":
        lam[-1] = -lam[-1]
        return weight(lam), unit(m, m - 1, 1)
    return weight(lam), unit(m, m - 1, -1)


def _check_chirality(chirality):
    if chirality not in (None, "+", "-"):
        raise OutOfRange(f"chirality must be '+' or '-', got {chirality!r}")


def lookup(name: str, size: int, *, p: Optional[int] = None, index: Optional[int] = None,
           chirality: Optional[str] = None, lam=None) -> NamedOperator:
    """Catalog entry for a named operator; ``size`` is n, or m for the Kähler gradients."""
    _check_chirality(chirality)
    if name in ("exterior-derivative", "codifferential", "form-twistor"):
        n = size
        if n < 3:
            raise OutOfRange(f"forms need n >= 3, got {n}")
        if p is None:
            raise OutOfRange(f"{name} needs a form degree p")
        if name == "exterior-derivative":
            if not 0 <= p <= n - 1:
                raise OutOfRange(f"d needs 0 <= p <= n-1 = {n - 1}, got {p}")
            lw, eps = _pick(d_steps(n, p), chirality, "d")
            expected, detail = Fraction(-p), f"d on {p}-forms"
        elif name == "codifferential":
            if not 1 <= p <= n:
                raise OutOfRange(f"δ needs 1 <= p <= n = {n}, got {p}")
            lw, eps = _pick(codifferential_steps(n, p), chirality, "δ")
            expected, detail = Fraction(p - n), f"δ on {p}-forms"
        else:
            if not 1 <= p <= n - 1:
                raise OutOfRange(f"the form twistor operator needs 1 <= p <= n-1 = {n - 1}, got {p}")
            lams = form_highest_weights(n, p)
            lw = lams[1] if chirality == "-" and len(lams) == 2 else lams[0]
            eps = unit(len(lw), 0)
            expected, detail = Fraction(1), f"twistor operator on {p}-forms"
        return _finish(name, GroupId("so", n), lw, eps, expected, detail)

    if name in ("dirac", "penrose-twistor", "rarita-schwinger"):
        n = size
        if n < 3:
            raise OutOfRange(f"{name} needs n >= 3, got {n}")
        head = Fraction(3, 2) if name == "rarita-schwinger" else HALF
        lw, eps = _spin_weights(n, head, chirality)
        if name == "penrose-twistor":
            eps = unit(len(lw), 0)
            expected = HALF
        else:
            expected = Fraction(1 - n, 2)
        return _finish(name, GroupId("spin", n), lw, eps, expected, "")

    if name in ("kahler-plus", "kahler-minus"):
        m = size
        if m < 1:
            raise OutOfRange(f"Kähler gradients need m >= 1, got {m}")
        if index is None or not 1 <= index <= m:
            raise OutOfRange(f"Kähler gradients need 1 <= index <= m = {m}, got {index}")
        lw = weight(lam) if lam is not None else weight(list(range(m - 1, -1, -1)))
        s = 1 if name == "kahler-plus" else -1
        eps = unit(m, index - 1, s)
        li = lw[index - 1] if len(lw) == m else Fraction(0)
        expected = li - index + 1 if s > 0 else -li + index - m
        kind = selection.HOLOMORPHIC_LABELS[s][0]
        return _finish(name, GroupId("u", m), lw, eps, expected, f"{kind} gradient")

    raise OutOfRange(f"unknown operator {name!r}; expected one of {', '.join(NAMES)}")


def _finish(name, gid, lw, eps, expected, detail) -> NamedOperator:
    g = descriptor(gid)
    dw = certify(gid, lw)
    got = casimir.conformal_weight(g, dw, eps).value
    if got != expected:
        raise InternalInconsistency(f"{name}: catalog weight {expected} but Casimir path gives {got}")
    return NamedOperator(name, gid, dw, eps, expected, not any(eps), detail)


# -- adjoints and compositions -------------------------------------------------

def adjoint(g: GroupDescriptor, lam: DominantWeight, epsilon) -> Tuple[DominantWeight, Weight, Fraction]:
    """Formal adjoint of the gradient (λ, ε): (λ+ε, −ε, w_{−ε}(λ+ε))."""
    eps = weight(epsilon)
    if not selection.is_relevant(g.id, lam, eps):
        raise NotRelevant(f"{g.id}: ε = {eps} is not relevant for λ = {lam}")
    mu = certify(g.id, add(lam.weight, eps))
    back = neg(eps)
    if not selection.is_relevant(g.id, mu, back):
        raise InternalInconsistency(f"{g.id}: −ε is not relevant for λ+ε = {mu}")
    return mu, back, casimir.conformal_weight(g, mu, back).value


def second_order_invariant(g: GroupDescriptor, lam: DominantWeight, eps1, eps2) -> bool:
    """True iff w_{ε2}(λ+ε1) = w_{ε1}(λ) − 1."""
    e1, e2 = weight(eps1), weight(eps2)
    if not selection.is_relevant(g.id, lam, e1):
        raise NotRelevant(f"{g.id}: ε1 = {e1} is not relevant for λ = {lam}")
    mid = certify(g.id, add(lam.weight, e1))
    if not selection.is_relevant(g.id, mid, e2):
        raise NotRelevant(f"{g.id}: ε2 = {e2} is not relevant for λ+ε1 = {mid}")
    w1 = casimir.conformal_weight(g, lam, e1).value
    w2 = casimir.conformal_weight(g, mid, e2).value
    return w2 == w1 - 1


@dataclass(frozen=True)
class LaplacianRow:
    p: int
    delta_d: bool
    d_delta: bool


def _chain_invariant(n: int, first, p: int) -> bool:
    gid = GroupId("so", n)
    g = descriptor(gid)
    goal = set(form_highest_weights(n, p))
    branches = 0
    ok = True
    for lam, e1 in first:
        mid = add(lam, e1)
        for e2 in selection.relevant_weights(gid, certify(gid, mid)):
            if add(mid, e2) in goal:
                branches += 1
                ok = ok and second_order_invariant(g, certify(gid, lam), e1, e2)
    return ok and branches > 0


def laplacian_sweep(n: int) -> List[LaplacianRow]:
    """For each 1 ≤ p ≤ n−1, whether δd and dδ on p-forms are conformally invariant."""
    if n < 3:
        raise OutOfRange(f"forms need n >= 3, got {n}")
    rows = []
    for p in range(1, n):
        dd = _chain_invariant(n, d_steps(n, p), p)
        ddelta = _chain_invariant(n, codifferential_steps(n, p), p)
        rows.append(LaplacianRow(p, dd, ddelta))
    return rows


# -- names shown next to decomposition targets -----------------------------------

def target_names(group: GroupId, lam: Weight, eps: Weight) -> List[str]:
    fam = group.family
    if fam in ("u", "su"):
        if not any(eps):
            return []
        return list(selection.holomorphic_label(eps))
    if fam not in ("so", "spin"):
        return []
    n = group.size
    names = []
    if all(c.denominator == 1 for c in lam):
        for p in range(0, n + 1):
            if lam not in form_highest_weights(n, p):
                continue
            if p < n and (lam, eps) in d_steps(n, p):
                names.append(f"d on {p}-forms")
            if p > 0 and (lam, eps) in codifferential_steps(n, p):
                names.append(f"δ on {p}-forms")
            if 0 < p < n and eps == unit(len(lam), 0) and add(lam, eps)[0] == 2:
                names.append(f"twistor on {p}-forms")
        return names
    m = len(lam)
    rest_half = all(abs(c) == HALF for c in lam[1:])
    dirac_eps = zero(m) if n % 2 else unit(m, m - 1, -1 if lam[-1] > 0 else 1)
    if rest_half and lam[0] == HALF:
        if eps == dirac_eps:
            names.append("Dirac")
        elif eps == unit(m, 0):
            names.append("Penrose twistor")
    elif rest_half and lam[0] == Fraction(3, 2) and eps == dirac_eps:
        names.append("Rarita-Schwinger")
    return names
