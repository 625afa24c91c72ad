"""Selection rule for τ ⊗ λ and the resulting gradient targets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import casimir, oracle
from .dominance import DominantWeight, certify, is_dominant, normalize
from .errors import InternalInconsistency, WrongGroup
from .weight_space import GroupId, Weight, add, check_length, descriptor, sub, weight

# Name attached to each sign class of ε for U(m)/SU(m).  Targets with ε = +ε_i
# are the holomorphic gradients; their values lie in the bundle whose weights
# are opposite to ε.
HOLOMORPHIC_LABELS = {
    1: ("holomorphic", "type-(0,1)-valued"),
    -1: ("anti-holomorphic", "type-(1,0)-valued"),
}


@dataclass(frozen=True)
class GradientTarget:
    epsilon: Weight
    mu: DominantWeight
    dim: int
    conformal_weight: Fraction


@dataclass(frozen=True)
class Decomposition:
    group: GroupId
    lam: DominantWeight
    targets: Tuple[GradientTarget, ...]


def _zero_relevant(group: GroupId, lam: Weight) -> bool:
    g = descriptor(group)
    if group.is_spin_or_so and group.size % 2:
        # λ − λ_Σ dominant, read as λ_m > 0 for integral and half-integral λ
        return lam[-1] > 0
    if group.family == "g2":
        return is_dominant(group, sub(lam, g.tau_highest))
    return False


def is_relevant(group: GroupId, lam: DominantWeight, eps) -> bool:
    g = descriptor(group)
    eps = weight(eps)
    check_length(g, eps)
    if all(eps != mu for mu, _ in g.tau_weights):
        return False
    if not any(eps):
        return _zero_relevant(group, lam.weight)
    return is_dominant(group, normalize(group, add(lam.weight, eps)))


def relevant_weights(group: GroupId, lam: DominantWeight) -> List[Weight]:
    """Relevant τ-weights for λ in lexicographic order."""
    g = descriptor(group)
    return sorted(mu for mu, _ in g.tau_weights if is_relevant(group, lam, mu))


def decompose(group: GroupId, lam: DominantWeight) -> Decomposition:
    g = descriptor(group)
    targets = []
    for eps in relevant_weights(group, lam):
        mu = certify(group, add(lam.weight, eps))
        w = casimir.conformal_weight(g, lam, eps).value
        targets.append(GradientTarget(eps, mu, oracle.weyl_dim(g, mu), w))
    total = sum(m for _, m in g.tau_weights)
    mus = {t.mu for t in targets}
    if len(mus) != len(targets) or not 1 <= len(targets) <= total:
        raise InternalInconsistency(f"{group}: decomposition of τ⊗{lam} is not multiplicity-free")
    if sum(t.dim for t in targets) != total * oracle.weyl_dim(g, lam):
        raise InternalInconsistency(f"{group}: dimensions of τ⊗{lam} do not add up")
    return Decomposition(group, lam, tuple(targets))


def split_holomorphic(d: Decomposition) -> Tuple[List[GradientTarget], List[GradientTarget]]:
    """Split U(m)/SU(m) targets by the sign of ε."""
    if d.group.family not in ("u", "su"):
        raise WrongGroup(f"holomorphic splitting applies to U(m) and SU(m), not {d.group}")
    class_a = [t for t in d.targets if sum(t.epsilon) > 0]
    class_b = [t for t in d.targets if sum(t.epsilon) < 0]
    return class_a, class_b


def holomorphic_label(eps: Weight) -> Tuple[str, str]:
    return HOLOMORPHIC_LABELS[1 if sum(eps) > 0 else -1]
