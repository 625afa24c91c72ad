"""Dominance and integrality conditions, SU normal form and λ-sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator, List, Optional

from .errors import NotDominant
from .weight_space import HALF, GroupId, Weight, check_length, descriptor, weight


@dataclass(frozen=True, order=True)
class DominantWeight:
    """A weight certified dominant for ``group``.  Build it with :func:`certify`."""

    group: GroupId
    weight: Weight

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.weight) + ")"


def _integrality(w: Weight, allow_half: bool, group: GroupId) -> Optional[str]:
    dens = {c.denominator for c in w}
    if dens <= {1}:
        return None
    if allow_half and dens == {2}:
        return None
    if allow_half:
        return "coordinates must be all integers or all half-integers"
    if group.family == "so" and dens == {2}:
        return (f"half-integer weights are representations of Spin({group.size}), "
                f"not {group}; use the spin group")
    return "coordinates must be integers"


def _chain(w: Weight, offset: int = 0) -> Optional[str]:
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            a, b = i + 1 + offset, i + 2 + offset
            return f"λ{a} ≥ λ{b} violated"
    return None


def _violation(group: GroupId, w: Weight) -> Optional[str]:
    fam = group.family
    if fam in ("so", "spin"):
        bad = _integrality(w, fam == "spin", group)
        if bad:
            return bad
        m = len(w)
        if group.size % 2:
            return _chain(w) or (f"λ{m} ≥ 0 violated" if w[-1] < 0 else None)
        if m >= 2:
            bad = _chain(w[:-1])
            if bad:
                return bad
            if w[-2] < abs(w[-1]):
                return f"λ{m - 1} ≥ |λ{m}| violated"
        return None
    if fam == "spin7":
        bad = _integrality(w, True, group)
        return bad or _chain(w) or ("λ3 ≥ 0 violated" if w[-1] < 0 else None)
    bad = _integrality(w, False, group)
    if bad:
        return bad
    if fam in ("u", "su"):
        return _chain(w)
    if fam == "sp":
        return _chain(w) or (f"λ{len(w)} ≥ 0 violated" if w[-1] < 0 else None)
    if fam == "sp1sp":
        if w[0] < 0:
            return "β ≥ 0 violated"
        lam = w[1:]
        return _chain(lam) or (f"λ{len(lam)} ≥ 0 violated" if lam[-1] < 0 else None)
    # g2
    return _chain(w) or ("λ2 ≥ 0 violated" if w[1] < 0 else None)


def is_dominant(group: GroupId, w) -> bool:
    w = weight(w)
    check_length(descriptor(group), w)
    return _violation(group, w) is None


def su_normal_form(w: Weight) -> Weight:
    """Translate by a multiple of (1, …, 1) so that the last coordinate is 0."""
    last = w[-1]
    return tuple(c - last for c in w)


def certify(group: GroupId, w) -> DominantWeight:
    """Certify ``w`` as dominant for ``group``; SU weights go to normal form first."""
    w = weight(w)
    check_length(descriptor(group), w)
    if group.family == "su":
        w = su_normal_form(w)
    bad = _violation(group, w)
    if bad:
        raise NotDominant(group, w, bad)
    return DominantWeight(group, w)


def normalize(group: GroupId, w: Weight) -> Weight:
    """Canonical representative used to compare highest weights."""
    return su_normal_form(w) if group.family == "su" else w


def dominant_sweep(group: GroupId, max_coord: int, half_integers: bool = True) -> List[DominantWeight]:
    """All dominant weights with every |coordinate| ≤ ``max_coord``.

    Spin-type groups additionally get the half-integer weights with
    |coordinate| ≤ ``max_coord - 1/2`` when ``half_integers`` is set.
    SU weights are enumerated in normal form only.
    """
    g = descriptor(group)
    K = max_coord
    fam = group.family
    out: List[DominantWeight] = []
    seen = set()

    def emit(w):
        w = weight(w)
        if _violation(group, w) is None:
            if fam == "su":
                w = su_normal_form(w)
            if w not in seen:
                seen.add(w)
                out.append(DominantWeight(group, w))

    def nonincreasing(values, length) -> Iterator[tuple]:
        for combo in combinations_with_replacement(sorted(values, reverse=True), length):
            yield combo

    ints = range(-K, K + 1)
    if fam == "sp1sp":
        for beta in range(0, K + 1):
            for lam in nonincreasing(range(0, K + 1), g.rank - 1):
                emit((beta,) + lam)
        return out
    if fam == "su":
        for lam in nonincreasing(range(0, K + 1), g.rank - 1):
            emit(lam + (0,))
        return out
    if fam in ("so", "spin") and group.size % 2 == 0:
        for head in nonincreasing(range(0, K + 1), g.rank - 1):
            for last in ints:
                emit(head + (last,))
    else:
        for w in nonincreasing(ints, g.rank):
            emit(w)
    if half_integers and fam in ("spin", "spin7"):
        halves = [Fraction(2 * k + 1, 2) for k in range(0, K)]
        if fam == "spin" and group.size % 2 == 0:
            for head in nonincreasing(halves, g.rank - 1):
                for s in (1, -1):
                    for last in halves:
                        emit(head + (s * last,))
        else:
            for w in nonincreasing(halves, g.rank):
                emit(w)
    return out


def spinor_weight(rank: int) -> Weight:
    return (HALF,) * rank


__all__ = [
    "DominantWeight", "is_dominant", "certify", "normalize", "su_normal_form",
    "dominant_sweep", "spinor_weight",
]
