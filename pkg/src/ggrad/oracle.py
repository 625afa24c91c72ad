"""Independent checks: Klimyk tensor decomposition, Weyl dimensions and the
explicit conformal weight operator on forms.

None of this goes through the selection rule or the Casimir formulas, so the
test suite can compare the two sides.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .dominance import DominantWeight, certify, normalize
from .errors import InternalInconsistency, OutOfRange
from .weight_space import GroupDescriptor, Weight, add, check_length, inner, sub


@dataclass(frozen=True)
class SignedWeight:
    weight: Weight
    sign: int


def _perm_sign(keys: Sequence) -> int:
    """Sign of the permutation sorting ``keys`` into descending order."""
    inv = 0
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] < keys[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _sort_block(kind: str, v: List[Fraction]) -> Optional[Tuple[List[Fraction], int]]:
    if kind == "A":
        if len(set(v)) < len(v):
            return None
        return sorted(v, reverse=True), _perm_sign(v)
    absv = [abs(c) for c in v]
    if len(set(absv)) < len(absv):
        return None
    negs = sum(1 for c in v if c < 0)
    out = sorted(absv, reverse=True)
    sign = _perm_sign(absv)
    if kind in ("B", "C"):
        if 0 in absv:
            return None
        return out, sign * (-1) ** negs
    # D: only an even number of sign changes is available
    if negs % 2 and out[-1] != 0:
        out[-1] = -out[-1]
    return out, sign


def _walk(g: GroupDescriptor, v: Weight) -> Optional[Tuple[Weight, int]]:
    """Reflect ``v`` into the closed dominant chamber by simple reflections."""
    sign = 1
    changed = True
    while changed:
        changed = False
        for a in g.simple_roots:
            p = inner(g, v, a)
            if p < 0:
                k = 2 * p / inner(g, a, a)
                v = tuple(x - k * y for x, y in zip(v, a))
                sign = -sign
                changed = True
                break
    if any(inner(g, v, a) == 0 for a in g.simple_roots):
        return None
    return v, sign


def reflect_to_dominant(g: GroupDescriptor, w: Weight) -> Optional[SignedWeight]:
    """Dot action: return (σ(w+δ) − δ, det σ), or None when w+δ sits on a wall."""
    check_length(g, w)
    v = add(w, g.weyl_vector)
    out = list(v)
    sign = 1
    for kind, a, b in g.weyl_blocks:
        if kind == "G":
            res = _walk(g, tuple(v[a:b]))
            if res is None:
                return None
            block, s = list(res[0]), res[1]
        else:
            res = _sort_block(kind, list(v[a:b]))
            if res is None:
                return None
            block, s = res
        out[a:b] = block
        sign *= s
    return SignedWeight(sub(tuple(out), g.weyl_vector), sign)


def tensor_decompose_oracle(g: GroupDescriptor, lam: DominantWeight) -> Counter:
    """Multiset of highest weights in τ ⊗ λ, by Klimyk's formula."""
    acc: Dict[Weight, int] = defaultdict(int)
    for mu, mult in g.tau_weights:
        r = reflect_to_dominant(g, add(lam.weight, mu))
        if r is not None:
            acc[normalize(g.id, r.weight)] += r.sign * mult
    out: Counter = Counter()
    for w, m in sorted(acc.items()):
        if m < 0:
            raise InternalInconsistency(f"{g.id}: negative multiplicity {m} at {w} in τ⊗{lam}")
        if m:
            out[certify(g.id, w)] = m
    return out


def weyl_dim(g: GroupDescriptor, lam: DominantWeight) -> int:
    """Weyl dimension formula over the positive roots."""
    v = add(lam.weight, g.weyl_vector)
    d = Fraction(1)
    for a in g.positive_roots:
        d *= inner(g, v, a) / inner(g, g.weyl_vector, a)
    if d.denominator != 1 or d <= 0:
        raise InternalInconsistency(f"{g.id}: Weyl dimension of {lam} is {d}")
    return int(d)


# -- the conformal weight operator on forms ---------------------------------

def _sorted_sign(idx: List[int]) -> Tuple[Tuple[int, ...], int]:
    inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return tuple(sorted(idx)), (-1 if inv % 2 else 1)


def _act(i: int, j: int, J: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    """e_i∧e_j acting on e_J as a derivation; e_i ↦ e_j, e_j ↦ −e_i."""
    out: Dict[Tuple[int, ...], int] = defaultdict(int)
    for k, a in enumerate(J):
        if a == i and j not in J:
            new, c = j, 1
        elif a == j and i not in J:
            new, c = i, -1
        else:
            continue
        idx = list(J)
        idx[k] = new
        key, s = _sorted_sign(idx)
        out[key] += c * s
    return out


def forms_operator_matrix(n: int, p: int) -> Tuple[List[List[int]], List[Tuple[int, Tuple[int, ...]]]]:
    """Integer matrix of B on (R^n)* ⊗ Λ^p and its basis labels (i, I)."""
    subsets = list(combinations(range(n), p))
    basis = [(i, I) for i in range(n) for I in subsets]
    pos = {b: k for k, b in enumerate(basis)}
    N = len(basis)
    mat = [[0] * N for _ in range(N)]
    for col, (j, J) in enumerate(basis):
        for i in range(n):
            if i == j:
                continue
            for I, c in _act(i, j, J).items():
                mat[pos[(i, I)]][col] += c
    return mat, basis


def _form_candidates(n: int, p: int) -> List[Fraction]:
    m = n // 2
    q = min(p, n - p)
    lams = [[1] * q + [0] * (m - q)]
    if n % 2 == 0 and q == m:
        lams.append([1] * (m - 1) + [-1])
    cands = set()
    if n % 2:
        cands.add(Fraction(1 - n, 2))
    for lam in lams:
        for i, li in enumerate(lam, start=1):
            cands.add(Fraction(1 + li - i))
            cands.add(Fraction(1 - n - (li - i)))
    return sorted(cands)


def weight_operator_eigenvalues_forms(n: int, p: int) -> List[Tuple[Fraction, int]]:
    """Eigenvalues with multiplicities of B on (R^n)* ⊗ Λ^p R^n, by exact nullities."""
    if not 3 <= n <= 8:
        raise OutOfRange(f"n must satisfy 3 <= n <= 8, got {n}")
    if not 1 <= p <= n - 1:
        raise OutOfRange(f"p must satisfy 1 <= p <= n-1 = {n - 1}, got {p}")
    mat, basis = forms_operator_matrix(n, p)
    N = len(basis)
    for r in range(N):
        for c in range(r):
            if mat[r][c] != mat[c][r]:
                raise InternalInconsistency("conformal weight operator matrix is not symmetric")
    out = []
    for w in _form_candidates(n, p):
        # 2w is an integer for every candidate
        tw = int(2 * w)
        shifted = [[2 * mat[r][c] - (tw if r == c else 0) for c in range(N)] for r in range(N)]
        k = linalg.nullity(shifted)
        if k:
            out.append((w, k))
    if sum(k for _, k in out) != N:
        raise InternalInconsistency(f"eigenspaces of B for n={n}, p={p} do not span")
    return out

