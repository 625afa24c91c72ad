"""Exact weight arithmetic and static Lie data for the structure groups.

Weights are plain tuples of :class:`fractions.Fraction`.  Every group is
described by an immutable :class:`GroupDescriptor` holding the weight-space
inner product, the Weyl vector, the positive and simple roots and the weights
of the complex representation τ whose components index the generalized
gradients.

Coordinate conventions:

* ``so``/``spin``/``spin7``: orthonormal ε-basis of the Cartan of so(n)
  (``spin7`` uses the B3 coordinates of Spin(7) ⊂ SO(8)).
* ``u``/``su``: diagonal unitary coordinates (λ1, …, λm).
* ``sp``: standard C_m coordinates.
* ``sp1sp``: (β; λ1, …, λm), slot 0 is the Sp(1) weight.
* ``g2``: (λ1, λ2) with dominance λ1 ≥ λ2 ≥ 0; the 7-dimensional
  representation has highest weight (1, 0) and the adjoint (1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .errors import GroupError, WeightFormatError, WeightLengthError

Weight = Tuple[Fraction, ...]

HALF = Fraction(1, 2)

FAMILIES = ("so", "spin", "u", "su", "sp", "sp1sp", "g2", "spin7")

_DISPLAY = {
    "so": "SO({})",
    "spin": "Spin({})",
    "u": "U({})",
    "su": "SU({})",
    "sp": "Sp({})",
    "sp1sp": "Sp(1)·Sp({})",
    "g2": "G2",
    "spin7": "Spin(7)-structure",
}

# Smallest admissible size parameter per family.
_MIN_SIZE = {"so": 3, "spin": 3, "u": 1, "su": 3, "sp": 1, "sp1sp": 1}


# -- weight helpers -----------------------------------------------------------

def weight(*coords) -> Weight:
    """Build a weight from ints, Fractions or strings like ``"3/2"``."""
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    return tuple(Fraction(c) for c in coords)


def zero(rank: int) -> Weight:
    return (Fraction(0),) * rank


def unit(rank: int, index: int, sign: int = 1) -> Weight:
    """``sign * e_index`` with a 0-based index."""
    w = [Fraction(0)] * rank
    w[index] = Fraction(sign)
    return tuple(w)


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def scale(c, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def parse_weight(text: str) -> Weight:
    """Parse ``"3/2,1/2,1/2"``; the error names the offending coordinate."""
    parts = [p.strip() for p in text.replace(";", ",").split(",")]
    if not text.strip() or not parts:
        raise WeightFormatError("empty weight")
    coords = []
    for k, part in enumerate(parts, start=1):
        try:
            coords.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise WeightFormatError(f"coordinate {k} ({part!r}) is not a rational number") from None
    return tuple(coords)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


# -- group identifiers --------------------------------------------------------

@dataclass(frozen=True, order=True)
class GroupId:
    """One of the structure groups, e.g. ``GroupId("so", 7)`` or ``GroupId("g2")``.

    ``spin7`` is the Spin(7) ⊂ SO(8) structure group of 8-manifolds; the spin
    cover of SO(n) is ``GroupId("spin", n)``.
    """

    family: str
    size: Optional[int] = None

    def __post_init__(self):
        fam = self.family.lower()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise GroupError(f"unknown group family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if fam in ("g2", "spin7"):
            if self.size is not None:
                raise GroupError(f"{fam} takes no size parameter")
            return
        if self.size is None:
            raise GroupError(f"{fam} requires a size parameter")
        if isinstance(self.size, bool) or not isinstance(self.size, int):
            raise GroupError(f"{fam} size must be an integer, got {self.size!r}")
        lo = _MIN_SIZE[fam]
        if self.size < lo:
            hint = ""
            if fam == "su":
                hint = " (SU(2) = Sp(1) and SU(1) is trivial; use sp with m = 1)"
            raise GroupError(f"{fam} requires size >= {lo}, got {self.size}{hint}")

    def __str__(self):
        fmt = _DISPLAY[self.family]
        return fmt.format(self.size) if self.size is not None else fmt

    @property
    def is_spin_or_so(self) -> bool:
        return self.family in ("so", "spin")


# -- descriptors --------------------------------------------------------------

@dataclass(frozen=True)
class GroupDescriptor:
    """Static algebraic data of one structure group.

    ``n`` is the dimension of the manifold.  ``tau_dim`` is the complex
    dimension of the representation whose weights are ``tau_weights``; it is
    the dimension entering the normalization c^{Λ²} and equals ``n`` for every
    family except ``sp``, where the complex representation E of dimension 2m
    is used (see README, "Normalization").
    """

    id: GroupId
    rank: int
    n: int
    dim_g: int
    tau_dim: int
    gram: Tuple[Tuple[Fraction, ...], ...]
    weyl_vector: Weight
    positive_roots: Tuple[Weight, ...]
    simple_roots: Tuple[Weight, ...]
    tau_weights: Tuple[Tuple[Weight, int], ...]
    tau_highest: Weight
    sigma_highest: Optional[Weight] = None
    # Weyl group factors as (type letter, first coordinate, stop coordinate).
    weyl_blocks: Tuple[Tuple[str, int, int], ...] = field(default=())

    @property
    def has_zero_tau_weight(self) -> bool:
        return any(all(c == 0 for c in w) for w, _ in self.tau_weights)


def inner(g: GroupDescriptor, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """aᵀ·gram·b, exact."""
    if len(a) != g.rank or len(b) != g.rank:
        raise WeightLengthError(f"{g.id} weights have {g.rank} coordinates, got {len(a)} and {len(b)}")
    total = Fraction(0)
    for i, x in enumerate(a):
        if x == 0:
            continue
        row = g.gram[i]
        total += x * sum((row[j] * y for j, y in enumerate(b) if y != 0), Fraction(0))
    return total


def _identity(r: int, c: Fraction = Fraction(1)):
    return tuple(tuple(c if i == j else Fraction(0) for j in range(r)) for i in range(r))


def _roots_a(r: int, start: int, count: int):
    pos = []
    for i, j in combinations(range(start, start + count), 2):
        pos.append(add(unit(r, i), unit(r, j, -1)))
    simple = [add(unit(r, i), unit(r, i + 1, -1)) for i in range(start, start + count - 1)]
    return pos, simple


def _roots_bcd(kind: str, r: int, start: int, count: int):
    idx = range(start, start + count)
    pos = []
    for i, j in combinations(idx, 2):
        pos.append(add(unit(r, i), unit(r, j, -1)))
        pos.append(add(unit(r, i), unit(r, j)))
    last = start + count - 1
    simple = [add(unit(r, i), unit(r, i + 1, -1)) for i in range(start, last)]
    if kind == "B":
        pos += [unit(r, i) for i in idx]
        simple.append(unit(r, last))
    elif kind == "C":
        pos += [scale(2, unit(r, i)) for i in idx]
        simple.append(scale(2, unit(r, last)))
    elif count >= 2:  # D
        simple.append(add(unit(r, last - 1), unit(r, last)))
    return pos, simple


def _pm_units(r: int, start: int = 0):
    out = []
    for i in range(start, r):
        out.append((unit(r, i), 1))
        out.append((unit(r, i, -1), 1))
    return out


def _build(gid: GroupId) -> GroupDescriptor:
    fam, size = gid.family, gid.size

    if fam in ("so", "spin"):
        n = size
        m = n // 2
        kind = "B" if n % 2 else "D"
        pos, simple = _roots_bcd(kind, m, 0, m)
        taus = _pm_units(m)
        sigma = None
        if n % 2:
            taus.append((zero(m), 1))
            sigma = (HALF,) * m
        return GroupDescriptor(
            id=gid, rank=m, n=n, dim_g=n * (n - 1) // 2, tau_dim=n,
            gram=_identity(m),
            weyl_vector=tuple(Fraction(n - 2 * i, 2) for i in range(1, m + 1)),
            positive_roots=tuple(pos), simple_roots=tuple(simple),
            tau_weights=tuple(taus), tau_highest=unit(m, 0),
            sigma_highest=sigma, weyl_blocks=((kind, 0, m),),
        )

    if fam in ("u", "su"):
        m = size
        pos, simple = _roots_a(m, 0, m)
        if fam == "u":
            gram = _identity(m)
            dim_g = m * m
        else:
            # Trace form on su(m): kernel is the (1, …, 1) direction.
            gram = tuple(
                tuple((Fraction(1) if i == j else Fraction(0)) - Fraction(1, m) for j in range(m))
                for i in range(m)
            )
            dim_g = m * m - 1
        return GroupDescriptor(
            id=gid, rank=m, n=2 * m, dim_g=dim_g, tau_dim=2 * m,
            gram=gram,
            weyl_vector=tuple(Fraction(m + 1 - 2 * i, 2) for i in range(1, m + 1)),
            positive_roots=tuple(pos), simple_roots=tuple(simple),
            tau_weights=tuple(_pm_units(m)), tau_highest=unit(m, 0),
            weyl_blocks=(("A", 0, m),),
        )

    if fam == "sp":
        m = size
        pos, simple = _roots_bcd("C", m, 0, m)
        return GroupDescriptor(
            id=gid, rank=m, n=4 * m, dim_g=m * (2 * m + 1), tau_dim=2 * m,
            gram=_identity(m),
            weyl_vector=tuple(Fraction(m - i + 1) for i in range(1, m + 1)),
            positive_roots=tuple(pos), simple_roots=tuple(simple),
            tau_weights=tuple(_pm_units(m)), tau_highest=unit(m, 0),
            weyl_blocks=(("C", 0, m),),
        )

    if fam == "sp1sp":
        m = size
        r = m + 1
        pos, simple = _roots_bcd("C", r, 1, m)
        pos = [scale(2, unit(r, 0))] + pos
        simple = [scale(2, unit(r, 0))] + simple
        # Trace form of so(4m) restricted to sp(1) ⊕ sp(m), dualized.
        gram = tuple(
            tuple(
                (Fraction(1, 2 * m) if i == 0 else HALF) if i == j else Fraction(0)
                for j in range(r)
            )
            for i in range(r)
        )
        taus = []
        for s in (1, -1):
            for i in range(1, r):
                for t in (1, -1):
                    taus.append((add(unit(r, 0, s), unit(r, i, t)), 1))
        return GroupDescriptor(
            id=gid, rank=r, n=4 * m, dim_g=3 + m * (2 * m + 1), tau_dim=4 * m,
            gram=gram,
            weyl_vector=(Fraction(1),) + tuple(Fraction(m - i + 1) for i in range(1, m + 1)),
            positive_roots=tuple(pos), simple_roots=tuple(simple),
            tau_weights=tuple(taus), tau_highest=add(unit(r, 0), unit(r, 1)),
            weyl_blocks=(("C", 0, 1), ("C", 1, r)),
        )

    if fam == "g2":
        third = Fraction(1, 3)
        gram = ((2 * third, third), (third, 2 * third))
        short = [weight(1, 0), weight(0, 1), weight(1, -1)]
        long_ = [weight(1, 1), weight(2, -1), weight(-1, 2)]
        taus = [(zero(2), 1)]
        for s in short:
            taus.append((s, 1))
            taus.append((neg(s), 1))
        return GroupDescriptor(
            id=gid, rank=2, n=7, dim_g=14, tau_dim=7,
            gram=gram, weyl_vector=weight(2, 1),
            positive_roots=tuple(short + long_),
            simple_roots=(weight(1, -1), weight(-1, 2)),
            tau_weights=tuple(taus), tau_highest=weight(1, 0),
            weyl_blocks=(("G", 0, 2),),
        )

    # spin7: Spin(7) acting on R^8 through its spinor representation
    pos, simple = _roots_bcd("B", 3, 0, 3)
    taus = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                taus.append(((s1 * HALF, s2 * HALF, s3 * HALF), 1))
    return GroupDescriptor(
        id=gid, rank=3, n=8, dim_g=21, tau_dim=8,
        gram=_identity(3), weyl_vector=weight("5/2", "3/2", "1/2"),
        positive_roots=tuple(pos), simple_roots=tuple(simple),
        tau_weights=tuple(taus), tau_highest=(HALF, HALF, HALF),
        weyl_blocks=(("B", 0, 3),),
    )


@lru_cache(maxsize=None)
def _cached(gid: GroupId) -> GroupDescriptor:
    return _build(gid)


def descriptor(gid: GroupId) -> GroupDescriptor:
    """Static data for ``gid``; deterministic, cached, immutable."""
    if not isinstance(gid, GroupId):
        raise GroupError(f"expected a GroupId, got {gid!r}")
    return _cached(gid)


def check_length(g: GroupDescriptor, w: Sequence) -> None:
    if len(w) != g.rank:
        raise WeightLengthError(f"{g.id} weights have {g.rank} coordinates, got {len(w)}")
