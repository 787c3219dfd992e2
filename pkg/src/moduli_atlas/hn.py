"""Destabilizing filtration types of rank-2 classes and their stratum dimensions.

An unstable rank-2 torsion-free sheaf with vector v = (2, n, a) sits in a
unique exact sequence whose sub and quotient are twisted ideal sheaves

    0 -> I_{Z1}(m*H) -> E -> I_{Z2}((n-m)*H) -> 0

and the discrete data of the filtration is the triple (m, ell1, ell2) with
ell_i = len(Z_i).  Validity of a triple:

* length budget: ell1 + ell2 = c2(v) - m*(n-m)*H.H with both lengths >= 0;
* the sub strictly precedes the quotient: slope m > n-m, refined at equal
  slope by Euler characteristics, which amounts to ell1 < ell2.

The union over all m of the strata with fixed sub-degree m is infinite, so
every enumeration here takes an explicit window m <= m_max.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    MukaiVector,
    Surface,
    ideal_sheaf_vector,
    mukai_pairing,
    second_chern,
)

__all__ = [
    "HNType",
    "SEMISTABLE",
    "make_hn_type",
    "enumerate_hn_types",
    "dim_hn_stratum",
    "dim_hn_closed_form",
    "hnp_dominates",
]


@dataclass(frozen=True, slots=True)
class HNType:
    """Filtration type (m, ell1, ell2) of a rank-2 class, with its ambient context."""

    surface: Surface
    total: MukaiVector
    m: int
    ell1: int
    ell2: int

    def sub_vector(self) -> MukaiVector:
        return ideal_sheaf_vector(self.surface, self.m, self.ell1)

    def quotient_vector(self) -> MukaiVector:
        return ideal_sheaf_vector(self.surface, self.total.deg - self.m, self.ell2)

    def sub_quotient_pairing(self) -> int:
        return mukai_pairing(self.surface, self.sub_vector(), self.quotient_vector())

    def triple(self) -> tuple[int, int, int]:
        return (self.m, self.ell1, self.ell2)


class _SemistablePolygon:
    """Sentinel for the straight polygon: the minimum of the dominance order."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Semistable"


SEMISTABLE = _SemistablePolygon()


def _ordered(sub_deg: int, quot_deg: int, ell1: int, ell2: int) -> bool:
    # sub strictly before quotient; ties in slope are broken by chi, i.e. by lengths
    return sub_deg > quot_deg or (sub_deg == quot_deg and ell1 < ell2)


def make_hn_type(s: Surface, v: MukaiVector, m: int, ell1: int) -> HNType:
    """Build the type (m, ell1, ell2) on v, solving the length budget for ell2.

    Raises ValueError when v is not rank 2, when a length is negative or the
    budget c2(v) - m*(n-m)*H.H cannot absorb ell1, or when (m, ell1) does not
    give a strictly decreasing filtration.
    """
    if v.rank != 2:
        raise ValueError("unsupported rank")
    if ell1 < 0:
        raise ValueError("negative subscheme length")
    n = v.deg
    ell2 = second_chern(s, v) - m * (n - m) * s.h_squared - ell1
    if ell2 < 0:
        raise ValueError("length budget exhausted")
    if not _ordered(m, n - m, ell1, ell2):
        raise ValueError("not a Harder-Narasimhan ordering")
    return HNType(s, v, m, ell1, ell2)


def enumerate_hn_types(s: Surface, v: MukaiVector, m_max: int) -> list[HNType]:
    """All valid types on v with m <= m_max, sorted by (m, ell1).

    Deterministic, duplicate-free, and monotone in the window: the list for a
    smaller m_max is a prefix of the list for a larger one.
    """
    if v.rank != 2:
        raise ValueError("unsupported rank")
    n = v.deg
    c2 = second_chern(s, v)
    h2 = s.h_squared
    out: list[HNType] = []
    for m in range((n + 1) // 2, m_max + 1):
        budget = c2 - m * (n - m) * h2
        if budget < 0:
            continue
        if 2 * m == n:
            # equal slope: only splits with ell1 < ell2
            top = (budget - 1) // 2
        else:
            top = budget
        for ell1 in range(top + 1):
            out.append(HNType(s, v, m, ell1, budget - ell1))
    return out


def dim_hn_stratum(t: HNType) -> int:
    """Stack dimension <v1,v1> + <v2,v2> + <v1,v2> + 2 of the stratum of t."""
    s = t.surface
    v1 = t.sub_vector()
    v2 = t.quotient_vector()
    return (
        mukai_pairing(s, v1, v1)
        + mukai_pairing(s, v2, v2)
        + mukai_pairing(s, v1, v2)
        + 2
    )


def dim_hn_closed_form(t: HNType) -> int:
    """The same dimension as H.H*(m - n/2)^2 + 3*c2(v) - 4 - 3*n^2*H.H/4.

    The two quarter-integral terms are combined over the denominator 4; the
    numerator is divisible by 4 because (2m-n)^2 = n^2 mod 4 and H.H is even,
    so the value is an integer and the division below is exact.
    """
    s = t.surface
    n = t.total.deg
    spread = 2 * t.m - n
    quarters, rem = divmod(s.h_squared * (spread * spread - 3 * n * n), 4)
    assert rem == 0, "dimension formula produced a non-integer"
    return quarters + 3 * second_chern(s, t.total) - 4


def hnp_dominates(
    t1: "HNType | _SemistablePolygon", t2: "HNType | _SemistablePolygon"
) -> bool:
    """Polygon order: does the filtration polygon of t1 lie on or above t2's?

    The straight polygon SEMISTABLE is the global minimum.  Two genuine types
    compare by the height of the kink and, at equal height, by how the length
    budget is tilted toward the sub: t1 >= t2 iff m1 > m2, or m1 = m2 and
    ell1(t1) <= ell1(t2).  Raises ValueError when the two types live on
    different (surface, total vector) contexts.
    """
    if isinstance(t1, _SemistablePolygon):
        return isinstance(t2, _SemistablePolygon)
    if isinstance(t2, _SemistablePolygon):
        return True
    if t1.surface != t2.surface or t1.total != t2.total:
        raise ValueError("incomparable contexts")
    return t1.m > t2.m or (t1.m == t2.m and t1.ell1 <= t2.ell1)
