"""Irreducible components of the stack of rank-2 torsion-free sheaves.

For a fixed vector v = (2, n, a) the stack is stratified by the semistable
locus and by the destabilizing filtration types of `hn.py`.  The semistable
locus is nonempty exactly when the primitive part v0 of v has <v0,v0> >= -2,
and its stack dimension is, with v = d*v0:

    <v,v> + d^2   if <v0,v0> = -2
    <v,v> + 1     if <v,v> > 0
    d             if <v,v> = 0

(The first case wins the dispatch: it is the only one with <v,v> < 0, and for
d = 1 it gives dimension -1, the stack of a rigid sheaf with its
automorphisms.)  An unstable stratum is swallowed by the closure of the
semistable locus exactly when the pairing of its sub and quotient exceeds a
threshold; the threshold is a parameter with default 1 everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hn import HNType, dim_hn_stratum, enumerate_hn_types
from .lattice import MukaiVector, Surface, divisibility, mukai_pairing, primitive_part

__all__ = [
    "TfComponent",
    "mss_nonempty",
    "dim_mss",
    "classify_tf_components",
]

DEFAULT_THRESHOLD = 1


@dataclass(frozen=True, slots=True)
class TfComponent:
    """One stratum of the torsion-free stack: semistable, or one filtration type.

    `absorbed` marks unstable strata lying in the closure of the semistable
    locus; they are not irreducible components and reports hide them unless
    asked to show everything.
    """

    hn_type: HNType | None
    stack_dimension: int
    absorbed: bool

    @property
    def is_semistable(self) -> bool:
        return self.hn_type is None


def mss_nonempty(s: Surface, v: MukaiVector) -> bool:
    """Whether a Gieseker-semistable sheaf with vector v exists."""
    v0 = primitive_part(v)
    return mukai_pairing(s, v0, v0) >= -2


def dim_mss(s: Surface, v: MukaiVector) -> int:
    """Stack dimension of the semistable locus; raises when it is empty."""
    d = divisibility(v)
    v0 = primitive_part(v)
    if mukai_pairing(s, v0, v0) < -2:
        raise ValueError("semistable stack is empty")
    norm = mukai_pairing(s, v, v)
    if mukai_pairing(s, v0, v0) == -2:
        return norm + d * d
    if norm > 0:
        return norm + 1
    return d


def classify_tf_components(
    s: Surface, v: MukaiVector, m_max: int, threshold: int = DEFAULT_THRESHOLD
) -> list[TfComponent]:
    """Strata of the rank-2 torsion-free stack with vector v, sub-degree <= m_max.

    The semistable entry comes first when it is nonempty, followed by the
    filtration strata in (m, ell1) order, each flagged `absorbed` when the
    semistable locus is nonempty and the sub/quotient pairing exceeds the
    threshold.  When the semistable locus is empty every stratum is a genuine
    component and none is absorbed.  Enlarging m_max only appends entries.
    """
    if v.rank != 2:
        raise ValueError("unsupported rank")
    nonempty = mss_nonempty(s, v)
    out: list[TfComponent] = []
    if nonempty:
        out.append(TfComponent(None, dim_mss(s, v), False))
    for t in enumerate_hn_types(s, v, m_max):
        absorbed = nonempty and t.sub_quotient_pairing() > threshold
        out.append(TfComponent(t, dim_hn_stratum(t), absorbed))
    return out
