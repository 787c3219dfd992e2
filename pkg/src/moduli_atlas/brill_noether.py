"""Components of the Brill-Noether locus W = {Z : h^1 of I_Z(n*H) > 0} in Hilb^N.

A point of W comes with a nonsplit extension of I_Z(n*H) by the structure
sheaf, a rank-2 sheaf with vector v = (2, n, n^2*H.H/2 - N + 2), so c2(v) = N
and chi(v) = n^2*H.H/2 + 4 - N.  Classification of the components of W:

* N > h^0(O(n*H)): the locus is all of Hilb^N (dimension 2N).
* one component for each filtration type (m, ell1, ell2) of v with
  n > m >= n - m >= 1, with the quotient twist effective in the sense
  a(quotient) > -1, and with sub/quotient pairing <= threshold; its dimension
  is the stratum dimension plus chi(v).
* one component from the semistable locus when that locus is nonempty, of
  dimension dim_mss(v) + chi(v), except in the single rigid case
  H.H = 2, v = (2, 3, 5), where the would-be component is contained in the
  others and is dropped.

The semistable case also needs n >= 1: a semistable sheaf of slope zero maps
onto the structure sheaf, so its h^2 cannot vanish and no component arises;
with that guard n = 0 always classifies as empty or as the whole scheme.

The threshold defaults to 1; components whose sub/quotient pairing is 0 or 1
exist under one reading of the inclusion bound but not the other, and carry a
`threshold_sensitive` flag.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hn import HNType, dim_hn_stratum
from .lattice import (
    MukaiVector,
    Surface,
    euler_characteristic,
    h0_line_bundle,
    mukai_pairing,
    second_chern,
)
from .torsion_free import DEFAULT_THRESHOLD, dim_mss, mss_nonempty

__all__ = [
    "VERDICT_WHOLE",
    "VERDICT_COMPONENTS",
    "VERDICT_EMPTY",
    "BNInput",
    "BNComponent",
    "BNReport",
    "DimensionCheck",
    "bn_mukai_vector",
    "exceptional",
    "classify_bn",
    "bn_component_dimension_identities",
]

VERDICT_WHOLE = "whole_hilbert_scheme"
VERDICT_COMPONENTS = "components"
VERDICT_EMPTY = "empty"


@dataclass(frozen=True, slots=True)
class BNInput:
    """Locus datum: W sits in Hilb^length(X) and twists by n*H."""

    surface: Surface
    n: int
    length: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("twist degree must be nonnegative")
        if self.length < 0:
            raise ValueError("negative subscheme length")


@dataclass(frozen=True, slots=True)
class BNComponent:
    """One irreducible component of the locus.

    `hn_type` is None for the component coming from the semistable locus
    (kind "beta") and a filtration type for the unstable ones (kind "alpha").
    """

    hn_type: HNType | None
    dimension: int
    codimension: int
    threshold_sensitive: bool
    mukai_vector: MukaiVector

    @property
    def kind(self) -> str:
        return "beta" if self.hn_type is None else "alpha"


@dataclass(frozen=True, slots=True)
class BNReport:
    verdict: str
    hilb_dimension: int
    components: tuple[BNComponent, ...]
    mukai_vector: MukaiVector
    exceptional_case: bool


def bn_mukai_vector(inp: BNInput) -> MukaiVector:
    """The extension vector (2, n, n^2*H.H/2 - length + 2); its c2 is `length`."""
    n = inp.n
    return MukaiVector(2, n, (n * n * inp.surface.h_squared) // 2 - inp.length + 2)


def exceptional(s: Surface, v: MukaiVector) -> bool:
    """The one rigid case whose semistable locus contributes no component."""
    return s.h_squared == 2 and v == MukaiVector(2, 3, 5)


def classify_bn(inp: BNInput, threshold: int = DEFAULT_THRESHOLD) -> BNReport:
    """Classify the components of W inside Hilb^length, exactly.

    The unstable search window is intrinsic (n > m > n/2 - 1 is finite), so
    unlike the torsion-free classifier no m_max is needed; the output is
    complete.  Components are listed beta first, then alphas by (m, ell1).
    """
    s = inp.surface
    n = inp.n
    v = bn_mukai_vector(inp)
    hilb_dim = 2 * inp.length
    is_exc = exceptional(s, v)
    if inp.length > h0_line_bundle(s, n):
        return BNReport(VERDICT_WHOLE, hilb_dim, (), v, is_exc)
    chi = euler_characteristic(v)
    comps: list[BNComponent] = []
    if n >= 1 and mss_nonempty(s, v) and not is_exc:
        dim = dim_mss(s, v) + chi
        comps.append(BNComponent(None, dim, hilb_dim - dim, False, v))
    c2 = second_chern(s, v)
    for m in range(max(1, (n + 1) // 2), n):
        budget = c2 - m * (n - m) * s.h_squared
        if budget < 0:
            continue
        # a(quotient) > -1 bounds the quotient length
        quot_cap = ((n - m) * (n - m) * s.h_squared) // 2 + 1
        for ell1 in range(budget + 1):
            ell2 = budget - ell1
            if 2 * m == n and not ell1 < ell2:
                continue
            if ell2 > quot_cap:
                continue
            t = HNType(s, v, m, ell1, ell2)
            pairing = t.sub_quotient_pairing()
            if pairing > threshold:
                continue
            dim = dim_hn_stratum(t) + chi
            comps.append(
                BNComponent(t, dim, hilb_dim - dim, pairing in (0, 1), v)
            )
    if comps:
        return BNReport(VERDICT_COMPONENTS, hilb_dim, tuple(comps), v, is_exc)
    return BNReport(VERDICT_EMPTY, hilb_dim, (), v, is_exc)


@dataclass(frozen=True, slots=True)
class DimensionCheck:
    """A component dimension against its closed form, where one applies."""

    kind: str
    triple: tuple[int, int, int] | None
    dimension: int
    closed_form: int | None
    matches: bool


def bn_component_dimension_identities(
    inp: BNInput, threshold: int = DEFAULT_THRESHOLD
) -> list[DimensionCheck]:
    """Closed-form dimension predictions for every component of classify_bn.

    Every alpha component has dimension 2*length - m*(n-m)*H.H, and the beta
    component has dimension 3*length - 3 - n^2*H.H/2 whenever <v,v> > 0.
    Raises ValueError when the verdict is not "components".
    """
    report = classify_bn(inp, threshold)
    if report.verdict != VERDICT_COMPONENTS:
        raise ValueError("no components to check")
    s = inp.surface
    n, length = inp.n, inp.length
    v = report.mukai_vector
    checks: list[DimensionCheck] = []
    for comp in report.components:
        if comp.hn_type is None:
            if mukai_pairing(s, v, v) > 0:
                predicted = 3 * length - 3 - (n * n * s.h_squared) // 2
            else:
                predicted = None
        else:
            m = comp.hn_type.m
            predicted = 2 * length - m * (n - m) * s.h_squared
        checks.append(
            DimensionCheck(
                comp.kind,
                comp.hn_type.triple() if comp.hn_type is not None else None,
                comp.dimension,
                predicted,
                predicted is None or predicted == comp.dimension,
            )
        )
    return checks
