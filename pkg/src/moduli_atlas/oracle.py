"""Independent recomputation of the classifiers, and the grid sweep comparing both.

`oracle_enumerate` and `oracle_bn` rebuild their answers from raw pairing
arithmetic and brute-force scans, sharing only the lattice primitives with
the main modules; they deliberately loop differently (quotient length major,
and sub-degrees scanned from n - m_max upward) so a bug in one side cannot
hide in the other.  `sweep` runs both sides over a grid and returns every
disagreement.  Grid points are independent of each other and records come
back in grid order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brill_noether import BNInput, bn_mukai_vector, classify_bn
from .brill_noether import bn_component_dimension_identities
from .hn import dim_hn_closed_form, dim_hn_stratum, enumerate_hn_types
from .lattice import (
    MukaiVector,
    Surface,
    divisibility,
    h0_line_bundle,
    ideal_sheaf_vector,
    mukai_pairing,
    primitive_part,
    second_chern,
)

__all__ = [
    "GridSpec",
    "DEFAULT_GRID",
    "BnSummary",
    "Discrepancy",
    "oracle_enumerate",
    "oracle_bn",
    "sweep",
]


@dataclass(frozen=True, slots=True)
class GridSpec:
    """Sweep domain; ranges are inclusive.

    The enumeration window at a grid point with twist degree n is
    m <= n + m_margin (the natural comparison window grows with n).
    """

    h_squared_values: tuple[int, ...]
    n_range: tuple[int, int]
    length_range: tuple[int, int]
    m_margin: int = 4

    def __post_init__(self) -> None:
        if not self.h_squared_values:
            raise ValueError("empty range")
        for h2 in self.h_squared_values:
            Surface(h2)
        if self.n_range[0] > self.n_range[1] or self.length_range[0] > self.length_range[1]:
            raise ValueError("empty range")
        if self.m_margin < 0:
            raise ValueError("negative enumeration margin")


DEFAULT_GRID = GridSpec((2, 4, 6), (0, 8), (0, 40), 4)


@dataclass(frozen=True, slots=True)
class BnSummary:
    verdict: str
    alpha_count: int
    beta: bool
    dimensions: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Discrepancy:
    h_squared: int
    n: int
    length: int
    check: str
    main: object
    oracle: object


def oracle_enumerate(s: Surface, v: MukaiVector, m_max: int) -> list[tuple[int, int, int]]:
    """Brute-force scan for valid filtration triples on v with m <= m_max.

    Scans sub-degrees from n - m_max upward so the slope bound is exercised,
    not assumed, and re-verifies each candidate by rebuilding both pieces and
    adding them.
    """
    n, h2 = v.deg, s.h_squared
    c2 = second_chern(s, v)
    found: list[tuple[int, int, int]] = []
    for m in range(n - m_max, m_max + 1):
        quot_deg = n - m
        if m < quot_deg:
            continue
        budget = c2 - m * quot_deg * h2
        for ell1 in range(max(budget, -1) + 1):
            ell2 = budget - ell1
            if ell2 < 0:
                continue
            if m == quot_deg and not ell1 < ell2:
                continue
            if ideal_sheaf_vector(s, m, ell1) + ideal_sheaf_vector(s, quot_deg, ell2) != v:
                continue
            found.append((m, ell1, ell2))
    return found


def oracle_bn(s: Surface, n: int, length: int, threshold: int) -> BnSummary:
    """Re-derive the locus classification straight from the defining conditions."""
    h2 = s.h_squared
    v = MukaiVector(2, n, (n * n * h2) // 2 - length + 2)
    if length > h0_line_bundle(s, n):
        return BnSummary("whole_hilbert_scheme", 0, False, ())
    chi = 2 + v.a
    dims: list[int] = []
    beta = False
    v0 = primitive_part(v)
    norm0 = mukai_pairing(s, v0, v0)
    if n >= 1 and norm0 >= -2 and not (h2 == 2 and v == MukaiVector(2, 3, 5)):
        d = divisibility(v)
        norm = mukai_pairing(s, v, v)
        if norm0 == -2:
            mss_dim = norm + d * d
        elif norm > 0:
            mss_dim = norm + 1
        else:
            mss_dim = d
        beta = True
        dims.append(mss_dim + chi)
    alpha_count = 0
    for m in range(1, n):
        if 2 * m < n:
            continue
        quot_deg = n - m
        for ell2 in range(length + 1):
            ell1 = length - m * quot_deg * h2 - ell2
            if ell1 < 0:
                continue
            if 2 * m == n and ell2 <= ell1:
                continue
            v1 = MukaiVector(1, m, (m * m * h2) // 2 - ell1 + 1)
            v2 = MukaiVector(1, quot_deg, (quot_deg * quot_deg * h2) // 2 - ell2 + 1)
            if v1 + v2 != v:
                continue
            if h0_line_bundle(s, quot_deg) <= ell2:
                continue
            if chi <= 0:
                continue
            p12 = mukai_pairing(s, v1, v2)
            if p12 > threshold:
                continue
            alpha_count += 1
            dims.append(
                mukai_pairing(s, v1, v1) + mukai_pairing(s, v2, v2) + p12 + 2 + chi
            )
    verdict = "components" if dims else "empty"
    return BnSummary(verdict, alpha_count, beta, tuple(sorted(dims)))


def _main_summary(report) -> BnSummary:
    alpha_count = sum(1 for c in report.components if c.hn_type is not None)
    beta = any(c.hn_type is None for c in report.components)
    dims = tuple(sorted(c.dimension for c in report.components))
    return BnSummary(report.verdict, alpha_count, beta, dims)


def sweep(grid: GridSpec, threshold: int) -> list[Discrepancy]:
    """Compare main classifiers against the oracles over the whole grid.

    Four checks per point: locus classification against oracle_bn, window
    enumeration against oracle_enumerate, the two stratum dimension formulas
    against each other, and the closed-form component dimension identities.
    """
    records: list[Discrepancy] = []
    n_lo, n_hi = grid.n_range
    len_lo, len_hi = grid.length_range
    for h2 in grid.h_squared_values:
        s = Surface(h2)
        for n in range(n_lo, n_hi + 1):
            m_max = n + grid.m_margin
            for length in range(len_lo, len_hi + 1):
                inp = BNInput(s, n, length)
                report = classify_bn(inp, threshold)
                main = _main_summary(report)
                ora = oracle_bn(s, n, length, threshold)
                if main != ora:
                    records.append(Discrepancy(h2, n, length, "bn_summary", main, ora))
                v = bn_mukai_vector(inp)
                types = enumerate_hn_types(s, v, m_max)
                main_triples = [t.triple() for t in types]
                ora_triples = oracle_enumerate(s, v, m_max)
                if main_triples != ora_triples:
                    records.append(
                        Discrepancy(h2, n, length, "enumeration", main_triples, ora_triples)
                    )
                for t in types:
                    lhs = dim_hn_stratum(t)
                    rhs = dim_hn_closed_form(t)
                    if lhs != rhs:
                        records.append(
                            Discrepancy(h2, n, length, f"dim_formula{t.triple()}", lhs, rhs)
                        )
                if report.verdict == "components":
                    for check in bn_component_dimension_identities(inp, threshold):
                        if not check.matches:
                            records.append(
                                Discrepancy(
                                    h2,
                                    n,
                                    length,
                                    f"bn_dimension_identity[{check.kind}{check.triple or ''}]",
                                    check.dimension,
                                    check.closed_form,
                                )
                            )
    return records
