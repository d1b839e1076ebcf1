"""Closed-form values for the order-2^n power graph family.

Every function here gives the formula side of a check; the corresponding
graph-side computation lives in the other modules and the two are paired
by the verification report.  Throughout, m = 2^(n-1) is the size of the
complete block (the cyclic half), and the other m vertices are pendants
on the identity.
"""

from __future__ import annotations

import math

from .polynomials import IntPolynomial
from .spectral import closed_form_charpoly_gn

__all__ = [
    "pair_distance_counts",
    "hosoya_closed_form",
    "rs_hosoya_closed_form",
    "metric_dimension_closed_form",
    "resolving_sequence_closed_form",
    "resolving_polynomial_closed_form",
    "closed_form_charpoly_gn",
    "spectral_bounds_closed_form",
    "detour_eccentricities_closed_form",
    "detour_radius_diameter_closed_form",
    "dds_summary_closed_form",
    "dds_detour_summary_closed_form",
]


def _m(n: int) -> int:
    if n < 3:
        raise ValueError(f"defined for n >= 3, got n={n}")
    return 2 ** (n - 1)


def pair_distance_counts(n: int) -> tuple[int, int, int]:
    """(pairs at distance 0, 1, 2): (2^n, m(m+1)/2, 3m(m-1)/2).

    Distance 0 counts the diagonal pairs; the diameter is 2, so the three
    numbers partition all N + C(N,2) vertex pairs."""
    m = _m(n)
    return (2**n, m * (m + 1) // 2, 3 * m * (m - 1) // 2)


def hosoya_closed_form(n: int) -> IntPolynomial:
    d0, d1, d2 = pair_distance_counts(n)
    return IntPolynomial({0: d0, 1: d1, 2: d2})


def rs_hosoya_closed_form(n: int) -> IntPolynomial:
    """Reciprocal-status Hosoya polynomial.

    The three edge types are identity-to-clique (m-1 edges), identity-to-
    pendant (m edges), and clique-to-clique (C(m-1, 2) edges); the
    exponents are the endpoint reciprocal-status sums."""
    m = _m(n)
    big = 2**n
    exp_eu = big + m + m // 2 - 2  # identity + clique vertex
    exp_ev = big + m - 1  # identity + pendant
    exp_uw = big + m - 2  # clique + clique
    return IntPolynomial(
        {
            exp_eu: m - 1,
            exp_ev: m,
            exp_uw: (m - 1) * (m - 2) // 2,
        }
    )


def metric_dimension_closed_form(n: int) -> int:
    _m(n)
    return 2**n - 3


def resolving_sequence_closed_form(n: int) -> tuple[int, int, int, int]:
    """(r_(2^n-3), r_(2^n-2), r_(2^n-1), r_(2^n)).

    r at the metric dimension counts sets omitting the identity plus one
    vertex from each twin class: m(m-1) = 2^(2n-2) - 2^(n-1)."""
    m = _m(n)
    return (m * (m - 1), m * m + m - 1, 2 * m, 1)


def resolving_polynomial_closed_form(n: int) -> IntPolynomial:
    big = 2**n
    r3, r2, r1, r0 = resolving_sequence_closed_form(n)
    return IntPolynomial({big - 3: r3, big - 2: r2, big - 1: r1, big: r0})


def spectral_bounds_closed_form(n: int) -> tuple[float, float]:
    """(strict lower, upper) bounds for the spectral radius:
    m - 1 < lambda_1 <= m - 1 + sqrt(m)."""
    m = _m(n)
    return (float(m - 1), float(m - 1) + math.sqrt(m))


def detour_eccentricities_closed_form(n: int) -> tuple[int, int, int]:
    """(identity, clique vertex, pendant) detour eccentricities:
    (m-1, m, m)."""
    m = _m(n)
    return (m - 1, m, m)


def detour_radius_diameter_closed_form(n: int) -> tuple[int, int]:
    m = _m(n)
    return (m - 1, m)


def dds_summary_closed_form(n: int) -> dict[tuple[int, ...], int]:
    """Distance degree sequence summary: tuple -> multiplicity."""
    m = _m(n)
    big = 2**n
    return {
        (1, big - 1): 1,
        (1, m - 1, m): m - 1,
        (1, 1, big - 2): m,
    }


def dds_detour_summary_closed_form(n: int) -> dict[tuple[int, ...], int]:
    """Detour distance degree sequence summary: tuple -> multiplicity.

    The identity reaches the m pendants at detour distance 1 and the m-1
    clique vertices at m-1; clique vertices reach everything at m-1 or m;
    pendants see the identity at 1, other pendants at 2, and the clique
    rest at m."""
    m = _m(n)
    zeros_e = (0,) * (m - 3)
    return {
        (1, m) + zeros_e + (m - 1,): 1,
        (1,) + (0,) * (m - 2) + (m - 1, m): m - 1,
        (1, 1, m - 1) + zeros_e + (m - 1,): m,
    }
