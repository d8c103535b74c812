"""
Numerical verification of the identities behind the Omega_d theorem:
the chain-sum lemma, its telescoping step, the b_m pattern count and the
theorem itself against a permanent oracle
"""

import logging
from typing import Dict, List, Optional, Tuple

from .combinatorics import binomial
from .errors import CapacityError, DomainError
from .omega import REFERENCE_VALUES, omega_at, omega_closed_form, omega_constant, omega_shifted_form
from .permanent import EnumerationEngine, ExpansionEngine
from .polynomial import IntPolynomial
from .reports import IdentityReport
from .structmat import build_omega_matrix

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 8


def lemma_lhs(m: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Sum over 1 <= k_1 <= ... <= k_m <= n of prod_{i=0}^{m} k_i (n+m-i)^(k_{i+1}-k_i),
    with k_0 = 1 and k_{m+1} = n.

    Chains are walked depth-first with k_m innermost; each level multiplies its
    own factor onto the prefix product, so a step of k_m costs one multiply.
    """
    if m < 1 or n < 1:
        raise DomainError(f"lemma needs m >= 1 and n >= 1, got m={m}, n={n}")
    chains = binomial(n + m - 1, m)
    if chains > budget:
        raise CapacityError(f"lemma sum has {chains} chains, budget is {budget}")
    total = 0

    def descend(level: int, previous: int, prefix: int):
        nonlocal total
        # factor i = level - 1 pairs k_{level-1} with the gap to k_level
        base = n + m - (level - 1)
        if level > m:
            total += prefix * previous * n ** (n - previous)
            return
        for k in range(previous, n + 1):
            descend(level + 1, k, prefix * previous * base ** (k - previous))

    descend(1, 1, 1)
    return total


def lemma_rhs(m: int, n: int) -> int:
    """C(n+m-1, m) n^(n+m-1)"""
    if m < 1 or n < 1:
        raise DomainError(f"lemma needs m >= 1 and n >= 1, got m={m}, n={n}")
    return binomial(n + m - 1, m) * n ** (n + m - 1)


def lemma_check(m: int, n: int, budget: int = DEFAULT_BUDGET) -> IdentityReport:
    return IdentityReport.compare("lemma", {"m": m, "n": n}, lemma_lhs(m, n, budget), lemma_rhs(m, n))


def _telescoping_term(i: int, n: int, k: int) -> int:
    return k * binomial(n - k + i, i) * n ** (n - k + i)


def telescoping_check(i: int, n: int, c: int) -> IdentityReport:
    """sum_{k=c}^{n} k C(n-k+i, i) (n+i+1)^(k-c) n^(n-k+i) = C(n-c+i+1, i+1) n^(n-c+i+1)"""
    if i < 0 or not 1 <= c <= n:
        raise DomainError(f"telescoping step needs i >= 0 and 1 <= c <= n, got i={i}, c={c}, n={n}")
    lhs = sum(_telescoping_term(i, n, k) * (n + i + 1) ** (k - c) for k in range(c, n + 1))
    rhs = binomial(n - c + i + 1, i + 1) * n ** (n - c + i + 1)
    return IdentityReport.compare("telescoping", {"i": i, "n": n, "c": c}, lhs, rhs)


def telescoping_chain(m: int, n: int) -> List[IdentityReport]:
    """Collapse the lemma sum from k_m outward, checking every intermediate level.

    inner[c] holds the sum over the innermost i+1 indices given that the next
    outer index equals c; after level i it must equal C(n-c+i+1, i+1) n^(n-c+i+1).
    The final level, taken at c = k_0 = 1, is the whole lemma sum.
    """
    if m < 1 or n < 1:
        raise DomainError(f"lemma needs m >= 1 and n >= 1, got m={m}, n={n}")
    reports: List[IdentityReport] = []
    # level -1: the closing factor k_m n^(n-k_m) is already a function of k_m
    closing = {k: k * n ** (n - k) for k in range(1, n + 1)}
    for i in range(m):
        base = n + i + 1
        inner = {c: sum(closing[k] * base ** (k - c) for k in range(c, n + 1)) for c in range(1, n + 1)}
        checks = [
            IdentityReport.compare(
                "telescoping_level",
                {"i": i, "n": n, "c": c},
                inner[c],
                binomial(n - c + i + 1, i + 1) * n ** (n - c + i + 1),
            )
            for c in range(1, n + 1)
        ]
        # the next level multiplies by its own k
        closing = {k: k * inner[k] for k in range(1, n + 1)}
        reports.append(IdentityReport.compare(
            "chain_level", {"m": m, "n": n, "i": i}, inner[1], checks[0].rhs, checks))
    lhs = reports[-1].lhs
    reports.append(IdentityReport.compare("chain_total", {"m": m, "n": n}, lhs, lemma_rhs(m, n)))
    return reports


def bm_count(d: int, m: int) -> int:
    """Number of selection patterns of A_{d,x+1} that pick x in exactly m rows.

    Sum over 1 <= i_1 < ... < i_m <= d of
    i_1 (i_2-1) ... (i_m-m+1) (d+1)^(i_1-1) d^(i_2-i_1-1) ... (d-m+1)^(d-i_m);
    the empty selection (m = 0) gives (d+1)^d.
    """
    if d < 1 or not 0 <= m <= d:
        raise DomainError(f"b_m needs d >= 1 and 0 <= m <= d, got d={d}, m={m}")
    total = 0

    def descend(s: int, previous: int, prefix: int):
        nonlocal total
        if s > m:
            total += prefix * (d - m + 1) ** (d - previous)
            return
        base = d + 1 - (s - 1)
        for i_s in range(previous + 1, d - (m - s) + 1):
            descend(s + 1, i_s, prefix * (i_s - s + 1) * base ** (i_s - previous - 1))

    descend(1, 0, 1)
    return total


def bm_closed(d: int, m: int) -> int:
    """C(d, m) (d-m+1)^d"""
    return binomial(d, m) * (d - m + 1) ** d


def bm_check(d: int, m: int, budget: int = DEFAULT_BUDGET) -> IdentityReport:
    """b_m against its closed form and against the lemma sum at n = d-m+1"""
    count = bm_count(d, m)
    checks = [IdentityReport.compare("bm_closed", {"d": d, "m": m}, count, bm_closed(d, m))]
    if m >= 1:
        checks.append(IdentityReport.compare("bm_lemma", {"d": d, "m": m}, count, lemma_lhs(m, d - m + 1, budget)))
    return IdentityReport.compare("bm", {"d": d, "m": m}, count, bm_closed(d, m), checks)


def _oracle_permanent(d: int, budget: int, engine: Optional[str]) -> Tuple[IntPolynomial, str]:
    matrix = build_omega_matrix(d)
    enumerator = EnumerationEngine(budget)
    if engine == "enumerate" or (engine is None and enumerator.can_compute(matrix)):
        return enumerator.permanent(matrix), "enumerate"
    if engine in (None, "expand"):
        return ExpansionEngine().permanent(matrix), "expand"
    raise DomainError(f"Unknown oracle engine '{engine}' (expected enumerate or expand)")


def verify_conjecture(d: int, budget: int = DEFAULT_BUDGET, engine: Optional[str] = None) -> IdentityReport:
    """Closed form of Omega_d(x) against per(A_{d,x}), coefficient by coefficient.

    Also checks every coefficient of the shifted form against b_m and against
    C(d,m)(d-m+1)^d. Top-level lhs/rhs are the oracle's and the closed form's
    values at x = 2.
    """
    if d < 1:
        raise DomainError(f"Omega needs d >= 1, got d={d}")
    oracle, used = _oracle_permanent(d, budget, engine)
    closed = omega_closed_form(d)
    logger.info(f"Omega_{d}: oracle via {used}")
    checks: List[IdentityReport] = []
    for k in range(d + 1):
        checks.append(IdentityReport.compare(
            "omega_coefficient", {"d": d, "k": k}, oracle.coefficient(k), closed.coefficient(k)))
    if oracle.degree > d:
        checks.append(IdentityReport.compare("omega_degree", {"d": d}, oracle.degree, closed.degree))
    shifted = omega_shifted_form(d)
    shifted_oracle = oracle.shift(1)
    for m in range(d + 1):
        checks.append(IdentityReport.compare(
            "shifted_coefficient", {"d": d, "m": m}, shifted_oracle.coefficient(m), shifted.coefficient(m)))
        checks.append(IdentityReport.compare("bm_count", {"d": d, "m": m}, bm_count(d, m), shifted.coefficient(m)))
        checks.append(IdentityReport.compare("bm_closed", {"d": d, "m": m}, bm_closed(d, m), shifted.coefficient(m)))
    return IdentityReport.compare("theorem", {"d": d}, oracle(2), closed(2), checks)


def values_check(max_d: int = len(REFERENCE_VALUES)) -> List[IdentityReport]:
    """Omega_d(2) and the constant form against the published values"""
    if not 1 <= max_d <= len(REFERENCE_VALUES):
        raise DomainError(f"reference values exist for 1 <= d <= {len(REFERENCE_VALUES)}, got {max_d}")
    reports = []
    for d in range(1, max_d + 1):
        expected = REFERENCE_VALUES[d - 1]
        checks = [IdentityReport.compare("constant_form", {"d": d}, omega_constant(d), expected)]
        reports.append(IdentityReport.compare("reference_value", {"d": d}, omega_at(d, 2), expected, checks))
    return reports


def sweep(kind: str, limits: Dict[str, int], budget: int = DEFAULT_BUDGET,
          engine: Optional[str] = None) -> List[IdentityReport]:
    """Run a whole verification grid; used by the CLI's verify command"""
    if kind == "conjecture":
        return [verify_conjecture(d, budget, engine) for d in range(1, limits["max_d"] + 1)]
    if kind == "lemma":
        return [lemma_check(m, n, budget)
                for m in range(1, limits["max_m"] + 1) for n in range(1, limits["max_n"] + 1)]
    if kind == "telescoping":
        return [telescoping_check(i, n, c)
                for i in range(0, limits["max_i"] + 1)
                for n in range(1, limits["max_n"] + 1)
                for c in range(1, n + 1)]
    if kind == "bm":
        return [bm_check(d, m, budget) for d in range(1, limits["max_d"] + 1) for m in range(0, d + 1)]
    if kind == "chain":
        return [report
                for m in range(1, limits["max_m"] + 1)
                for n in range(1, limits["max_n"] + 1)
                for report in telescoping_chain(m, n)]
    if kind == "values":
        return values_check(limits["max_d"])
    raise DomainError(f"Unknown identity family '{kind}'")
