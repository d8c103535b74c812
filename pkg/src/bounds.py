"""
Lower bounds on V(d, n) and volume-driven code-size bounds, in natural-log space
"""

import logging
import math
from typing import Optional

from .combinatorics import LN2, ceil_div, log_bigint
from .errors import DomainError
from .omega import omega_factor
from .reports import BoundReport, CodeBoundsReport, CrossoverReport
from .volume import VolumeService, default_service

logger = logging.getLogger(__name__)

LN_2PI = math.log(2.0 * math.pi)


def _require_dn(d: int, n: int):
    if d < 1 or n < 1:
        raise DomainError(f"bounds need d >= 1 and n >= 1, got d={d}, n={n}")


def _growth(d: int, n: int) -> float:
    # ln(((2d+1)/e)^n); e only ever appears as the -1
    return n * (math.log(2 * d + 1) - 1.0)


def lower_bound_old(d: int, n: int) -> float:
    """ln of sqrt(2 pi n) / 2^(2d) * ((2d+1)/e)^n"""
    _require_dn(d, n)
    return 0.5 * (LN_2PI + math.log(n)) - 2 * d * LN2 + _growth(d, n)


def lower_bound_new(d: int, n: int) -> float:
    """ln of sqrt(2 pi (n+2d)) / omega_d^2 * ((2d+1)/e)^n"""
    _require_dn(d, n)
    return 0.5 * (LN_2PI + math.log(n + 2 * d)) - 2 * omega_factor(d) + _growth(d, n)


def bound_advantage(d: int, n: int) -> float:
    """ln_new - ln_old; strictly decreasing in n"""
    return lower_bound_new(d, n) - lower_bound_old(d, n)


def bound_crossover(d: int, n_max: int) -> Optional[int]:
    """Smallest n <= n_max where the omega bound exceeds the plain bound, or None.

    The advantage falls as n grows, so the winning n form a prefix of 1..n_max
    and the answer is 1 or nothing.
    """
    if n_max < 1:
        return None
    return 1 if bound_advantage(d, 1) > 0 else None


def dominance_range(d: int, n_max: int) -> CrossoverReport:
    """Where the omega bound wins: first_n from bound_crossover, last_n by bisection"""
    first = bound_crossover(d, n_max)
    last = None
    if first is not None:
        lo, hi = first, n_max
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if bound_advantage(d, mid) > 0:
                lo = mid
            else:
                hi = mid - 1
        last = lo
    ln_omega = omega_factor(d)
    logger.debug(f"dominance d={d}: first={first}, last={last}")
    return CrossoverReport(
        d=d,
        n_max=n_max,
        first_n=first,
        last_n=last,
        ln_omega_d=ln_omega,
        omega_margin=ln_omega - d * LN2,
    )


def _require_code_params(n: int, dist: int):
    if n < 1 or not 1 <= dist <= n:
        raise DomainError(f"code bounds need 1 <= D <= n, got n={n}, D={dist}")


def gv_lower_bound(n: int, dist: int, service: Optional[VolumeService] = None) -> int:
    """ceil(n! / V(D-1, n)): every maximal code with minimum distance D is at least this big"""
    _require_code_params(n, dist)
    service = service or default_service()
    return ceil_div(math.factorial(n), service.ball_volume(dist - 1, n))


def sphere_packing_upper_bound(n: int, dist: int, service: Optional[VolumeService] = None) -> int:
    """floor(n! / V(floor((D-1)/2), n)): disjoint balls of that radius around codewords"""
    _require_code_params(n, dist)
    service = service or default_service()
    return math.factorial(n) // service.ball_volume((dist - 1) // 2, n)


def code_bounds(n: int, dist: int, service: Optional[VolumeService] = None) -> CodeBoundsReport:
    return CodeBoundsReport(
        n=n,
        dist=dist,
        gv_floor=gv_lower_bound(n, dist, service),
        packing_ceiling=sphere_packing_upper_bound(n, dist, service),
    )


def bound_report(d: int, n: int, exact: bool = False, service: Optional[VolumeService] = None) -> BoundReport:
    """Both lower bounds for V(d, n); with exact, also ln V(d, n) and the code-size bounds it drives"""
    report = BoundReport(
        d=d,
        n=n,
        ln_old=lower_bound_old(d, n),
        ln_new=lower_bound_new(d, n),
        ln_omega_d=omega_factor(d),
    )
    if exact:
        service = service or default_service()
        volume = service.ball_volume(d, n)
        report.ln_exact = log_bigint(volume)
        report.gv_floor = ceil_div(math.factorial(n), volume)
        report.packing_ceiling = math.factorial(n) // volume
    return report
