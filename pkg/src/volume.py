"""
Ball-volume service
Routes V(d, n) and general permanents to the cheapest engine that can run,
consulting the optional volume cache first
"""

import logging
import math
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from .config import RunConfig
from .errors import CapacityError, DomainError, PermCodeError
from .permanent import BandEngine, EnumerationEngine, ExpansionEngine, PermanentEngine, RyserEngine
from .permanent.base_engine import AnyMatrix, PermanentValue
from .volume_cache import VolumeCache

logger = logging.getLogger(__name__)

# cheapest first
VOLUME_PREFERENCE = ("dp", "ryser", "enumerate")
MATRIX_PREFERENCE = ("dp", "ryser", "expand", "enumerate")


class VolumeService:
    """Main volume orchestrator"""

    def __init__(self, engines: Dict[str, PermanentEngine], cache: Optional[VolumeCache] = None):
        self.engines = engines
        self.cache = cache

    @classmethod
    def from_config(cls, config: RunConfig) -> "VolumeService":
        engines: Dict[str, PermanentEngine] = {
            "dp": BandEngine(config.window_limit),
            "ryser": RyserEngine(config.ryser_limit, config.worker_count),
            "expand": ExpansionEngine(config.expansion_limit),
            "enumerate": EnumerationEngine(config.enumeration_budget),
        }
        cache = None
        if config.cache_path is not None:
            cache = VolumeCache(config.cache_path)
            cache.load()
        service = cls(engines, cache)
        if cache is not None:
            cache.spot_check(service._recompute_for_check, seed=config.seed)
        return service

    def _recompute_for_check(self, d: int, n: int) -> Optional[int]:
        try:
            return self.compute_volume(d, n)[0]
        except CapacityError:
            return None

    def compute_volume(self, d: int, n: int, engine: Optional[str] = None) -> Tuple[int, str]:
        """Compute V(d, n) without touching the cache; returns (volume, engine name)"""
        if d < 0 or n < 1:
            raise DomainError(f"ball volume needs d >= 0 and n >= 1, got d={d}, n={n}")
        if engine is not None:
            return self._engine(engine).ball_volume(d, n), engine
        if d >= n - 1:
            return math.factorial(n), "factorial"
        last_error: Optional[CapacityError] = None
        for name in VOLUME_PREFERENCE:
            candidate = self.engines.get(name)
            if candidate is None:
                continue
            error = candidate.volume_capacity_error(d, n)
            if error is None:
                logger.info(f"V({d},{n}) via {name}")
                return candidate.ball_volume(d, n), name
            last_error = error
        raise last_error or CapacityError(f"no engine can compute V({d},{n})")

    def ball_volume(self, d: int, n: int, engine: Optional[str] = None) -> int:
        """|T_{d,n}|, served from the cache when possible"""
        return self.ball_volume_report(d, n, engine)[0]

    def ball_volume_report(self, d: int, n: int, engine: Optional[str] = None) -> Tuple[int, str]:
        if engine is None and self.cache is not None:
            cached = self.cache.get(d, n)
            if cached is not None:
                return cached, "cache"
        volume, used = self.compute_volume(d, n, engine)
        if self.cache is not None:
            self.cache.put(d, n, volume)
        return volume, used

    def all_engines(self, d: int, n: int) -> List[Tuple[str, Union[int, PermCodeError]]]:
        """Run every volume engine for cross-checks; failures are returned, not raised"""
        results: List[Tuple[str, Union[int, PermCodeError]]] = []
        for name in VOLUME_PREFERENCE:
            try:
                results.append((name, self._engine(name).ball_volume(d, n)))
            except PermCodeError as e:
                logger.error(f"Engine {name} failed for V({d},{n}): {e}")
                results.append((name, e))
        return results

    def permanent(self, matrix: AnyMatrix, engine: Optional[str] = None) -> Tuple[PermanentValue, str]:
        """Permanent of any supported matrix by the cheapest capable engine"""
        if engine is not None:
            return self._engine(engine).permanent(matrix), engine
        last_error: Optional[CapacityError] = None
        for name in MATRIX_PREFERENCE:
            candidate = self.engines.get(name)
            if candidate is None:
                continue
            error = candidate.capacity_error(matrix)
            if error is None and (name not in ("dp", "ryser") or matrix.rows == matrix.cols):
                return candidate.permanent(matrix), name
            last_error = error or last_error
        raise last_error or CapacityError(f"no engine can compute a {matrix.rows}x{matrix.cols} permanent")

    def _engine(self, name: str) -> PermanentEngine:
        if name not in self.engines:
            raise DomainError(f"Unknown engine '{name}' (expected one of {', '.join(self.engines)})")
        return self.engines[name]


@lru_cache(maxsize=1)
def default_service() -> VolumeService:
    return VolumeService.from_config(RunConfig())


def ball_volume(d: int, n: int) -> int:
    """V(d, n) with default limits and no cache"""
    return default_service().ball_volume(d, n)
