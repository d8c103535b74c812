# Permanent engines package
from .band_engine import BandEngine, band_permanent, permanent_band_dp
from .base_engine import PermanentEngine
from .enumerate_engine import EnumerationEngine, permanent_enumerate
from .expand_engine import ExpansionEngine, permanent_expand
from .ryser_engine import RyserEngine, permanent_ryser

__all__ = [
    "BandEngine",
    "EnumerationEngine",
    "ExpansionEngine",
    "PermanentEngine",
    "RyserEngine",
    "band_permanent",
    "permanent_band_dp",
    "permanent_enumerate",
    "permanent_expand",
    "permanent_ryser",
]
