"""
Append-only CSV cache of exact ball volumes (d,n,volume)
"""

import logging
import math
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

COLUMNS = ["d", "n", "volume"]
SPOT_CHECK_FRACTION = 0.01


class VolumeCache:
    """Volumes keyed by (d, n), persisted as UTF-8 CSV with decimal-string volumes"""

    def __init__(self, path: Path):
        self.path = Path(path)
        self.values: Dict[Tuple[int, int], int] = {}

    def load(self):
        """Load existing rows from disk, if the file exists; later rows win"""
        if not self.path.exists():
            logger.info(f"No volume cache at {self.path}; starting empty")
            return
        try:
            frame = pd.read_csv(self.path, dtype=str, encoding="utf-8")
            for d, n, volume in frame[COLUMNS].itertuples(index=False):
                self.values[(int(d), int(n))] = int(volume)
            logger.info(f"Loaded {len(self.values)} cached volumes from {self.path}")
        except Exception as e:
            logger.error(f"Error loading volume cache {self.path}: {e}")
            self.values = {}

    def spot_check(self, recompute: Callable[[int, int], Optional[int]], seed: int = 0) -> bool:
        """Recompute a deterministic 1% sample; discard the whole cache on any mismatch.

        recompute returns None for keys it cannot handle; those are never sampled.
        """
        keys = sorted(self.values)
        if not keys:
            return True
        sample_size = max(1, math.ceil(len(keys) * SPOT_CHECK_FRACTION))
        rng = np.random.default_rng(seed)
        order = rng.permutation(len(keys))
        checked = 0
        for index in order:
            key = keys[int(index)]
            fresh = recompute(*key)
            if fresh is None:
                continue
            if fresh != self.values[key]:
                logger.warning(
                    f"Cache row d={key[0]}, n={key[1]} holds {self.values[key]}, recomputed {fresh}; "
                    f"discarding {self.path}"
                )
                self.values = {}
                return False
            checked += 1
            if checked >= sample_size:
                break
        logger.info(f"Volume cache spot check passed ({checked} rows)")
        return True

    def get(self, d: int, n: int) -> Optional[int]:
        return self.values.get((d, n))

    def put(self, d: int, n: int, volume: int):
        """Record a volume and append it to the file"""
        if (d, n) in self.values:
            return
        self.values[(d, n)] = volume
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            new_file = not self.path.exists()
            row = pd.DataFrame([[str(d), str(n), str(volume)]], columns=COLUMNS)
            row.to_csv(self.path, mode="a", header=new_file, index=False, encoding="utf-8")
        except Exception as e:
            logger.error(f"Error appending to volume cache {self.path}: {e}")

    def __len__(self) -> int:
        return len(self.values)
