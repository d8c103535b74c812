"""
Run configuration: flags over environment over defaults
"""

import os
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, PositiveInt

DEFAULT_BUDGET = 10 ** 8


class RunConfig(BaseModel):
    """Settings shared by every command; output never depends on worker_count"""

    format: Literal["table", "json", "csv"] = "table"
    cache_path: Optional[Path] = None
    worker_count: Optional[PositiveInt] = None
    enumeration_budget: PositiveInt = DEFAULT_BUDGET
    ryser_limit: PositiveInt = 30
    window_limit: PositiveInt = 12
    expansion_limit: PositiveInt = 22
    seed: int = 0
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, **overrides: Any) -> "RunConfig":
        """Build a config from .env / environment, then apply non-None overrides"""
        load_dotenv()
        values: Dict[str, Any] = {}
        if os.getenv("PERMCODE_CACHE"):
            values["cache_path"] = os.getenv("PERMCODE_CACHE")
        if os.getenv("PERMCODE_WORKERS"):
            values["worker_count"] = os.getenv("PERMCODE_WORKERS")
        if os.getenv("PERMCODE_BUDGET"):
            values["enumeration_budget"] = os.getenv("PERMCODE_BUDGET")
        if os.getenv("PERMCODE_LOG_LEVEL"):
            values["log_level"] = os.getenv("PERMCODE_LOG_LEVEL")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
