from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Tuple

from .geometry import Hull2D, LatticePoint

FORMAT_VERSION = 1

VERDICTS = ("convex", "not_convex")
REASONS = ("confirmed", "early_stop", "count_mismatch", "gap_point")


@dataclass
class ConvexityReport:
    """Outcome of a digital convexity test.

    2D runs fill ``hull``/``h``/``steps``; lattice-traversal runs fill
    ``s_prime_size``/``lp_calls``/``peak_frontier`` and, for the early-exit
    variant, ``gap_point``.
    """

    verdict: str
    reason: str
    n: int
    dim: int = 2
    method: str = "2d"
    hull: Optional[Hull2D] = None
    lattice_count: Optional[int] = None
    h: Optional[int] = None
    work: int = 0
    steps: int = 0
    duplicates: bool = False
    s_prime_size: Optional[int] = None
    lp_calls: Optional[int] = None
    peak_frontier: Optional[int] = None
    gap_point: Optional[LatticePoint] = None
    missing: Optional[Tuple[LatticePoint, ...]] = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.reason not in REASONS:
            raise ValueError(f"bad reason {self.reason!r}")
        if self.verdict == "convex":
            assert self.reason == "confirmed"
            assert self.lattice_count is None or self.lattice_count == self.n
        if self.reason == "early_stop":
            assert self.hull is None

    @property
    def is_convex(self) -> bool:
        return self.verdict == "convex"

    def to_dict(self) -> dict:
        d = {
            "format": FORMAT_VERSION,
            "verdict": self.verdict,
            "reason": self.reason,
            "method": self.method,
            "dim": self.dim,
            "n": self.n,
            "h": self.h,
            "lattice_count": self.lattice_count,
            "work": self.work,
            "steps": self.steps,
            "duplicates": self.duplicates,
        }
        if self.hull is not None:
            d["hull"] = [list(v) for v in self.hull.vertices]
        for key in ("s_prime_size", "lp_calls", "peak_frontier"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        if self.gap_point is not None:
            d["gap_point"] = list(self.gap_point)
        if self.missing is not None:
            d["missing"] = [list(p) for p in self.missing]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if isinstance(value, list):
                value = " ".join("(" + ",".join(map(str, p)) + ")" for p in value) or "-"
            elif value is None:
                value = "-"
            elif isinstance(value, bool):
                value = "yes" if value else "no"
            lines.append(f"{key}: {value}")
        return "\n".join(lines)
