"""Degree caps and runtime configuration.

The caps bound the lazily built poset caches and the verification suites;
HOPFTREES_MAX_DEGREE overrides every family cap at once.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_CAPS = {
    "ptree": 7,
    "pbt": 7,
    "perm": 6,
    "pw": 6,
    "gsp": 6,
    "setcomp": 6,
    "pf": 5,
    "ltree": 7,
}


@dataclass
class Config:
    caps: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_CAPS))
    jobs: int = 1

    def cap(self, kind: str) -> int:
        override = os.environ.get("HOPFTREES_MAX_DEGREE")
        if override is not None:
            return int(override)
        return self.caps.get(kind, 6)


class CapExceeded(ValueError):
    def __init__(self, kind: str, degree: int, cap: int):
        super().__init__(f"degree {degree} exceeds cap {cap} for {kind}")
        self.kind, self.degree, self.cap = kind, degree, cap


CONFIG = Config()


def check_cap(kind: str, degree: int) -> None:
    cap = CONFIG.cap(kind)
    if degree > cap:
        raise CapExceeded(kind, degree, cap)
