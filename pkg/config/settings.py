import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from services.exceptions import PreconditionError

CONFIG_DIR = Path(__file__).resolve().parent
EMBEDDED_DATA_PATH = CONFIG_DIR / "codes24.txt"


@dataclass(frozen=True)
class EnumerationSettings:
    max_message_bits: int = 26
    block_size: int = 1 << 16
    jobs: int = 1


@dataclass(frozen=True)
class Settings:
    data_path: Path = EMBEDDED_DATA_PATH
    cache_url: Optional[str] = None
    log_level: str = "WARNING"
    enumeration: EnumerationSettings = field(default_factory=EnumerationSettings)

    def with_overrides(self, data_path: Optional[str] = None, jobs: Optional[int] = None) -> "Settings":
        updated = self
        if data_path:
            updated = replace(updated, data_path=Path(data_path))
        if jobs:
            updated = replace(updated, enumeration=replace(updated.enumeration, jobs=jobs))
        return updated


@dataclass(frozen=True)
class CodeSpec:
    index: int
    components: str
    h: Fraction

    @property
    def weight4_count(self) -> int:
        return int(24 * self.h)


TABLE1: Dict[int, CodeSpec] = {
    1: CodeSpec(1, "d12^2", Fraction(5, 4)),
    2: CodeSpec(2, "d10 e7^2", Fraction(1)),
    3: CodeSpec(3, "d8^3", Fraction(3, 4)),
    4: CodeSpec(4, "d6^4", Fraction(1, 2)),
    5: CodeSpec(5, "d24", Fraction(11, 4)),
    6: CodeSpec(6, "d4^6", Fraction(1, 4)),
    7: CodeSpec(7, "g24", Fraction(0)),
    8: CodeSpec(8, "d16 e8", Fraction(7, 4)),
    9: CodeSpec(9, "e8^3", Fraction(7, 4)),
}

# Upper triangle of the table of possible moduli, rows h1..h7, columns h2..h8.
TABLE2_M: Dict[Tuple[int, int], int] = {
    (1, 2): 1, (1, 3): 2, (1, 4): 3, (1, 5): 6, (1, 6): 4, (1, 7): 5, (1, 8): 2,
    (2, 3): 1, (2, 4): 2, (2, 5): 7, (2, 6): 3, (2, 7): 4, (2, 8): 3,
    (3, 4): 1, (3, 5): 8, (3, 6): 2, (3, 7): 3, (3, 8): 4,
    (4, 5): 9, (4, 6): 1, (4, 7): 2, (4, 8): 5,
    (5, 6): 10, (5, 7): 11, (5, 8): 4,
    (6, 7): 1, (6, 8): 6,
    (7, 8): 7,
}

# Displayed genus-1 enumerators as weight -> number of codewords.
GENUS1_GOLDEN: Dict[str, Dict[int, int]] = {
    "d4": {0: 1, 4: 1},
    "d6": {0: 1, 4: 3},
    "e7": {0: 1, 4: 7},
    "d8": {0: 1, 4: 6, 8: 1},
    "e8": {0: 1, 4: 14, 8: 1},
    "d10": {0: 1, 4: 10, 8: 5},
    "d12": {0: 1, 4: 15, 8: 15, 12: 1},
    "d16": {0: 1, 4: 28, 8: 70, 12: 28, 16: 1},
    "d24": {0: 1, 4: 66, 8: 495, 12: 924, 16: 495, 20: 66, 24: 1},
    "C5": {0: 1, 4: 66, 8: 495, 12: 2972, 16: 495, 20: 66, 24: 1},
    "C7": {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1},
}


def _default_lagrange_triples() -> List[Tuple[int, int, int]]:
    triples = []
    for triple in combinations(range(1, 10), 3):
        if 8 in triple and 9 in triple:
            continue
        hs = {TABLE1[i].h for i in triple}
        if len(hs) == 3:
            triples.append(tuple(sorted(triple, key=lambda i: TABLE1[i].h)))
    return triples


LAGRANGE_THREE_POINT_TRIPLES: List[Tuple[int, int, int]] = _default_lagrange_triples()

VERIFY_SELECTORS = (
    "all", "thm1", "thm2", "prop1", "phi", "congruences", "lagrange", "genus3",
    "closed-forms", "length16", "basis", "database",
)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise PreconditionError(f"{name} must be an integer, got {raw!r}") from e
    if value < 1:
        raise PreconditionError(f"{name} must be positive, got {value}")
    return value


def load_settings() -> Settings:
    enumeration = EnumerationSettings(
        block_size=_env_int("TYPE2_BLOCK_SIZE", 1 << 16),
        jobs=_env_int("TYPE2_JOBS", 1),
    )
    data_path = os.environ.get("TYPE2_DATA_PATH")
    return Settings(
        data_path=Path(data_path) if data_path else EMBEDDED_DATA_PATH,
        cache_url=os.environ.get("TYPE2_CACHE_URL") or None,
        log_level=os.environ.get("TYPE2_LOG_LEVEL", "WARNING").upper(),
        enumeration=enumeration,
    )
