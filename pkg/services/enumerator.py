"""Genus-g weight enumerators and the named polynomials built from them.

The hot loop works on codewords packed into uint64. For a tuple
(u_1, ..., u_g) the count n_a is popcount of the AND over k of u_k or its
complement, chosen by bit k-1 of v(a). The last `inner` words of the tuple
are vectorised as a numpy block; the leading words are iterated in Python and
may be split across worker processes. Each tuple's pattern counts are folded
into one int64 key in radix n + 1 (n_0 is implied by the others), and keys are
tallied with bincount or unique.
"""
import hashlib
import logging
import threading
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from config.settings import EnumerationSettings, Settings, load_settings
from models.database import EnumeratorStore
from services.exceptions import BudgetExceededError, PreconditionError, StructuralError, VerificationError
from services.gf2core import BinaryCode, build_d_plus, build_e8, build_golay, codeword_array, direct_sum_all
from services.polyring import MultiPoly, is_integral

logger = logging.getLogger(__name__)

DENSE_KEY_LIMIT = 1 << 22
KEY_LIMIT = 1 << 62


def _inner_width(num_words: int, genus: int, block_size: int) -> int:
    inner = 1
    while inner < genus and num_words ** (inner + 1) <= block_size:
        inner += 1
    return inner


def _tally(words: np.ndarray, n: int, genus: int, inner: int, first: Optional[Tuple[int, int]]) -> Dict[int, int]:
    full = (1 << n) - 1
    full_u64 = np.uint64(full)
    num_words = len(words)
    outer = genus - inner
    block = num_words ** inner

    grids = np.meshgrid(*([np.arange(num_words)] * inner), indexing="ij")
    inner_words = [words[g.ravel()] for g in grids]
    inner_masks = []
    for b in range(1 << inner):
        mask = np.full(block, full_u64, dtype=np.uint64)
        for k, w in enumerate(inner_words):
            mask &= w if b >> k & 1 else ~w & full_u64
        inner_masks.append(mask)

    radix = n + 1
    place = [radix ** (index - 1) for index in range(1, 1 << genus)]
    space = radix ** ((1 << genus) - 1)
    dense = space <= DENSE_KEY_LIMIT
    totals = np.zeros(space, dtype=np.int64) if dense else Counter()

    word_list = [int(w) for w in words]
    if outer == 0:
        outer_tuples = iter([()])
    else:
        start, stop = first
        outer_tuples = (
            (word_list[i],) + rest
            for i in range(start, stop)
            for rest in product(word_list, repeat=outer - 1)
        )

    for leading in outer_tuples:
        scalars = []
        for a in range(1 << outer):
            s = full
            for k, u in enumerate(leading):
                s &= u if a >> k & 1 else ~u & full
            scalars.append(np.uint64(s))
        keys = np.zeros(block, dtype=np.int64)
        for b in range(1 << inner):
            for a in range(1 << outer):
                index = a | b << outer
                if index == 0:
                    continue
                counts = np.bitwise_count(scalars[a] & inner_masks[b]).astype(np.int64)
                keys += counts * place[index - 1]
        if dense:
            totals += np.bincount(keys, minlength=space)
        else:
            uniq, counts = np.unique(keys, return_counts=True)
            totals.update(dict(zip(uniq.tolist(), counts.tolist())))

    if dense:
        nonzero = np.flatnonzero(totals)
        return dict(zip(nonzero.tolist(), totals[nonzero].tolist()))
    return dict(totals)


def _tally_job(args) -> Dict[int, int]:
    return _tally(*args)


def _decode(key: int, n: int, genus: int) -> Tuple[int, ...]:
    radix = n + 1
    counts = []
    for _ in range(1, 1 << genus):
        key, digit = divmod(key, radix)
        counts.append(digit)
    return (n - sum(counts),) + tuple(counts)


def count_patterns(code: BinaryCode, genus: int, settings: EnumerationSettings) -> Dict[Tuple[int, ...], int]:
    """Exponent vector -> number of g-tuples of codewords with those pattern counts."""
    if (code.n + 1) ** ((1 << genus) - 1) >= KEY_LIMIT:
        raise BudgetExceededError(
            f"pattern keys for n={code.n}, genus {genus} overflow 64-bit tallies",
            limit=settings.max_message_bits,
        )
    words = codeword_array(code, settings)
    inner = _inner_width(len(words), genus, settings.block_size)
    outer = genus - inner
    if outer == 0 or settings.jobs <= 1:
        first = None if outer == 0 else (0, len(words))
        merged = Counter(_tally(words, code.n, genus, inner, first))
    else:
        bounds = np.linspace(0, len(words), settings.jobs + 1).astype(int)
        jobs = [
            (words, code.n, genus, inner, (int(lo), int(hi)))
            for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo
        ]
        merged = Counter()
        with ProcessPoolExecutor(max_workers=settings.jobs) as pool:
            for partial in pool.map(_tally_job, jobs):
                merged.update(partial)
    return {_decode(key, code.n, genus): count for key, count in merged.items()}


def _code_digest(code: BinaryCode) -> str:
    return hashlib.sha256(code.key.encode()).hexdigest()


def check_enumerator(poly: MultiPoly, n: int, k: int, genus: int):
    """Raise if `poly` cannot be the genus-g enumerator of an [n, k] code."""
    problems = []
    if poly.genus != genus:
        problems.append(f"genus {poly.genus} != {genus}")
    if not poly.is_homogeneous(n):
        problems.append(f"not homogeneous of degree {n}")
    if poly.coefficient_sum() != 1 << (genus * k):
        problems.append(f"coefficient sum {poly.coefficient_sum()} != 2^{genus * k}")
    if any(c < 0 or c.denominator != 1 for c in poly.terms.values()):
        problems.append("coefficients are not non-negative integers")
    if problems:
        raise VerificationError(f"enumerator of [{n},{k}] code in genus {genus}: " + "; ".join(problems))


def base_codes() -> Dict[int, BinaryCode]:
    """The three codes whose genus-2 enumerators span length 24: records 9, 7, 5."""
    e8 = build_e8()
    return {
        9: direct_sum_all([e8, e8, e8]),
        7: build_golay(),
        5: build_d_plus(24),
    }


class EnumeratorService:

    def __init__(self, settings: Optional[Settings] = None, store: Optional[EnumeratorStore] = None):
        self.settings = settings or load_settings()
        self.store = store if store is not None else EnumeratorStore(self.settings.cache_url)
        self._cache: Dict[Tuple[str, int], MultiPoly] = {}
        self._lock = threading.RLock()
        self._named: Dict[str, MultiPoly] = {}
        self._key_locks: Dict[object, threading.RLock] = {}

    @property
    def enumeration(self) -> EnumerationSettings:
        return self.settings.enumeration

    def _key_lock(self, key) -> threading.RLock:
        with self._lock:
            return self._key_locks.setdefault(key, threading.RLock())

    def weight_enumerator(self, code: BinaryCode, genus: int) -> MultiPoly:
        if genus < 1:
            raise StructuralError(f"genus must be >= 1, got {genus}")
        limit = self.enumeration.max_message_bits
        if genus * code.k > limit:
            raise BudgetExceededError(
                f"genus {genus} over a code of dimension {code.k} needs 2^{genus * code.k} tuples, "
                f"over the 2^{limit} limit; use weight_enumerator_decomposed on a direct-sum decomposition",
                limit=limit,
            )
        cache_key = (code.key, genus)
        with self._key_lock(cache_key):
            cached = self._cache.get(cache_key)
            if cached is None:
                cached = self._compute(code, genus)
                with self._lock:
                    self._cache[cache_key] = cached
            return cached

    def _compute(self, code: BinaryCode, genus: int) -> MultiPoly:
        digest = _code_digest(code)
        stored = self.store.load(digest, genus)
        if stored is not None:
            poly = MultiPoly.parse(stored, genus)
            check_enumerator(poly, code.n, code.k, genus)
            logger.info(f"Loaded genus-{genus} enumerator of [{code.n},{code.k}] code from cache")
        else:
            started = time.perf_counter()
            counts = count_patterns(code, genus, self.enumeration)
            poly = MultiPoly(genus, counts)
            check_enumerator(poly, code.n, code.k, genus)
            elapsed_ms = (time.perf_counter() - started) * 1000
            logger.info(
                f"Enumerated genus-{genus} [{code.n},{code.k}] code: {len(poly)} terms in {elapsed_ms:.0f} ms"
            )
            self.store.save(digest, genus, code.n, code.k, poly.to_text(), len(poly), elapsed_ms)
        return poly

    def weight_enumerator_decomposed(self, parts: Sequence[BinaryCode], genus: int) -> MultiPoly:
        if not parts:
            raise PreconditionError("weight_enumerator_decomposed needs at least one part")
        result = MultiPoly.constant(genus, 1)
        for part in parts:
            result = result * self.weight_enumerator(part, genus)
        return result

    def _named_poly(self, name: str, build) -> MultiPoly:
        with self._key_lock(name):
            poly = self._named.get(name)
            if poly is None:
                poly = build()
                with self._lock:
                    self._named[name] = poly
            return poly

    def base_enumerators(self, genus: int = 2) -> Dict[int, MultiPoly]:
        return {i: self.weight_enumerator(code, genus) for i, code in base_codes().items()}

    def delta(self) -> MultiPoly:
        def build():
            x = MultiPoly.variable(1, 0)
            y = MultiPoly.variable(1, 1)
            return x ** 4 * y ** 4 * (x ** 4 - y ** 4) ** 4
        return self._named_poly("delta", build)

    def basis_X(self) -> MultiPoly:
        def build():
            w = self.base_enumerators(2)
            return (w[9] - w[7]) / 42
        return self._named_poly("X", build)

    def basis_Y(self) -> MultiPoly:
        def build():
            w = self.base_enumerators(2)
            return Fraction(-11, 7) * w[9] + Fraction(4, 7) * w[7] + w[5]
        return self._named_poly("Y", build)

    def x24(self) -> MultiPoly:
        def build():
            return _require_integral("X24", self.basis_X() - self.basis_Y() / 44)
        return self._named_poly("X24", build)

    def y24(self) -> MultiPoly:
        def build():
            return _require_integral("Y24", self.basis_Y() / (2 ** 4 * 3 * 11))
        return self._named_poly("Y24", build)

    def e8_cubed(self, genus: int = 2) -> MultiPoly:
        return self.weight_enumerator(build_e8(), genus) ** 3

    def x24_closed_form(self) -> MultiPoly:
        def build():
            w = self.base_enumerators(2)
            return (
                Fraction(5, 2 ** 2 * 3 * 7) * self.e8_cubed(2)
                - Fraction(1, 2 ** 2 * 11) * w[5]
                - Fraction(17, 2 * 3 * 7 * 11) * w[7]
            )
        return self._named_poly("X24-closed", build)

    def y24_closed_form(self) -> MultiPoly:
        def build():
            w = self.base_enumerators(2)
            return (
                Fraction(-1, 2 ** 4 * 3 * 7) * self.e8_cubed(2)
                + Fraction(1, 2 ** 4 * 3 * 11) * w[5]
                + Fraction(1, 2 ** 2 * 3 * 7 * 11) * w[7]
            )
        return self._named_poly("Y24-closed", build)


def _require_integral(name: str, poly: MultiPoly) -> MultiPoly:
    if not is_integral(poly):
        raise VerificationError(f"{name} is not integral; the base enumerators are inconsistent")
    return poly


_enumerator_service: Optional[EnumeratorService] = None


def get_enumerator_service() -> EnumeratorService:
    global _enumerator_service
    if _enumerator_service is None:
        _enumerator_service = EnumeratorService()
    return _enumerator_service


def configure_enumerator_service(settings: Settings) -> EnumeratorService:
    global _enumerator_service
    _enumerator_service = EnumeratorService(settings)
    return _enumerator_service


def weight_enumerator(code: BinaryCode, genus: int) -> MultiPoly:
    return get_enumerator_service().weight_enumerator(code, genus)


def weight_enumerator_decomposed(parts: Sequence[BinaryCode], genus: int) -> MultiPoly:
    return get_enumerator_service().weight_enumerator_decomposed(parts, genus)


def delta() -> MultiPoly:
    return get_enumerator_service().delta()


def basis_X() -> MultiPoly:
    return get_enumerator_service().basis_X()


def basis_Y() -> MultiPoly:
    return get_enumerator_service().basis_Y()


def x24() -> MultiPoly:
    return get_enumerator_service().x24()


def y24() -> MultiPoly:
    return get_enumerator_service().y24()


def x24_closed_form() -> MultiPoly:
    return get_enumerator_service().x24_closed_form()


def y24_closed_form() -> MultiPoly:
    return get_enumerator_service().y24_closed_form()
