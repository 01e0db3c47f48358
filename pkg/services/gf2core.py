"""Bit-packed linear algebra over GF(2) for binary linear codes.

A word of length n is stored as a Python int whose bit j holds coordinate
j + 1, so the string form "1100" (coordinate 1 first) is the int 0b0011.
Generator matrices are kept in reduced row-echelon form with pivots taken on
the leftmost coordinate, which makes the generator tuple a canonical key for
the row space.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import EnumerationSettings
from services.exceptions import BudgetExceededError, PreconditionError, StructuralError

logger = logging.getLogger(__name__)

MAX_LENGTH = 64


@dataclass(frozen=True)
class BitWord:
    bits: int
    length: int

    def __post_init__(self):
        if not 0 <= self.length <= MAX_LENGTH:
            raise StructuralError(f"word length {self.length} outside 0..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.length:
            raise StructuralError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_string(cls, text: str) -> "BitWord":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise StructuralError(f"not a binary word: {text!r}")
        bits = 0
        for j, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << j
        return cls(bits, len(text))

    @classmethod
    def zero(cls, length: int) -> "BitWord":
        return cls(0, length)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> j & 1 else "0" for j in range(self.length))

    def __getitem__(self, coordinate: int) -> int:
        if not 0 <= coordinate < self.length:
            raise StructuralError(f"coordinate {coordinate} out of range for length {self.length}")
        return self.bits >> coordinate & 1

    def _check_same_length(self, other: "BitWord"):
        if other.length != self.length:
            raise StructuralError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: "BitWord") -> "BitWord":
        self._check_same_length(other)
        return BitWord(self.bits ^ other.bits, self.length)

    def __and__(self, other: "BitWord") -> "BitWord":
        self._check_same_length(other)
        return BitWord(self.bits & other.bits, self.length)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "BitWord") -> int:
        self._check_same_length(other)
        return (self.bits & other.bits).bit_count() & 1

    def concat(self, other: "BitWord") -> "BitWord":
        return BitWord(self.bits | other.bits << self.length, self.length + other.length)


def _pivot(row: int) -> int:
    return (row & -row).bit_length() - 1


def _rref_ints(rows: Iterable[int]) -> List[int]:
    basis: List[Tuple[int, int]] = []
    for row in rows:
        for pivot, b in basis:
            if row >> pivot & 1:
                row ^= b
        if not row:
            continue
        pivot = _pivot(row)
        basis = [(p, b ^ row if b >> pivot & 1 else b) for p, b in basis]
        basis.append((pivot, row))
    basis.sort()
    return [b for _, b in basis]


def _reduce_int(word: int, basis: Sequence[int]) -> int:
    for b in basis:
        if word >> _pivot(b) & 1:
            word ^= b
    return word


@dataclass(frozen=True)
class BinaryCode:
    """Linear code of length n; generators are canonical RREF rows."""

    n: int
    generators: Tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_LENGTH:
            raise StructuralError(f"code length {self.n} outside 0..{MAX_LENGTH}")
        for row in self.generators:
            if row < 0 or row >> self.n:
                raise StructuralError(f"generator {row:#x} does not fit in length {self.n}")
        object.__setattr__(self, "generators", tuple(_rref_ints(self.generators)))

    @classmethod
    def from_words(cls, words: Sequence[BitWord], n: Optional[int] = None) -> "BinaryCode":
        basis, _ = rref(words)
        if n is None:
            if not words:
                raise StructuralError("length required for an empty generator list")
            n = words[0].length
        return cls(n, tuple(w.bits for w in basis))

    @classmethod
    def from_strings(cls, rows: Sequence[str], n: Optional[int] = None) -> "BinaryCode":
        return cls.from_words([BitWord.from_string(r) for r in rows], n)

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def rows(self) -> List[BitWord]:
        return [BitWord(g, self.n) for g in self.generators]

    @property
    def key(self) -> str:
        return f"{self.n}:" + ",".join(f"{g:x}" for g in self.generators)

    def to_strings(self) -> List[str]:
        return [str(r) for r in self.rows]

    def reduce(self, word: int) -> int:
        return _reduce_int(word, self.generators)

    def contains(self, word: Union[int, BitWord]) -> bool:
        bits = word.bits if isinstance(word, BitWord) else word
        return self.reduce(bits) == 0

    def contains_code(self, other: "BinaryCode") -> bool:
        return other.n == self.n and all(self.contains(g) for g in other.generators)

    def extend(self, word: int) -> "BinaryCode":
        return BinaryCode(self.n, self.generators + (word,))

    def __repr__(self) -> str:
        return f"BinaryCode(n={self.n}, k={self.k})"


def rref(rows: Sequence[BitWord]) -> Tuple[List[BitWord], int]:
    lengths = {r.length for r in rows}
    if len(lengths) > 1:
        raise StructuralError(f"rows of mixed lengths {sorted(lengths)}")
    if not rows:
        return [], 0
    n = rows[0].length
    basis = [BitWord(b, n) for b in _rref_ints(r.bits for r in rows)]
    return basis, len(basis)


def dual_code(code: BinaryCode) -> BinaryCode:
    pivots = {_pivot(g): g for g in code.generators}
    dual_rows = []
    for free in range(code.n):
        if free in pivots:
            continue
        vec = 1 << free
        for p, g in pivots.items():
            if g >> free & 1:
                vec |= 1 << p
        dual_rows.append(vec)
    return BinaryCode(code.n, tuple(dual_rows))


def is_self_orthogonal(code: BinaryCode) -> bool:
    gens = code.generators
    return all((a & b).bit_count() % 2 == 0 for i, a in enumerate(gens) for b in gens[i:])


def is_self_dual(code: BinaryCode) -> bool:
    return 2 * code.k == code.n and dual_code(code).generators == code.generators


def is_doubly_even(code: BinaryCode) -> bool:
    """Every codeword has weight divisible by 4.

    Equivalent to the generators having weight 0 mod 4 and meeting pairwise in
    an even number of coordinates, since wt(u + v) = wt(u) + wt(v) - 2|u & v|.
    """
    gens = code.generators
    if any(g.bit_count() % 4 for g in gens):
        return False
    return all((a & b).bit_count() % 2 == 0 for i, a in enumerate(gens) for b in gens[i + 1:])


def _check_budget(k: int, settings: EnumerationSettings):
    if k > settings.max_message_bits:
        raise BudgetExceededError(
            f"refusing to enumerate 2^{k} codewords: limit is k <= {settings.max_message_bits}",
            limit=settings.max_message_bits,
        )


def codewords(code: BinaryCode, settings: EnumerationSettings = EnumerationSettings()) -> Iterator[BitWord]:
    """Yield all 2^k codewords in reflected Gray-code order over the message bits.

    Word i is the sum of the generators selected by the set bits of i ^ (i >> 1);
    consecutive words differ by a single generator.
    """
    _check_budget(code.k, settings)
    word = 0
    yield BitWord(word, code.n)
    for i in range(1, 1 << code.k):
        word ^= code.generators[_pivot(i)]
        yield BitWord(word, code.n)


def codeword_array(code: BinaryCode, settings: EnumerationSettings = EnumerationSettings()) -> np.ndarray:
    """Codewords as a uint64 array, in the same order as `codewords`."""
    _check_budget(code.k, settings)
    words = np.zeros(1, dtype=np.uint64)
    for g in code.generators:
        words = np.concatenate([words, words[::-1] ^ np.uint64(g)])
    return words


def weight(word: BitWord) -> int:
    return word.weight


def weight_distribution(code: BinaryCode) -> Dict[int, int]:
    weights = np.bitwise_count(codeword_array(code))
    return {int(w): int(c) for w, c in sorted(Counter(weights.tolist()).items())}


def direct_sum(first: BinaryCode, second: BinaryCode) -> BinaryCode:
    n = first.n + second.n
    if n > MAX_LENGTH:
        raise StructuralError(f"direct sum length {n} exceeds {MAX_LENGTH}")
    shifted = tuple(g << first.n for g in second.generators)
    return BinaryCode(n, first.generators + shifted)


def direct_sum_all(codes: Sequence[BinaryCode]) -> BinaryCode:
    result = BinaryCode(0, ())
    for code in codes:
        result = direct_sum(result, code)
    return result


def pattern_counts(*words: BitWord) -> List[int]:
    """Column-pattern counts n_a of a tuple of words.

    Index v(a) = sum a_k 2^(k-1): the first word contributes the least
    significant bit.
    """
    if not words:
        raise StructuralError("pattern_counts needs at least one word")
    n = words[0].length
    if any(w.length != n for w in words):
        raise StructuralError("pattern_counts: words of different lengths")
    counts = [0] * (1 << len(words))
    for j in range(n):
        index = 0
        for k, w in enumerate(words):
            index |= (w.bits >> j & 1) << k
        counts[index] += 1
    return counts


def build_d(n: int) -> BinaryCode:
    """The [n, n/2 - 1] code whose rows are 1111 blocks shifted by two."""
    if n % 2 or n < 4:
        raise PreconditionError(f"d_n needs n even and >= 4, got {n}")
    return BinaryCode(n, tuple(0b1111 << (2 * i) for i in range(n // 2 - 1)))


def alternating_word(n: int) -> int:
    """1010...10 of length n."""
    return sum(1 << j for j in range(0, n, 2))


def build_d_plus(n: int) -> BinaryCode:
    """d_n extended by the alternating row; Type II when n = 0 mod 8."""
    if n % 8:
        raise PreconditionError(f"d_n^+ needs n = 0 mod 8, got {n}")
    return build_d(n).extend(alternating_word(n))


E7_ROWS = ("0111100", "0110011", "1101010")
E8_ROWS = ("11110000", "00111100", "00001111", "10101010")

# Right half of a systematic generator [I | B] of the extended Golay code.
GOLAY_PARITY_ROWS = (
    "110111000101",
    "101110001011",
    "011100010111",
    "111000101101",
    "110001011011",
    "100010110111",
    "000101101111",
    "001011011101",
    "010110111001",
    "101101110001",
    "011011100011",
    "111111111110",
)


def build_e7() -> BinaryCode:
    return BinaryCode.from_strings(E7_ROWS)


def build_e8() -> BinaryCode:
    return BinaryCode.from_strings(E8_ROWS)


def build_golay() -> BinaryCode:
    rows = []
    for i, parity in enumerate(GOLAY_PARITY_ROWS):
        identity = "".join("1" if j == i else "0" for j in range(12))
        rows.append(identity + parity)
    return BinaryCode.from_strings(rows)
