"""The nine Type II [24, 12] codes: loading, reconstruction and validation.

Each record can be built two ways: from the generator matrix embedded in the
code data file, or by gluing its component subcode back up to a self-dual
doubly-even code with `glue_search`. Components occupy consecutive coordinate
blocks in the order they are named.
"""
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import EMBEDDED_DATA_PATH, TABLE1, CodeSpec
from services.enumerator import weight_enumerator
from services.exceptions import (
    BudgetExceededError,
    ClassificationViolationError,
    ComponentParseError,
    DataFormatError,
    PreconditionError,
    RecordValidationError,
    StructuralError,
    WrongComponentError,
)
from services.gf2core import (
    BinaryCode,
    alternating_word,
    build_d,
    build_e7,
    build_e8,
    build_golay,
    codeword_array,
    direct_sum_all,
    dual_code,
    is_doubly_even,
    is_self_dual,
    is_self_orthogonal,
)
from services.polyring import coefficient

logger = logging.getLogger(__name__)

CODE_LENGTH = 24
MAX_COSET_BITS = 20

_COMPONENT = re.compile(r"(d(\d+)|e7|e8|g24)(?:\^(\d+))?")


@dataclass(frozen=True)
class CodeRecord:
    index: int
    components: str
    h: Fraction
    code: BinaryCode

    @property
    def name(self) -> str:
        return f"C{self.index}"


@dataclass
class CodeDatabase:
    records: List[CodeRecord] = field(default_factory=list)

    def __post_init__(self):
        indices = sorted(r.index for r in self.records)
        if indices != list(range(1, 10)):
            raise PreconditionError(f"database must hold records 1..9 exactly once, got {indices}")
        self.records = sorted(self.records, key=lambda r: r.index)

    def __iter__(self) -> Iterator[CodeRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def record(self, index: int) -> CodeRecord:
        if not 1 <= index <= 9:
            raise PreconditionError(f"no record {index}; records are 1..9")
        return self.records[index - 1]

    def code(self, index: int) -> BinaryCode:
        return self.record(index).code

    def h(self, index: int) -> Fraction:
        return self.record(index).h


def compute_h(code: BinaryCode) -> Fraction:
    """Coefficient of x^(n-4) y^4 in the genus-1 enumerator, divided by n."""
    if code.n < 4:
        raise PreconditionError(f"h needs length >= 4, got {code.n}")
    w1 = weight_enumerator(code, 1)
    return Fraction(coefficient(w1, (code.n - 4, 4))) / code.n


def _component_code(token: str) -> BinaryCode:
    if token == "e7":
        return build_e7()
    if token == "e8":
        return build_e8()
    if token == "g24":
        return build_golay()
    return build_d(int(token[1:]))


def parse_components(components: str) -> List[str]:
    """'d10 e7^2' -> ['d10', 'e7', 'e7']."""
    tokens = []
    for part in components.split():
        match = _COMPONENT.fullmatch(part)
        if not match:
            raise ComponentParseError(f"bad component {part!r} in {components!r}")
        n = match.group(2)
        if n is not None and (int(n) % 2 or int(n) < 4):
            raise ComponentParseError(f"d_n needs n even and >= 4, got {part!r}")
        count = int(match.group(3) or 1)
        if count < 1:
            raise ComponentParseError(f"multiplicity must be positive in {part!r}")
        tokens.extend([match.group(1)] * count)
    if not tokens:
        raise ComponentParseError("empty component string")
    return tokens


def component_parts(components: str) -> List[BinaryCode]:
    return [_component_code(t) for t in parse_components(components)]


def component_subcode(components: str, length: Optional[int] = CODE_LENGTH) -> BinaryCode:
    """Direct sum of the named components in the declared order."""
    try:
        code = direct_sum_all(component_parts(components))
    except StructuralError as e:
        raise ComponentParseError(f"components {components!r} do not fit: {e}") from e
    if length is not None and code.n != length:
        raise ComponentParseError(f"components {components!r} have total length {code.n}, expected {length}")
    return code


def _coset_representatives(code: BinaryCode) -> List[int]:
    """Canonical nonzero representatives of code^perp / code, sorted by string."""
    complement: List[int] = []
    span = code
    for g in dual_code(code).generators:
        r = span.reduce(g)
        if r:
            complement.append(r)
            span = span.extend(r)
    if len(complement) > MAX_COSET_BITS:
        raise BudgetExceededError(
            f"{2 ** len(complement)} cosets to scan; glue search is limited to 2^{MAX_COSET_BITS}",
            limit=MAX_COSET_BITS,
        )
    reps = set()
    for mask in range(1, 1 << len(complement)):
        word = 0
        for j, c in enumerate(complement):
            if mask >> j & 1:
                word ^= c
        reps.add(code.reduce(word))
    return sorted(reps, key=lambda w: _to_string(w, code.n))


def _to_string(word: int, n: int) -> str:
    return "".join("1" if word >> j & 1 else "0" for j in range(n))


def _weight4_count(code: BinaryCode) -> int:
    return int(np.count_nonzero(np.bitwise_count(codeword_array(code)) == 4))


def glue_search(
    subcode: BinaryCode,
    expected_weight4: Optional[int] = None,
    preferred: Sequence[int] = (),
) -> BinaryCode:
    """Extend a doubly-even self-orthogonal code to a self-dual doubly-even one.

    Glue vectors are chosen from coset representatives of the subcode in its
    dual, `preferred` ones first and the rest in lexicographic order. A coset
    holding a weight-4 word is never used, so every weight-4 word of the result
    lies in the subcode. If `expected_weight4` is given, a solution with a
    different weight-4 count is rejected and the search continues.
    """
    if not is_doubly_even(subcode) or not is_self_orthogonal(subcode):
        raise PreconditionError("glue search needs a doubly-even self-orthogonal subcode")
    n = subcode.n
    if n % 8:
        raise PreconditionError(f"no Type II code of length {n}; need n = 0 mod 8")
    target = n // 2
    if subcode.k > target:
        raise PreconditionError(f"subcode dimension {subcode.k} exceeds {target}")
    if subcode.k == target:
        return subcode

    words = codeword_array(subcode)

    def coset_has_weight4(v: int) -> bool:
        return bool(np.any(np.bitwise_count(words ^ np.uint64(v)) == 4))

    reps = _coset_representatives(subcode)
    dual = dual_code(subcode)
    preferred_reps = [subcode.reduce(p) for p in preferred if dual.contains(p)]
    ordered = [r for r in preferred_reps if r] + [r for r in reps if r not in preferred_reps]
    candidates = [
        r for r in ordered
        if r.bit_count() % 4 == 0 and not coset_has_weight4(r)
    ]
    logger.debug(f"glue search on [{n},{subcode.k}]: {len(reps)} cosets, {len(candidates)} candidates")

    rejected = 0

    def extend(start: int, code: BinaryCode, chosen: List[int], span: List[int]) -> Optional[BinaryCode]:
        nonlocal rejected
        if code.k == target:
            count = _weight4_count(code)
            if expected_weight4 is not None and count != expected_weight4:
                raise WrongComponentError(
                    f"glue solution has {count} weight-4 words, expected {expected_weight4}",
                    weight4_count=count,
                    expected=expected_weight4,
                )
            return code
        for pos in range(start, len(candidates)):
            v = candidates[pos]
            if any((v & c).bit_count() % 2 for c in chosen):
                continue
            if code.contains(v):
                continue
            if any(coset_has_weight4(v ^ s) for s in span):
                continue
            try:
                found = extend(pos + 1, code.extend(v), chosen + [v], span + [v ^ s for s in span])
            except WrongComponentError as e:
                rejected += 1
                logger.warning(f"Rejected glue branch: {e}")
                continue
            if found is not None:
                return found
        return None

    result = extend(0, subcode, [], [0])
    if result is None:
        raise ClassificationViolationError(
            f"no doubly-even self-dual overcode of the [{n},{subcode.k}] subcode"
            + (f" with {expected_weight4} weight-4 words" if expected_weight4 is not None else "")
        )
    logger.info(f"Glue search on [{n},{subcode.k}] found a solution after {rejected} rejected branches")
    return result


def reconstruct_record(spec: CodeSpec) -> BinaryCode:
    subcode = component_subcode(spec.components)
    return glue_search(
        subcode,
        expected_weight4=spec.weight4_count,
        preferred=(alternating_word(CODE_LENGTH),),
    )


def validate_record(record: CodeRecord) -> List[str]:
    """Invariant violations of a record, empty when it is sound."""
    code = record.code
    violations = []
    golden = TABLE1.get(record.index)
    if golden is None:
        return [f"index {record.index} outside 1..9"]
    if record.components != golden.components:
        violations.append(f"components {record.components!r} != {golden.components!r}")
    if record.h != golden.h:
        violations.append(f"header h {record.h} != {golden.h}")
    if code.n != CODE_LENGTH or code.k != CODE_LENGTH // 2:
        violations.append(f"code is [{code.n},{code.k}], expected [24,12]")
        return violations
    if not is_self_dual(code):
        violations.append("not self-dual")
    if not is_doubly_even(code):
        violations.append("not doubly even")
    h = compute_h(code)
    if h != record.h:
        violations.append(f"computed h {h} != {record.h}")
    try:
        subcode = component_subcode(record.components)
    except ComponentParseError as e:
        violations.append(str(e))
        return violations
    if not code.contains_code(subcode):
        violations.append(f"does not contain the {record.components} subcode")
    words = codeword_array(code)
    weight4 = words[np.bitwise_count(words) == 4]
    stray = [int(w) for w in weight4 if not subcode.contains(int(w))]
    if stray:
        violations.append(f"{len(stray)} weight-4 words outside the component subcode")
    return violations


def _parse_records(text: str) -> List[Tuple[int, str, Fraction, List[str], int]]:
    records = []
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if current is not None:
                records.append(current)
                current = None
            continue
        if line.startswith("code"):
            if current is not None:
                raise DataFormatError("header inside a record; records are blank-line separated", line=number)
            fields = line.split()
            if len(fields) < 4:
                raise DataFormatError(f"header needs 'code <i> <components> <h>': {line!r}", line=number)
            try:
                index = int(fields[1])
                h = Fraction(fields[-1])
            except (ValueError, ZeroDivisionError) as e:
                raise DataFormatError(f"bad header {line!r}: {e}", line=number) from e
            current = (index, " ".join(fields[2:-1]), h, [], number)
            continue
        if current is None:
            raise DataFormatError(f"matrix row outside a record: {line!r}", line=number)
        if len(line) != CODE_LENGTH or set(line) - {"0", "1"}:
            raise DataFormatError(f"row must be {CODE_LENGTH} characters from {{0,1}}: {line!r}", line=number)
        current[3].append(line)
    if current is not None:
        records.append(current)
    for index, _, _, rows, number in records:
        if len(rows) != CODE_LENGTH // 2:
            raise DataFormatError(f"record {index} has {len(rows)} rows, expected 12", line=number)
    return records


def load_database(source: Union[str, Path, None] = None, reconstruct: Sequence[int] = ()) -> CodeDatabase:
    """Read and validate the nine records.

    Records listed in `reconstruct` are rebuilt with `glue_search` from their
    components instead of taken from the embedded matrix.
    """
    path = Path(source) if source is not None else EMBEDDED_DATA_PATH
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataFormatError(f"cannot read code data file {path}: {e}") from e
    except UnicodeDecodeError as e:
        line = e.object[:e.start].count(b"\n") + 1
        raise DataFormatError(f"code data file {path} is not UTF-8: {e.reason}", line=line) from e

    records = []
    for index, components, h, rows, _ in _parse_records(text):
        if index in reconstruct:
            code = reconstruct_record(CodeSpec(index, components, h))
        else:
            code = BinaryCode.from_strings(rows)
        record = CodeRecord(index, components, h, code)
        violations = validate_record(record)
        if violations:
            logger.error(f"Record {index} ({components}) failed validation: {'; '.join(violations)}")
            raise RecordValidationError(index, violations)
        records.append(record)
    database = CodeDatabase(records)
    logger.info(f"Loaded {len(database)} Type II codes of length 24 from {path}")
    return database


def build_d16_plus() -> BinaryCode:
    """The [16, 8] Type II overcode of d16, found by gluing."""
    return glue_search(build_d(16), preferred=(alternating_word(16),))


@dataclass(frozen=True)
class NamedCode:
    name: str
    parts: Tuple[BinaryCode, ...]

    @property
    def code(self) -> BinaryCode:
        return direct_sum_all(self.parts)


def resolve_code(name: str, database: Optional[CodeDatabase] = None) -> NamedCode:
    """Look up a code by CLI name, keeping any direct-sum decomposition."""
    e8 = build_e8()
    fixed = {
        "e7": lambda: (build_e7(),),
        "e8": lambda: (e8,),
        "e8^2": lambda: (e8, e8),
        "golay": lambda: (build_golay(),),
        "g24": lambda: (build_golay(),),
        "d16plus": lambda: (build_d16_plus(),),
        "C8": lambda: (build_d16_plus(), e8),
        "C9": lambda: (e8, e8, e8),
    }
    if name in fixed:
        return NamedCode(name, fixed[name]())
    match = re.fullmatch(r"d(\d+)", name)
    if match:
        n = int(match.group(1))
        if n % 2 or not 4 <= n <= CODE_LENGTH:
            raise PreconditionError(f"d_n is available for even n in 4..24, got {name}")
        return NamedCode(name, (build_d(n),))
    match = re.fullmatch(r"C([1-9])", name)
    if match:
        database = database or get_code_database()
        return NamedCode(name, (database.code(int(match.group(1))),))
    raise PreconditionError(f"unknown code name {name!r}")


def type2_inventory(database: Optional[CodeDatabase] = None) -> Dict[str, Tuple[int, bool]]:
    """Every code the repo can build, as name -> (length, is Type II)."""
    database = database or get_code_database()
    codes = {f"d{n}": build_d(n) for n in range(4, CODE_LENGTH + 1, 2)}
    codes["d8plus"] = build_d(8).extend(alternating_word(8))
    codes["d16plus"] = build_d16_plus()
    codes["d24plus"] = glue_search(build_d(24), preferred=(alternating_word(24),))
    codes["e7"] = build_e7()
    codes["e8"] = build_e8()
    codes["e8^2"] = direct_sum_all([build_e8(), build_e8()])
    codes["g24"] = build_golay()
    for record in database:
        codes[record.name] = record.code
    return {
        name: (code.n, is_self_dual(code) and is_doubly_even(code))
        for name, code in codes.items()
    }


_code_databases: Dict[Path, CodeDatabase] = {}


def get_code_database(source: Union[str, Path, None] = None) -> CodeDatabase:
    path = Path(source) if source is not None else EMBEDDED_DATA_PATH
    if path not in _code_databases:
        _code_databases[path] = load_database(path)
    return _code_databases[path]
