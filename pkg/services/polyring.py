"""Exact sparse polynomials in the 2^g variables x_a, a in F_2^g.

Variable x_a sits at index v(a) = a_1 + 2 a_2 + ... + 2^(g-1) a_g of every
exponent vector. Genus 0 is the one-variable ring in x, so that `phi` can be
applied all the way down.

Canonical text lists terms in graded-lex order (higher degree first, then
larger exponent of x at index 0, then index 1, ...). Genus 1 prints x and y,
higher genus prints x_<a_1...a_g>, e.g. "x_10" for index 1 of genus 2.
"""
import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from services.exceptions import PreconditionError, StructuralError

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def num_variables(genus: int) -> int:
    return 1 << genus


def variable_name(genus: int, index: int) -> str:
    if genus == 0:
        return "x"
    if genus == 1:
        return "xy"[index]
    bits = "".join(str(index >> k & 1) for k in range(genus))
    return f"x_{bits}"


def _latex_variable(genus: int, index: int) -> str:
    if genus <= 1:
        return variable_name(genus, index)
    bits = "".join(str(index >> k & 1) for k in range(genus))
    return f"x_{{{bits}}}"


def order_key(exponent: Exponent) -> Tuple:
    return (-sum(exponent), tuple(-e for e in exponent))


class MultiPoly:
    __slots__ = ("genus", "_terms", "_hash")

    def __init__(self, genus: int, terms: Optional[Mapping[Exponent, Scalar]] = None):
        if genus < 0:
            raise StructuralError(f"genus must be >= 0, got {genus}")
        self.genus = genus
        arity = num_variables(genus)
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != arity:
                raise StructuralError(
                    f"exponent vector {exponent} has length {len(exponent)}, genus {genus} needs {arity}"
                )
            if any(e < 0 for e in exponent):
                raise StructuralError(f"negative exponent in {exponent}")
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + coefficient
        self._terms = {e: c for e, c in cleaned.items() if c}
        self._hash = None

    @classmethod
    def zero(cls, genus: int) -> "MultiPoly":
        return cls(genus)

    @classmethod
    def constant(cls, genus: int, value: Scalar) -> "MultiPoly":
        return cls(genus, {(0,) * num_variables(genus): value})

    @classmethod
    def variable(cls, genus: int, index: int, power: int = 1) -> "MultiPoly":
        exponent = [0] * num_variables(genus)
        exponent[index] = power
        return cls(genus, {tuple(exponent): 1})

    @classmethod
    def genus1_from_weights(cls, n: int, distribution: Mapping[int, int]) -> "MultiPoly":
        return cls(1, {(n - w, w): c for w, c in distribution.items()})

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: order_key(item[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.genus == other.genus and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == MultiPoly.constant(self.genus, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.genus, frozenset(self._terms.items())))
        return self._hash

    def _check_genus(self, other: "MultiPoly"):
        if other.genus != self.genus:
            raise StructuralError(f"genus mismatch: {self.genus} vs {other.genus}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_genus(other)
            return other
        if isinstance(other, (int, Rational)):
            return MultiPoly.constant(self.genus, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.genus, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.genus, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Rational)):
            return scale(other, self)
        other = self._coerce(other)
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.genus, terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "MultiPoly":
        return scale(Fraction(1) / Fraction(other), self)

    def __pow__(self, power: int) -> "MultiPoly":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.genus, 1)
        for _ in range(power):
            result = result * self
        return result

    def degrees(self) -> set:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = self.degrees()
        if degree is None:
            return len(degrees) <= 1
        return degrees <= {degree}

    def coefficient_sum(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (exponent, coefficient) in enumerate(self.items()):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            factors = [
                variable_name(self.genus, v) + (f"^{e}" if e > 1 else "")
                for v, e in enumerate(exponent) if e
            ]
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (exponent, coefficient) in enumerate(self.items()):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            monomial = "".join(
                _latex_variable(self.genus, v) + (f"^{{{e}}}" if e > 1 else "")
                for v, e in enumerate(exponent) if e
            )
            if magnitude.denominator != 1:
                head = f"\\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}"
            elif magnitude != 1 or not monomial:
                head = str(magnitude.numerator)
            else:
                head = ""
            body = head + monomial
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign}{body}")
        return "".join(parts)

    def to_json(self) -> Dict:
        return {
            "genus": self.genus,
            "terms": {",".join(map(str, e)): str(c) for e, c in self.items()},
        }

    @classmethod
    def parse(cls, text: str, genus: int) -> "MultiPoly":
        """Inverse of `to_text`."""
        names = {variable_name(genus, v): v for v in range(num_variables(genus))}
        text = text.strip()
        if text == "0":
            return cls.zero(genus)
        terms: Dict[Exponent, Fraction] = {}
        for sign, body in _split_terms(text):
            coefficient = Fraction(sign)
            exponent = [0] * num_variables(genus)
            for factor in body.split("*"):
                if _NUMBER.fullmatch(factor):
                    coefficient *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in names:
                    raise StructuralError(f"unknown variable {name!r} for genus {genus}")
                exponent[names[name]] += int(power) if power else 1
            key = tuple(exponent)
            terms[key] = terms.get(key, 0) + coefficient
        return cls(genus, terms)

    def __repr__(self) -> str:
        return f"MultiPoly(genus={self.genus}, {self.to_text()})"


_NUMBER = re.compile(r"\d+(/\d+)?")


def _split_terms(text: str) -> Iterable[Tuple[int, str]]:
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    chunks = re.split(r" ([+-]) ", text)
    yield sign, chunks[0]
    for op, body in zip(chunks[1::2], chunks[2::2]):
        yield (1 if op == "+" else -1), body


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def negate(p: MultiPoly) -> MultiPoly:
    return -p


def scale(c: Scalar, p: MultiPoly) -> MultiPoly:
    c = Fraction(c)
    return MultiPoly(p.genus, {e: c * v for e, v in p._terms.items()})


def linear_combination(coefficients: Sequence[Scalar], polys: Sequence[MultiPoly]) -> MultiPoly:
    if len(coefficients) != len(polys) or not polys:
        raise StructuralError("linear_combination needs matching, non-empty sequences")
    result = MultiPoly.zero(polys[0].genus)
    for c, p in zip(coefficients, polys):
        result = result + scale(c, p)
    return result


def coefficient(p: MultiPoly, exponent: Sequence[int]) -> Fraction:
    exponent = tuple(exponent)
    if len(exponent) != num_variables(p.genus):
        raise StructuralError(
            f"exponent vector of length {len(exponent)} for genus {p.genus} polynomial"
        )
    return p._terms.get(exponent, Fraction(0))


def is_integral(p: MultiPoly) -> bool:
    return all(c.denominator == 1 for c in p._terms.values())


def _require_integral(p: MultiPoly, what: str):
    if not is_integral(p):
        raise PreconditionError(f"{what} requires an integral polynomial")


def congruent_mod(p: MultiPoly, q: MultiPoly, modulus: int) -> bool:
    if modulus <= 0:
        raise PreconditionError(f"modulus must be positive, got {modulus}")
    _require_integral(p, "congruent_mod")
    _require_integral(q, "congruent_mod")
    return all(c.numerator % modulus == 0 for c in (p - q)._terms.values())


def has_unit_coefficient(p: MultiPoly) -> bool:
    _require_integral(p, "has_unit_coefficient")
    return any(abs(c) == 1 for c in p._terms.values())


def phi(p: MultiPoly) -> MultiPoly:
    """Lower the genus: x_(a',0) -> x_a', x_(a',1) -> 0."""
    if p.genus < 1:
        raise StructuralError("phi needs genus >= 1")
    half = num_variables(p.genus - 1)
    terms = {e[:half]: c for e, c in p._terms.items() if not any(e[half:])}
    return MultiPoly(p.genus - 1, terms)


def first_difference(expected: MultiPoly, actual: MultiPoly) -> Optional[Tuple[Exponent, Fraction, Fraction]]:
    """First exponent, in graded-lex order, where the two polynomials differ."""
    expected._check_genus(actual)
    exponents = set(expected._terms) | set(actual._terms)
    for exponent in sorted(exponents, key=order_key):
        e, a = coefficient(expected, exponent), coefficient(actual, exponent)
        if e != a:
            return exponent, e, a
    return None
