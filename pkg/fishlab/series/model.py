"""Exact truncated power series in ``x``, ``y`` and ``z``.

A series stores integer coefficients of monomials ``x^a y^b z^c`` whose
graded degree ``wx*a + wy*b + wz*c`` is at most ``max_degree``. The grading
``(wx, wy, wz)`` is part of the value: the total grading ``(1, 1, 1)`` and
the x-grading ``(1, 0, 0)`` are the two in use. Under the x-grading every
coefficient of ``x^a`` is a complete polynomial in ``y`` and ``z``.

Truncation is sound for ring operations and for substituting a series of
graded valuation at least the weight of the replaced variable, because
neither can lower the degree of a term.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping

from pydantic import BaseModel

from fishlab.base.exceptions import SeriesError

logger = logging.getLogger(__name__)

Exponents = tuple[int, int, int]
Grading = tuple[int, int, int]

VARIABLES = ("x", "y", "z")
TOTAL_GRADING: Grading = (1, 1, 1)
X_GRADING: Grading = (1, 0, 0)


class NonUnitConstantTerm(SeriesError):
    """The degree-0 part of a series to invert is not 1 or -1."""

    pass


class NonzeroConstantTerm(SeriesError):
    """A substituted series has a nonzero constant term."""

    pass


class IncompatibleSeries(SeriesError):
    """Operands differ in truncation degree or grading."""

    pass


class SeriesDocument(BaseModel):
    """JSON form of a series; term keys are ``"a,b,c"``."""

    max_degree: int
    weights: list[int]
    terms: dict[str, int]


def _variable_index(name: str) -> int:
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise SeriesError(
            f"Unknown variable '{name}', expected one of {VARIABLES}."
        ) from None


class TruncatedSeries:
    """An immutable integer series truncated above a graded degree."""

    __slots__ = ("_terms", "max_degree", "weights")

    def __init__(
        self,
        terms: Mapping[Exponents, int] | None = None,
        max_degree: int = 0,
        weights: Grading = TOTAL_GRADING,
    ) -> None:
        if max_degree < 0:
            raise SeriesError(f"Negative truncation degree {max_degree}.")
        if len(weights) != 3 or any(w < 0 for w in weights):
            raise SeriesError(f"Invalid grading {weights}.")
        self.max_degree = max_degree
        self.weights = tuple(weights)
        self._terms = {
            e: c
            for e, c in (terms or {}).items()
            if c and self.degree_of(e) <= max_degree
        }

    # -- construction ---------------------------------------------------

    @classmethod
    def constant(
        cls, value: int, max_degree: int, weights: Grading = TOTAL_GRADING
    ) -> TruncatedSeries:
        return cls({(0, 0, 0): value}, max_degree, weights)

    @classmethod
    def variable(
        cls, name: str, max_degree: int, weights: Grading = TOTAL_GRADING
    ) -> TruncatedSeries:
        index = _variable_index(name)
        exps: Exponents = (
            int(index == 0),
            int(index == 1),
            int(index == 2),
        )
        return cls({exps: 1}, max_degree, weights)

    def _like(self, terms: Mapping[Exponents, int]) -> TruncatedSeries:
        return TruncatedSeries(terms, self.max_degree, self.weights)

    def _coerce(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return self._like({(0, 0, 0): other})
        if (
            other.max_degree != self.max_degree
            or other.weights != self.weights
        ):
            raise IncompatibleSeries(
                f"Cannot combine a series of degree {self.max_degree} with "
                f"grading {self.weights} and one of degree "
                f"{other.max_degree} with grading {other.weights}.",
                {
                    "degrees": [self.max_degree, other.max_degree],
                    "weights": [list(self.weights), list(other.weights)],
                },
            )
        return other

    # -- inspection -----------------------------------------------------

    def degree_of(self, e: Exponents) -> int:
        return sum(w * a for w, a in zip(self.weights, e))

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponents, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, e: Exponents) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int | None:
        """Smallest graded degree of a term, None for the zero series."""
        return min((self.degree_of(e) for e in self._terms), default=None)

    def x_valuation(self) -> int | None:
        return min((e[0] for e in self._terms), default=None)

    def degree_zero_part(self) -> dict[Exponents, int]:
        return {
            e: c for e, c in self._terms.items() if not self.degree_of(e)
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.max_degree == other.max_degree
            and self.weights == other.weights
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"TruncatedSeries({self._terms!r}, max_degree={self.max_degree}, "
            f"weights={self.weights})"
        )

    # -- ring operations ------------------------------------------------

    def __neg__(self) -> TruncatedSeries:
        return self._like({e: -c for e, c in self._terms.items()})

    def __add__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._like(terms)

    __radd__ = __add__

    def __sub__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> TruncatedSeries:
        return self._coerce(other) + (-self)

    def __mul__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        if isinstance(other, int):
            return self._like({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        limit = self.max_degree
        right = [(e, c, other.degree_of(e)) for e, c in other._terms.items()]
        terms: dict[Exponents, int] = {}
        for (a, b, c), u in self._terms.items():
            room = limit - self.degree_of((a, b, c))
            for (d, e, f), v, degree in right:
                if degree > room:
                    continue
                key = (a + d, b + e, c + f)
                terms[key] = terms.get(key, 0) + u * v
        return self._like(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if exponent < 0:
            return self.invert_unit() ** -exponent
        result = self._like({(0, 0, 0): 1})
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def invert_unit(self) -> TruncatedSeries:
        """Multiplicative inverse of a series with degree-0 part ``+-1``.

        Raises:
            NonUnitConstantTerm: If the degree-0 part is anything else.
        """
        head = self.degree_zero_part()
        c0 = head.get((0, 0, 0), 0)
        if set(head) != {(0, 0, 0)} or c0 not in (1, -1):
            raise NonUnitConstantTerm(
                f"Degree-0 part {sorted(head.items())} is not 1 or -1.",
                {"degree_zero_part": {str(e): c for e, c in head.items()}},
            )
        # 1/(c0 + r) = c0 * sum (-c0 r)^k and r has positive valuation
        step = -(self - c0) * c0
        result = self._like({(0, 0, 0): 1})
        power = result
        for _ in range(self.max_degree):
            power = power * step
            if power.is_zero():
                break
            result = result + power
        return result * c0

    def __truediv__(self, other: TruncatedSeries | int) -> TruncatedSeries:
        return self * self._coerce(other).invert_unit()

    def __rtruediv__(self, other: int) -> TruncatedSeries:
        return self._coerce(other) * self.invert_unit()

    # -- substitution ---------------------------------------------------

    def compose(self, **images: TruncatedSeries) -> TruncatedSeries:
        """Substitute series for variables simultaneously.

        Raises:
            NonzeroConstantTerm: If an image has a nonzero constant term.
            IncompatibleSeries: If an image has graded valuation below the
                weight of the variable it replaces, or a different grading.
        """
        sources: list[TruncatedSeries] = []
        for index, name in enumerate(VARIABLES):
            image = images.pop(name, None)
            if image is None:
                sources.append(
                    self.variable(name, self.max_degree, self.weights)
                )
                continue
            image = self._coerce(image)
            if image.coefficient((0, 0, 0)):
                raise NonzeroConstantTerm(
                    f"Image of {name} has constant term "
                    f"{image.coefficient((0, 0, 0))}.",
                    {"variable": name},
                )
            valuation = image.valuation()
            if valuation is not None and valuation < self.weights[index]:
                raise IncompatibleSeries(
                    f"Image of {name} has valuation {valuation} below the "
                    f"weight {self.weights[index]} of {name}.",
                    {"variable": name, "valuation": valuation},
                )
            sources.append(image)
        if images:
            raise SeriesError(f"Unknown variables {sorted(images)}.")

        powers: list[dict[int, TruncatedSeries]] = [{}, {}, {}]

        def power(index: int, exponent: int) -> TruncatedSeries:
            cached = powers[index].get(exponent)
            if cached is None:
                cached = sources[index] ** exponent
                powers[index][exponent] = cached
            return cached

        result = self._like({})
        for (a, b, c), coef in self._terms.items():
            result = result + power(0, a) * power(1, b) * power(2, c) * coef
        return result

    def substitute(
        self, name: str, image: TruncatedSeries
    ) -> TruncatedSeries:
        return self.compose(**{name: image})

    def substitute_y(self, image: TruncatedSeries) -> TruncatedSeries:
        return self.compose(y=image)

    def specialize(self, name: str, value: int) -> TruncatedSeries:
        """Set a weight-0 variable to an integer."""
        index = _variable_index(name)
        if self.weights[index]:
            raise IncompatibleSeries(
                f"Only weight-0 variables can be specialised; {name} has "
                f"weight {self.weights[index]}.",
                {"variable": name},
            )
        terms: dict[Exponents, int] = {}
        for e, c in self._terms.items():
            key = list(e)
            key[index] = 0
            target: Exponents = (key[0], key[1], key[2])
            terms[target] = terms.get(target, 0) + c * value ** e[index]
        return self._like(terms)

    def swap(self, first: str, second: str) -> TruncatedSeries:
        """Exchange two variables of equal weight."""
        i, j = _variable_index(first), _variable_index(second)
        if self.weights[i] != self.weights[j]:
            raise IncompatibleSeries(
                f"Cannot swap {first} and {second} of different weights."
            )
        terms = {}
        for e, c in self._terms.items():
            key = list(e)
            key[i], key[j] = key[j], key[i]
            terms[(key[0], key[1], key[2])] = c
        return self._like(terms)

    def truncate(self, max_degree: int) -> TruncatedSeries:
        if max_degree > self.max_degree:
            raise IncompatibleSeries(
                f"Cannot raise truncation degree from {self.max_degree} to "
                f"{max_degree}."
            )
        return TruncatedSeries(self._terms, max_degree, self.weights)

    # -- rendering ------------------------------------------------------

    def to_text(self) -> str:
        """One ``coef x^a y^b z^c`` line per term, monomials sorted."""
        return "".join(
            f"{c} x^{a} y^{b} z^{d}\n" for (a, b, d), c in self.items()
        )

    def to_document(self) -> SeriesDocument:
        return SeriesDocument(
            max_degree=self.max_degree,
            weights=list(self.weights),
            terms={f"{a},{b},{c}": v for (a, b, c), v in self.items()},
        )

    @classmethod
    def from_document(cls, doc: SeriesDocument) -> TruncatedSeries:
        terms: dict[Exponents, int] = {}
        for key, value in doc.terms.items():
            parts = [int(p) for p in key.split(",")]
            if len(parts) != 3:
                raise SeriesError(f"Malformed exponent key '{key}'.")
            terms[(parts[0], parts[1], parts[2])] = value
        if len(doc.weights) != 3:
            raise SeriesError(f"Malformed grading {doc.weights}.")
        weights: Grading = (doc.weights[0], doc.weights[1], doc.weights[2])
        return cls(terms, doc.max_degree, weights)


def pochhammer(
    a: TruncatedSeries, q: TruncatedSeries | int, n: int
) -> TruncatedSeries:
    """``(a; q)_n = (1 - a)(1 - a q) ... (1 - a q^(n-1))``."""
    result = a._like({(0, 0, 0): 1})
    factor = a
    for i in range(n):
        if i:
            factor = factor * q
        result = result * (1 - factor)
    return result
