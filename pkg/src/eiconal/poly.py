"""Sparse exact multivariate polynomials over Q(sqrt2, sqrt3).

A polynomial knows its variable count n (1 <= n <= 64) and stores a map from
exponent tuples to nonzero Scalar coefficients.  Identity testing is exact:
two polynomials are equal iff their term maps are equal.  Serialization sorts
terms in graded lexicographic order (total degree first, then the exponent
tuple), so emitted JSON is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .matrix import ScalarMatrix
from .scalar import ONE, ZERO, Scalar

MAX_VARS = 64

Exponent = tuple[int, ...]
CoefLike = Union[Scalar, int, Fraction]


def _grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


class Polynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, Scalar] | None = None) -> None:
        if not (1 <= n <= MAX_VARS):
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {n}")
        self.n = n
        clean: dict[Exponent, Scalar] = {}
        if terms:
            for exp, coef in terms.items():
                if len(exp) != n:
                    raise ValueError("exponent length disagrees with variable count")
                if not coef.is_zero():
                    clean[exp] = coef
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: CoefLike) -> Polynomial:
        return cls(n, {(0,) * n: Scalar.coerce(value)})

    @classmethod
    def variable(cls, n: int, index: int) -> Polynomial:
        """The monomial x_{index+1}; index is 0-based."""
        if not (0 <= index < n):
            raise ValueError(f"variable index {index} out of range for n={n}")
        exp = [0] * n
        exp[index] = 1
        return cls(n, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, n: int, exp: Sequence[int], coef: CoefLike = 1) -> Polynomial:
        return cls(n, {tuple(exp): Scalar.coerce(coef)})

    # -- predicates / shape ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is reported as -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def _check_same_vars(self, other: Polynomial) -> None:
        if self.n != other.n:
            raise ValueError(
                f"variable count mismatch: {self.n} vs {other.n}"
            )

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: Union[Polynomial, CoefLike]) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        self._check_same_vars(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            cur = out.get(exp)
            if cur is None:
                out[exp] = coef
            else:
                s = cur + coef
                if s.is_zero():
                    del out[exp]
                else:
                    out[exp] = s
        result = Polynomial.__new__(Polynomial)
        result.n = self.n
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        result = Polynomial.__new__(Polynomial)
        result.n = self.n
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other: Union[Polynomial, CoefLike]) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other: CoefLike) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Union[Polynomial, CoefLike]) -> Polynomial:
        if not isinstance(other, Polynomial):
            s = Scalar.coerce(other)
            if s.is_zero():
                return Polynomial.zero(self.n)
            result = Polynomial.__new__(Polynomial)
            result.n = self.n
            result.terms = {e: c * s for e, c in self.terms.items()}
            return result
        self._check_same_vars(other)
        out: dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = out.get(exp)
                if cur is None:
                    out[exp] = prod
                else:
                    s = cur + prod
                    if s.is_zero():
                        del out[exp]
                    else:
                        out[exp] = s
        result = Polynomial.__new__(Polynomial)
        result.n = self.n
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> Polynomial:
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = Polynomial.constant(self.n, 1)
        base = self
        k = exp
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- calculus -----------------------------------------------------------------

    def derivative(self, index: int) -> Polynomial:
        if not (0 <= index < self.n):
            raise ValueError(f"variable index {index} out of range for n={self.n}")
        out: dict[Exponent, Scalar] = {}
        for exp, coef in self.terms.items():
            k = exp[index]
            if k == 0:
                continue
            new = list(exp)
            new[index] = k - 1
            out[tuple(new)] = coef * k
        result = Polynomial.__new__(Polynomial)
        result.n = self.n
        result.terms = out
        return result

    def gradient(self) -> list[Polynomial]:
        return [self.derivative(i) for i in range(self.n)]

    def grad_inner(self, other: Polynomial) -> Polynomial:
        """Sum over i of (df/dx_i)(dg/dx_i), exactly."""
        self._check_same_vars(other)
        acc = Polynomial.zero(self.n)
        for i in range(self.n):
            acc = acc + self.derivative(i) * other.derivative(i)
        return acc

    def laplacian(self) -> Polynomial:
        acc = Polynomial.zero(self.n)
        for i in range(self.n):
            acc = acc + self.derivative(i).derivative(i)
        return acc

    # -- substitution ----------------------------------------------------------------

    def substitute_linear(self, m: ScalarMatrix) -> Polynomial:
        """Expand f(Mx) exactly: variable x_i is replaced by sum_j M[i][j] x_j."""
        if m.rows != self.n or m.cols != self.n:
            raise ValueError(
                f"substitution matrix must be {self.n}x{self.n}, got {m.rows}x{m.cols}"
            )
        forms = []
        for i in range(self.n):
            terms: dict[Exponent, Scalar] = {}
            for j in range(self.n):
                coef = m.entries[i][j]
                if not coef.is_zero():
                    exp = [0] * self.n
                    exp[j] = 1
                    terms[tuple(exp)] = coef
            forms.append(Polynomial(self.n, terms))
        powers: dict[tuple[int, int], Polynomial] = {}

        def form_power(i: int, k: int) -> Polynomial:
            key = (i, k)
            cached = powers.get(key)
            if cached is None:
                cached = forms[i] ** k
                powers[key] = cached
            return cached

        acc = Polynomial.zero(self.n)
        for exp, coef in self.terms.items():
            piece = Polynomial.constant(self.n, coef)
            for i, k in enumerate(exp):
                if k:
                    piece = piece * form_power(i, k)
            acc = acc + piece
        return acc

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        if len(point) != self.n:
            raise ValueError("evaluation point has wrong length")
        acc = ZERO
        for exp, coef in self.terms.items():
            val = coef
            for x, k in zip(point, exp):
                for _ in range(k):
                    val = val * x
            acc = acc + val
        return acc

    # -- serialization -----------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exp": list(exp), "coef": coef.to_json()}
                for exp, coef in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        n = data["n"]
        terms: dict[Exponent, Scalar] = {}
        for item in data["terms"]:
            exp = tuple(item["exp"])
            if exp in terms:
                raise ValueError("duplicate exponent in polynomial JSON")
            terms[exp] = Scalar.from_json(item["coef"])
        return cls(n, terms)

    # -- rendering ------------------------------------------------------------------------

    @staticmethod
    def _monomial_str(exp: Exponent) -> str:
        parts = []
        for i, k in enumerate(exp):
            if k == 1:
                parts.append(f"x{i + 1}")
            elif k > 1:
                parts.append(f"x{i + 1}^{k}")
        return " ".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coef in self.sorted_terms():
            mono = self._monomial_str(exp)
            cs = str(coef)
            compound = (" + " in cs) or (" - " in cs)
            if not mono:
                text = f"({cs})" if compound else cs
            elif compound:
                text = f"({cs}) {mono}"
            elif cs == "1":
                text = mono
            elif cs == "-1":
                text = f"-{mono}"
            else:
                text = f"{cs} {mono}"
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, terms={len(self.terms)})"


def norm_sq_poly(n: int) -> Polynomial:
    """The squared Euclidean norm x_1^2 + ... + x_n^2."""
    if n < 1:
        raise ValueError("need at least one variable")
    terms: dict[Exponent, Scalar] = {}
    for i in range(n):
        exp = [0] * n
        exp[i] = 2
        terms[tuple(exp)] = ONE
    return Polynomial(n, terms)
