"""The Cayley-Dickson tower R, C, H, O with polynomial components.

Elements carry dim in {1, 2, 4, 8} polynomial components, so products such as
(X0 X1) X2 expand to exact polynomials.  Products are driven by structure
constant tables generated once per dimension from the doubling rule

    (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c)),

which keeps the norm multiplicative (|xy| = |x| |y|) in all four dimensions.
Other sign conventions exist; this one is frozen by the golden multiplication
table tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial

_DIMS = (1, 2, 4, 8)

# tables[dim][i][j] = (k, sign) meaning e_i e_j = sign * e_k
_TABLES: dict[int, tuple[tuple[tuple[int, int], ...], ...]] = {}


def _basis_mul(dim: int, i: int, j: int) -> tuple[int, int]:
    if dim == 1:
        return 0, 1
    h = dim // 2
    if i < h and j < h:
        return _basis_mul(h, i, j)
    if i < h:
        # (a, 0)(0, d) = (0, d a)
        k, s = _basis_mul(h, j - h, i)
        return h + k, s
    if j < h:
        # (0, b)(c, 0) = (0, b conj(c))
        k, s = _basis_mul(h, i - h, j)
        return h + k, s if j == 0 else -s
    # (0, b)(0, d) = (-conj(d) b, 0)
    k, s = _basis_mul(h, j - h, i - h)
    return k, -s if j - h == 0 else s


def mult_table(dim: int):
    """Structure constants of the dim-dimensional Cayley-Dickson algebra."""
    if dim not in _DIMS:
        raise ValueError(f"algebra dimension must be one of {_DIMS}, got {dim}")
    table = _TABLES.get(dim)
    if table is None:
        table = tuple(
            tuple(_basis_mul(dim, i, j) for j in range(dim)) for i in range(dim)
        )
        _TABLES[dim] = table
    return table


def table_json(dim: int) -> list[list[int]]:
    """Audit export: signed triples [i, j, k, sign] with e_i e_j = sign e_k."""
    table = mult_table(dim)
    return [
        [i, j, k, sign]
        for i, row in enumerate(table)
        for j, (k, sign) in enumerate(row)
    ]


@dataclass(frozen=True)
class AlgebraElement:
    """Element of F_dim whose components are exact polynomials in n variables."""

    dim: int
    components: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if self.dim not in _DIMS:
            raise ValueError(f"algebra dimension must be one of {_DIMS}")
        if len(self.components) != self.dim:
            raise ValueError("component count must equal the algebra dimension")
        n = self.components[0].n
        if any(p.n != n for p in self.components):
            raise ValueError("all components must share one variable count")

    @property
    def n(self) -> int:
        return self.components[0].n

    @classmethod
    def from_variables(cls, dim: int, n: int, start: int) -> AlgebraElement:
        """Element whose components are the variables x_{start+1}..x_{start+dim}."""
        return cls(
            dim, tuple(Polynomial.variable(n, start + i) for i in range(dim))
        )

    @classmethod
    def zero(cls, dim: int, n: int) -> AlgebraElement:
        return cls(dim, tuple(Polynomial.zero(n) for _ in range(dim)))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_compatible(other)
        return AlgebraElement(
            self.dim,
            tuple(p + q for p, q in zip(self.components, other.components)),
        )

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.dim, tuple(-p for p in self.components))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def _check_compatible(self, other: AlgebraElement) -> None:
        if self.dim != other.dim:
            raise ValueError(f"algebra dimension mismatch: {self.dim} vs {other.dim}")
        if self.n != other.n:
            raise ValueError(
                f"variable count mismatch: {self.n} vs {other.n}"
            )


def cd_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Cayley-Dickson product, expanded to exact polynomial components."""
    x._check_compatible(y)
    table = mult_table(x.dim)
    n = x.n
    out = [Polynomial.zero(n) for _ in range(x.dim)]
    for i, xi in enumerate(x.components):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y.components):
            if yj.is_zero():
                continue
            k, sign = table[i][j]
            prod = xi * yj
            out[k] = out[k] + (prod if sign == 1 else -prod)
    return AlgebraElement(x.dim, tuple(out))


def conjugate(x: AlgebraElement) -> AlgebraElement:
    """First component unchanged, imaginary components negated."""
    return AlgebraElement(
        x.dim, (x.components[0],) + tuple(-p for p in x.components[1:])
    )


def real_part(x: AlgebraElement) -> Polynomial:
    return x.components[0]


def norm_poly(x: AlgebraElement) -> Polynomial:
    """Sum of squared components, equal to the real part of x * conj(x)."""
    acc = Polynomial.zero(x.n)
    for p in x.components:
        acc = acc + p * p
    return acc


def verify_norm_composition(dim: int) -> bool:
    """Symbolic check that |XY|^2 = |X|^2 |Y|^2 over 2*dim fresh variables."""
    if dim not in _DIMS:
        raise ValueError(f"algebra dimension must be one of {_DIMS}, got {dim}")
    n = 2 * dim
    x = AlgebraElement.from_variables(dim, n, 0)
    y = AlgebraElement.from_variables(dim, n, dim)
    residual = norm_poly(cd_mul(x, y)) - norm_poly(x) * norm_poly(y)
    return residual.is_zero()
