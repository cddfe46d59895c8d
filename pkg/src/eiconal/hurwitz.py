"""Hurwitz-Radon function, Hurwitz matrix families, and their exact verifiers.

A family {A_1..A_r} of m x s matrices solves the Hurwitz matrix equations if

    A_i^T A_i = 1_s            for every i,
    A_i^T A_j + A_j^T A_i = 0  for every i != j,

which is equivalent to the bilinear composition identity
sum_k b_k(x, y)^2 = |x|^2 |y|^2.  Square families of maximal size rho(m) are
built from division-algebra left multiplications for m <= 8 and from
block/tensor doubling for m in {16, 32, 64}; every constructor re-verifies
its output exactly before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json

from .cdalgebra import mult_table
from .matrix import ScalarMatrix
from .poly import Polynomial
from .scalar import ONE, ZERO, Scalar, field_sqrt

_SUPPORTED_M = (1, 2, 4, 8, 16, 32, 64)


class FamilyVerificationError(ValueError):
    """A constructed family failed its own exact verification."""


class SplitError(ValueError):
    """The exact split could not be carried out inside Q(sqrt2, sqrt3)."""


def rho(m: int) -> int:
    """Hurwitz-Radon function: for m = 2^(4a+b) * odd with 0 <= b <= 3,
    returns 8a + 2^b."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"rho is defined for positive integers, got {m}")
    two_adic = 0
    while m % 2 == 0:
        m //= 2
        two_adic += 1
    a, b = divmod(two_adic, 4)
    return 8 * a + (1 << b)


def rho_symm(m: int) -> int:
    """Maximal size of a symmetric solution of the Hurwitz equations in
    m x m matrices: 1 + rho(m/2) for even m, and 1 for odd m (where rho of
    the non-integer m/2 counts as zero)."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"rho_symm is defined for positive integers, got {m}")
    if m % 2 == 1:
        return 1
    return 1 + rho(m // 2)


# -- verification ---------------------------------------------------------------


def hme_violations(matrices) -> list[str]:
    """Every violated Hurwitz matrix equation, as human-readable strings."""
    matrices = list(matrices)
    problems: list[str] = []
    if not matrices:
        return ["empty family"]
    s = matrices[0].cols
    m = matrices[0].rows
    for idx, a in enumerate(matrices, start=1):
        if (a.rows, a.cols) != (m, s):
            problems.append(f"A{idx} has shape {a.rows}x{a.cols}, expected {m}x{s}")
    if problems:
        return problems
    eye = ScalarMatrix.identity(s)
    for idx, a in enumerate(matrices, start=1):
        if a.transpose() @ a != eye:
            problems.append(f"A{idx}^T A{idx} != 1")
    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            anti = (
                matrices[i].transpose() @ matrices[j]
                + matrices[j].transpose() @ matrices[i]
            )
            if not anti.is_zero():
                problems.append(f"A{i + 1}^T A{j + 1} + A{j + 1}^T A{i + 1} != 0")
    return problems


def verify_hme(family_or_matrices) -> tuple[bool, list[str]]:
    """Exact check of the Hurwitz matrix equations.

    Accepts a HurwitzFamily or a plain list of matrices; returns (ok, report)
    where the report lists every violated equation.
    """
    if isinstance(family_or_matrices, HurwitzFamily):
        matrices = list(family_or_matrices.matrices)
    else:
        matrices = list(family_or_matrices)
    problems = hme_violations(matrices)
    return (not problems, problems)


@dataclass(frozen=True)
class HurwitzFamily:
    """Verified solution {A_i} of the Hurwitz matrix equations.

    Construction re-runs the exact verifier and refuses to produce an
    unverified family.
    """

    r: int
    s: int
    m: int
    matrices: tuple[ScalarMatrix, ...] = field(repr=False)
    symmetric: bool = False

    def __post_init__(self) -> None:
        if self.r != len(self.matrices):
            raise ValueError("r must equal the number of matrices")
        for a in self.matrices:
            if (a.rows, a.cols) != (self.m, self.s):
                raise ValueError(
                    f"family matrices must be {self.m}x{self.s}, got {a.rows}x{a.cols}"
                )
        if self.symmetric:
            if self.s != self.m:
                raise ValueError("symmetric families need square matrices")
            for idx, a in enumerate(self.matrices, start=1):
                if not a.is_symmetric():
                    raise ValueError(f"matrix A{idx} is not symmetric")
        problems = hme_violations(self.matrices)
        if problems:
            raise FamilyVerificationError("; ".join(problems))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "m": self.m,
            "symmetric": self.symmetric,
            "matrices": [a.grid_json() for a in self.matrices],
        }

    @classmethod
    def from_json(cls, data: dict) -> HurwitzFamily:
        matrices = tuple(ScalarMatrix.from_grid_json(g) for g in data["matrices"])
        return cls(
            r=data["r"],
            s=data["s"],
            m=data["m"],
            matrices=matrices,
            symmetric=bool(data["symmetric"]),
        )


# -- constructors ------------------------------------------------------------------


def _left_mult_matrix(dim: int, index: int) -> ScalarMatrix:
    """Matrix of left multiplication by basis element e_index of F_dim."""
    table = mult_table(dim)
    grid = [[ZERO] * dim for _ in range(dim)]
    for j in range(dim):
        k, sign = table[index][j]
        grid[k][j] = ONE if sign == 1 else -ONE
    return ScalarMatrix(grid)


def _complex_structures_16() -> list[ScalarMatrix]:
    """Eight anticommuting skew orthogonal complex structures on R^16.

    On pairs (x, y) of octonions the maps x, y -> (a y, -conj(a) x) for a
    running over the basis of F_8 anticommute and square to -1.
    """
    out = []
    zero = ScalarMatrix.zero(8, 8)
    for a in range(8):
        la = _left_mult_matrix(8, a)
        lconj = la if a == 0 else -la
        out.append(ScalarMatrix.from_blocks([[zero, la], [-lconj, zero]]))
    return out


def _complex_structures(m: int) -> list[ScalarMatrix]:
    """rho(m) - 1 anticommuting complex structures on R^m for supported m."""
    if m == 1:
        return []
    if m in (2, 4, 8):
        return [_left_mult_matrix(m, i) for i in range(1, m)]
    if m == 16:
        return _complex_structures_16()
    if m == 32:
        # double R^16: J tensor diag(1,-1) stays skew and anticommuting, and
        # 1 tensor [[0,-1],[1,0]] supplies one more structure
        refl = ScalarMatrix([[1, 0], [0, -1]])
        rot = ScalarMatrix([[0, -1], [1, 0]])
        out = [j.kron(refl) for j in _complex_structures_16()]
        out.append(ScalarMatrix.identity(16).kron(rot))
        return out
    if m == 64:
        # R^16 tensor R^4: the 16-dimensional structures extend by identity;
        # the volume element omega = J_1...J_8 is symmetric, squares to +1 and
        # anticommutes with each J_i, so omega tensor (quaternion structures)
        # adds three more
        j16 = _complex_structures_16()
        omega = j16[0]
        for j in j16[1:]:
            omega = omega @ j
        out = [j.kron(ScalarMatrix.identity(4)) for j in j16]
        out.extend(omega.kron(_left_mult_matrix(4, i)) for i in (1, 2, 3))
        return out
    raise ValueError(f"unsupported size m={m}; supported: {_SUPPORTED_M}")


def build_hr_family(m: int, r: int | None = None) -> HurwitzFamily:
    """An orthogonal family of size [r, m, m] with r <= rho(m).

    The first member is the identity; the rest are anticommuting complex
    structures.  Defaults to the maximal size rho(m).
    """
    if m not in _SUPPORTED_M:
        raise ValueError(f"unsupported size m={m}; supported: {_SUPPORTED_M}")
    bound = rho(m)
    if r is None:
        r = bound
    if not (1 <= r <= bound):
        raise ValueError(f"family size r={r} out of range 1..rho({m})={bound}")
    matrices = [ScalarMatrix.identity(m)] + _complex_structures(m)[: r - 1]
    return HurwitzFamily(r=r, s=m, m=m, matrices=tuple(matrices))


def build_symmetric_family(m: int, r: int | None = None) -> HurwitzFamily:
    """Symmetric family of size [r, m, m] with 2 <= r <= rho_symm(m).

    From an E-family of size [r-1, m/2, m/2] the symmetric members are
    [[0, E_i], [E_i^T, 0]] together with 1 oplus -1; all are trace free.
    """
    if not isinstance(m, int) or m < 2 or m % 2:
        raise ValueError(f"symmetric families need even m >= 2, got {m}")
    half = m // 2
    if half not in _SUPPORTED_M:
        raise ValueError(
            f"unsupported size m={m}: m/2 must be one of {_SUPPORTED_M}"
        )
    bound = rho_symm(m)
    if r is None:
        r = bound
    if not (2 <= r <= bound):
        raise ValueError(f"family size r={r} out of range 2..rho_symm({m})={bound}")
    e_family = build_hr_family(half, r - 1)
    zero = ScalarMatrix.zero(half, half)
    matrices = [
        ScalarMatrix.from_blocks([[zero, e], [e.transpose(), zero]])
        for e in e_family.matrices
    ]
    matrices.append(
        ScalarMatrix.identity(half).direct_sum(-ScalarMatrix.identity(half))
    )
    return HurwitzFamily(r=r, s=m, m=m, matrices=tuple(matrices), symmetric=True)


# -- the splitting reduction ----------------------------------------------------------


def _column_space_basis(p: ScalarMatrix) -> list[list[Scalar]]:
    """Greedy maximal independent subset of the columns, by exact elimination."""
    basis: list[list[Scalar]] = []
    echelon: list[tuple[int, list[Scalar]]] = []  # (pivot index, reduced vector)
    for j in range(p.cols):
        vec = [p.entries[i][j] for i in range(p.rows)]
        reduced = list(vec)
        for pivot, row in echelon:
            coef = reduced[pivot]
            if not coef.is_zero():
                reduced = [x - coef * y for x, y in zip(reduced, row)]
        pivot = next((i for i, x in enumerate(reduced) if not x.is_zero()), None)
        if pivot is None:
            continue
        inv = reduced[pivot].inverse()
        reduced = [x * inv for x in reduced]
        echelon.append((pivot, reduced))
        basis.append(vec)
    return basis


def _orthonormalize(basis: list[list[Scalar]]) -> list[list[Scalar]]:
    """Exact Gram-Schmidt; normalization needs square roots inside the field."""

    def dot(u, v):
        acc = ZERO
        for x, y in zip(u, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        return acc

    ortho: list[list[Scalar]] = []
    for vec in basis:
        cur = list(vec)
        for prev in ortho:
            coef = dot(cur, prev)
            if not coef.is_zero():
                cur = [x - coef * y for x, y in zip(cur, prev)]
        norm_sq = dot(cur, cur)
        root = field_sqrt(norm_sq)
        if root is None or root.is_zero():
            raise SplitError(
                "eigenvector norm has no square root in Q(sqrt2, sqrt3); "
                "the exact split is not representable for this family"
            )
        inv = root.inverse()
        ortho.append([x * inv for x in cur])
    return ortho


def split_symmetric_family(fam: HurwitzFamily) -> HurwitzFamily:
    """Reduce a symmetric family of size [r, m, m] to an E-family
    [r-1, m/2, m/2].

    One member (the one with the lexicographically smallest serialization,
    for determinism) is diagonalized exactly through its +-1 eigenprojectors
    (A +- 1)/2; the off-diagonal blocks of the remaining members in that
    eigenbasis form the E-family, which is re-verified before returning.
    """
    if not fam.symmetric:
        raise ValueError("split requires a symmetric family")
    if fam.r < 2:
        raise ValueError("split requires at least two members")
    m = fam.m

    keyed = sorted(
        range(fam.r), key=lambda i: json.dumps(fam.matrices[i].grid_json())
    )
    chosen = keyed[0]
    s_mat = fam.matrices[chosen]
    others = [fam.matrices[i] for i in range(fam.r) if i != chosen]

    eye = ScalarMatrix.identity(m)
    if s_mat == eye or s_mat == -eye:
        raise ValueError("degenerate member +-1 cannot appear in a valid family")

    half_scalar = Scalar(Fraction(1, 2))
    p_plus = (s_mat + eye).scale(half_scalar)
    p_minus = (eye - s_mat).scale(half_scalar)

    plus_basis = _orthonormalize(_column_space_basis(p_plus))
    minus_basis = _orthonormalize(_column_space_basis(p_minus))
    t = len(plus_basis)
    if t * 2 != m or len(minus_basis) != m - t:
        raise ValueError(
            f"eigenvalue split {t}/{m - t} is unbalanced; no valid reduction"
        )

    u = ScalarMatrix(
        [[col[i] for col in plus_basis + minus_basis] for i in range(m)]
    )
    e_matrices = []
    for a in others:
        b = u.transpose() @ a @ u
        if not (b.block(0, 0, t, t).is_zero() and b.block(t, t, t, t).is_zero()):
            raise FamilyVerificationError(
                "diagonal blocks did not vanish in the eigenbasis"
            )
        e_matrices.append(b.block(0, t, t, t))
    return HurwitzFamily(
        r=fam.r - 1, s=t, m=t, matrices=tuple(e_matrices), symmetric=False
    )


# -- composition formulas ------------------------------------------------------------------


def composition_from_family(fam: HurwitzFamily) -> bool:
    """Exact check of sum_k b_k(x, y)^2 = |x|^2 |y|^2 for the bilinear forms
    b_k(x, y) = sum_i x_i (A_i y)_k induced by the family."""
    r, s, m = fam.r, fam.s, fam.m
    n = r + s
    x_vars = [Polynomial.variable(n, i) for i in range(r)]
    y_vars = [Polynomial.variable(n, r + j) for j in range(s)]
    forms = []
    for k in range(m):
        b_k = Polynomial.zero(n)
        for i, a in enumerate(fam.matrices):
            row = a.entries[k]
            linear = Polynomial.zero(n)
            for j in range(s):
                if not row[j].is_zero():
                    linear = linear + row[j] * y_vars[j]
            if not linear.is_zero():
                b_k = b_k + x_vars[i] * linear
        forms.append(b_k)
    total = Polynomial.zero(n)
    for b_k in forms:
        total = total + b_k * b_k
    norm_x = Polynomial.zero(n)
    for v in x_vars:
        norm_x = norm_x + v * v
    norm_y = Polynomial.zero(n)
    for v in y_vars:
        norm_y = norm_y + v * v
    return total == norm_x * norm_y
