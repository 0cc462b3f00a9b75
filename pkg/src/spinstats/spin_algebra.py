"""Exact matrix representations of generalized angular-momentum operators.

The generators ``S_i = n L_i`` obey ``[S_i, S_j] = i n eps_ijk S_k`` for a
positive integer step parameter ``n``; ``n = 1`` is the familiar algebra,
``n = 2`` the two-state full-angle mode.  Everything here is exact: matrix
entries are :class:`~spinstats.exactnum.ComplexExact`, and every verification
returns a :class:`~spinstats.report.VerificationReport` value rather than
raising on failure.  hbar = 1 throughout.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactnum import ComplexExact, RadicalSum, sqrt_rational
from .labels import format_label
from .report import VerificationReport

__all__ = [
    "SpinSpace",
    "OperatorMatrix",
    "StateVector",
    "OperatorSet",
    "build_operators",
    "commutator",
    "anticommutator",
    "verify_lie_algebra",
    "verify_casimir",
    "verify_lowering_chain",
    "rotation",
    "check_independent_commute",
    "check_singlet_anticommute",
    "exclusivity_check",
    "ExclusivityResult",
    "pauli",
    "random_pauli_tensor",
]


@dataclass(frozen=True)
class SpinSpace:
    """A (2l+1)-dimensional representation; ``two_l`` stores 2l, ``n`` the step."""

    two_l: int
    n: int = 1

    def __post_init__(self) -> None:
        if self.two_l < 0:
            raise ValueError(f"two_l must be nonnegative, got {self.two_l}")
        if self.n < 1:
            raise ValueError(f"step parameter n must be positive, got {self.n}")

    @property
    def dim(self) -> int:
        return self.two_l + 1

    @property
    def s(self) -> Fraction:
        """Total generalized spin s = n*l."""
        return Fraction(self.n * self.two_l, 2)

    def two_m_values(self) -> list[int]:
        """Doubled magnetic labels in descending order, l down to -l."""
        return list(range(self.two_l, -self.two_l - 2, -2))


class OperatorMatrix:
    """Immutable square matrix of exact complex entries."""

    __slots__ = ("dim", "_rows")

    def __init__(self, rows: Sequence[Sequence[ComplexExact]]):
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise ValueError("matrix must be square")
        self.dim = dim
        self._rows = tuple(tuple(entry for entry in row) for row in rows)

    @classmethod
    def zeros(cls, dim: int) -> "OperatorMatrix":
        z = ComplexExact.zero()
        return cls([[z] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "OperatorMatrix":
        z, one = ComplexExact.zero(), ComplexExact.one()
        return cls([[one if i == j else z for j in range(dim)] for i in range(dim)])

    def entry(self, i: int, j: int) -> ComplexExact:
        return self._rows[i][j]

    def __getitem__(self, index: tuple[int, int]) -> ComplexExact:
        i, j = index
        return self._rows[i][j]

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        return OperatorMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        return OperatorMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> "OperatorMatrix":
        return OperatorMatrix([[-a for a in row] for row in self._rows])

    def __mul__(self, scalar) -> "OperatorMatrix":
        if not isinstance(scalar, (int, Fraction, RadicalSum, ComplexExact)):
            return NotImplemented
        return OperatorMatrix([[a * scalar for a in row] for row in self._rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        cols = list(zip(*other._rows))
        return OperatorMatrix(
            [
                [_dot(row, col) for col in cols]
                for row in self._rows
            ]
        )

    def dagger(self) -> "OperatorMatrix":
        return OperatorMatrix(
            [[self._rows[j][i].conjugate() for j in range(self.dim)] for i in range(self.dim)]
        )

    def kron(self, other: "OperatorMatrix") -> "OperatorMatrix":
        rows = []
        for ra in self._rows:
            for rb in other._rows:
                rows.append([a * b for a in ra for b in rb])
        return OperatorMatrix(rows)

    def apply(self, vec: "StateVector") -> "StateVector":
        if vec.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {vec.dim}")
        return StateVector([_dot(row, vec.components) for row in self._rows])

    @property
    def is_zero(self) -> bool:
        return all(a.is_zero for row in self._rows for a in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def first_difference(self, other: "OperatorMatrix") -> str | None:
        """Human-readable location of the first differing entry, or None."""
        self._check_dim(other)
        for i in range(self.dim):
            for j in range(self.dim):
                if self._rows[i][j] != other._rows[i][j]:
                    return f"entry ({i},{j}): got {self._rows[i][j]}, want {other._rows[i][j]}"
        return None

    def render(self) -> str:
        return "\n".join(" ".join(str(a) for a in row) for row in self._rows)

    def to_numpy(self) -> np.ndarray:
        return np.array([[a.to_complex() for a in row] for row in self._rows])

    def _check_dim(self, other: "OperatorMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __repr__(self) -> str:
        return f"OperatorMatrix(dim={self.dim})"


def _dot(row: Sequence[ComplexExact], col: Sequence[ComplexExact]) -> ComplexExact:
    acc = ComplexExact.zero()
    for a, b in zip(row, col):
        if not (a.is_zero or b.is_zero):
            acc = acc + a * b
    return acc


class StateVector:
    """Column vector of exact complex components."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[ComplexExact]):
        self.components = tuple(components)

    @classmethod
    def basis(cls, dim: int, index: int) -> "StateVector":
        comps = [ComplexExact.zero()] * dim
        comps[index] = ComplexExact.one()
        return cls(comps)

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def norm2(self) -> Fraction:
        total = RadicalSum.zero()
        for c in self.components:
            total = total + c.abs2()
        return total.as_fraction()

    def __mul__(self, scalar) -> "StateVector":
        return StateVector([c * scalar for c in self.components])

    __rmul__ = __mul__

    def __sub__(self, other: "StateVector") -> "StateVector":
        return StateVector([a - b for a, b in zip(self.components, other.components)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.components == other.components

    def __repr__(self) -> str:
        return f"StateVector([{', '.join(str(c) for c in self.components)}])"


@dataclass(frozen=True)
class OperatorSet:
    """The ladder, Cartesian and Casimir operators of one representation."""

    space: SpinSpace
    l_plus: OperatorMatrix
    l_minus: OperatorMatrix
    l_x: OperatorMatrix
    l_y: OperatorMatrix
    l_z: OperatorMatrix
    l_sq: OperatorMatrix
    s_plus: OperatorMatrix
    s_minus: OperatorMatrix
    s_x: OperatorMatrix
    s_y: OperatorMatrix
    s_z: OperatorMatrix
    s_sq: OperatorMatrix


def ladder_step(two_l: int, two_m: int, raising: bool) -> RadicalSum:
    """Exact step factor sqrt((l -+ m)(l +- m + 1)) for L+ / L-."""
    if raising:
        value = Fraction((two_l - two_m) * (two_l + two_m + 2), 4)
    else:
        value = Fraction((two_l + two_m) * (two_l - two_m + 2), 4)
    return sqrt_rational(value)


def build_operators(space: SpinSpace) -> OperatorSet:
    """Construct all operators of the representation, exactly.

    Basis order is m = l, l-1, ..., -l.  <l,m+1|L+|l,m> = sqrt((l-m)(l+m+1)),
    L_x = (L+ + L-)/2, L_y = (L+ - L-)/(2i), and each S operator is n times
    its L counterpart.
    """
    dim = space.dim
    two_ms = space.two_m_values()
    z = ComplexExact.zero()

    plus_rows = [[z] * dim for _ in range(dim)]
    minus_rows = [[z] * dim for _ in range(dim)]
    z_rows = [[z] * dim for _ in range(dim)]
    for col, two_m in enumerate(two_ms):
        z_rows[col][col] = ComplexExact(RadicalSum.from_rational(Fraction(two_m, 2)))
        if col > 0:
            plus_rows[col - 1][col] = ComplexExact(ladder_step(space.two_l, two_m, raising=True))
        if col < dim - 1:
            minus_rows[col + 1][col] = ComplexExact(ladder_step(space.two_l, two_m, raising=False))

    l_plus = OperatorMatrix(plus_rows)
    l_minus = OperatorMatrix(minus_rows)
    l_z = OperatorMatrix(z_rows)

    half = Fraction(1, 2)
    l_x = (l_plus + l_minus) * half
    # 1/(2i) = -i/2
    l_y = (l_plus - l_minus) * ComplexExact(0, -half)
    l_sq = l_x @ l_x + l_y @ l_y + l_z @ l_z

    n = space.n
    s_plus, s_minus = l_plus * n, l_minus * n
    s_x, s_y, s_z = l_x * n, l_y * n, l_z * n
    s_sq = s_x @ s_x + s_y @ s_y + s_z @ s_z

    return OperatorSet(
        space=space,
        l_plus=l_plus, l_minus=l_minus, l_x=l_x, l_y=l_y, l_z=l_z, l_sq=l_sq,
        s_plus=s_plus, s_minus=s_minus, s_x=s_x, s_y=s_y, s_z=s_z, s_sq=s_sq,
    )


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """AB - BA, exactly."""
    return a @ b - b @ a


def anticommutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """AB + BA, exactly."""
    return a @ b + b @ a


def verify_lie_algebra(space: SpinSpace) -> VerificationReport:
    """Check the three cyclic relations [S_i, S_j] = i n S_k exactly."""
    ops = build_operators(space)
    i_n = ComplexExact(0, space.n)
    report = VerificationReport()
    for name, a, b, c in (
        ("commutator-sx-sy", ops.s_x, ops.s_y, ops.s_z),
        ("commutator-sy-sz", ops.s_y, ops.s_z, ops.s_x),
        ("commutator-sz-sx", ops.s_z, ops.s_x, ops.s_y),
    ):
        expected = c * i_n
        diff = commutator(a, b).first_difference(expected)
        report.add(name, diff is None, diff)
    return report


def verify_casimir(space: SpinSpace) -> VerificationReport:
    """Check S^2 = s(s+n) I with s = n*l, and s(s+n) = n^2 l(l+1)."""
    ops = build_operators(space)
    s, n = space.s, space.n
    eigenvalue = s * (s + n)
    report = VerificationReport()
    expected = OperatorMatrix.identity(space.dim) * eigenvalue
    diff = ops.s_sq.first_difference(expected)
    report.add("casimir-eigenvalue", diff is None,
               diff if diff is not None else f"S^2 = {eigenvalue} I")
    l_eigen = Fraction(n * n * space.two_l * (space.two_l + 2), 4)
    report.add("casimir-consistency", eigenvalue == l_eigen,
               f"s(s+n) = {eigenvalue}, n^2 l(l+1) = {l_eigen}")
    return report


def verify_lowering_chain(space: SpinSpace) -> VerificationReport:
    """Check the lowering structure of the generalized algebra.

    S_z (S- |m>) = (n m - n)(S- |m>) for every basis state, S- annihilates
    exactly the lowest state, and the chain from the top state terminates
    after r = 2l steps with s = n r / 2.
    """
    ops = build_operators(space)
    n = space.n
    report = VerificationReport()

    shift_ok, shift_witness = True, None
    annihilate_ok, annihilate_witness = True, None
    for index, two_m in enumerate(space.two_m_values()):
        vec = StateVector.basis(space.dim, index)
        lowered = ops.s_minus.apply(vec)
        is_lowest = index == space.dim - 1
        if lowered.is_zero != is_lowest:
            annihilate_ok = False
            annihilate_witness = (
                f"S- on m={format_label(two_m)} is "
                f"{'zero' if lowered.is_zero else 'nonzero'}"
            )
        shifted = ops.s_z.apply(lowered)
        expected = lowered * Fraction(n * (two_m - 2), 2)
        if shifted != expected:
            shift_ok = False
            shift_witness = f"eigenvalue shift fails at m={format_label(two_m)}"
    report.add("lowering-eigenvalue-shift", shift_ok, shift_witness)
    report.add("lowering-annihilates-only-lowest", annihilate_ok, annihilate_witness)

    vec = StateVector.basis(space.dim, 0)
    steps = 0
    while not vec.is_zero:
        vec = ops.s_minus.apply(vec)
        if vec.is_zero:
            break
        steps += 1
    s_from_steps = Fraction(n * steps, 2)
    report.add(
        "lowering-chain-length",
        steps == space.two_l and s_from_steps == space.s,
        f"r = {steps}, n r / 2 = {s_from_steps}, s = {space.s}",
    )
    return report


_PAULI_FLOAT = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def rotation(axis_angle: Sequence[float], n: int) -> np.ndarray:
    """Two-level rotation exp(i (n/2) theta u.sigma) in closed form.

    ``axis_angle`` is the rotation vector (direction = axis, length = angle).
    n = 1 is the half-angle representation (4pi-periodic), n = 2 the
    full-angle one (2pi-periodic).  Returns a 2x2 complex array.
    """
    if n not in (1, 2):
        raise ValueError(f"rotation step must be 1 or 2, got {n}")
    v = np.asarray(axis_angle, dtype=float)
    if v.shape != (3,):
        raise ValueError("axis_angle must be a 3-vector")
    theta = float(np.linalg.norm(v))
    if theta == 0.0:
        return np.eye(2, dtype=complex)
    u = v / theta
    u_sigma = u[0] * _PAULI_FLOAT["x"] + u[1] * _PAULI_FLOAT["y"] + u[2] * _PAULI_FLOAT["z"]
    half = 0.5 * n * theta
    return math.cos(half) * np.eye(2, dtype=complex) + 1j * math.sin(half) * u_sigma


def pauli(name: str) -> OperatorMatrix:
    """Exact Pauli matrix: 'x', 'y', 'z', or 'i' for the 2x2 identity."""
    one, zero = ComplexExact.one(), ComplexExact.zero()
    if name == "x":
        return OperatorMatrix([[zero, one], [one, zero]])
    if name == "y":
        return OperatorMatrix([[zero, ComplexExact(0, -1)], [ComplexExact(0, 1), zero]])
    if name == "z":
        return OperatorMatrix([[one, zero], [zero, -one]])
    if name == "i":
        return OperatorMatrix.identity(2)
    raise ValueError(f"unknown Pauli name {name!r}")


def check_independent_commute() -> VerificationReport:
    """Observables of two statistically independent spins commute.

    Both readings are checked: the two observables on distinct tensor slots
    of the 4-dimensional product space, and the shared-observable reading
    where both are literally the same matrix.  A same-slot non-commuting
    pair is included as an expected-nonzero control.
    """
    sz, sx, ident = pauli("z"), pauli("x"), pauli("i")
    report = VerificationReport()

    slot_comm = commutator(sz.kron(ident), ident.kron(sz))
    report.add("independent-tensor-slots-commute", slot_comm.is_zero,
               None if slot_comm.is_zero else "commutator is nonzero")

    shared_comm = commutator(sz, sz)
    report.add("independent-shared-observable-commutes", shared_comm.is_zero,
               None if shared_comm.is_zero else "self-commutator is nonzero")

    control = commutator(sz.kron(ident), sx.kron(ident))
    report.add("same-slot-noncommuting-control", not control.is_zero,
               "expected nonzero commutator for sz and sx acting on one slot")
    return report


def check_singlet_anticommute() -> VerificationReport:
    """Cross-component spin observables of a singlet-identified pair anticommute.

    For i != j the anticommutator {s_i, s_j} vanishes exactly while the
    commutator equals 2i eps_ijk s_k; the coefficient really is 2, and the
    report states explicitly that the unscaled form i eps_ijk s_k fails.
    """
    mats = {1: pauli("x"), 2: pauli("y"), 3: pauli("z")}
    eps = {(1, 2): (1, 3), (2, 1): (-1, 3), (2, 3): (1, 1),
           (3, 2): (-1, 1), (3, 1): (1, 2), (1, 3): (-1, 2)}
    report = VerificationReport()
    coefficient_two = True
    coefficient_one_fails = True
    for (i, j), (sign, k) in eps.items():
        anti = anticommutator(mats[i], mats[j])
        report.add(f"singlet-anticommutator-{i}{j}", anti.is_zero,
                   None if anti.is_zero else f"{{s_{i},s_{j}}} is nonzero")
        comm = commutator(mats[i], mats[j])
        expected = mats[k] * ComplexExact(0, 2 * sign)
        if comm != expected:
            coefficient_two = False
        if comm == mats[k] * ComplexExact(0, sign):
            coefficient_one_fails = False
    report.add("singlet-commutator-coefficient", coefficient_two and coefficient_one_fails,
               "[s_i,s_j] = 2i eps_ijk s_k exactly; the unscaled form "
               "i eps_ijk s_k does not hold (the coefficient is 2)")
    return report


@dataclass(frozen=True)
class ExclusivityResult:
    commute: bool
    anticommute: bool
    product_zero: bool


def exclusivity_check(a: OperatorMatrix, b: OperatorMatrix) -> ExclusivityResult:
    """Exact predicates: do A and B commute, anticommute, and is AB zero.

    If both the commutator and the anticommutator vanish then AB must be
    zero (their sum is 2AB), so commute-and-anticommute implies product_zero.
    """
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    ab = a @ b
    ba = b @ a
    return ExclusivityResult(
        commute=(ab - ba).is_zero,
        anticommute=(ab + ba).is_zero,
        product_zero=ab.is_zero,
    )


def random_pauli_tensor(rng: random.Random, max_terms: int = 3) -> OperatorMatrix:
    """Random exact 4x4 matrix: a short rational combination of Pauli tensor products.

    Occasionally substitutes a z-projector factor so that singular matrices
    (and hence genuine commute-and-anticommute pairs) occur in samples.
    """
    names = ["i", "x", "y", "z"]
    half = Fraction(1, 2)
    projectors = {
        "p+": (pauli("i") + pauli("z")) * half,
        "p-": (pauli("i") - pauli("z")) * half,
    }
    total = OperatorMatrix.zeros(4)
    for _ in range(rng.randint(1, max_terms)):
        factors = []
        for _slot in range(2):
            if rng.random() < 0.25:
                factors.append(projectors[rng.choice(["p+", "p-"])])
            else:
                factors.append(pauli(rng.choice(names)))
        coeff = Fraction(rng.choice([-2, -1, 1, 2]), rng.choice([1, 2]))
        total = total + factors[0].kron(factors[1]) * coeff
    return total
