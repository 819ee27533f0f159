"""Real symmetric tridiagonal (Jacobi) matrices and their spectral tools.

A matrix H with diagonal a_0..a_N and strictly positive off-diagonal
b_0..b_{N-1} drives the normalized three-term recurrence

    x p_k(x) = b_k p_{k+1}(x) + a_k p_k(x) + b_{k-1} p_{k-1}(x),

seeded with p_{-1} = 0, p_0 = 1 and the boundary conventions
b_{-1} = b_N = 1.  The values (p_0(x), ..., p_{N+1}(x)) form a Sturm
sequence: the number of sign changes equals the number of eigenvalues of H
strictly greater than x.  That count powers the bisection eigenvalue
solver below, which therefore exercises the recurrence itself instead of
delegating to a dense solver.  The last value p_{N+1}(x) equals
det(xI - H) / (b_0...b_{N-1}); `charpoly_check` verifies this against an
independent leading-minor recurrence.

Everything in this module runs in 64-bit floating point; exact rationals
enter only through the explicit conversion in `from_jfraction`.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DegenerateSpectrum, NotAnEigenvalue, SizeTooSmall, ToleranceTooLoose
from .jfraction import JFraction

__all__ = [
    "JacobiMatrix",
    "Spectrum",
    "from_jfraction",
    "normalized_poly_sequence",
    "charpoly_check",
    "truncate_first",
    "eigenvalues",
    "eigenvector",
    "is_persymmetric",
    "gershgorin_interval",
]


@dataclass(frozen=True)
class JacobiMatrix:
    """Symmetric tridiagonal matrix: diagonal a_0..a_N, off-diagonal b_0..b_{N-1} > 0."""

    diag: tuple[float, ...]
    offdiag: tuple[float, ...]

    def __init__(self, diag: Iterable[float], offdiag: Iterable[float] = ()):
        diag = tuple(float(v) for v in diag)
        offdiag = tuple(float(v) for v in offdiag)
        if not diag:
            raise ValueError("a Jacobi matrix needs at least one diagonal entry")
        if len(offdiag) != len(diag) - 1:
            raise ValueError(f"need len(offdiag) = len(diag) - 1, got {len(offdiag)} vs {len(diag)}")
        if any(b <= 0 for b in offdiag):
            raise ValueError("off-diagonal entries must be strictly positive")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def size(self) -> int:
        return len(self.diag)

    def dense(self) -> np.ndarray:
        m = np.diag(np.asarray(self.diag, dtype=float))
        if self.offdiag:
            off = np.asarray(self.offdiag, dtype=float)
            m += np.diag(off, 1) + np.diag(off, -1)
        return m

    def to_json_obj(self) -> dict:
        return {"diag": list(self.diag), "offdiag": list(self.offdiag)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "JacobiMatrix":
        return cls(obj["diag"], obj["offdiag"])


@dataclass(frozen=True)
class Spectrum:
    """Strictly increasing eigenvalues with the resolution they are trusted to."""

    eigenvalues: tuple[float, ...]
    tolerance: float

    def __init__(self, eigenvalues: Iterable[float], tolerance: float):
        eigenvalues = tuple(float(v) for v in eigenvalues)
        tolerance = float(tolerance)
        if not eigenvalues:
            raise ValueError("a spectrum needs at least one eigenvalue")
        if tolerance <= 0:
            raise ValueError("tolerance must be positive")
        for left, right in zip(eigenvalues, eigenvalues[1:]):
            if right - left <= tolerance:
                raise DegenerateSpectrum(
                    f"eigenvalues {left} and {right} are not separated beyond {tolerance}"
                )
        object.__setattr__(self, "eigenvalues", eigenvalues)
        object.__setattr__(self, "tolerance", tolerance)

    @property
    def size(self) -> int:
        return len(self.eigenvalues)


def from_jfraction(jf: JFraction) -> JacobiMatrix:
    """Jacobi matrix with diagonal a and off-diagonal +sqrt(b^2)."""
    return JacobiMatrix(
        (float(v) for v in jf.a),
        (math.sqrt(float(v)) for v in jf.b2),
    )


def _boundary_couplings(H: JacobiMatrix) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """(b_{k-1})_k and (b_k)_k for k = 0..N with b_{-1} = b_N = 1."""
    return (1.0,) + H.offdiag, H.offdiag + (1.0,)


def normalized_poly_sequence(H: JacobiMatrix, x: float) -> list[float]:
    """Values p_0(x), ..., p_{N+1}(x) of the normalized recurrence at x."""
    left, right = _boundary_couplings(H)
    values = [1.0]
    prev, cur = 0.0, 1.0
    for k in range(H.size):
        prev, cur = cur, ((x - H.diag[k]) * cur - left[k] * prev) / right[k]
        values.append(cur)
    return values


def charpoly_check(H: JacobiMatrix, x: float) -> float:
    """Relative disagreement between p_{N+1}(x) and
    det(xI - H) / (b_0...b_{N-1}), the latter from the leading-minor
    recurrence.  Contract: <= 1e-10 for any x."""
    recurrence_value = normalized_poly_sequence(H, x)[-1]
    minor_prev, minor = 1.0, x - H.diag[0]
    for k in range(1, H.size):
        minor_prev, minor = minor, (x - H.diag[k]) * minor - H.offdiag[k - 1] ** 2 * minor_prev
    coupling_product = 1.0
    for b in H.offdiag:
        coupling_product *= b
    determinant_value = minor / coupling_product
    return abs(recurrence_value - determinant_value) / max(
        1.0, abs(recurrence_value), abs(determinant_value)
    )


def truncate_first(H: JacobiMatrix) -> JacobiMatrix:
    """Drop a_0 and b_0; the truncated matrix drives the companion recurrence."""
    if H.size < 2:
        raise SizeTooSmall("cannot truncate a 1x1 matrix")
    return JacobiMatrix(H.diag[1:], H.offdiag[1:])


def gershgorin_interval(H: JacobiMatrix) -> tuple[float, float]:
    """Closed interval guaranteed to contain every eigenvalue (row-sum bound)."""
    lo = math.inf
    hi = -math.inf
    for k in range(H.size):
        radius = (H.offdiag[k - 1] if k > 0 else 0.0) + (H.offdiag[k] if k < H.size - 1 else 0.0)
        lo = min(lo, H.diag[k] - radius)
        hi = max(hi, H.diag[k] + radius)
    return lo, hi


def _eigs_greater(H: JacobiMatrix, x: float) -> int:
    """Sign changes in the Sturm sequence at x = number of eigenvalues > x.

    Runs the recurrence with on-the-fly rescaling so the count survives
    value over/underflow; rescaling by a positive factor preserves signs.
    """
    left, right = _boundary_couplings(H)
    changes = 0
    last_sign = 1  # p_0 = 1
    prev, cur = 0.0, 1.0
    for k in range(H.size):
        prev, cur = cur, ((x - H.diag[k]) * cur - left[k] * prev) / right[k]
        magnitude = max(abs(prev), abs(cur))
        if magnitude > 1e150:
            prev *= 1e-150
            cur *= 1e-150
        elif 0.0 < magnitude < 1e-150:
            prev *= 1e150
            cur *= 1e150
        if cur > 0:
            sign = 1
        elif cur < 0:
            sign = -1
        else:
            continue  # exact zero: neighbors have opposite signs, skip it
        if sign != last_sign:
            changes += 1
            last_sign = sign
    return changes


def _count_leq(H: JacobiMatrix, x: float) -> int:
    """Number of eigenvalues in (-inf, x]."""
    return H.size - _eigs_greater(H, x)


def eigenvalues(H: JacobiMatrix, tol: float | None = None) -> Spectrum:
    """All eigenvalues by Sturm-count bisection inside the Gershgorin bracket.

    Each root is bisected until the bracket stops shrinking in floating
    point, so the returned values are accurate to a few ulps regardless of
    ``tol``; ``tol`` (default 1e-12 scaled by the Gershgorin radius) is the
    separation the resulting Spectrum certifies.  Raises ToleranceTooLoose
    when ``tol`` exceeds the best possible eigenvalue gap or any computed
    gap fails it.
    """
    n = H.size
    lo, hi = gershgorin_interval(H)
    scale = max(1.0, abs(lo), abs(hi))
    if tol is None:
        tol = 1e-12 * scale
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n == 1:
        return Spectrum((H.diag[0],), tol)
    span = hi - lo
    if tol >= span / (n - 1):
        raise ToleranceTooLoose(
            f"tol {tol} is not below the best possible gap {span / (n - 1)} "
            f"of {n} eigenvalues inside the Gershgorin interval"
        )
    pad = 16 * sys.float_info.epsilon * scale
    lo -= pad
    hi += pad
    found = []
    for k in range(n):
        a, b = lo, hi
        # invariant: count_leq(a) <= k < count_leq(b)
        while True:
            mid = 0.5 * (a + b)
            if not (a < mid < b):
                break
            if _count_leq(H, mid) >= k + 1:
                b = mid
            else:
                a = mid
        found.append(0.5 * (a + b))
    for left_val, right_val in zip(found, found[1:]):
        if right_val - left_val <= tol:
            raise ToleranceTooLoose(
                f"computed gap {right_val - left_val} is within tol {tol}"
            )
    return Spectrum(found, tol)


def eigenvector(H: JacobiMatrix, lam: float) -> np.ndarray:
    """Unit eigenvector (p_0(lam), ..., p_N(lam)) / norm for the eigenvalue lam.

    The residual ||Hv - lam v|| must come out within 1e-8 * ||H||_inf,
    otherwise lam is not (close enough to) an eigenvalue.
    """
    values = normalized_poly_sequence(H, lam)
    v = np.asarray(values[:-1], dtype=float)
    v /= np.linalg.norm(v)
    dense = H.dense()
    residual = float(np.linalg.norm(dense @ v - lam * v))
    matrix_norm = float(np.abs(dense).sum(axis=1).max())
    if residual > 1e-8 * matrix_norm:
        raise NotAnEigenvalue(
            f"residual {residual:.3e} exceeds 1e-8 * ||H|| = {1e-8 * matrix_norm:.3e}"
        )
    return v


def is_persymmetric(H: JacobiMatrix, tol: float) -> bool:
    """True iff H equals its reversal: a_k = a_{N-k}, b_n = b_{N-1-n} within tol."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    n = H.size
    diag_ok = all(abs(H.diag[k] - H.diag[n - 1 - k]) <= tol for k in range(n))
    off_ok = all(abs(H.offdiag[k] - H.offdiag[n - 2 - k]) <= tol for k in range(n - 1))
    return diag_ok and off_ok
