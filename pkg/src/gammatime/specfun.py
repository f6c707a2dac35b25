"""Exponential integral E1, its density, its inverse, and a bracketed solver.

E1 is the tail of the Gamma Levy measure, E1(v) = int_v^inf e^{-x}/x dx.  Its
inverse H maps Poisson arrival levels to jump sizes and is the workhorse of
the shot-noise samplers.  The inverse is computed by the bracketed
"halve and check" scheme: grow a bracket by doubling/halving, then bisect (in
log space, since roots span hundreds of orders of magnitude) until the
residual in E1-space is within tolerance.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ConvergenceError, DomainError, PreconditionError

EULER_GAMMA = _kernels.EULER_GAMMA

# documented tolerance constants for the inverse
TOL_REL = 1e-12
TOL_ABS = 1e-14
MAX_ITER = 200


def e1_density(x):
    """Density of the Gamma Levy measure, e1(x) = e^{-x}/x for x > 0."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("e1_density requires x > 0")
    out = np.exp(-arr) / arr
    return float(out) if np.isscalar(x) or arr.ndim == 0 else out


def exp_integral_e1(v):
    """E1(v) = int_v^inf e^{-x}/x dx for v > 0.

    Uses the alternating series -gamma - ln v + sum (-1)^{k+1} v^k/(k k!)
    for v <= 1 and a modified-Lentz continued fraction above.  Strictly
    decreasing.  Accepts scalars or arrays.
    """
    arr = np.ascontiguousarray(v, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
        scalar = True
    else:
        scalar = False
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("exp_integral_e1 requires v > 0")
    out = _kernels.e1_array(arr.ravel()).reshape(arr.shape)
    return float(out[0]) if scalar else out


def h_inverse(x, tol_rel=TOL_REL, tol_abs=TOL_ABS):
    """Inverse of E1: returns h with |E1(h) - x| <= max(tol_abs, x tol_rel).

    The bracket is found by doubling/halving from an asymptotic first guess,
    then shrunk by bisection on ln h.  Raises ConvergenceError (carrying the
    last bracket) if the iteration cap is hit, which does not happen for
    finite positive x at the default tolerances.
    """
    arr = np.ascontiguousarray(x, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
        scalar = True
    else:
        scalar = False
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError("h_inverse requires x > 0")
    out, ok = _kernels.h_array(arr.ravel(), tol_rel, tol_abs, MAX_ITER)
    if not ok:
        bad = np.flatnonzero(np.isnan(out))
        xb = float(arr.ravel()[bad[0]])
        _, _, lo, hi = _kernels.h_scalar(xb, tol_rel, tol_abs, MAX_ITER)
        raise ConvergenceError(
            f"h_inverse did not converge at x={xb!r} within {MAX_ITER} iterations",
            bracket=(lo, hi),
        )
    out = out.reshape(arr.shape)
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class BracketedEquation:
    """A scalar equation f(root)=0 known to change sign on [lo, hi]."""

    evaluator: callable
    lo: float
    hi: float
    tol_abs: float = TOL_ABS

    def validate(self):
        if not (self.lo < self.hi):
            raise PreconditionError("bracket requires lo < hi")
        if not (self.tol_abs > 0.0):
            raise PreconditionError("tol_abs must be positive")
        flo = self.evaluator(self.lo)
        fhi = self.evaluator(self.hi)
        if flo * fhi > 0.0:
            raise PreconditionError(
                f"no sign change on bracket: f({self.lo})={flo}, f({self.hi})={fhi}"
            )
        return flo, fhi


def solve_bracketed(eq, max_iter=MAX_ITER):
    """Bisect eq.evaluator on [eq.lo, eq.hi] until |f(root)| <= eq.tol_abs.

    Deterministic; no randomness, no derivatives.  Raises PreconditionError
    for an invalid bracket and ConvergenceError if the cap is exhausted.
    """
    flo, fhi = eq.validate()
    if flo == 0.0:
        return eq.lo
    if fhi == 0.0:
        return eq.hi
    lo, hi = eq.lo, eq.hi
    # orient so the evaluator is negative at `neg`, positive at `pos`
    neg, pos = (lo, hi) if flo < 0.0 else (hi, lo)
    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        mid = 0.5 * (neg + pos)
        fm = eq.evaluator(mid)
        if abs(fm) <= eq.tol_abs:
            return mid
        if fm < 0.0:
            neg = mid
        else:
            pos = mid
        if neg == pos or abs(neg - pos) < 1e-18 * (abs(neg) + abs(pos)):
            fm = eq.evaluator(0.5 * (neg + pos))
            if abs(fm) <= eq.tol_abs:
                return 0.5 * (neg + pos)
            break
    raise ConvergenceError(
        f"bisection did not meet tol_abs={eq.tol_abs} within {max_iter} iterations",
        bracket=(min(neg, pos), max(neg, pos)),
    )
