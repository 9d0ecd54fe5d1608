"""Floating-point values of the normalized T-values.

``T~(k) = 2 (2 pi i)^-k L(chi4, k)`` and
``T~(k1, k2) = 4 (2 pi i)^-(k1+k2) L_sh(chi4, k1, k2)``.  Using
``chi4(n1) chi4(n2 - n1) = chi0(n1) chi4(n2 - 1)`` the double value becomes the
alternating series ``sum_t (-1)^(t+1) S_{k1}(2t) / (2t)^k2`` with
``S_{k1}(n) = sum_{odd n1 < n} n1^-k1``.  When ``k2 = 1`` it only converges
conditionally, so two independent acceleration schemes are run and must agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, asdict

import numpy as np

from .special_numbers import ell4_odd

__all__ = [
    "NumericTValue", "ttilde_single", "ttilde_double", "verify_relation_numeric",
    "TValueDisagreement", "alternating_cvz", "alternating_euler_averaging",
]

TWO_PI_I = 2j * math.pi


class TValueDisagreement(ArithmeticError):
    """The two evaluation strategies disagree beyond the requested tolerance."""


@dataclass(frozen=True)
class NumericTValue:
    value: complex
    est_error: float
    method: str  # "closed_form" or "accelerated_sum"

    def to_json(self) -> dict:
        d = asdict(self)
        d["value"] = {"re": self.value.real, "im": self.value.imag}
        return d


def alternating_cvz(a, n: int = 40) -> float:
    """``sum_{t>=0} (-1)^t a(t)`` by the Cohen-Villegas-Zagier acceleration.

    ``a`` is a callable on non-negative integers; ``n`` terms are used.
    """
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return s / d


def alternating_euler_averaging(terms: np.ndarray, rounds: int | None = None) -> float:
    """Sum ``sum_t (-1)^t terms[t]`` by repeatedly averaging neighbouring partial sums."""
    signs = np.where(np.arange(len(terms)) % 2 == 0, 1.0, -1.0)
    partial = np.cumsum(signs * terms)
    if rounds is None:
        rounds = min(len(partial) - 1, 60)
    # keep only the tail so the averages are taken where the terms are smooth
    p = partial[-(rounds + 1):].copy()
    for _ in range(rounds):
        p = 0.5 * (p[1:] + p[:-1])
    return float(p[0])


def _odd_power_prefix(k1: int, t_max: int) -> np.ndarray:
    """``S_{k1}(2t)`` for ``t = 1..t_max``: sums of ``n^-k1`` over odd ``n < 2t``."""
    odd = np.arange(1, 2 * t_max, 2, dtype=np.float64)
    return np.cumsum(odd ** (-float(k1)))


class _SCache:
    """``S_{k1}(2t)`` built term by term with ``math.fsum``, independent of numpy."""

    def __init__(self, k1: int):
        self.k1 = k1
        self.vals = [0.0]
        self.acc = []

    def __call__(self, t: int) -> float:
        while len(self.vals) <= t:
            n = 2 * len(self.vals) - 1
            self.acc.append(n ** -self.k1)
            self.vals.append(math.fsum(self.acc))
        return self.vals[t]


def _lsh_cvz(k1: int, k2: int, n: int = 48) -> float:
    S = _SCache(k1)
    return alternating_cvz(lambda t: S(t + 1) / (2 * (t + 1)) ** k2, n)


def _lsh_euler(k1: int, k2: int, t_max: int = 4000) -> float:
    S = _odd_power_prefix(k1, t_max)
    t = np.arange(1, t_max + 1, dtype=np.float64)
    return alternating_euler_averaging(S / (2 * t) ** k2)


def _l4_cvz(k: int, n: int = 48) -> float:
    return alternating_cvz(lambda t: (2 * t + 1) ** -float(k), n)


def _l4_euler(k: int, t_max: int = 4000) -> float:
    t = np.arange(0, t_max, dtype=np.float64)
    return alternating_euler_averaging((2 * t + 1) ** -float(k))


def ttilde_single(k: int, tol: float = 1e-10) -> NumericTValue:
    """``T~(k)``; exact for odd ``k``, accelerated alternating sum for even ``k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k % 2:
        return NumericTValue(complex(ell4_odd(k) * 2), 0.0, "closed_form")
    a, b = _l4_cvz(k), _l4_euler(k)
    scale = 2 / TWO_PI_I ** k
    err = abs(a - b) * abs(scale) + 1e-16
    if err > tol:
        raise TValueDisagreement(f"T~({k}): strategies differ by {err:.3e}")
    return NumericTValue(complex(scale * a), err, "accelerated_sum")


def ttilde_double(k1: int, k2: int, tol: float = 1e-8) -> NumericTValue:
    """``T~(k1, k2)`` from two independent accelerations that must agree within ``tol``."""
    if k1 < 1 or k2 < 1:
        raise ValueError("weights must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a, b = _lsh_cvz(k1, k2), _lsh_euler(k1, k2)
    scale = 4 / TWO_PI_I ** (k1 + k2)
    err = abs(a - b) * abs(scale) + 1e-16
    if err > tol:
        raise TValueDisagreement(f"T~({k1},{k2}): strategies differ by {err:.3e} > {tol:.1e}")
    return NumericTValue(complex(scale * a), err, "accelerated_sum")


@dataclass(frozen=True)
class RelationReport:
    k: int
    j: int
    residual: float
    relative_residual: float
    error_budget: float
    tol: float
    paper_literal: bool
    status: str

    def to_json(self) -> dict:
        return asdict(self)


def verify_relation_numeric(k: int, j: int, tol: float = 1e-6, paper_literal: bool = False,
                            rel_tol: float | None = None) -> RelationReport:
    """Residual of ``sum_p a~_{k,j,p} T~(p, k-p)``.

    ``relative_residual`` divides by ``sum_p |a~_p| |T~(p,k-p)|``, which is the
    meaningful scale since the T-values themselves shrink like ``(2 pi)^-k``.
    With ``rel_tol`` the relative residual must also stay below it.
    """
    from .relations import atilde_vector

    vec = atilde_vector(k, j, paper_literal=paper_literal)
    total = 0j
    scale = 0.0
    budget = 0.0
    for p, c in enumerate(vec, start=1):
        t = ttilde_double(p, k - p, tol=min(tol, 1e-8))
        total += float(c) * t.value
        scale += abs(float(c)) * abs(t.value)
        budget += abs(float(c)) * t.est_error
    res = abs(total)
    rel = res / scale if scale else 0.0
    ok = res + budget < tol and (rel_tol is None or rel < rel_tol)
    status = "pass" if ok else "fail"
    return RelationReport(k, j, res, rel, budget, tol, paper_literal, status)


def shuffle_constant_residual(k1: int, k2: int) -> float:
    """``|T~(k1) T~(k2) - sum_p (C(p-1,k1-1)+C(p-1,k2-1)) T~(K-p, p)|``."""
    K = k1 + k2
    lhs = ttilde_single(k1).value * ttilde_single(k2).value
    rhs = 0j
    for p in range(1, K):
        c = math.comb(p - 1, k1 - 1) + math.comb(p - 1, k2 - 1)
        if c:
            rhs += c * ttilde_double(K - p, p).value
    return abs(lhs - rhs)


__all__ += ["RelationReport", "shuffle_constant_residual"]
