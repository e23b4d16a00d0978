"""Spectrum of the averaged n-fold tensor product and derived quantities.

Averaging rho^(x)n over the Bloch ball against the radial weight of the
complex family produces a 2^n x 2^n matrix whose eigenvalues lambda_{n,d}
(d = 0..floor(n/2)) come in gamma-ratio closed form with integer
multiplicities m_{n,d}.  This module carries the closed-form spectrum, the
multiplicity-weighted spin sums, a brute-force tensor quadrature oracle
for n <= 3, the relative entropy of rho^(x)n against the average, the
truncated large-n asymptotics of that relative entropy, and the two
nonlinear solves it gives rise to (stationary point and maximin).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rootfind
from .errors import ConvergenceError, DomainError, QuadratureError
from .models import (GibbsPoint, ModelKind, atanh_omega, mean_energy,
                     omega_complex, partition, var_energy)
from .oracles import DensityMatrix2
from .specfun import log_gamma

__all__ = [
    "SpectrumEntry",
    "SpectrumTable",
    "spectrum",
    "spin_sum_polarization",
    "zeta_matrix_oracle",
    "relative_entropy_numeric",
    "asymptotic_relent",
    "solve_stationary_point",
    "solve_maximin_beta",
]


@dataclass(frozen=True)
class SpectrumEntry:
    d: int
    lam: float
    multiplicity: int


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    beta: float
    entries: tuple[SpectrumEntry, ...]

    def __post_init__(self):
        if sum(e.multiplicity for e in self.entries) != 2 ** self.n:
            raise DomainError("multiplicities must sum to 2^n")
        if abs(self.trace() - 1.0) > 1e-10:
            raise DomainError(f"unit-trace violation: {self.trace()!r}")

    def trace(self) -> float:
        return math.fsum(e.multiplicity * e.lam for e in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "beta": self.beta,
            "entries": [
                {"d": e.d, "lambda": e.lam, "multiplicity": e.multiplicity}
                for e in self.entries
            ],
        }


def _lambda_nd(n: int, d: int, beta: float) -> float:
    # log-domain gamma ratio; all arguments positive for beta > 0
    log_lam = (-n * math.log(2.0)
               + log_gamma(1.5 + beta)
               + log_gamma(1.0 + n - d + beta)
               + log_gamma(d + beta)
               - log_gamma(1.5 + n / 2.0 + beta)
               - log_gamma(1.0 + n / 2.0 + beta)
               - log_gamma(beta))
    return math.exp(log_lam)


def _multiplicity(n: int, d: int) -> int:
    # (n-2d+1)^2/(n+1) C(n+1, d) = (n-2d+1) (C(n,d) - C(n,d-1)), an integer
    c = math.comb(n, d) - (math.comb(n, d - 1) if d >= 1 else 0)
    return (n - 2 * d + 1) * c


def spectrum(n: int, beta: float) -> SpectrumTable:
    """Eigenvalues and multiplicities of the averaged n-fold tensor product."""
    if n < 1 or n != int(n):
        raise DomainError("n must be a positive integer")
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError("beta must be positive")
    entries = tuple(
        SpectrumEntry(d=d, lam=_lambda_nd(n, d, beta), multiplicity=_multiplicity(n, d))
        for d in range(n // 2 + 1)
    )
    return SpectrumTable(n=int(n), beta=float(beta), entries=entries)


def spin_sum_polarization(n: int, beta: float) -> float:
    """Net-polarization average sum_d ((n-2d)/n) m_{n,d} lambda_{n,d}.

    Lies in [0, 1] and converges to the complex-family mean polarization
    as n grows, with an O(1/n) gap.
    """
    table = spectrum(n, beta)
    return math.fsum((n - 2 * e.d) / n * e.multiplicity * e.lam
                     for e in table.entries)


def _radial_weight(beta: float, t: np.ndarray) -> np.ndarray:
    """Weight of the ball average in t = sqrt(E): pdf of the complex family."""
    E = t * t
    z = partition(GibbsPoint(ModelKind.COMPLEX, beta))
    return 2.0 * t * np.exp(-beta * E) * omega_complex(E) / z


def _zeta_once(n: int, beta: float, nodes: int) -> np.ndarray:
    """Tensor-product Gauss-Legendre average of rho^(x)n over the ball."""
    t_up = math.sqrt(max(50.0, 50.0 / beta))
    xt, wt = np.polynomial.legendre.leggauss(nodes)
    t = 0.5 * t_up * (xt + 1.0)
    w_t = 0.5 * t_up * wt * _radial_weight(beta, t)
    xq, wq = np.polynomial.legendre.leggauss(nodes)
    theta = 0.5 * math.pi * (xq + 1.0)
    w_theta = 0.5 * math.pi * wq * 0.5 * np.sin(theta)  # sin(theta)/2 measure
    phi = 2.0 * math.pi * np.arange(nodes) / nodes
    w_phi = np.full(nodes, 1.0 / nodes)  # periodic trapezoid, mean over phi

    r = omega_complex(t * t)
    dim = 2 ** n
    zeta = np.zeros((dim, dim), dtype=complex)
    for i in range(nodes):  # radial slices keep the working set small
        # bloch components on the (theta, phi) grid
        x = r[i] * np.outer(np.sin(theta), np.cos(phi))
        y = r[i] * np.outer(np.sin(theta), np.sin(phi))
        z = r[i] * np.outer(np.cos(theta), np.ones(nodes))
        rho = 0.5 * np.stack([
            np.stack([1.0 + z, x - 1j * y], axis=-1),
            np.stack([x + 1j * y, 1.0 - z], axis=-1),
        ], axis=-2)  # (ntheta, nphi, 2, 2)
        kron = rho
        for _ in range(n - 1):
            kron = np.einsum("abij,abkl->abikjl", kron, rho).reshape(
                rho.shape[0], rho.shape[1], kron.shape[-1] * 2, kron.shape[-1] * 2)
        weight = w_t[i] * np.multiply.outer(w_theta, w_phi)
        zeta += np.einsum("ab,abij->ij", weight, kron)
    return 0.5 * (zeta + zeta.conj().T)


def zeta_matrix_oracle(n: int, beta: float, nodes: int = 48) -> np.ndarray:
    """Quadrature average of rho^(x)n, with node doubling until the
    eigenvalues stabilize; Hermitian 2^n x 2^n output."""
    if not 1 <= n <= 3:
        raise DomainError("the tensor oracle is limited to n in 1..3")
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError("beta must be positive")
    if nodes < 48:
        raise DomainError("nodes must be >= 48")
    zeta = _zeta_once(n, beta, nodes)
    current = nodes
    while current <= 192:
        current *= 2
        finer = _zeta_once(n, beta, current)
        drift = np.max(np.abs(np.linalg.eigvalsh(finer)
                              - np.linalg.eigvalsh(zeta)))
        zeta = finer
        if drift < 1e-9:
            return zeta
    raise QuadratureError(
        f"tensor average eigenvalues still drifting ({drift:.2e}) at "
        f"{current} nodes")


def relative_entropy_numeric(rho: DensityMatrix2, n: int, beta: float) -> float:
    """Relative entropy of rho^(x)n with respect to the averaged matrix:
    -n S(rho) - Tr(rho^(x)n log zeta_n), natural logs."""
    if not 1 <= n <= 3:
        raise DomainError("n must be in 1..3")
    zeta = zeta_matrix_oracle(n, beta)
    lam, vec = np.linalg.eigh(zeta)
    if np.any(lam <= 0):
        raise DomainError("averaged matrix is numerically singular")
    log_zeta = (vec * np.log(lam)) @ vec.conj().T
    rho_m = rho.matrix()
    kron = rho_m
    for _ in range(n - 1):
        kron = np.kron(kron, rho_m)
    p, q = rho.eigenvalues
    s_rho = -sum(v * math.log(v) for v in (p, q) if v > 0)
    return float(-n * s_rho - np.trace(kron @ log_zeta).real)


def asymptotic_relent(beta: float, E: float, n: int) -> float:
    """Truncated large-n asymptotics of the relative entropy:
    (3/2) ln n - 1/2 - (3/2) ln 2 + beta E - artanh(Omega)/Omega
    + ln Gamma(beta) - ln Gamma(3/2 + beta).
    """
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError("beta must be positive")
    if not math.isfinite(E) or E <= 0:
        raise DomainError("E must be positive")
    if n < 1:
        raise DomainError("n must be a positive integer")
    om = float(omega_complex(E))
    return (1.5 * math.log(n) - 0.5 - 1.5 * math.log(2.0) + beta * E
            - float(atanh_omega(E)) / om
            + log_gamma(beta) - log_gamma(1.5 + beta))


def _stationarity_system(v: np.ndarray) -> np.ndarray:
    beta, E = float(v[0]), float(v[1])
    om = float(omega_complex(E))
    eq1 = E - mean_energy(GibbsPoint(ModelKind.COMPLEX, beta))
    # d/dE of the truncated asymptotics, rearranged for beta
    eq2 = beta - (2.0 - 2.0 * float(atanh_omega(E)) / (math.exp(E) * om)) \
        / (4.0 * om * om)
    return np.array([eq1, eq2])


def solve_stationary_point() -> tuple[float, float]:
    """Joint zero of the two derivative conditions of the truncated
    asymptotics, from the starting point (0.5, 2.5); residuals < 1e-10."""
    beta, E = rootfind.newton2d(_stationarity_system, (0.5, 2.5), tol=1e-11)
    res = _stationarity_system(np.array([beta, E]))
    if np.max(np.abs(res)) > 1e-10:
        raise ConvergenceError(f"stationary-point residual too large: {res}")
    return float(beta), float(E)


def solve_maximin_beta() -> float:
    """Root of 2 beta^3 var(E) = 1 on [0.1, 2]; residual < 1e-12."""
    def f(b):
        return 2.0 * b**3 * var_energy(GibbsPoint(ModelKind.COMPLEX, b)) - 1.0

    lo, hi = 0.1, 2.0
    if f(lo) * f(hi) >= 0:
        raise ConvergenceError("maximin equation does not bracket on [0.1, 2]")
    root = rootfind.brent(f, lo, hi, xtol=1e-15)
    # polish: the function is smooth and monotone here
    for _ in range(4):
        if abs(f(root)) < 1e-12:
            break
        h = 1e-7
        root -= f(root) * (2 * h) / (f(root + h) - f(root - h))
    if abs(f(root)) >= 1e-12:
        raise ConvergenceError(f"maximin residual {f(root)} >= 1e-12")
    return float(root)
