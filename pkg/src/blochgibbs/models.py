"""The five Gibbs canonical families over two-level systems.

Each family lives on the energy half-line E = -ln(1 - r^2) >= 0, where r
is the Bloch-ball radial coordinate (degree of polarization).  The four
power-law families share the structure function (1 - e^-E)^((m-1)/2) with
dimension parameter m in {1, 2, 4, 0}; the fifth uses the logarithmic
structure function 2 artanh sqrt(1 - e^-E).  All gamma-function ratios go
through differences of log_gamma, never through Gamma quotients.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import quadrature, specfun
from .errors import DomainError, PoleProximityError
from .specfun import digamma, log_gamma, log_gamma_signed, trigamma

__all__ = [
    "ModelKind",
    "GibbsPoint",
    "EnergyValue",
    "POWER_LAW_MODELS",
    "structure_function",
    "partition",
    "pdf",
    "mean_energy",
    "var_energy",
    "mean_polarization",
    "mean_energy_series",
    "integrated_density",
    "modal_beta_estimate",
    "modal_curvature",
    "approx_beta_small",
    "approx_beta_large",
    "mean_energy_asymptotic",
    "polarization_asymptotic",
    "reflection_identity_residual",
    "omega_complex",
    "atanh_omega",
]

_SQRT_PI = math.sqrt(math.pi)
_LN2 = math.log(2.0)


class ModelKind(enum.Enum):
    """The five canonical families."""

    REAL = "real"
    COMPLEX = "complex"
    QUATERNIONIC = "quaternionic"
    CLASSICAL = "classical"
    KMB = "kmb"

    @property
    def m(self) -> int | None:
        """Dimension parameter of the power-law families; None for KMB."""
        return _DIMENSION[self]

    @property
    def is_power_law(self) -> bool:
        return self is not ModelKind.KMB

    @property
    def omega_exponent(self) -> float | None:
        """(m - 1)/2, the structure-function exponent; None for KMB."""
        m = self.m
        return None if m is None else (m - 1) / 2.0

    @property
    def half_dof(self) -> float | None:
        """(m + 1)/2: 1, 3/2, 5/2, 1/2 for real/complex/quaternionic/classical."""
        m = self.m
        return None if m is None else (m + 1) / 2.0


_DIMENSION = {
    ModelKind.REAL: 1,
    ModelKind.COMPLEX: 2,
    ModelKind.QUATERNIONIC: 4,
    ModelKind.CLASSICAL: 0,
    ModelKind.KMB: None,
}

POWER_LAW_MODELS = (ModelKind.QUATERNIONIC, ModelKind.COMPLEX,
                    ModelKind.REAL, ModelKind.CLASSICAL)


@dataclass(frozen=True)
class GibbsPoint:
    """A (family, effective polarization temperature) evaluation point.

    beta = 0 is admitted at construction because the polarization mean has
    a continuous limit there; every partition-function-backed operation
    requires beta > 0 and raises otherwise.
    """

    model: ModelKind
    beta: float

    def __post_init__(self):
        if not isinstance(self.model, ModelKind):
            raise DomainError(f"model must be a ModelKind, got {self.model!r}")
        if not math.isfinite(self.beta) or self.beta < 0:
            raise DomainError(f"beta must be finite and >= 0, got {self.beta!r}")


@dataclass(frozen=True)
class EnergyValue:
    """Dimensionless energy E = -ln(1 - r^2) of a two-level state.

    E = 0 is the fully mixed state, E = inf the pure ones; `r` recovers
    the Bloch-vector length through the positive branch.
    """

    E: float

    def __post_init__(self):
        if math.isnan(self.E) or self.E < 0:
            raise DomainError(f"E must be >= 0, got {self.E!r}")

    @property
    def r(self) -> float:
        return 1.0 if math.isinf(self.E) else float(omega_complex(self.E))

    @classmethod
    def from_polarization(cls, r: float) -> "EnergyValue":
        if not 0.0 <= r <= 1.0:
            raise DomainError(f"r must lie in [0, 1], got {r!r}")
        if r == 1.0:
            return cls(E=math.inf)
        return cls(E=-math.log1p(-r * r))


def _require_positive_beta(point: GibbsPoint):
    if point.beta <= 0:
        raise DomainError(f"beta must be > 0, got {point.beta!r}")


def omega_complex(E):
    """sqrt(1 - e^-E), the complex-family structure function."""
    return np.sqrt(-np.expm1(-np.asarray(E, dtype=float)))


def atanh_omega(E):
    """artanh(sqrt(1 - e^-E)) = ln(1 + sqrt(1 - e^-E)) + E/2, overflow-free."""
    E = np.asarray(E, dtype=float)
    return np.log1p(omega_complex(E)) + 0.5 * E


def _as_float_or_array(x, scalar_in):
    return float(x) if scalar_in else x


def structure_function(model: ModelKind, E):
    """Density of states Omega(E) for E >= 0.

    Power-law families return (1 - e^-E)^((m-1)/2); the classical case
    diverges like E^(-1/2) at E = 0 (integrable) and returns inf there.
    The KMB family returns 2 artanh sqrt(1 - e^-E).
    """
    E_arr = np.asarray(E, dtype=float)
    scalar = E_arr.ndim == 0
    if np.any(E_arr < 0) or not np.all(np.isfinite(E_arr)):
        raise DomainError("structure_function requires finite E >= 0")
    if model is ModelKind.KMB:
        return _as_float_or_array(2.0 * atanh_omega(E_arr), scalar)
    expo = model.omega_exponent
    if expo == 0:
        out = np.ones_like(E_arr)
    else:
        with np.errstate(divide="ignore"):
            out = omega_complex(E_arr) ** (2.0 * expo)
    return _as_float_or_array(out, scalar)


def _log_partition_power(half_dof: float, beta: float) -> float:
    return log_gamma(half_dof) + log_gamma(beta) - log_gamma(half_dof + beta)


def partition(point: GibbsPoint) -> float:
    """Partition function Z(beta) = integral of e^(-beta E) Omega(E).

    The single expression Gamma((m+1)/2) Gamma(beta) / Gamma((m+1)/2+beta)
    covers all four power-law families; the KMB value is Z_classical/beta.
    """
    _require_positive_beta(point)
    beta = point.beta
    if point.model is ModelKind.KMB:
        return math.exp(_log_partition_power(0.5, beta)) / beta
    return math.exp(_log_partition_power(point.model.half_dof, beta))


def pdf(point: GibbsPoint, E):
    """Gibbs density e^(-beta E) Omega(E) / Z(beta); vectorized over E."""
    _require_positive_beta(point)
    E_arr = np.asarray(E, dtype=float)
    scalar = E_arr.ndim == 0
    if np.any(E_arr < 0) or not np.all(np.isfinite(E_arr)):
        raise DomainError("pdf requires finite E >= 0")
    z = partition(point)
    om = structure_function(point.model, E_arr)
    out = np.exp(-point.beta * E_arr) * om / z
    return _as_float_or_array(out, scalar)


def mean_energy(point: GibbsPoint) -> float:
    """<E> = -d/dbeta ln Z."""
    _require_positive_beta(point)
    beta = point.beta
    if point.model is ModelKind.KMB:
        return 1.0 / beta + digamma(0.5 + beta) - digamma(beta)
    return digamma(point.model.half_dof + beta) - digamma(beta)


def var_energy(point: GibbsPoint) -> float:
    """var(E) = d^2/dbeta^2 ln Z; strictly positive."""
    _require_positive_beta(point)
    beta = point.beta
    if point.model is ModelKind.KMB:
        return 1.0 / (beta * beta) + trigamma(beta) - trigamma(0.5 + beta)
    return trigamma(beta) - trigamma(point.model.half_dof + beta)


def _kmb_hyp_factor(beta: float, tol: float) -> specfun.SeriesResult:
    """3F2({1/2,1,2};{3/2,2+beta};1).

    For beta < 3 the series is first mapped by the two-term Thomae
    relation to 3F2({-1/2,beta,beta};{1+beta,1/2+beta};1), whose
    convergence excess is 2 regardless of beta; the slow small-beta
    regime then sums just as fast as any other.
    """
    if beta >= 3.0:
        return specfun.hyp_pfq_at_1([0.5, 1.0, 2.0], [1.5, 2.0 + beta], tol)
    pref = math.exp(log_gamma(1.5) + log_gamma(2.0 + beta) + log_gamma(beta)
                    - log_gamma(2.0) - log_gamma(1.0 + beta)
                    - log_gamma(0.5 + beta))
    res = specfun.hyp_pfq_at_1([-0.5, beta, beta], [1.0 + beta, 0.5 + beta],
                               tol / pref)
    return specfun.SeriesResult(value=pref * res.value,
                                terms_used=res.terms_used,
                                tail_bound=pref * res.tail_bound)


def mean_polarization(point: GibbsPoint) -> float:
    """<r>, the mean Bloch-vector length; 1 at beta = 0, -> 0 as beta -> inf.

    Power-law families use the closed gamma-ratio form
    Gamma(1+m/2) Gamma(1/2+beta+m/2) / (Gamma(1+beta+m/2) Gamma((1+m)/2));
    the KMB family evaluates its 3F2 series at tolerance 1e-12.
    """
    beta = point.beta
    if beta == 0.0:
        return 1.0
    if point.model is ModelKind.KMB:
        fac = _kmb_hyp_factor(beta, tol=1e-12)
        return (2.0 * beta * fac.value / _SQRT_PI
                * math.exp(log_gamma(0.5 + beta) - log_gamma(2.0 + beta)))
    m = point.model.m
    return math.exp(log_gamma(1.0 + m / 2.0) + log_gamma(0.5 + beta + m / 2.0)
                    - log_gamma(1.0 + beta + m / 2.0) - log_gamma((1.0 + m) / 2.0))


def mean_energy_series(beta: float, tol: float = 1e-8) -> specfun.SeriesResult:
    """<E> for the complex family from its Pochhammer series
    sum_{n>=1} (3/2)_n / (n (3/2+beta)_n), accelerated like the 3F2 above.
    """
    if beta <= 0:
        raise DomainError("mean_energy_series requires beta > 0")
    front = 1.5 / (1.5 + beta)
    if beta >= 3.0:
        res = specfun.hyp_pfq_at_1([1.0, 1.0, 2.5], [2.0, 2.5 + beta], tol / front)
    else:
        pref = math.exp(log_gamma(2.0) + log_gamma(2.5 + beta) + log_gamma(beta)
                        - log_gamma(2.5) - 2.0 * log_gamma(1.0 + beta))
        inner = specfun.hyp_pfq_at_1([-0.5, beta, beta],
                                     [1.0 + beta, 1.0 + beta],
                                     tol / (front * pref))
        res = specfun.SeriesResult(value=pref * inner.value,
                                   terms_used=inner.terms_used,
                                   tail_bound=pref * inner.tail_bound)
    return specfun.SeriesResult(value=front * res.value,
                                terms_used=res.terms_used,
                                tail_bound=front * res.tail_bound)


def integrated_density(model: ModelKind, E0: float) -> float:
    """N(E0) = integral of Omega over [0, E0].

    Closed forms for the four power-law families; the KMB value is defined
    by adaptive quadrature at absolute tolerance 1e-10.
    """
    if not math.isfinite(E0) or E0 < 0:
        raise DomainError("integrated_density requires finite E0 >= 0")
    if E0 == 0.0:
        return 0.0
    om = float(omega_complex(E0))
    ath = float(atanh_omega(E0))
    if model is ModelKind.COMPLEX:
        return 2.0 * (ath - om)
    if model is ModelKind.QUATERNIONIC:
        return 2.0 * (ath + om * (math.exp(-E0) - 4.0) / 3.0)
    if model is ModelKind.REAL:
        return E0
    if model is ModelKind.CLASSICAL:
        return 2.0 * ath
    # KMB: integrate 2 artanh(Omega_c) with the E = t^2 regularization,
    # which removes the sqrt cusp at the origin.
    T = math.sqrt(E0)
    res = quadrature.integrate_interval(
        lambda t: 4.0 * t * atanh_omega(t * t), 0.0, T, tol=1e-10)
    return res.value


def modal_beta_estimate(model: ModelKind, E: float) -> float:
    """Mode-matching estimate of beta from one energy: d/dE ln Omega(E).

    (m-1)/(2 (e^E - 1)) for the power-law families (identically 0 in the
    real case); the KMB analogue of the same derivative is
    1 / (2 r artanh r) with r = sqrt(1 - e^-E).
    """
    if not math.isfinite(E) or E <= 0:
        raise DomainError("modal_beta_estimate requires E > 0")
    if model is ModelKind.KMB:
        r = float(omega_complex(E))
        return 1.0 / (2.0 * r * float(atanh_omega(E)))
    if model is ModelKind.REAL:
        return 0.0
    return (model.m - 1) / (2.0 * math.expm1(E))


def modal_curvature(model: ModelKind, E: float) -> float:
    """-d^2/dE^2 ln Omega(E), the curvature companion of the modal estimate."""
    if not math.isfinite(E) or E <= 0:
        raise DomainError("modal_curvature requires E > 0")
    if model is ModelKind.KMB:
        r = float(omega_complex(E))
        a = float(atanh_omega(E))
        return (math.exp(-E) * a / (2.0 * r) + 0.5) / (2.0 * (r * a) ** 2)
    if model is ModelKind.REAL:
        return 0.0
    em1 = math.expm1(E)
    return ((model.m - 1) / 2.0) / (em1 * (-math.expm1(-E)))


def approx_beta_small(meanE: float) -> float:
    """Small-beta closed form beta ~ 1/(<E> - 2 - ln 2), complex family."""
    if not math.isfinite(meanE) or meanE <= 2.0 + _LN2:
        raise DomainError("approx_beta_small requires meanE > 2 + ln 2")
    return 1.0 / (meanE - 2.0 - _LN2)


def approx_beta_large(meanE: float) -> float:
    """Large-beta closed form beta ~ 3/(2 <E>), complex family."""
    if not math.isfinite(meanE) or meanE <= 0:
        raise DomainError("approx_beta_large requires meanE > 0")
    return 1.5 / meanE


_MEAN_E_ASYMPT = (1.5, -0.375, 0.25, -9.0 / 64.0, 1.0 / 16.0)


def mean_energy_asymptotic(beta: float, order: int) -> float:
    """Partial sum of the large-beta expansion of <E>, complex family:
    3/(2 b) - 3/(8 b^2) + 1/(4 b^3) - 9/(64 b^4) + 1/(16 b^5).
    """
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError("mean_energy_asymptotic requires beta > 0")
    if not 1 <= order <= 5:
        raise DomainError("order must be in 1..5")
    return sum(c / beta ** (k + 1) for k, c in enumerate(_MEAN_E_ASYMPT[:order]))


def polarization_asymptotic(beta: float) -> float:
    """Four-term large-beta expansion of <r>, complex family."""
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError("polarization_asymptotic requires beta > 0")
    rb = math.sqrt(beta)
    return (2.0 / rb - 1.25 / rb**3 + (73.0 / 64.0) / rb**5
            - (575.0 / 512.0) / rb**7) / _SQRT_PI


def reflection_identity_residual(beta: float) -> float:
    """|<r> 2 sqrt(pi) (beta+1) Gamma(3/2-beta) / ((4 beta^2-1) Gamma(-beta))
    - tan(pi beta)| for the complex family.

    Gamma at negative arguments goes through the reflection formula with
    sign tracking.  Points within 1e-3 of a half-integer or integer are
    rejected (poles of either side).
    """
    if not math.isfinite(beta) or beta <= 0:
        raise DomainError("reflection_identity_residual requires beta > 0")
    if abs(2.0 * beta - round(2.0 * beta)) < 2e-3:
        raise PoleProximityError(
            f"beta = {beta!r} is within 1e-3 of a pole (half-integer grid)")
    pol = mean_polarization(GibbsPoint(ModelKind.COMPLEX, beta))
    lg_num, s_num = log_gamma_signed(1.5 - beta)
    lg_den, s_den = log_gamma_signed(-beta)
    quad_fac = 4.0 * beta * beta - 1.0
    log_mag = (math.log(pol) + _LN2 + 0.5 * math.log(math.pi)
               + math.log1p(beta) + lg_num - math.log(abs(quad_fac)) - lg_den)
    sign = s_num * s_den * (1 if quad_fac > 0 else -1)
    lhs = sign * math.exp(log_mag)
    return abs(lhs - math.tan(math.pi * beta))
