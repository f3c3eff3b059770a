"""Kunneth products of HH profiles and the Morita-distinguishing verdict.

HH of a tensor product is the convolution of the factors' HH by degree. When
every factor has HH_0 and HH_1 nonzero and nothing above degree 1, an n-fold
product has top degree exactly n and an infinite product is nonzero in every
degree. Hochschild homology is Morita invariant, so differing profiles
separate algebras; equal profiles decide nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence, Union

from .hochschild import OMEGA, ONE, ZERO, ExtNat, HHProfile, PreconditionError, profile_of
from .quiver import Quiver, eliminate_proper_sources, has_nontrivial_closed_path


class _LInfinity:
    """Marker for L_inf, which is not the Leavitt path algebra of a finite quiver."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Linf"


LINF = _LInfinity()
Factor = Union[Quiver, _LInfinity]

# HH(L_inf) as the colimit over the E_n quivers: weight 0 is (k, 0), every
# other weight carries the rotation classes of words in countably many letters.
LINF_PROFILE = HHProfile((OMEGA, OMEGA))
LINF_WEIGHT_ZERO = (1, 0)

IDENTITY_PROFILE = HHProfile((ONE,))


class Verdict(str, Enum):
    DISTINGUISHED = "DISTINGUISHED"
    NOT_DISTINGUISHED = "NOT_DISTINGUISHED"


@dataclass(frozen=True)
class TensorSpec:
    factors: tuple[Factor, ...] = ()
    infinite_repeat: Factor | None = None
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors and self.infinite_repeat is None:
            raise ValueError("a tensor spec needs at least one factor")

    def describe(self) -> str:
        if self.labels:
            return " (x) ".join(self.labels)
        parts = [repr(f) if f is LINF else f"L({f.describe()})" for f in self.factors]
        if self.infinite_repeat is not None:
            f = self.infinite_repeat
            parts.append(("Linf" if f is LINF else f"L({f.describe()})") + "^(x)inf")
        return " (x) ".join(parts)


@dataclass(frozen=True)
class DistinguishResult:
    verdict: Verdict
    witness_degree: int | None
    profiles: tuple[HHProfile, HHProfile]
    horizon: int

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness_degree": self.witness_degree,
            "horizon": self.horizon,
            "profiles": [p.to_json() for p in self.profiles],
        }


def kunneth_product(profiles: Sequence[HHProfile]) -> HHProfile:
    """Degreewise convolution with ExtNat arithmetic."""
    if not profiles:
        raise ValueError("kunneth_product needs at least one profile")
    flagged = any(p.all_degrees_nonzero for p in profiles)
    if flagged and any(not p.dim(0) for p in profiles):
        raise PreconditionError("a factor with HH_0 = 0 can kill degrees of an infinite product")
    horizon = sum(max(len(p.dims), 1) for p in profiles)
    acc = [profiles[0].dim(n) for n in range(horizon)]
    for p in profiles[1:]:
        other = [p.dim(n) for n in range(horizon)]
        acc = [sum((acc[i] * other[n - i] for i in range(n + 1)), ZERO) for n in range(horizon)]
    return HHProfile(tuple(acc), all_degrees_nonzero=flagged)


def _check_factor_hypotheses(p: HHProfile) -> None:
    if p.all_degrees_nonzero:
        raise PreconditionError("factor already has HH in every degree")
    if not p.dim(0) or not p.dim(1):
        raise PreconditionError(f"factor needs HH_0 and HH_1 nonzero, got {p.to_json()['dims']}")
    if len(p.dims) > 2:
        raise PreconditionError("factor has HH above degree 1")


def infinite_tensor_profile(factor: HHProfile) -> HHProfile:
    """Profile of the countable tensor power of an algebra with HH in degrees 0, 1 only."""
    _check_factor_hypotheses(factor)
    # HH_n is a sum over n-subsets of the index set of HH_1's tensored with HH_0's
    d0 = ONE if factor.dim(0) == ONE else OMEGA
    return HHProfile((d0,), all_degrees_nonzero=True)


def top_degree(p: HHProfile) -> ExtNat:
    if p.all_degrees_nonzero:
        return OMEGA
    if not p.dims:
        raise ValueError("zero profile has no top degree")
    return ExtNat(len(p.dims) - 1)


def factor_profile(f: Factor, char: int = 0) -> HHProfile:
    if f is LINF:
        return LINF_PROFILE
    q = eliminate_proper_sources(f)
    if not has_nontrivial_closed_path(q):
        raise PreconditionError(
            "factor quiver is acyclic; the distinguisher needs every factor to have a closed path"
        )
    return profile_of(q, char)


def spec_profile(spec: TensorSpec, char: int = 0) -> HHProfile:
    profiles = [factor_profile(f, char) for f in spec.factors]
    if spec.infinite_repeat is not None:
        profiles.append(infinite_tensor_profile(factor_profile(spec.infinite_repeat, char)))
    return kunneth_product(profiles)


def compare_profiles(pa: HHProfile, pb: HHProfile) -> DistinguishResult:
    tops = [top_degree(p) for p in (pa, pb)]
    finite = [t.value for t in tops if not t.is_omega]
    if finite:
        horizon = max(finite) + 1
    else:
        horizon = max(len(pa.dims), len(pb.dims)) + 1
    for n in range(horizon + 1):
        if pa.dim(n) != pb.dim(n):
            return DistinguishResult(Verdict.DISTINGUISHED, n, (pa, pb), horizon)
    return DistinguishResult(Verdict.NOT_DISTINGUISHED, None, (pa, pb), horizon)


def distinguish(a: TensorSpec, b: TensorSpec, char: int = 0) -> DistinguishResult:
    """Separate two tensor products by their HH profiles, if the profiles differ."""
    return compare_profiles(spec_profile(a, char), spec_profile(b, char))
