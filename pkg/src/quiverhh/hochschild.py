"""Weight-graded Hochschild homology of Leavitt path algebras.

For a quiver E without proper sources:

* weight 0: HH_0 = coker(1 - N^t), HH_1 = ker(1 - N^t) over the field;
* weight m != 0: HH_0 and HH_1 are the coinvariants and invariants of the
  rotation acting on closed paths of length |m|; both have dimension equal
  to the number of rotation orbits, in any characteristic;
* nothing in degrees >= 2.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import total_ordering

from . import exactlin
from .paths import (
    DEFAULT_PATH_CAP,
    PathCapExceeded,
    closed_paths,
    orbit_count_burnside,
    primitive_witness,
)
from .quiver import (
    Quiver,
    adjacency,
    eliminate_proper_sources,
    has_nontrivial_closed_path,
    is_acyclic,
    proper_sources,
    sinks,
)

DEFAULT_MAX_WEIGHT = 8


class PreconditionError(ValueError):
    """An input falls outside the hypotheses a formula needs."""


@total_ordering
class ExtNat:
    """A natural number or omega (countably infinite)."""

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        if value is not None and value < 0:
            raise ValueError("ExtNat must be nonnegative")
        self.value = value

    @classmethod
    def of(cls, x: "int | ExtNat | str") -> "ExtNat":
        if isinstance(x, ExtNat):
            return x
        if x == "inf":
            return OMEGA
        return cls(int(x))

    @property
    def is_omega(self) -> bool:
        return self.value is None

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other):
        other = ExtNat.of(other)
        if self.is_omega or other.is_omega:
            return OMEGA
        return ExtNat(self.value + other.value)

    __radd__ = __add__

    def __mul__(self, other):
        other = ExtNat.of(other)
        if self.value == 0 or other.value == 0:
            return ExtNat(0)
        if self.is_omega or other.is_omega:
            return OMEGA
        return ExtNat(self.value * other.value)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, str)):
            other = ExtNat.of(other)
        if not isinstance(other, ExtNat):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other):
        other = ExtNat.of(other)
        if self.is_omega:
            return False
        if other.is_omega:
            return True
        return self.value < other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "ExtNat(inf)" if self.is_omega else f"ExtNat({self.value})"

    def __str__(self):
        return "inf" if self.is_omega else str(self.value)

    def to_json(self) -> int | str:
        return "inf" if self.is_omega else self.value


OMEGA = ExtNat(None)
ZERO = ExtNat(0)
ONE = ExtNat(1)


@dataclass(frozen=True)
class GradedHHTable:
    """Entries (m, n) -> dim of the weight-m part of HH_n, for |m| <= weight_cutoff."""

    entries: dict[tuple[int, int], ExtNat]
    field_char: int
    weight_cutoff: int
    quiver: Quiver
    dimension_only: bool = False

    def entry(self, m: int, n: int) -> ExtNat:
        if n not in (0, 1):
            return ZERO
        if abs(m) > self.weight_cutoff:
            raise KeyError(f"weight {m} beyond the computed cutoff {self.weight_cutoff}")
        return self.entries[(m, n)]

    def rows(self, negative: bool = False) -> list[tuple[int, ExtNat, ExtNat]]:
        lo = -self.weight_cutoff if negative else 0
        return [(m, self.entry(m, 0), self.entry(m, 1)) for m in range(lo, self.weight_cutoff + 1)]


@dataclass(frozen=True)
class HHProfile:
    """Dimensions of HH_n by homological degree.

    Degrees past ``len(dims)`` are zero, unless ``all_degrees_nonzero`` is set,
    in which case they are guaranteed nonzero (and reported as omega).
    """

    dims: tuple[ExtNat, ...]
    all_degrees_nonzero: bool = False

    def __post_init__(self):
        dims = tuple(ExtNat.of(d) for d in self.dims)
        if not self.all_degrees_nonzero:
            while dims and dims[-1] == ZERO:
                dims = dims[:-1]
        object.__setattr__(self, "dims", dims)

    def dim(self, n: int) -> ExtNat:
        if n < len(self.dims):
            return self.dims[n]
        return OMEGA if self.all_degrees_nonzero else ZERO

    def to_json(self) -> dict:
        return {
            "dims": [d.to_json() for d in self.dims],
            "all_degrees_nonzero": self.all_degrees_nonzero,
        }


def _weight_zero(q: Quiver, char: int) -> tuple[int, int]:
    adj = adjacency(q)
    r = exactlin.rank(adj.one_minus_nt, char) if adj.nonsink_count else 0
    return adj.e0 - r, adj.nonsink_count - r


def _layer_dim(q: Quiver, m: int, path_cap: int, fallback: bool, verify: bool) -> tuple[int, bool]:
    """Orbit count for the weight-m layer; the flag says enumeration was skipped."""
    count = orbit_count_burnside(q, m)
    if not verify:
        return count, True
    try:
        layer = closed_paths(q, m, cap=path_cap)
    except PathCapExceeded:
        if not fallback:
            raise
        return count, True
    if layer.orbit_count != count:
        raise AssertionError(f"Burnside count {count} disagrees with enumeration {layer.orbit_count} at m={m}")
    return count, False


def hh_graded(
    q: Quiver,
    m_max: int = DEFAULT_MAX_WEIGHT,
    char: int = 0,
    *,
    path_cap: int = DEFAULT_PATH_CAP,
    fallback: bool = True,
    verify: bool = True,
    workers: int | None = None,
) -> GradedHHTable:
    """Graded HH table of L(q) for weights -m_max..m_max.

    *q* must have no proper sources (see :func:`hh`). With ``fallback`` the
    table is still produced when a layer is too large to enumerate.
    """
    exactlin.check_char(char)
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    bad = proper_sources(q)
    if bad:
        raise PreconditionError(
            f"quiver has proper sources {sorted(bad)}; apply eliminate_proper_sources "
            "(CLI: --eliminate-sources) first"
        )
    h0, h1 = _weight_zero(q, char)
    entries = {(0, 0): ExtNat(h0), (0, 1): ExtNat(h1)}
    if workers is None:
        workers = _thread_budget()
    ms = list(range(1, m_max + 1))
    job = lambda m: _layer_dim(q, m, path_cap, fallback, verify)  # noqa: E731
    if workers > 1 and len(ms) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, ms))
    else:
        results = [job(m) for m in ms]
    skipped = False
    for m, (count, dim_only) in zip(ms, results):
        skipped |= dim_only
        for n in (0, 1):
            entries[(m, n)] = entries[(-m, n)] = ExtNat(count)
    return GradedHHTable(entries, char, m_max, q, dimension_only=skipped)


def hh(q: Quiver, m_max: int = DEFAULT_MAX_WEIGHT, char: int = 0, **kwargs) -> GradedHHTable:
    """hh_graded after removing proper sources (which leaves HH unchanged)."""
    return hh_graded(eliminate_proper_sources(q), m_max, char, **kwargs)


def hh_acyclic(q: Quiver, m_max: int = 0) -> GradedHHTable:
    """L(q) for acyclic q is a product of matrix algebras, one per sink."""
    if not is_acyclic(q):
        raise PreconditionError("quiver has a nontrivial closed path")
    entries = {}
    for m in range(-m_max, m_max + 1):
        for n in (0, 1):
            entries[(m, n)] = ZERO
    entries[(0, 0)] = ExtNat(len(sinks(q)))
    return GradedHHTable(entries, 0, m_max, q)


def total_profile(t: GradedHHTable, q: Quiver | None = None) -> HHProfile:
    """Total HH by degree. A closed path makes infinitely many layers nonzero."""
    q = q if q is not None else t.quiver
    if has_nontrivial_closed_path(q):
        # every multiple of a cycle length is a nonzero layer in both degrees
        for m in range(1, t.weight_cutoff + 1):
            if t.entry(m, 0) != t.entry(m, 1):
                raise AssertionError(f"layer {m} has unequal HH_0 and HH_1")
        return HHProfile((OMEGA, OMEGA))
    return HHProfile((t.entry(0, 0), t.entry(0, 1)))


def profile_of(q: Quiver, char: int = 0) -> HHProfile:
    """Total HH profile of L(q), using just enough weights to see a closed path."""
    q = eliminate_proper_sources(q)
    w = primitive_witness(q)
    cutoff = w[1] if w else 0
    return total_profile(hh_graded(q, cutoff, char), q)


def nonvanishing_witness(q: Quiver, char: int = 0) -> int | None:
    """Length m of a shortest closed path; both weight-m groups are nonzero there."""
    w = primitive_witness(q)
    if w is None:
        return None
    _, m = w
    t = hh(q, m, char)
    if not (t.entry(m, 0) >= 1 and t.entry(m, 1) >= 1):
        raise AssertionError(f"weight {m} layer unexpectedly vanishes")
    return m


def layer_dims_by_rank(q: Quiver, m: int, char: int = 0) -> tuple[int, int]:
    """coker and ker dimensions of 1 - sigma on closed paths of length m, by elimination."""
    layer = closed_paths(q, m)
    n = len(layer.closed_paths)
    if n == 0:
        return 0, 0
    sig = layer.sigma(q)
    mat = [[0] * n for _ in range(n)]
    for j in range(n):
        mat[j][j] += 1
        mat[sig[j]][j] -= 1
    r = exactlin.rank(mat, char)
    return n - r, n - r


def _thread_budget() -> int:
    try:
        return max(1, int(os.environ.get("QH_THREADS", "1")))
    except ValueError:
        return 1


def table_to_json(t: GradedHHTable, negative: bool = False) -> dict:
    return {
        "field_char": t.field_char,
        "weights": [
            {"m": m, "hh0": h0.to_json(), "hh1": h1.to_json()} for m, h0, h1 in t.rows(negative)
        ],
        "profile": total_profile(t).to_json(),
        "dimension_only": t.dimension_only,
    }


__all__ = [
    "ExtNat",
    "OMEGA",
    "ZERO",
    "ONE",
    "GradedHHTable",
    "HHProfile",
    "PreconditionError",
    "hh_graded",
    "hh",
    "hh_acyclic",
    "total_profile",
    "profile_of",
    "nonvanishing_witness",
    "layer_dims_by_rank",
    "table_to_json",
]
