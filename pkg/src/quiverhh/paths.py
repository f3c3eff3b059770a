"""Paths, closed paths, the rotation action on them and its orbit counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exactlin import matmul, identity
from .quiver import Quiver, adjacency

DEFAULT_PATH_CAP = 10**6


class PathCapExceeded(RuntimeError):
    """Too many closed paths to enumerate; use Burnside counting instead."""


@dataclass(frozen=True, order=True)
class Path:
    """A path as a tuple of arrow names; empty means the trivial path at ``basepoint``."""

    arrows: tuple[str, ...]
    basepoint: str

    def __len__(self) -> int:
        return len(self.arrows)

    def word(self) -> str:
        return " ".join(self.arrows) if self.arrows else f"({self.basepoint})"


def source(q: Quiver, p: Path) -> str:
    return p.basepoint


def range_(q: Quiver, p: Path) -> str:
    return q.arrow_map[p.arrows[-1]].dst if p.arrows else p.basepoint


def is_closed(q: Quiver, p: Path) -> bool:
    return bool(p.arrows) and range_(q, p) == p.basepoint


def concat(q: Quiver, p: Path, r: Path) -> Path:
    if range_(q, p) != r.basepoint:
        raise ValueError("paths do not compose")
    return Path(p.arrows + r.arrows, p.basepoint)


def paths_to(q: Quiver, n: int, i: str) -> list[Path]:
    """All paths of length n ending at vertex i, ordered lexicographically by arrow names."""
    if i not in q.vertices:
        raise KeyError(f"unknown vertex {i!r}")
    if n < 0:
        raise ValueError("negative path length")
    # grow backwards from i, then sort
    layer = [((), i)]
    for _ in range(n):
        layer = [((a.name,) + arrows, a.src) for arrows, start in layer for a in q.in_arrows[start]]
    return sorted(Path(arrows, start) for arrows, start in layer)


def paths_from(q: Quiver, n: int, i: str) -> list[Path]:
    out: list[Path] = []

    def grow(v: str, acc: tuple[str, ...]) -> None:
        if len(acc) == n:
            out.append(Path(acc, i))
            return
        for a in q.out_arrows[v]:
            grow(a.dst, acc + (a.name,))

    grow(i, ())
    return out


def all_paths(q: Quiver, n: int) -> list[Path]:
    return sorted(p for v in q.vertices for p in paths_to(q, n, v))


def rotate(q: Quiver, p: Path) -> Path:
    """e1 e2 ... em  ->  e2 ... em e1 (basepoint moves to the range of e1)."""
    if not p.arrows:
        return p
    first = q.arrow_map[p.arrows[0]]
    return Path(p.arrows[1:] + p.arrows[:1], first.dst)


def least_rotation(q: Quiver, p: Path) -> Path:
    best = p
    cur = p
    for _ in range(len(p) - 1):
        cur = rotate(q, cur)
        if cur < best:
            best = cur
    return best


@dataclass(frozen=True)
class WeightLayer:
    """All closed paths of length m together with their rotation orbits."""

    m: int
    closed_paths: tuple[Path, ...]
    orbits: tuple[tuple[Path, ...], ...]

    @cached_property
    def index(self) -> dict[Path, int]:
        return {p: i for i, p in enumerate(self.closed_paths)}

    def sigma(self, q: Quiver) -> list[int]:
        """Rotation as a permutation of indices into ``closed_paths``."""
        return [self.index[rotate(q, p)] for p in self.closed_paths]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)


def closed_paths(q: Quiver, m: int, cap: int = DEFAULT_PATH_CAP) -> WeightLayer:
    if m < 1:
        raise ValueError("closed paths have length >= 1")
    expected = trace_power(q, m)
    if expected > cap:
        raise PathCapExceeded(
            f"{expected} closed paths of length {m} exceed the cap of {cap}; "
            "use orbit_count_burnside (dimension-only mode)"
        )
    found: list[Path] = []
    for v in sorted(q.vertices):
        # DFS over out-arrows in name order gives lexicographic output per basepoint
        stack = [(v, ())]
        while stack:
            cur, acc = stack.pop()
            if len(acc) == m:
                if cur == v:
                    found.append(Path(acc, v))
                continue
            for a in reversed(q.out_arrows[cur]):
                stack.append((a.dst, acc + (a.name,)))
    found.sort()
    seen: set[Path] = set()
    orbits = []
    for p in found:
        if p in seen:
            continue
        orb = [p]
        cur = rotate(q, p)
        while cur != p:
            orb.append(cur)
            cur = rotate(q, cur)
        seen.update(orb)
        orbits.append(tuple(sorted(orb)))
    orbits.sort(key=lambda o: o[0])
    return WeightLayer(m, tuple(found), tuple(orbits))


def matrix_power(a: list[list[int]], k: int) -> list[list[int]]:
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def trace_power(q: Quiver, m: int) -> int:
    """Number of closed paths of length m, as trace(N'^m)."""
    p = matrix_power(adjacency(q).n_prime, m)
    return sum(p[i][i] for i in range(len(p)))


def totient(n: int) -> int:
    result = n
    k = 2
    x = n
    while k * k <= x:
        if x % k == 0:
            while x % k == 0:
                x //= k
            result -= result // k
        k += 1
    if x > 1:
        result -= result // x
    return result


def orbit_count_burnside(q: Quiver, m: int) -> int:
    """Rotation orbits on closed paths of length m: (1/m) sum_{d|m} phi(m/d) tr(N'^d)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = sum(totient(m // d) * trace_power(q, d) for d in range(1, m + 1) if m % d == 0)
    assert total % m == 0
    return total // m


def is_primitive(p: Path) -> bool:
    """True unless p is a k-fold repetition (k >= 2) of a shorter closed path."""
    n = len(p)
    if n == 0:
        return False
    w = p.arrows
    for d in range(1, n):
        if n % d == 0 and w == w[:d] * (n // d):
            return False
    return True


def primitive_witness(q: Quiver) -> tuple[Path, int] | None:
    """A shortest closed path and its length, or None for acyclic quivers."""
    best: Path | None = None
    for v in q.vertices:
        # BFS back to v; parents record the first arrow reaching each vertex
        parent: dict[str, tuple[str, str] | None] = {v: None}
        frontier = [v]
        hit = None
        while frontier and hit is None:
            nxt = []
            for u in frontier:
                for a in q.out_arrows[u]:
                    if a.dst == v:
                        hit = (u, a.name)
                        break
                    if a.dst not in parent:
                        parent[a.dst] = (u, a.name)
                        nxt.append(a.dst)
                if hit:
                    break
            frontier = nxt
        if hit is None:
            continue
        u, last = hit
        arrows = [last]
        while parent[u] is not None:
            u, name = parent[u]
            arrows.append(name)
        cand = Path(tuple(reversed(arrows)), v)
        if best is None or len(cand) < len(best):
            best = cand
    if best is None:
        return None
    return best, len(best)
