"""Finite quivers: data model, parsing, standard families and adjacency data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .exactlin import Matrix


class QuiverParseError(ValueError):
    pass


class QuiverValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    dst: str


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph; loops and parallel arrows allowed.

    Arrows compose left to right: a path ``e1 e2`` requires ``e1.dst == e2.src``.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(Arrow(*a) if not isinstance(a, Arrow) else a for a in self.arrows))
        if not self.vertices:
            raise QuiverValidationError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverValidationError("duplicate vertex name")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverValidationError("duplicate arrow name")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.src not in vs or a.dst not in vs:
                raise QuiverValidationError(f"arrow {a.name!r} has an endpoint outside the vertex list")

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def out_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        """Outgoing arrows per vertex, sorted by name."""
        out = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.src].append(a)
        return {v: tuple(sorted(xs, key=lambda a: a.name)) for v, xs in out.items()}

    @cached_property
    def in_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        """Incoming arrows per vertex, sorted by name."""
        inc = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.dst].append(a)
        return {v: tuple(sorted(xs, key=lambda a: a.name)) for v, xs in inc.items()}

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "src": a.src, "dst": a.dst} for a in self.arrows],
        }

    def describe(self) -> str:
        return f"{len(self.vertices)} vertices, {len(self.arrows)} arrows"


# ---------------------------------------------------------------------------
# parsing


def parse_quiver(text: str, format: str | None = None) -> Quiver:
    """Parse the JSON or the terse text format (auto-detected if *format* is None)."""
    if format is None:
        format = "json" if text.lstrip().startswith("{") else "terse"
    if format == "json":
        return _parse_json(text)
    if format == "terse":
        return _parse_terse(text)
    raise ValueError(f"unknown quiver format {format!r}")


def _parse_json(text: str) -> Quiver:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or not isinstance(obj.get("vertices"), list) or not isinstance(obj.get("arrows", []), list):
        raise QuiverParseError('expected an object with "vertices" and "arrows" arrays')
    arrows = []
    for a in obj.get("arrows", []):
        if not isinstance(a, dict) or not all(isinstance(a.get(k), str) for k in ("name", "src", "dst")):
            raise QuiverParseError(f"malformed arrow entry {a!r}")
        arrows.append(Arrow(a["name"], a["src"], a["dst"]))
    if not all(isinstance(v, str) for v in obj["vertices"]):
        raise QuiverParseError("vertex names must be strings")
    return Quiver(tuple(obj["vertices"]), tuple(arrows))


def _parse_terse(text: str) -> Quiver:
    vertices = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            vertices = line.split()
            continue
        name, sep, rest = line.partition(":")
        src, arrow_sep, dst = rest.partition("->")
        name, src, dst = name.strip(), src.strip(), dst.strip()
        if not sep or not arrow_sep or not name or not src or not dst or len(src.split()) > 1 or len(dst.split()) > 1:
            raise QuiverParseError(f"line {lineno}: expected 'name: src -> dst', got {raw!r}")
        arrows.append(Arrow(name, src, dst))
    if vertices is None:
        raise QuiverParseError("no vertex line found")
    return Quiver(tuple(vertices), tuple(arrows))


def to_terse(q: Quiver) -> str:
    lines = [" ".join(q.vertices)]
    lines += [f"{a.name}: {a.src} -> {a.dst}" for a in q.arrows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# standard families


def rose(n: int) -> Quiver:
    """One vertex with n loops; its Leavitt path algebra is L_n (k[t, 1/t] for n=1)."""
    _check_n(n)
    names = ["a", "b", "c", "d", "e", "f", "g", "h"]
    letters = names[:n] if n <= len(names) else [f"a{i}" for i in range(1, n + 1)]
    return Quiver(("v",), tuple(Arrow(x, "v", "v") for x in letters))


def e_n(n: int) -> Quiver:
    """Vertices v, w; loops e1..en at v and arrows f1..fn from v to w."""
    _check_n(n)
    loops = [Arrow(f"e{i}", "v", "v") for i in range(1, n + 1)]
    out = [Arrow(f"f{i}", "v", "w") for i in range(1, n + 1)]
    return Quiver(("v", "w"), tuple(loops + out))


def cycle(n: int) -> Quiver:
    _check_n(n)
    vs = tuple(f"v{i}" for i in range(n))
    return Quiver(vs, tuple(Arrow(f"c{i}", vs[i], vs[(i + 1) % n]) for i in range(n)))


def line(n: int) -> Quiver:
    """The A_n quiver v1 -> v2 -> ... -> vn."""
    _check_n(n)
    vs = tuple(f"v{i}" for i in range(1, n + 1))
    return Quiver(vs, tuple(Arrow(f"x{i}", vs[i - 1], vs[i]) for i in range(1, n)))


def standard_quiver(kind: str, n: int) -> Quiver:
    try:
        fn = {"rose": rose, "e_n": e_n, "cycle": cycle, "line": line}[kind]
    except KeyError:
        raise ValueError(f"unknown quiver family {kind!r}") from None
    return fn(n)


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


# ---------------------------------------------------------------------------
# structure


def sinks(q: Quiver) -> frozenset[str]:
    return frozenset(v for v in q.vertices if not q.out_arrows[v])


def sources(q: Quiver) -> frozenset[str]:
    return frozenset(v for v in q.vertices if not q.in_arrows[v])


def proper_sources(q: Quiver) -> frozenset[str]:
    return frozenset(v for v in q.vertices if not q.in_arrows[v] and q.out_arrows[v])


def is_acyclic(q: Quiver) -> bool:
    white, grey, black = 0, 1, 2
    color = dict.fromkeys(q.vertices, white)
    for root in q.vertices:
        if color[root] != white:
            continue
        color[root] = grey
        stack = [(root, iter(q.out_arrows[root]))]
        while stack:
            v, it = stack[-1]
            a = next(it, None)
            if a is None:
                color[v] = black
                stack.pop()
                continue
            c = color[a.dst]
            if c == grey:
                return False
            if c == white:
                color[a.dst] = grey
                stack.append((a.dst, iter(q.out_arrows[a.dst])))
    return True


def has_nontrivial_closed_path(q: Quiver) -> bool:
    return not is_acyclic(q)


def eliminate_proper_sources(q: Quiver) -> Quiver:
    """Repeatedly drop vertices with no incoming and some outgoing arrows."""
    while True:
        drop = proper_sources(q)
        if not drop:
            return q
        q = Quiver(
            tuple(v for v in q.vertices if v not in drop),
            tuple(a for a in q.arrows if a.src not in drop),
        )


@dataclass(frozen=True)
class AdjacencyData:
    """Adjacency matrices in the sinks-first vertex order.

    ``one_minus_nt`` is the e0 x (e0 - #sinks) matrix (0; 1) - N^t whose
    kernel and cokernel give the weight-zero HH and the K-groups.
    """

    vertex_order: tuple[str, ...]
    sink_count: int
    n_prime: Matrix
    n_reduced: Matrix
    one_minus_nt: Matrix

    @property
    def e0(self) -> int:
        return len(self.vertex_order)

    @property
    def nonsink_count(self) -> int:
        return self.e0 - self.sink_count


def adjacency(q: Quiver) -> AdjacencyData:
    sk = sinks(q)
    order = tuple(v for v in q.vertices if v in sk) + tuple(v for v in q.vertices if v not in sk)
    idx = {v: i for i, v in enumerate(order)}
    e0, s = len(order), len(sk)
    n_prime = [[0] * e0 for _ in range(e0)]
    for a in q.arrows:
        n_prime[idx[a.src]][idx[a.dst]] += 1
    n_reduced = [row[:] for row in n_prime[s:]]
    omn = [[(1 if i - s == j else 0) - n_reduced[j][i] for j in range(e0 - s)] for i in range(e0)]
    return AdjacencyData(order, s, n_prime, n_reduced, omn)
