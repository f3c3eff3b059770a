"""Brute-force Hochschild homology of finite-dimensional algebras.

This is the independent check on the closed formulas in :mod:`hochschild`.
Algebras are given by structure constants; HH is the homology of the
(unnormalized) bar complex M (x) A^(x)n with the usual boundary

    b(a0 (x) ... (x) an) = sum_{i<n} (-1)^i a0 (x) ... (x) a_i a_{i+1} (x) ... (x) an
                           + (-1)^n an a0 (x) a1 (x) ... (x) a_{n-1}.

The finite-dimensional approximants of L(E) are built on monomial bases:
L_{0,n} from matrix units gamma nu^* and the weight-m bimodule L_{m,n} from
alpha theta beta^*. Structure constants are integers, so every complex is
defined over Z and ranks can be taken over Q or any F_p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .exactlin import SparseEchelon, check_char
from .paths import Path, all_paths, closed_paths, paths_from, paths_to
from .quiver import Quiver, is_acyclic, sinks, sources

DEFAULT_ALGEBRA_CAP = 64
DEFAULT_CHAIN_CAP = 10**5

SparseVec = dict[int, int]


class OracleCapExceeded(RuntimeError):
    pass


class OracleContradiction(AssertionError):
    """A brute-force computation disagrees with the closed formula."""


def _axpy(acc: SparseVec, coeff: int, vec: SparseVec) -> None:
    for k, x in vec.items():
        y = acc.get(k, 0) + coeff * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


# ---------------------------------------------------------------------------
# algebras and bimodules


@dataclass
class StructureAlgebra:
    """Unital algebra with basis e_0..e_{d-1} and e_i e_j = sum_k mult[i][j][k] e_k."""

    labels: list[Hashable]
    mult: list[list[SparseVec]]
    unit: SparseVec
    weights: list[int] | None = None
    check: bool = True

    def __post_init__(self):
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if self.check:
            self.verify()

    @property
    def dim(self) -> int:
        return len(self.labels)

    def mul_vec(self, u: SparseVec, v: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for i, x in u.items():
            row = self.mult[i]
            for j, y in v.items():
                if row[j]:
                    _axpy(out, x * y, row[j])
        return out

    def verify(self) -> None:
        d = self.dim
        basis = [{i: 1} for i in range(d)]
        for i in range(d):
            for j in range(d):
                ij = self.mult[i][j]
                for k in range(d):
                    left = self.mul_vec(ij, basis[k])
                    right = self.mul_vec(basis[i], self.mult[j][k])
                    if left != right:
                        raise ValueError(f"not associative at {self.labels[i], self.labels[j], self.labels[k]}")
        for i in range(d):
            if self.mul_vec(self.unit, basis[i]) != basis[i] or self.mul_vec(basis[i], self.unit) != basis[i]:
                raise ValueError(f"unit law fails at {self.labels[i]}")
        if self.weights is not None:
            for i in range(d):
                for j in range(d):
                    for k in self.mult[i][j]:
                        if self.weights[k] != self.weights[i] + self.weights[j]:
                            raise ValueError("multiplication does not respect the grading")


@dataclass
class Bimodule:
    """Bimodule over a StructureAlgebra; left[a][x] is the sparse vector e_a . x."""

    algebra: StructureAlgebra
    labels: list[Hashable]
    left: list[list[SparseVec]]
    right: list[list[SparseVec]]
    weights: list[int] | None = None
    check: bool = True

    def __post_init__(self):
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if self.check:
            self.verify()

    @property
    def dim(self) -> int:
        return len(self.labels)

    def act_left(self, a: SparseVec, x: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for i, c in a.items():
            li = self.left[i]
            for j, y in x.items():
                if li[j]:
                    _axpy(out, c * y, li[j])
        return out

    def act_right(self, x: SparseVec, a: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for i, c in a.items():
            ri = self.right[i]
            for j, y in x.items():
                if ri[j]:
                    _axpy(out, c * y, ri[j])
        return out

    def verify(self) -> None:
        A = self.algebra
        da, dm = A.dim, self.dim
        for x in range(dm):
            ex = {x: 1}
            if self.act_left(A.unit, ex) != ex or self.act_right(ex, A.unit) != ex:
                raise ValueError(f"unit does not act as identity on {self.labels[x]}")
        for a in range(da):
            for b in range(da):
                ab = A.mult[a][b]
                for x in range(dm):
                    ex = {x: 1}
                    if self.act_left(ab, ex) != self.act_left({a: 1}, self.left[b][x]):
                        raise ValueError("left action is not associative")
                    if self.act_right(ex, ab) != self.act_right(self.right[a][x], {b: 1}):
                        raise ValueError("right action is not associative")
                    if self.act_right(self.left[a][x], {b: 1}) != self.act_left({a: 1}, self.right[b][x]):
                        raise ValueError("left and right actions do not commute")


def regular_bimodule(A: StructureAlgebra) -> Bimodule:
    d = A.dim
    left = [[A.mult[a][x] for x in range(d)] for a in range(d)]
    right = [[A.mult[x][a] for x in range(d)] for a in range(d)]
    return Bimodule(A, list(A.labels), left, right, weights=A.weights, check=False)


def matrix_units_algebra(blocks: Sequence[Sequence[Hashable]], check: bool = True) -> StructureAlgebra:
    """Product of full matrix algebras; block b has rows/cols indexed by blocks[b].

    Basis element (g, h) is the matrix unit with (g, h)(g', h') = [h = g'] (g, h').
    Row labels must be distinct across blocks.
    """
    labels = []
    for blk in blocks:
        labels.extend((g, h) for g in blk for h in blk)
    index = {lab: i for i, lab in enumerate(labels)}
    block_of = {g: b for b, blk in enumerate(blocks) for g in blk}
    d = len(labels)
    mult: list[list[SparseVec]] = [[{} for _ in range(d)] for _ in range(d)]
    for i, (g, h) in enumerate(labels):
        for h2 in blocks[block_of[h]]:
            mult[i][index[(h, h2)]] = {index[(g, h2)]: 1}
    unit = {index[(g, g)]: 1 for blk in blocks for g in blk}
    return StructureAlgebra(labels, mult, unit, check=check)


def matrix_algebra(n: int) -> StructureAlgebra:
    return matrix_units_algebra([list(range(n))])


def ground_field() -> StructureAlgebra:
    return matrix_algebra(1)


def path_algebra(q: Quiver) -> StructureAlgebra:
    """Path algebra of an acyclic quiver, graded by path length."""
    if not is_acyclic(q):
        raise ValueError("path algebra is infinite-dimensional for a quiver with cycles")
    basis: list[Path] = []
    n = 0
    while True:
        layer = all_paths(q, n)
        if not layer:
            break
        basis.extend(layer)
        n += 1
    index = {p: i for i, p in enumerate(basis)}
    d = len(basis)

    def rng(p: Path) -> str:
        return q.arrow_map[p.arrows[-1]].dst if p.arrows else p.basepoint

    mult = [[{} for _ in range(d)] for _ in range(d)]
    for i, p in enumerate(basis):
        for j, r in enumerate(basis):
            if rng(p) == r.basepoint:
                mult[i][j] = {index[Path(p.arrows + r.arrows, p.basepoint)]: 1}
    unit = {index[Path((), v)]: 1 for v in q.vertices}
    return StructureAlgebra(basis, mult, unit, weights=[len(p) for p in basis])


# ---------------------------------------------------------------------------
# Hochschild complex


def _chain_dims(A: StructureAlgebra, M: Bimodule, top: int) -> list[int]:
    return [M.dim * A.dim**k for k in range(top + 1)]


def boundary_column(A: StructureAlgebra, M: Bimodule, k: int, idx: int) -> SparseVec:
    """b applied to the idx-th basis tensor of C_k, as a sparse vector in C_{k-1}."""
    da = A.dim
    # decode idx = x * da^k + a1 * da^(k-1) + ... + ak
    parts = []
    rest = idx
    for _ in range(k):
        rest, r = divmod(rest, da)
        parts.append(r)
    x = rest
    a = parts[::-1]
    out: SparseVec = {}

    def encode(x0: int, tail: Sequence[int]) -> int:
        v = x0
        for t in tail:
            v = v * da + t
        return v

    # first face: x a1
    for y, c in M.right[a[0]][x].items():
        key = encode(y, a[1:])
        out[key] = out.get(key, 0) + c
    for i in range(1, k):
        sign = -1 if i % 2 else 1
        for z, c in A.mult[a[i - 1]][a[i]].items():
            key = encode(x, a[: i - 1] + [z] + a[i + 1 :])
            out[key] = out.get(key, 0) + sign * c
    sign = -1 if k % 2 else 1
    for y, c in M.left[a[k - 1]][x].items():
        key = encode(y, a[: k - 1])
        out[key] = out.get(key, 0) + sign * c
    return {key: c for key, c in out.items() if c}


def boundary_rank(A: StructureAlgebra, M: Bimodule, k: int, char: int = 0, bound: int | None = None) -> int:
    """Rank of b: C_k -> C_{k-1}; stops early once *bound* is reached."""
    ech = SparseEchelon(char)
    for idx in range(M.dim * A.dim**k):
        col = boundary_column(A, M, k, idx)
        if col:
            ech.add(col)
            if bound is not None and ech.rank >= bound:
                break
    return ech.rank


def hochschild_dims(
    A: StructureAlgebra,
    M: Bimodule,
    n_max: int,
    char: int = 0,
    *,
    chain_cap: int = DEFAULT_CHAIN_CAP,
) -> list[int]:
    """dim HH_k(A, M) for k = 0..n_max, over Q (char 0) or F_p."""
    check_char(char)
    if M.algebra is not A and M.algebra.labels != A.labels:
        raise ValueError("bimodule is over a different algebra")
    dims = _chain_dims(A, M, n_max + 1)
    if sum(dims) > chain_cap:
        raise OracleCapExceeded(
            f"bar complex up to degree {n_max + 1} has total dimension {sum(dims)} > cap {chain_cap}"
        )
    ranks = [0]
    for k in range(1, n_max + 2):
        # rank b_k <= dim ker b_{k-1}
        ranks.append(boundary_rank(A, M, k, char, bound=dims[k - 1] - ranks[k - 1]))
    return [dims[k] - ranks[k] - ranks[k + 1] for k in range(n_max + 1)]


def boundary_squares_to_zero(A: StructureAlgebra, M: Bimodule, k: int) -> bool:
    """Check b_{k-1} . b_k = 0 on every basis tensor of C_k (k >= 2)."""
    for idx in range(M.dim * A.dim**k):
        acc: SparseVec = {}
        for j, c in boundary_column(A, M, k, idx).items():
            _axpy(acc, c, boundary_column(A, M, k - 1, j))
        if acc:
            return False
    return True


def boundary_preserves_weight(A: StructureAlgebra, M: Bimodule, k: int) -> bool:
    """For graded A and M, each weight subcomplex is preserved by b_k."""
    if A.weights is None or M.weights is None:
        raise ValueError("algebra and bimodule must both be graded")
    da = A.dim

    def weight(idx: int, deg: int) -> int:
        w = 0
        for _ in range(deg):
            idx, r = divmod(idx, da)
            w += A.weights[r]
        return w + M.weights[idx]

    for idx in range(M.dim * da**k):
        w = weight(idx, k)
        if any(weight(j, k - 1) != w for j in boundary_column(A, M, k, idx)):
            return False
    return True


# ---------------------------------------------------------------------------
# approximants of L(E)


def l0n_blocks(q: Quiver, n: int) -> list[tuple[str, int, list[Path]]]:
    """Simple factors of L_{0,n}: (vertex, path length, paths) with nonempty paths."""
    if n < 0:
        raise ValueError("level must be >= 0")
    sk = sinks(q)
    blocks = []
    for m in range(n):
        for i in q.vertices:
            if i in sk:
                ps = paths_to(q, m, i)
                if ps:
                    blocks.append((i, m, ps))
    for i in q.vertices:
        ps = paths_to(q, n, i)
        if ps:
            blocks.append((i, n, ps))
    return blocks


def build_l0n(q: Quiver, n: int, cap: int = DEFAULT_ALGEBRA_CAP) -> StructureAlgebra:
    """L_{0,n} as a product of matrix algebras, basis gamma nu^* labelled (gamma, nu)."""
    blocks = l0n_blocks(q, n)
    total = sum(len(ps) ** 2 for _, _, ps in blocks)
    if total > cap:
        raise OracleCapExceeded(f"L_0,{n} has dimension {total} > cap {cap}")
    return matrix_units_algebra([ps for _, _, ps in blocks])


def _oracle_quiver_check(q: Quiver) -> None:
    bad = sorted(sinks(q) | sources(q))
    if bad:
        raise ValueError(f"the weight-m bimodules need a quiver without sinks or sources; offending vertices {bad}")


def lmn_basis(q: Quiver, m: int, n: int) -> list[tuple[Path, Path, Path]]:
    """Triples (alpha, theta, beta) spanning L_{m,n} as alpha theta beta^*."""
    out = []
    for alpha in all_paths(q, n):
        for theta in sorted(paths_from(q, abs(m), _range(q, alpha))):
            for beta in paths_to(q, n, _range(q, theta)):
                out.append((alpha, theta, beta))
    return out


def build_lmn(
    q: Quiver,
    m: int,
    n: int,
    algebra: StructureAlgebra | None = None,
    cap: int = DEFAULT_ALGEBRA_CAP * 16,
) -> Bimodule:
    """The L_{0,n}-bimodule L_{m,n} (m != 0) on the basis alpha theta beta^*.

    For m < 0 the basis is the adjoint beta theta^* alpha^* of the |m| basis;
    the actions are those of |m| composed with the adjoint on the algebra.
    """
    if m == 0:
        raise ValueError("weight must be nonzero; use regular_bimodule for weight 0")
    _oracle_quiver_check(q)
    A = algebra if algebra is not None else build_l0n(q, n)
    basis = lmn_basis(q, m, n)
    if len(basis) > cap:
        raise OracleCapExceeded(f"L_{m},{n} has dimension {len(basis)} > cap {cap}")
    index = {t: i for i, t in enumerate(basis)}
    d = len(basis)
    pos_left = [[{} for _ in range(d)] for _ in range(A.dim)]
    pos_right = [[{} for _ in range(d)] for _ in range(A.dim)]
    for a, (g, h) in enumerate(A.labels):
        for x, (alpha, theta, beta) in enumerate(basis):
            if h == alpha:
                pos_left[a][x] = {index[(g, theta, beta)]: 1}
            if beta == g:
                pos_right[a][x] = {index[(alpha, theta, h)]: 1}
    if m > 0:
        left, right = pos_left, pos_right
    else:
        star = [A.index[(h, g)] for (g, h) in A.labels]
        left = [pos_right[star[a]] for a in range(A.dim)]
        right = [pos_left[star[a]] for a in range(A.dim)]
    weights = [m] * d
    return Bimodule(A, basis, left, right, weights=weights)


def graded_l0n(q: Quiver, n: int) -> StructureAlgebra:
    """build_l0n with the (trivial) weight grading attached."""
    A = build_l0n(q, n)
    A.weights = [0] * A.dim
    return A


# ---------------------------------------------------------------------------
# HH_0 of L_{0,n}


@dataclass(frozen=True)
class HH0Report:
    level: int
    bar_complex: int
    formula: int
    uncorrected: int
    blocks: tuple[tuple[str, int, int], ...]

    @property
    def agree(self) -> bool:
        return self.bar_complex == self.formula

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "bar_complex": self.bar_complex,
            "formula": self.formula,
            "uncorrected": self.uncorrected,
            "agree": self.agree,
            "blocks": [{"vertex": v, "length": m, "size": s} for v, m, s in self.blocks],
        }


def top_path_length(q: Quiver, i: str, n: int) -> int:
    """max{r <= n : some path of length r ends at i}."""
    return max(r for r in range(n + 1) if paths_to(q, r, i))


def hh0_of_l0n(q: Quiver, n: int, char: int = 0, cap: int = DEFAULT_ALGEBRA_CAP) -> HH0Report:
    """HH_0(L_{0,n}) by the bar complex and by counting simple factors.

    The closed count: one class per non-sink i reached by a length-n path,
    plus, per sink i, one class for each length 0..r(i, n).
    """
    A = build_l0n(q, n, cap)
    bar = hochschild_dims(A, regular_bimodule(A), 0, char)[0]
    sk = sinks(q)
    formula = hh0_formula(q, n)
    # the count with r(i, n) classes per sink, which misses the length-0 factor k
    literal = sum(1 for i in q.vertices if i not in sk) + sum(top_path_length(q, i, n) for i in sk)
    blocks = tuple((v, m, len(ps)) for v, m, ps in l0n_blocks(q, n))
    return HH0Report(n, bar, formula, literal, blocks)


# ---------------------------------------------------------------------------
# maps L_{m,n} -> L_{m,n+1}


def chosen_arrows(q: Quiver, rng: random.Random | None = None) -> dict[str, str]:
    """One arrow into each vertex: least by name, or random when *rng* is given."""
    out = {}
    for v in q.vertices:
        inc = q.in_arrows[v]
        if not inc:
            raise ValueError(f"vertex {v!r} receives no arrow")
        out[v] = (rng.choice(inc) if rng else inc[0]).name
    return out


def _prepend(q: Quiver, arrow: str, p: Path) -> Path:
    return Path((arrow,) + p.arrows, q.arrow_map[arrow].src)


def _append(q: Quiver, p: Path, arrow: str) -> Path:
    return Path(p.arrows + (arrow,), p.basepoint)


def _range(q: Quiver, p: Path) -> str:
    return q.arrow_map[p.arrows[-1]].dst if p.arrows else p.basepoint


def inclusion_algebra(q: Quiver, lab: tuple[Path, Path]) -> list[tuple[Path, Path]]:
    """gamma nu^* = sum over e leaving r(gamma) of (gamma e)(nu e)^*."""
    g, h = lab
    return [(_append(q, g, a.name), _append(q, h, a.name)) for a in q.out_arrows[_range(q, g)]]


def inclusion_module(q: Quiver, lab: tuple[Path, Path, Path]) -> list[tuple[Path, Path, Path]]:
    """alpha theta beta^* = sum_e (alpha theta_1)(theta_2..theta_m e)(beta e)^*."""
    alpha, theta, beta = lab
    first = theta.arrows[0]
    out = []
    for a in q.out_arrows[_range(q, theta)]:
        new_theta = Path(theta.arrows[1:] + (a.name,), q.arrow_map[first].dst)
        out.append((_append(q, alpha, first), new_theta, _append(q, beta, a.name)))
    return out


def phi_algebra(q: Quiver, lab: tuple[Path, Path], choice: dict[str, str]) -> list[tuple[Path, Path]]:
    """t_+ gamma nu^* t_- with t_+ the sum of the chosen arrows."""
    g, h = lab
    return [(_prepend(q, choice[g.basepoint], g), _prepend(q, choice[h.basepoint], h))]


def phi_module(q: Quiver, lab: tuple[Path, Path, Path], choice: dict[str, str]) -> list[tuple[Path, Path, Path]]:
    alpha, theta, beta = lab
    return [(_prepend(q, choice[alpha.basepoint], alpha), theta, _prepend(q, choice[beta.basepoint], beta))]


def _linear_map(src_labels, dst_index, fn) -> list[SparseVec]:
    cols = []
    for lab in src_labels:
        v: SparseVec = {}
        for img in fn(lab):
            k = dst_index[img]
            v[k] = v.get(k, 0) + 1
        cols.append(v)
    return cols


def _apply(cols: list[SparseVec], x: SparseVec) -> SparseVec:
    out: SparseVec = {}
    for i, c in x.items():
        _axpy(out, c, cols[i])
    return out


def is_algebra_map(A: StructureAlgebra, B: StructureAlgebra, f: list[SparseVec], unital: bool) -> bool:
    for i in range(A.dim):
        for j in range(A.dim):
            if _apply(f, A.mult[i][j]) != B.mul_vec(f[i], f[j]):
                return False
    return not unital or _apply(f, A.unit) == B.unit


def is_bimodule_map(M: Bimodule, N: Bimodule, fa: list[SparseVec], fm: list[SparseVec]) -> bool:
    """fm(a x) = fa(a) fm(x) and fm(x a) = fm(x) fa(a) on basis elements."""
    for a in range(M.algebra.dim):
        for x in range(M.dim):
            if _apply(fm, M.left[a][x]) != N.act_left(fa[a], fm[x]):
                return False
            if _apply(fm, M.right[a][x]) != N.act_right(fm[x], fa[a]):
                return False
    return True


def projection(q: Quiver, M: Bimodule, v_index: dict[Path, int]) -> list[SparseVec]:
    """pi(alpha theta beta^*) = theta if alpha = beta else 0, per basis element."""
    return [({v_index[theta]: 1} if alpha == beta else {}) for alpha, theta, beta in M.labels]


def commutator_span_rank(M: Bimodule, char: int) -> int:
    ech = SparseEchelon(char)
    for a in range(M.algebra.dim):
        for x in range(M.dim):
            v = dict(M.left[a][x])
            _axpy(v, -1, M.right[a][x])
            if v:
                ech.add(v)
    return ech.rank


@dataclass
class InducedMapsReport:
    quiver: str
    weight: int
    level: int
    choice: dict[str, str]
    v_dim: int
    hh0_dims: tuple[int, int]
    pi_iso: bool
    maps_ok: bool
    inclusion_matrix: list[list[int]]
    phi_matrix: list[list[int]]
    orientation: str
    sigma_ok: bool
    phi_ok: bool
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pi_iso and self.maps_ok and self.sigma_ok and self.phi_ok

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "level": self.level,
            "choice": dict(sorted(self.choice.items())),
            "v_dim": self.v_dim,
            "hh0_dims": list(self.hh0_dims),
            "pi_iso": self.pi_iso,
            "maps_ok": self.maps_ok,
            "orientation": self.orientation,
            "sigma_ok": self.sigma_ok,
            "phi_ok": self.phi_ok,
            "notes": self.notes,
        }


def _induced_on_v(M_lo, fm, pi_lo, pi_hi, v_basis, v_index) -> tuple[list[list[int]] | None, bool]:
    """Matrix T with T pi_lo = pi_hi fm, or None if it does not factor."""
    nv = len(v_basis)
    lifts = {}
    for x, (alpha, theta, beta) in enumerate(M_lo.labels):
        if alpha == beta and theta not in lifts:
            lifts[theta] = x
    T = [[0] * nv for _ in range(nv)]
    for theta, x in lifts.items():
        for k, c in _apply(pi_hi, fm[x]).items():
            T[k][v_index[theta]] += c
    ok = len(lifts) == nv
    # T pi_lo must equal pi_hi fm on every basis element
    for x in range(M_lo.dim):
        lhs: SparseVec = {}
        for j, c in pi_lo[x].items():
            for k in range(nv):
                if T[k][j]:
                    lhs[k] = lhs.get(k, 0) + c * T[k][j]
        lhs = {k: c for k, c in lhs.items() if c}
        if lhs != _apply(pi_hi, fm[x]):
            ok = False
    return T, ok


def induced_maps_check(
    q: Quiver,
    m: int,
    n: int,
    char: int = 0,
    *,
    choice: dict[str, str] | None = None,
    rng: random.Random | None = None,
    strict: bool = False,
) -> InducedMapsReport:
    """Identify the maps HH_0(L_{0,n}, L_{m,n}) -> HH_0(L_{0,n+1}, L_{m,n+1}).

    The inclusion should induce the rotation of closed paths and
    x -> t_+ x t_- the identity, in the basis of closed paths given by pi.
    """
    if m == 0:
        raise ValueError("weight must be nonzero")
    _oracle_quiver_check(q)
    if choice is None:
        choice = chosen_arrows(q, rng)
    for v in q.vertices:
        a = q.arrow_map.get(choice.get(v, ""))
        if a is None or a.dst != v:
            raise ValueError(f"choice for {v!r} must be an arrow ending at {v!r}")
    A_lo, A_hi = build_l0n(q, n), build_l0n(q, n + 1)
    M_lo, M_hi = build_lmn(q, m, n, A_lo), build_lmn(q, m, n + 1, A_hi)
    layer = closed_paths(q, abs(m))
    v_basis = list(layer.closed_paths)
    v_index = {p: i for i, p in enumerate(v_basis)}
    notes = []

    inc_a = _linear_map(A_lo.labels, A_hi.index, lambda lab: inclusion_algebra(q, lab))
    inc_m = _linear_map(M_lo.labels, M_hi.index, lambda lab: inclusion_module(q, lab))
    phi_a = _linear_map(A_lo.labels, A_hi.index, lambda lab: phi_algebra(q, lab, choice))
    phi_m = _linear_map(M_lo.labels, M_hi.index, lambda lab: phi_module(q, lab, choice))

    maps_ok = (
        is_algebra_map(A_lo, A_hi, inc_a, unital=True)
        and is_algebra_map(A_lo, A_hi, phi_a, unital=False)
        and is_bimodule_map(M_lo, M_hi, inc_a, inc_m)
        and is_bimodule_map(M_lo, M_hi, phi_a, phi_m)
    )
    if not maps_ok:
        notes.append("inclusion or t_+ . t_- is not a map of pairs")

    pi_lo = projection(q, M_lo, v_index)
    pi_hi = projection(q, M_hi, v_index)
    hh0 = []
    pi_iso = True
    for M, pi in ((M_lo, pi_lo), (M_hi, pi_hi)):
        hh0_dim = M.dim - commutator_span_rank(M, char)
        hh0.append(hh0_dim)
        # pi kills commutators, is onto V, and HH_0 has the dimension of V
        kills = all(
            _apply(pi, M.left[a][x]) == _apply(pi, M.right[a][x])
            for a in range(M.algebra.dim)
            for x in range(M.dim)
        )
        onto = {k for col in pi for k in col} == set(range(len(v_basis)))
        pi_iso &= kills and onto and hh0_dim == len(v_basis)
    if not pi_iso:
        notes.append("pi does not induce HH_0 = V_m")

    T_inc, ok_inc = _induced_on_v(M_lo, inc_m, pi_lo, pi_hi, v_basis, v_index)
    T_phi, ok_phi = _induced_on_v(M_lo, phi_m, pi_lo, pi_hi, v_basis, v_index)
    nv = len(v_basis)
    sig = layer.sigma(q)
    sigma = [[int(sig[j] == i) for j in range(nv)] for i in range(nv)]
    sigma_inv = [list(r) for r in zip(*sigma)]
    ident = [[int(i == j) for j in range(nv)] for i in range(nv)]
    if T_inc == sigma:
        orientation = "sigma"
    elif T_inc == sigma_inv:
        orientation = "sigma_inverse"
    else:
        orientation = "neither"
    sigma_ok = ok_inc and orientation != "neither"
    phi_ok = ok_phi and T_phi == ident
    if orientation == "sigma_inverse":
        notes.append("inclusion induces the inverse rotation")
    report = InducedMapsReport(
        repr(q.describe()),
        m,
        n,
        dict(choice),
        nv,
        (hh0[0], hh0[1]),
        pi_iso,
        maps_ok,
        T_inc,
        T_phi,
        orientation,
        sigma_ok,
        phi_ok,
        notes,
    )
    if strict and not report.ok:
        raise OracleContradiction(f"induced maps do not match the formula: {report.to_json()}")
    return report


def separable_check(A: StructureAlgebra, M: Bimodule, degrees: int = 2, char: int = 0) -> bool:
    """HH_k(A, M) = 0 for 1 <= k <= degrees."""
    return all(d == 0 for d in hochschild_dims(A, M, degrees, char)[1:])


def formula_dims(q: Quiver, m: int, n: int, n_max: int) -> list[int]:
    """What the closed formula predicts for HH_*(L_{0,n}, L_{m,n}) (m != 0) or HH_*(L_{0,n})."""
    if m == 0:
        return [hh0_formula(q, n)] + [0] * n_max
    return [len(closed_paths(q, abs(m)).closed_paths)] + [0] * n_max


def hh0_formula(q: Quiver, n: int) -> int:
    sk = sinks(q)
    return sum(1 for i in q.vertices if i not in sk and paths_to(q, n, i)) + sum(
        top_path_length(q, i, n) + 1 for i in sk
    )

