"""Exact linear algebra over Z, Q and prime fields.

Matrices are plain lists of row lists of Python ints (arbitrary precision).
Everything here is pure and never mutates its inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[int]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_char(char: int) -> None:
    if char != 0 and not is_prime(char):
        raise ValueError(f"field characteristic must be 0 or a prime, got {char}")


def shape(a: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    return rows, cols


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(a: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
    rows = len(a)
    if cols is None:
        cols = len(a[0]) if rows else 0
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# rank


def rank(a: Sequence[Sequence[int]], char: int = 0) -> int:
    """Rank over Q (char 0, fraction-free) or over F_p."""
    check_char(char)
    rows, cols = shape(a)
    if char:
        return _rank_mod_p([[x % char for x in r] for r in a], char, cols)
    m = [list(r) for r in a]
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            f = m[i][c]
            row = m[i]
            top = m[r]
            for j in range(c, cols):
                row[j] = (row[j] * p - f * top[j]) // prev
        prev = p
        r += 1
        if r == rows:
            break
    return r


def _rank_mod_p(m: Matrix, p: int, cols: int) -> int:
    rows = len(m)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        top = [(x * inv) % p for x in m[r]]
        m[r] = top
        for i in range(r + 1, rows):
            f = m[i][c]
            if f:
                row = m[i]
                for j in range(c, cols):
                    row[j] = (row[j] - f * top[j]) % p
        r += 1
        if r == rows:
            break
    return r


class SparseEchelon:
    """Incremental row echelon basis for sparse vectors ({index: value}).

    Used for the large, very sparse boundary matrices of bar complexes.
    Over Q vectors are kept integral and primitive (content divided out).
    """

    def __init__(self, char: int = 0):
        check_char(char)
        self.char = char
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, vec: dict[int, int]) -> bool:
        """Reduce *vec* against the basis; keep it if independent."""
        p = self.char
        v = {k: (x % p if p else x) for k, x in vec.items()}
        v = {k: x for k, x in v.items() if x}
        while v:
            lead = min(v)
            row = self.pivots.get(lead)
            if row is None:
                if p:
                    inv = pow(v[lead], -1, p)
                    v = {k: (x * inv) % p for k, x in v.items()}
                else:
                    g = 0
                    for x in v.values():
                        g = gcd(g, x)
                    if v[lead] < 0:
                        g = -g
                    v = {k: x // g for k, x in v.items()}
                self.pivots[lead] = v
                return True
            if p:
                f = v[lead]
                for k, x in row.items():
                    y = (v.get(k, 0) - f * x) % p
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
            else:
                a, b = row[lead], v[lead]
                g = gcd(a, b)
                ca, cb = a // g, b // g
                out = {k: x * ca for k, x in v.items()}
                for k, x in row.items():
                    y = out.get(k, 0) - cb * x
                    if y:
                        out[k] = y
                    else:
                        out.pop(k, None)
                g = 0
                for x in out.values():
                    g = gcd(g, x)
                v = {k: x // g for k, x in out.items()} if g > 1 else out
        return False


def sparse_rank(columns: Iterable[dict[int, int]], char: int = 0) -> int:
    ech = SparseEchelon(char)
    for col in columns:
        ech.add(col)
    return ech.rank


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    """``u @ a @ v == diag(d)`` padded with zeros, u and v unimodular."""

    d: tuple[int, ...]
    u: Matrix
    v: Matrix
    rows: int
    cols: int

    def diagonal(self) -> Matrix:
        out = zeros(self.rows, self.cols)
        for i, x in enumerate(self.d):
            out[i][i] = x
        return out

    def verify(self, a: Sequence[Sequence[int]]) -> bool:
        prod = matmul(matmul(self.u, a, self.rows), self.v, self.cols)
        return (
            prod == self.diagonal()
            and abs(det(self.u)) == 1
            and abs(det(self.v)) == 1
        )


def smith_normal_form(a: Sequence[Sequence[int]], cols: int | None = None) -> SNFResult:
    """Smith normal form with unimodular transforms.

    Pivots on the entry of least nonzero absolute value to keep coefficients
    small. ``d`` has length min(rows, cols) and satisfies d[i] | d[i+1].
    """
    rows = len(a)
    if cols is None:
        cols = len(a[0]) if rows else 0
    m = [list(r) for r in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):  # row dst += f * row src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for r in m:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = m[i][j]
                if x and (best is None or abs(x) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    add_row(i, t, -(m[i][t] // p))
                    if m[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    add_col(j, t, -(m[t][j] // p))
                    if m[t][j]:
                        dirty = True
            if dirty:
                # a remainder is now smaller than the pivot; move it in
                best = None
                for i in range(t, rows):
                    if m[i][t] and (best is None or abs(m[i][t]) < abs(best[1])):
                        best = ("r", m[i][t], i)
                for j in range(t, cols):
                    if m[t][j] and (best is None or abs(m[t][j]) < abs(best[1])):
                        best = ("c", m[t][j], j)
                if best[0] == "r":
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue
            # divisibility: the pivot must divide the remaining block
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if m[t][t] < 0:
            negate_row(t)
        t += 1
    d = tuple(m[i][i] for i in range(min(rows, cols)))
    return SNFResult(d, u, v, rows, cols)


def ker_rank(a: Sequence[Sequence[int]], cols: int | None = None) -> int:
    if cols is None:
        cols = len(a[0]) if a else 0
    return cols - rank(a, 0)


def integer_kernel(a: Sequence[Sequence[int]], cols: int) -> Matrix:
    """Basis (as columns) of the integer kernel lattice of *a*."""
    res = smith_normal_form(a, cols)
    free = [j for j in range(cols) if j >= len(res.d) or res.d[j] == 0]
    return [[res.v[i][j] for j in free] for i in range(cols)]


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int], cols: int) -> list[int] | None:
    """An integer x with a @ x == b, or None when no such x exists."""
    rows = len(a)
    res = smith_normal_form(a, cols)
    ub = [sum(res.u[i][k] * b[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        di = res.d[i] if i < len(res.d) else 0
        if di == 0:
            if ub[i]:
                return None
        else:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
    return [sum(res.v[i][j] * y[j] for j in range(cols)) for i in range(cols)]


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True, order=True)
class FGAbGroup:
    """Z^free_rank + Z/d1 + ... + Z/dk in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        t = tuple(self.torsion)
        if any(x < 2 for x in t):
            raise ValueError(f"torsion coefficients must be >= 2, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion not in invariant-factor form: {t}")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_invariants(cls, factors: Iterable[int]) -> "FGAbGroup":
        """Canonical group from arbitrary cyclic orders (0 means Z)."""
        fs = [abs(x) for x in factors]
        free = sum(1 for x in fs if x == 0)
        cyc = [x for x in fs if x > 1]
        # put into a diagonal matrix and let SNF sort out divisibility
        d = smith_normal_form([[x if i == j else 0 for j in range(len(cyc))] for i, x in enumerate(cyc)], len(cyc)).d
        return cls(free, tuple(x for x in d if x > 1))

    @classmethod
    def parse(cls, text: str) -> "FGAbGroup":
        """Parse ``Z^2+Z/6``, ``Z``, ``Z/5``, ``0``."""
        text = text.replace(" ", "")
        if text in ("0", ""):
            return cls()
        orders = []
        for term in text.split("+"):
            mt = re.fullmatch(r"Z(?:/(\d+))?(?:\^(\d+))?", term)
            if not mt:
                raise ValueError(f"cannot parse group term {term!r}")
            order = int(mt.group(1)) if mt.group(1) else 0
            times = int(mt.group(2)) if mt.group(2) else 1
            if mt.group(1) and order == 0:
                raise ValueError("Z/0 is ambiguous; write Z")
            if order == 1:
                continue
            orders.extend([order] * times)
        return cls.from_invariants(orders)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def presentation(self) -> Matrix:
        """Relation matrix (generators x relations) with coker equal to self."""
        n = self.ngens
        cols = len(self.torsion)
        rel = zeros(n, cols)
        for j, d in enumerate(self.torsion):
            rel[self.free_rank + j][j] = d
        return rel

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return "+".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free": self.free_rank, "torsion": list(self.torsion)}


def coker_group(a: Sequence[Sequence[int]], rows: int | None = None, cols: int | None = None) -> FGAbGroup:
    """Z^rows modulo the column span of *a*."""
    if rows is None:
        rows = len(a)
    if cols is None:
        cols = len(a[0]) if rows else 0
    d = smith_normal_form(a, cols).d
    nonzero = [x for x in d if x]
    return FGAbGroup(rows - len(nonzero), tuple(x for x in nonzero if x > 1))


def quotient_by_element(g: FGAbGroup, coeffs: tuple[int, int]) -> FGAbGroup:
    """(G + G) / {(a x, b x) : x in G}."""
    a, b = coeffs
    rel = quotient_presentation(g, a, b)
    return coker_group(rel, 2 * g.ngens, len(rel[0]) if rel else 0)


def quotient_presentation(g: FGAbGroup, a: int, b: int) -> Matrix:
    n = g.ngens
    p = g.presentation()
    k = len(p[0]) if n else 0
    cols = 2 * k + n
    rel = zeros(2 * n, cols)
    for i in range(n):
        for j in range(k):
            rel[i][j] = p[i][j]
            rel[n + i][k + j] = p[i][j]
        rel[i][2 * k + i] = a
        rel[n + i][2 * k + i] = b
    return rel


def induced_map_is_iso(
    f: Sequence[Sequence[int]],
    src_rel: Sequence[Sequence[int]],
    dst_rel: Sequence[Sequence[int]],
    src_gens: int,
    dst_gens: int,
) -> bool:
    """Is coker(src_rel) -> coker(dst_rel) induced by *f* an isomorphism?

    *f* is dst_gens x src_gens. Well-definedness (f maps relations into
    relations) is checked too; a non-well-defined f returns False.
    """
    src_cols = len(src_rel[0]) if src_gens and src_rel else 0
    dst_cols = len(dst_rel[0]) if dst_gens and dst_rel else 0
    # well defined: f * src_rel lies in span(dst_rel)
    for j in range(src_cols):
        img = [sum(f[i][k] * src_rel[k][j] for k in range(src_gens)) for i in range(dst_gens)]
        if solve_integer(dst_rel, img, dst_cols) is None:
            return False
    # surjective: [f | dst_rel] spans Z^dst_gens
    joined = [list(f[i]) + list(dst_rel[i][:dst_cols]) for i in range(dst_gens)]
    if not coker_group(joined, dst_gens, src_gens + dst_cols).is_trivial:
        return False
    # injective: every x with f x in span(dst_rel) lies in span(src_rel)
    neg = [list(f[i]) + [-y for y in dst_rel[i][:dst_cols]] for i in range(dst_gens)]
    if dst_gens == 0:
        kernel = identity(src_gens)
    else:
        kern = integer_kernel(neg, src_gens + dst_cols)
        kernel = [row[:] for row in kern[:src_gens]]
    ncols = len(kernel[0]) if kernel else 0
    for j in range(ncols):
        x = [kernel[i][j] for i in range(src_gens)]
        if any(x) and solve_integer(src_rel, x, src_cols) is None:
            return False
    return True

