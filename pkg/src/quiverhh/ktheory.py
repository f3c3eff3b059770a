"""K-theoretic invariants: K_0 and the rank of K_1 from 1 - N^t over Z."""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import (
    FGAbGroup,
    Matrix,
    coker_group,
    induced_map_is_iso,
    ker_rank,
    quotient_by_element,
    quotient_presentation,
)
from .quiver import Quiver, adjacency

# Provenance strings carried into reports.
FORMULA_SOURCE = "coker/ker of 1-N^t (graph K-theory for regular supercoherent coefficients)"
L2_ABSORPTION = "K_*(L_2 (x) R) = 0 for R regular supercoherent"


@dataclass(frozen=True)
class KResult:
    k0: FGAbGroup
    k1_free_rank: int
    matrix: Matrix
    provenance: str = FORMULA_SOURCE

    def to_json(self) -> dict:
        return {
            "k0": self.k0.to_json(),
            "k1_free": self.k1_free_rank,
            "provenance": self.provenance,
        }

    def summary(self) -> str:
        k0 = "Z/1 (trivial)" if self.k0.is_trivial else str(self.k0)
        return f"K0 = {k0}, K1 free rank = {self.k1_free_rank}"


def k_groups(q: Quiver) -> KResult:
    adj = adjacency(q)
    mat = adj.one_minus_nt
    cols = adj.nonsink_count
    return KResult(coker_group(mat, adj.e0, cols), ker_rank(mat, cols), mat)


def k_tensor_L2(claimant: Quiver) -> KResult:
    """K-theory of L_2 (x) L(claimant): always trivial.

    L(claimant) is regular supercoherent, so L_2 (x) L(claimant) is the Leavitt
    path algebra of the one-vertex two-loop quiver over that ring, and its
    K-theory agrees with that of L_2 itself.
    """
    if not isinstance(claimant, Quiver):
        raise TypeError("claimant must be a Quiver")
    return KResult(FGAbGroup(), 0, [[-1]], provenance=L2_ABSORPTION)


@dataclass(frozen=True)
class Prop63Result:
    group: FGAbGroup
    quotient: FGAbGroup
    isomorphic: bool
    diagonal_iso: bool

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "quotient": str(self.quotient),
            "quotient_group": self.quotient.to_json(),
            "isomorphic": self.isomorphic,
            "diagonal_iso": self.diagonal_iso,
        }


def prop63_check(g: FGAbGroup, n: int) -> Prop63Result:
    """Check that G -> (G + G)/(-n, 1-n)G, x -> class of (x, x), is an isomorphism.

    This is the K-theory map induced by R -> L_R(E_n); it being an
    isomorphism for every n gives K_*(R) = K_*(R (x) L_inf) in the colimit.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = -n, 1 - n
    quotient = quotient_by_element(g, (a, b))
    r = g.ngens
    diag = [[1 if j == i % r else 0 for j in range(r)] for i in range(2 * r)]
    src_rel = g.presentation()
    dst_rel = quotient_presentation(g, a, b)
    diag_iso = induced_map_is_iso(diag, src_rel, dst_rel, r, 2 * r)
    return Prop63Result(g, quotient, quotient == g and diag_iso, diag_iso)
