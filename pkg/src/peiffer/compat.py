"""Mutual actions of two groups on each other and the compatibility test.

Side 0 is M, side 1 is N throughout the free-product conventions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .actions import Action
from .groups import FiniteGroup, GroupError

M_SIDE = 0
N_SIDE = 1


class MutualActions:
    """A pair of actions: N on M (xi_nm) and M on N (xi_mn)."""

    def __init__(self, xi_nm: Action, xi_mn: Action):
        if xi_nm.acting != xi_mn.target or xi_mn.acting != xi_nm.target:
            raise GroupError("mutual actions: groups do not match up")
        self.xi_nm = xi_nm
        self.xi_mn = xi_mn

    @property
    def M(self) -> FiniteGroup:
        return self.xi_nm.target

    @property
    def N(self) -> FiniteGroup:
        return self.xi_mn.target

    def group(self, side: int) -> FiniteGroup:
        return self.M if side == M_SIDE else self.N

    def action_on(self, side: int) -> Action:
        """The action whose target is the group at `side`."""
        return self.xi_nm if side == M_SIDE else self.xi_mn

    def swapped(self) -> "MutualActions":
        return MutualActions(self.xi_mn, self.xi_nm)

    def __eq__(self, other):
        return (
            isinstance(other, MutualActions)
            and self.xi_nm == other.xi_nm
            and self.xi_mn == other.xi_mn
        )

    def __hash__(self):
        return hash((self.xi_nm, self.xi_mn))

    def __repr__(self):
        return f"MutualActions(|M|={self.M.order}, |N|={self.N.order})"


def coproduct_eval(mut: MutualActions, letters, side: int, x: int) -> int:
    """Act with a free-product word on x, an element of the group at `side`.

    Letters apply right to left: a same-side letter conjugates, a cross-side
    letter acts through its mutual-action table.
    """
    G = mut.group(side)
    cross = mut.action_on(side)
    for s, g in reversed(tuple(letters)):
        if s == side:
            x = G.conj(g, x)
        else:
            x = cross.table[g][x]
    return x


@dataclass(frozen=True)
class CompatWitness:
    equation: int
    m: int
    n: int
    other: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class CompatVerdict:
    compatible: bool
    witness: CompatWitness | None = None


def check_compatible(mut: MutualActions) -> CompatVerdict:
    """Exhaustive check of both compatibility equations.

    Equation 1: ( (m n) acting on m' ) = ( m n m^-1 acting on m' ), where
    (m n) means n acted on by m; symmetrically for equation 2.
    """
    M, N = mut.M, mut.N
    xi_nm, xi_mn = mut.xi_nm, mut.xi_mn
    for m in M.elements():
        for n in N.elements():
            mn = xi_mn.table[m][n]
            word = ((M_SIDE, m), (N_SIDE, n), (M_SIDE, M.inv(m)))
            for m2 in M.elements():
                lhs = xi_nm.table[mn][m2]
                rhs = coproduct_eval(mut, word, M_SIDE, m2)
                if lhs != rhs:
                    return CompatVerdict(False, CompatWitness(1, m, n, m2, lhs, rhs))
    for n in N.elements():
        for m in M.elements():
            nm = xi_nm.table[n][m]
            word = ((N_SIDE, n), (M_SIDE, m), (N_SIDE, N.inv(n)))
            for n2 in N.elements():
                lhs = xi_mn.table[nm][n2]
                rhs = coproduct_eval(mut, word, N_SIDE, n2)
                if lhs != rhs:
                    return CompatVerdict(False, CompatWitness(2, m, n, n2, lhs, rhs))
    return CompatVerdict(True)
