"""Crossed modules of finite groups and the actions they induce."""
from __future__ import annotations

from .actions import Action, conjugation_action, pullback_action
from .compat import MutualActions
from .groups import Diagnosis, FiniteGroup, GroupError, Hom, VALID, is_normal


class CrossedModule:
    """A boundary map X -> A equivariant for an action of A on X."""

    def __init__(self, boundary: Hom, action: Action, check: bool = False):
        if boundary.dom != action.target or boundary.cod != action.acting:
            raise GroupError("crossed module: boundary and action do not match")
        self.boundary = boundary
        self.action = action
        self.X = boundary.dom
        self.A = boundary.cod
        if check:
            self.check().expect("crossed module axioms")

    def check(self) -> Diagnosis:
        return check_xmod(self)

    def __repr__(self):
        return f"CrossedModule(|X|={self.X.order}, |A|={self.A.order})"


def check_xmod(xm: CrossedModule) -> Diagnosis:
    """Equivariance of the boundary, then the Peiffer identity."""
    X, A = xm.X, xm.A
    d, psi = xm.boundary, xm.action
    for a in A.elements():
        for x in X.elements():
            if d(psi.table[a][x]) != A.conj(a, d(x)):
                return Diagnosis(False, "boundary is not equivariant", (a, x))
    for x in X.elements():
        row = psi.table[d(x)]
        for x2 in X.elements():
            if row[x2] != X.conj(x, x2):
                return Diagnosis(False, "Peiffer identity fails", (x, x2))
    return VALID


def inclusion_xmod(G: FiniteGroup, incl: Hom) -> CrossedModule:
    """A normal subgroup included into G, with G acting by conjugation."""
    if incl.cod != G or not incl.is_injective():
        raise GroupError("expected an injective map into G")
    if not is_normal(G, incl.image()):
        raise GroupError("image is not a normal subgroup")
    back = {incl(i): i for i in range(incl.dom.order)}
    table = tuple(
        tuple(back[G.conj(g, incl(i))] for i in range(incl.dom.order))
        for g in range(G.order)
    )
    return CrossedModule(incl, Action(G, incl.dom, table, check=False))


def identity_xmod(G: FiniteGroup) -> CrossedModule:
    from .groups import identity_hom

    return CrossedModule(identity_hom(G), conjugation_action(G))


def induced_mutual_actions(xm_m: CrossedModule, xm_n: CrossedModule) -> MutualActions:
    """Two crossed modules over a common base act on each other by pullback."""
    if xm_m.A != xm_n.A:
        raise GroupError("crossed modules have different base groups")
    check_xmod(xm_m).expect("crossed module axioms (first)")
    check_xmod(xm_n).expect("crossed module axioms (second)")
    xi_nm = pullback_action(xm_n.boundary, xm_m.action)
    xi_mn = pullback_action(xm_m.boundary, xm_n.action)
    return MutualActions(xi_nm, xi_mn)
