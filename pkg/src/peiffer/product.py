"""The Peiffer product of two groups acting on each other.

Built as a finite quotient: take the semidirect product M x| N along the
action of N on M, then kill the relators j_M(m) j_N(n) j_M(m)^-1 j_N(m n)^-1
(with m n meaning n acted on by m) by their normal closure.
"""
from __future__ import annotations

from itertools import product as iproduct

from .actions import (
    Action,
    DEFAULT_SEMIDIRECT_CAP,
    SemidirectData,
    semidirect,
)
from .compat import M_SIDE, N_SIDE, MutualActions, coproduct_eval
from .groups import (
    Diagnosis,
    FiniteGroup,
    GroupError,
    Hom,
    VALID,
    normal_closure,
    quotient,
    subgroup_closure,
)
from .xmod import CrossedModule


class NotWellDefined(GroupError):
    """An induced operation disagrees on two representatives of a coset."""

    def __init__(self, message, witness):
        super().__init__(f"{message}, witness={witness}")
        self.witness = witness


class PeifferProduct:
    """The quotient group with its structure maps and induced actions.

    actions is a MutualActions pair when the induced actions are well
    defined (equivalently, when the source pair is compatible); otherwise
    it is None and disagreement holds the first witness.
    """

    def __init__(self, product, sd, from_semidirect, lM, lN, source, actions, disagreement):
        self.product = product
        self.semidirect = sd
        self.from_semidirect = from_semidirect
        self.lM = lM
        self.lN = lN
        self.source = source
        self.actions = actions
        self.disagreement = disagreement

    @property
    def compatible(self) -> bool:
        return self.actions is not None

    def __repr__(self):
        return f"PeifferProduct(order={self.product.order}, compatible={self.compatible})"


def peiffer_relators(mut: MutualActions, cap: int = DEFAULT_SEMIDIRECT_CAP):
    """The semidirect product along xi_nm and the sorted relator set."""
    sd = semidirect(mut.xi_nm, cap=cap)
    S = sd.group
    jM, jN = sd.jX, sd.jA
    rels = set()
    for m in mut.M.elements():
        for n in mut.N.elements():
            r = S.mul(
                S.mul(jM(m), jN(n)),
                S.mul(S.inv(jM(m)), S.inv(jN(mut.xi_mn.table[m][n]))),
            )
            rels.add(r)
    return sd, tuple(sorted(rels))


def peiffer_product(mut: MutualActions, cap: int = DEFAULT_SEMIDIRECT_CAP) -> PeifferProduct:
    sd, rels = peiffer_relators(mut, cap=cap)
    S = sd.group
    K = normal_closure(S, rels)
    P, proj = quotient(S, K)
    lM = proj.compose(sd.jX)
    lN = proj.compose(sd.jA)
    gens = set(lM.mapping) | set(lN.mapping)
    if subgroup_closure(P, gens) != frozenset(range(P.order)):
        raise GroupError("images of M and N do not generate the quotient")

    M, N = mut.M, mut.N
    nn = N.order
    # induced actions, built coset by coset; every representative must agree
    tab_on_m = [[None] * M.order for _ in range(P.order)]
    tab_on_n = [[None] * N.order for _ in range(P.order)]
    disagreement = None
    rep_of = [None] * P.order
    for s in range(S.order):
        p = proj(s)
        m, n = divmod(s, nn)
        word = ((M_SIDE, m), (N_SIDE, n))
        if rep_of[p] is None:
            rep_of[p] = s
        for x in M.elements():
            v = coproduct_eval(mut, word, M_SIDE, x)
            if tab_on_m[p][x] is None:
                tab_on_m[p][x] = v
            elif tab_on_m[p][x] != v:
                disagreement = (p, rep_of[p], s, M_SIDE, x, tab_on_m[p][x], v)
                break
        if disagreement:
            break
        for x in N.elements():
            v = coproduct_eval(mut, word, N_SIDE, x)
            if tab_on_n[p][x] is None:
                tab_on_n[p][x] = v
            elif tab_on_n[p][x] != v:
                disagreement = (p, rep_of[p], s, N_SIDE, x, tab_on_n[p][x], v)
                break
        if disagreement:
            break

    actions = None
    if disagreement is None:
        on_m = Action(P, M, tuple(tuple(row) for row in tab_on_m))
        on_n = Action(P, N, tuple(tuple(row) for row in tab_on_n))
        actions = (on_m, on_n)
    return PeifferProduct(P, sd, proj, lM, lN, mut, actions, disagreement)


def induced_actions(pp: PeifferProduct):
    """The actions of P on M and on N; raises when they are not well defined."""
    if pp.actions is None:
        raise NotWellDefined("induced action disagrees across a coset", pp.disagreement)
    return pp.actions


def peiffer_xmods(pp: PeifferProduct) -> tuple[CrossedModule, CrossedModule]:
    """lM and lN as crossed modules over the Peiffer product."""
    on_m, on_n = induced_actions(pp)
    return CrossedModule(pp.lM, on_m), CrossedModule(pp.lN, on_n)


def strong_relation_check(pp: PeifferProduct, bound: int = 2) -> Diagnosis:
    """Conjugation in P matches the word action for all short words.

    Words range over non-identity letters of both sides up to the given
    length; each is compared letterwise against conjugation by its image.
    """
    on_m, on_n = induced_actions(pp)
    mut = pp.source
    M, N = mut.M, mut.N
    P = pp.product
    letters = [(M_SIDE, m) for m in M.elements() if m != M.identity]
    letters += [(N_SIDE, n) for n in N.elements() if n != N.identity]
    ells = (pp.lM, pp.lN)
    tabs = (on_m, on_n)
    for length in range(bound + 1):
        for word in iproduct(letters, repeat=length):
            q = P.identity
            for s, g in word:
                q = P.mul(q, ells[s](g))
            for side in (M_SIDE, N_SIDE):
                G = mut.group(side)
                ell, tab = ells[side], tabs[side]
                for x in G.elements():
                    lhs = ell(coproduct_eval(mut, word, side, x))
                    rhs = P.conj(q, ell(x))
                    if lhs != rhs:
                        return Diagnosis(
                            False,
                            "conjugation does not match the word action",
                            (word, side, x, lhs, rhs),
                        )
    return VALID


def universal_map(pp: PeifferProduct, xm_m: CrossedModule, xm_n: CrossedModule) -> Hom:
    """The unique map P -> L through which both structure maps factor.

    Precondition: the crossed modules live over a common base L and the
    mutual actions they induce equal the source pair of pp.
    """
    from .xmod import induced_mutual_actions

    mut = pp.source
    if xm_m.X != mut.M or xm_n.X != mut.N:
        raise GroupError("crossed modules are not over M and N")
    if induced_mutual_actions(xm_m, xm_n) != mut:
        raise GroupError("crossed modules do not induce the given actions")
    L = xm_m.A
    mu, nu = xm_m.boundary, xm_n.boundary
    S = pp.semidirect.group
    proj = pp.from_semidirect
    nn = mut.N.order
    h = [None] * pp.product.order
    for s in range(S.order):
        m, n = divmod(s, nn)
        v = L.mul(mu(m), nu(n))
        p = proj(s)
        if h[p] is None:
            h[p] = v
        elif h[p] != v:
            raise GroupError(f"relator not killed in the codomain, witness={(p, s)}")
    out = Hom(pp.product, L, h, check=True)
    for m in mut.M.elements():
        if out(pp.lM(m)) != mu(m):
            raise GroupError("triangle over M fails")
    for n in mut.N.elements():
        if out(pp.lN(n)) != nu(n):
            raise GroupError("triangle over N fails")
    return out
