"""Group actions as full tables, the canonical constructions, and both
directions of the point <-> action correspondence."""
from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    Diagnosis,
    FiniteGroup,
    GroupError,
    Hom,
    VALID,
    all_homs,
    aut_group,
    subgroup_group,
)

DEFAULT_SEMIDIRECT_CAP = 4096


def check_action_table(acting: FiniteGroup, target: FiniteGroup, table) -> Diagnosis:
    """Group-action axioms: unit, composition, each row an automorphism."""
    if len(table) != acting.order or any(len(row) != target.order for row in table):
        return Diagnosis(False, "table dimensions do not match the groups", ())
    for row in table:
        for v in row:
            if not 0 <= v < target.order:
                return Diagnosis(False, "entry out of range", (v,))
    e = acting.identity
    for x in range(target.order):
        if table[e][x] != x:
            return Diagnosis(False, "unit axiom fails", (x,))
    for a in range(acting.order):
        for b in range(acting.order):
            ab = acting.table[a][b]
            for x in range(target.order):
                if table[ab][x] != table[a][table[b][x]]:
                    return Diagnosis(False, "composition axiom fails", (a, b, x))
    for a in range(acting.order):
        row = table[a]
        if len(set(row)) != target.order:
            return Diagnosis(False, "row is not a bijection", (a,))
        for x in range(target.order):
            for y in range(target.order):
                if row[target.table[x][y]] != target.table[row[x]][row[y]]:
                    return Diagnosis(False, "row is not an automorphism", (a, x, y))
    return VALID


class Action:
    """A full action table psi: A x X -> X."""

    def __init__(self, acting: FiniteGroup, target: FiniteGroup, table, check=True):
        self.acting = acting
        self.target = target
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        if check:
            check_action_table(acting, target, self.table).expect("action axioms")

    def __call__(self, a: int, x: int) -> int:
        return self.table[a][x]

    def check(self) -> Diagnosis:
        return check_action_table(self.acting, self.target, self.table)

    def __eq__(self, other):
        return (
            isinstance(other, Action)
            and self.acting == other.acting
            and self.target == other.target
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.acting.table, self.target.table, self.table))

    def __repr__(self):
        return f"Action(|A|={self.acting.order}, |X|={self.target.order})"


def trivial_action(acting: FiniteGroup, target: FiniteGroup) -> Action:
    row = tuple(range(target.order))
    return Action(acting, target, tuple(row for _ in range(acting.order)), check=False)


def conjugation_action(G: FiniteGroup) -> Action:
    table = tuple(
        tuple(G.conj(a, x) for x in range(G.order)) for a in range(G.order)
    )
    return Action(G, G, table, check=False)


def pullback_action(f: Hom, psi: Action) -> Action:
    """psi'(a, x) = psi(f(a), x)."""
    if f.cod != psi.acting:
        raise GroupError("pullback: codomain does not match the acting group")
    table = tuple(psi.table[f(a)] for a in range(f.dom.order))
    return Action(f.dom, psi.target, table, check=False)


@dataclass(frozen=True)
class Point:
    """A split epimorphism p with a chosen splitting s."""

    p: Hom
    s: Hom

    def __post_init__(self):
        if self.p.dom != self.s.cod or self.p.cod != self.s.dom:
            raise GroupError("point: p and s do not match up")
        for b in range(self.p.cod.order):
            if self.p(self.s(b)) != b:
                raise GroupError("point: p o s is not the identity")


class SemidirectData:
    """The semidirect product X x| A with its kernel, section and projection."""

    def __init__(self, group, jX, jA, pi, action):
        self.group = group
        self.jX = jX
        self.jA = jA
        self.pi = pi
        self.action = action

    def point(self) -> Point:
        return Point(self.pi, self.jA)


def semidirect(psi: Action, cap: int = DEFAULT_SEMIDIRECT_CAP) -> SemidirectData:
    """Pairs (x, a) with (x, a)(x', a') = (x psi(a, x'), a a'), row-major."""
    X, A = psi.target, psi.acting
    na = A.order
    n = X.order * na
    if n > cap:
        raise GroupError(f"cap exceeded: semidirect order {n} > {cap}")
    table = [[0] * n for _ in range(n)]
    for x in range(X.order):
        for a in range(na):
            s = x * na + a
            row = table[s]
            prow = psi.table[a]
            for x2 in range(X.order):
                xx = X.table[x][prow[x2]]
                for a2 in range(na):
                    row[x2 * na + a2] = xx * na + A.table[a][a2]
    G = FiniteGroup(table)
    jX = Hom(X, G, tuple(x * na + A.identity for x in range(X.order)), check=False)
    jA = Hom(A, G, tuple(X.identity * na + a for a in range(na)), check=False)
    pi = Hom(G, A, tuple(s % na for s in range(n)), check=False)
    # structural sanity: section, kernel, and the conjugation formula
    for a in range(na):
        if pi(jA(a)) != a:
            raise GroupError("semidirect: pi o jA is not the identity")
    if jX.image() != pi.kernel():
        raise GroupError("semidirect: kernel mismatch")
    for a in range(na):
        ja = jA(a)
        for x in range(X.order):
            if G.conj(ja, jX(x)) != jX(psi.table[a][x]):
                raise GroupError("semidirect: conjugation formula fails")
    return SemidirectData(G, jX, jA, pi, psi)


def point_to_action(pt: Point) -> tuple[Action, Hom]:
    """The action of the base on the kernel, plus the kernel inclusion."""
    p, s = pt.p, pt.s
    G, B = p.dom, p.cod
    K, incl = subgroup_group(G, p.kernel())
    back = {incl(i): i for i in range(K.order)}
    table = []
    for b in range(B.order):
        sb = s(b)
        row = []
        for i in range(K.order):
            v = G.conj(sb, incl(i))
            if v not in back:
                raise GroupError("conjugate leaves the kernel")
            row.append(back[v])
        table.append(tuple(row))
    return Action(B, K, table), incl


def enumerate_actions(acting: FiniteGroup, target: FiniteGroup) -> list[Action]:
    """All actions of `acting` on `target`, as homs into Aut(target)."""
    autG, auts = aut_group(target)
    out = []
    for h in all_homs(acting, autG):
        table = tuple(auts[h(a)].mapping for a in range(acting.order))
        out.append(Action(acting, target, table, check=False))
    return out
