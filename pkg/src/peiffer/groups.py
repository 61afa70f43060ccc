"""Finite groups given by multiplication tables, plus the standard toolbox.

Elements are dense 0-based indices into the table.  The identity may sit at
any index; imported tables are used as-is, without re-indexing.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct


class GroupError(ValueError):
    """A table, map or subset violates a required axiom or precondition."""


@dataclass(frozen=True)
class Diagnosis:
    """Outcome of an axiom check: ok, or the first failure with a witness."""

    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def expect(self, what: str = "check") -> None:
        if not self.ok:
            raise GroupError(f"{what} failed: {self.reason}, witness={self.witness}")


VALID = Diagnosis(True)


def validate_table(table) -> Diagnosis:
    """Full group-axiom check of a raw multiplication table (O(n^3))."""
    n = len(table)
    if n == 0:
        return Diagnosis(False, "empty table", ())
    for i, row in enumerate(table):
        if len(row) != n:
            return Diagnosis(False, "table is not square", (i,))
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                return Diagnosis(False, "entry out of range", (i, j, v))
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        return Diagnosis(False, "no identity element", ())
    for x in range(n):
        invs = [y for y in range(n) if table[x][y] == identity and table[y][x] == identity]
        if not invs:
            return Diagnosis(False, f"no inverse for element {x}", (x,))
        if len(invs) > 1:
            return Diagnosis(False, f"inverse of element {x} not unique", (x,))
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rb = table[b]
            for c in range(n):
                if table[ab][c] != ra[rb[c]]:
                    return Diagnosis(False, "associativity fails", (a, b, c))
    return VALID


class FiniteGroup:
    """A finite group as an order x order multiplication table."""

    def __init__(self, table, name: str | None = None, check: bool = False):
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.order = len(self.table)
        self.name = name
        if self.order == 0:
            raise GroupError("empty table")
        if check:
            validate_table(self.table).expect("group axioms")
        identity = None
        rng = range(self.order)
        for e in rng:
            if all(self.table[e][x] == x for x in rng) and all(
                self.table[x][e] == x for x in rng
            ):
                identity = e
                break
        if identity is None:
            raise GroupError("no identity element")
        self.identity = identity
        inverses = []
        for x in rng:
            ys = [
                y
                for y in rng
                if self.table[x][y] == identity and self.table[y][x] == identity
            ]
            if len(ys) != 1:
                raise GroupError(f"element {x} has no unique inverse")
            inverses.append(ys[0])
        self.inverses = tuple(inverses)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def elements(self):
        return range(self.order)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def order_multiset(self) -> tuple:
        return tuple(sorted(self.element_order(x) for x in range(self.order)))

    def validate(self) -> Diagnosis:
        return validate_table(self.table)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        tag = f", name={self.name!r}" if self.name else ""
        return f"FiniteGroup(order={self.order}{tag})"


class Hom:
    """A group homomorphism recorded as an element-wise map."""

    def __init__(self, dom: FiniteGroup, cod: FiniteGroup, mapping, check: bool = True):
        self.dom = dom
        self.cod = cod
        self.mapping = tuple(int(v) for v in mapping)
        if len(self.mapping) != dom.order:
            raise GroupError("map length does not match the domain order")
        if any(not 0 <= v < cod.order for v in self.mapping):
            raise GroupError("map value out of range")
        if check:
            self.check().expect("homomorphism axioms")

    def check(self) -> Diagnosis:
        if self.mapping[self.dom.identity] != self.cod.identity:
            return Diagnosis(False, "identity not preserved", (self.dom.identity,))
        dt, ct, mp = self.dom.table, self.cod.table, self.mapping
        for a in range(self.dom.order):
            for b in range(self.dom.order):
                if mp[dt[a][b]] != ct[mp[a]][mp[b]]:
                    return Diagnosis(False, "not multiplicative", (a, b))
        return VALID

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def compose(self, other: "Hom") -> "Hom":
        """self o other."""
        if other.cod != self.dom:
            raise GroupError("composition mismatch")
        return Hom(
            other.dom, self.cod, tuple(self.mapping[v] for v in other.mapping), check=False
        )

    def image(self) -> frozenset:
        return frozenset(self.mapping)

    def kernel(self) -> frozenset:
        e = self.cod.identity
        return frozenset(x for x in range(self.dom.order) if self.mapping[x] == e)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.dom.order

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.cod.order

    def is_bijective(self) -> bool:
        return self.dom.order == self.cod.order and self.is_injective()

    def inverse(self) -> "Hom":
        if not self.is_bijective():
            raise GroupError("not bijective")
        inv = [0] * self.cod.order
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return Hom(self.cod, self.dom, inv, check=False)

    def __eq__(self, other):
        return (
            isinstance(other, Hom)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.dom.table, self.cod.table, self.mapping))

    def __repr__(self):
        return f"Hom({self.dom!r} -> {self.cod!r}, {self.mapping})"


def identity_hom(G: FiniteGroup) -> Hom:
    return Hom(G, G, range(G.order), check=False)


def subgroup_closure(G: FiniteGroup, gens) -> frozenset:
    """The subgroup generated by gens."""
    step = set(gens) | {G.inv(g) for g in gens}
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        x = frontier.pop()
        row = G.table[x]
        for g in step:
            y = row[g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def is_subgroup(G: FiniteGroup, S) -> bool:
    S = frozenset(S)
    if G.identity not in S:
        return False
    return all(G.table[a][b] in S for a in S for b in S) and all(G.inv(a) in S for a in S)


def is_normal(G: FiniteGroup, S) -> bool:
    S = frozenset(S)
    if not is_subgroup(G, S):
        return False
    return all(G.conj(g, s) in S for g in range(G.order) for s in S)


def normal_closure(G: FiniteGroup, gens) -> frozenset:
    """Smallest normal subgroup of G containing gens."""
    for g in gens:
        if not 0 <= g < G.order:
            raise GroupError("generator out of range")
    conjugates = {G.conj(g, x) for x in gens for g in range(G.order)}
    return subgroup_closure(G, conjugates)


def quotient(G: FiniteGroup, N) -> tuple[FiniteGroup, Hom]:
    """G/N with minimal-index coset representatives and the projection."""
    N = frozenset(N)
    if not is_normal(G, N):
        raise GroupError("subgroup is not normal")
    coset_of = {}
    reps = []
    for x in range(G.order):
        if x in coset_of:
            continue
        # x is the minimal element of its coset: smaller ones are already placed
        for n in N:
            coset_of[G.table[x][n]] = x
        reps.append(x)
    index = {r: i for i, r in enumerate(reps)}
    table = [[index[coset_of[G.table[a][b]]] for b in reps] for a in reps]
    name = f"{G.name}/N" if G.name else None
    Q = FiniteGroup(table, name=name)
    proj = Hom(G, Q, tuple(index[coset_of[x]] for x in range(G.order)), check=False)
    return Q, proj


def subgroup_group(G: FiniteGroup, S) -> tuple[FiniteGroup, Hom]:
    """A subgroup as a group in its own right, with the inclusion."""
    S = frozenset(S)
    if not is_subgroup(G, S):
        raise GroupError("not a subgroup")
    elems = sorted(S)
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[G.table[a][b]] for b in elems] for a in elems]
    H = FiniteGroup(table)
    incl = Hom(H, G, tuple(elems), check=False)
    return H, incl


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs (g, h), indexed row-major g*|H|+h."""
    nh = H.order
    n = G.order * nh
    table = [[0] * n for _ in range(n)]
    for g1 in range(G.order):
        for h1 in range(nh):
            a = g1 * nh + h1
            row = table[a]
            for g2 in range(G.order):
                gg = G.table[g1][g2]
                for h2 in range(nh):
                    row[g2 * nh + h2] = gg * nh + H.table[h1][h2]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return FiniteGroup(table, name=name)


def _greedy_generators(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    closure = frozenset({G.identity})
    for x in range(G.order):
        if x not in closure:
            gens.append(x)
            closure = subgroup_closure(G, gens)
            if len(closure) == G.order:
                break
    return gens


def _bfs_tree(G: FiniteGroup, gens):
    """Discovery order and tree edges (parent, generator index) per element."""
    parent: dict[int, tuple[int, int] | None] = {G.identity: None}
    order = [G.identity]
    qi = 0
    while qi < len(order):
        x = order[qi]
        qi += 1
        row = G.table[x]
        for t, g in enumerate(gens):
            y = row[g]
            if y not in parent:
                parent[y] = (x, t)
                order.append(y)
    if len(order) != G.order:
        raise GroupError("generators do not generate the group")
    return order, parent


def _map_from_images(G, H, gens, order, parent, images):
    """Build the map determined by generator images; None if inconsistent."""
    phi = [-1] * G.order
    phi[G.identity] = H.identity
    for y in order[1:]:
        x, t = parent[y]
        phi[y] = H.table[phi[x]][images[t]]
    # consistency on every (element, generator) edge implies multiplicativity
    for x in range(G.order):
        px = phi[x]
        row = G.table[x]
        hrow = H.table[px]
        for t, g in enumerate(gens):
            if phi[row[g]] != hrow[images[t]]:
                return None
    return tuple(phi)


def all_homs(G: FiniteGroup, H: FiniteGroup) -> list[Hom]:
    """Every homomorphism G -> H, by generator-image search."""
    gens = _greedy_generators(G)
    order, parent = _bfs_tree(G, gens)
    candidates = []
    for g in gens:
        og = G.element_order(g)
        candidates.append([h for h in range(H.order) if og % H.element_order(h) == 0])
    out = []
    for images in iproduct(*candidates):
        phi = _map_from_images(G, H, gens, order, parent, images)
        if phi is not None:
            out.append(Hom(G, H, phi, check=False))
    return out


DEFAULT_SEARCH_CAP = 64


def automorphisms(G: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP) -> list[Hom]:
    """All automorphisms of G, sorted by their map for a stable indexing."""
    if G.order > cap:
        raise GroupError(f"cap exceeded: order {G.order} > {cap}")
    gens = _greedy_generators(G)
    order, parent = _bfs_tree(G, gens)
    candidates = []
    for g in gens:
        og = G.element_order(g)
        candidates.append([h for h in range(G.order) if G.element_order(h) == og])
    out = []
    for images in iproduct(*candidates):
        phi = _map_from_images(G, G, gens, order, parent, images)
        if phi is not None and len(set(phi)) == G.order:
            out.append(phi)
    return [Hom(G, G, phi, check=False) for phi in sorted(out)]


def aut_group(G: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP):
    """Aut(G) as a FiniteGroup over the sorted automorphism list."""
    auts = automorphisms(G, cap=cap)
    index = {a.mapping: i for i, a in enumerate(auts)}
    table = [
        [index[tuple(a.mapping[v] for v in b.mapping)] for b in auts] for a in auts
    ]
    name = f"Aut({G.name})" if G.name else None
    return FiniteGroup(table, name=name), auts


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, cap: int = DEFAULT_SEARCH_CAP):
    """An isomorphism G -> H if one exists, otherwise None."""
    if G.order != H.order:
        return None
    if G.order > cap:
        raise GroupError(f"cap exceeded: order {G.order} > {cap}")
    if G.table == H.table:
        return identity_hom(G)
    if G.order_multiset() != H.order_multiset():
        return None
    gens = _greedy_generators(G)
    order, parent = _bfs_tree(G, gens)
    candidates = []
    for g in gens:
        og = G.element_order(g)
        candidates.append([h for h in range(H.order) if H.element_order(h) == og])
    for images in iproduct(*candidates):
        phi = _map_from_images(G, H, gens, order, parent, images)
        if phi is not None and len(set(phi)) == G.order:
            return Hom(G, H, phi, check=False)
    return None
