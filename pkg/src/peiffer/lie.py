"""Finite-dimensional Lie algebras over the rationals, with exact arithmetic.

Mirrors the group-side pipeline: mutual actions by derivations, the two
compatibility equations, the semidirect sum, and the Peiffer quotient with
its crossed-module structures and universal map.  All data are tuples of
Fractions; no floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct


class LieError(ValueError):
    pass


ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise LieError(f"not an exact rational: {v!r}")


def vec(values) -> tuple:
    return tuple(_frac(v) for v in values)


def zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def mat(rows) -> tuple:
    return tuple(vec(r) for r in rows)


def zero_mat(rows: int, cols: int) -> tuple:
    return tuple(zero_vec(cols) for _ in range(rows))


def identity_mat(n: int) -> tuple:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_vec(A, v) -> tuple:
    return tuple(sum((a * x for a, x in zip(row, v)), ZERO) for row in A)


def mat_mul(A, B) -> tuple:
    cols = len(B[0]) if B else 0
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(len(B))), ZERO) for j in range(cols))
        for i in range(len(A))
    )


def mat_add(A, B) -> tuple:
    return tuple(vadd(r, s) for r, s in zip(A, B))


def mat_sub(A, B) -> tuple:
    return tuple(vsub(r, s) for r, s in zip(A, B))


def basis_vec(n: int, i: int) -> tuple:
    return tuple(ONE if j == i else ZERO for j in range(n))


def rref(rows):
    """Reduced row echelon form; returns (rows without zero rows, pivot cols)."""
    rows = [list(vec(r)) for r in rows]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r]), tuple(pivots)


def reduce_mod(basis_rows, pivots, v):
    """Reduce v against an rref basis; zero result means v is in the span."""
    v = list(vec(v))
    for row, c in zip(basis_rows, pivots):
        if v[c] != 0:
            f = v[c]
            for j in range(len(v)):
                v[j] -= f * row[j]
    return tuple(v)


def in_span(basis_rows, pivots, v) -> bool:
    return all(x == 0 for x in reduce_mod(basis_rows, pivots, v))


class LieAlgebra:
    """Structure constants on a chosen basis: brackets[i][j] = [e_i, e_j]."""

    def __init__(self, dim: int, brackets, name: str | None = None, check: bool = True):
        self.dim = int(dim)
        self.brackets = tuple(tuple(vec(v) for v in row) for row in brackets)
        self.name = name
        if len(self.brackets) != self.dim or any(
            len(row) != self.dim or any(len(v) != self.dim for v in row)
            for row in self.brackets
        ):
            raise LieError("structure constants have the wrong shape")
        if check:
            validate_lie(self).expect("Lie axioms")

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.brackets[i][j]

    def bracket(self, u, v) -> tuple:
        out = zero_vec(self.dim)
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b == 0:
                    continue
                out = vadd(out, vscale(a * b, self.brackets[i][j]))
        return out

    def ad(self, u) -> tuple:
        """The matrix of [u, -] on the basis (columns are images)."""
        cols = [self.bracket(u, basis_vec(self.dim, j)) for j in range(self.dim)]
        return tuple(
            tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim)
        )

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.brackets == other.brackets

    def __hash__(self):
        return hash(self.brackets)

    def __repr__(self):
        tag = f", name={self.name!r}" if self.name else ""
        return f"LieAlgebra(dim={self.dim}{tag})"


class LieDiagnosis:
    """ok, or a reason with an exact residual witness."""

    def __init__(self, ok: bool, reason=None, witness=None):
        self.ok = ok
        self.reason = reason
        self.witness = witness

    def expect(self, what: str = "check") -> None:
        if not self.ok:
            raise LieError(f"{what} failed: {self.reason}, witness={self.witness}")


LIE_VALID = LieDiagnosis(True)


def validate_lie(L: LieAlgebra) -> LieDiagnosis:
    n = L.dim
    for i in range(n):
        for j in range(n):
            resid = vadd(L.brackets[i][j], L.brackets[j][i])
            if any(x != 0 for x in resid):
                return LieDiagnosis(False, "antisymmetry fails", (i, j, resid))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                resid = vadd(
                    vadd(
                        L.bracket(basis_vec(n, i), L.brackets[j][k]),
                        L.bracket(basis_vec(n, j), L.brackets[k][i]),
                    ),
                    L.bracket(basis_vec(n, k), L.brackets[i][j]),
                )
                if any(x != 0 for x in resid):
                    return LieDiagnosis(False, "Jacobi fails", (i, j, k, resid))
    return LIE_VALID


class LieMap:
    """A linear map between Lie algebras; matrix rows = cod.dim, cols = dom.dim."""

    def __init__(self, dom: LieAlgebra, cod: LieAlgebra, matrix, check: bool = True):
        self.dom = dom
        self.cod = cod
        self.matrix = mat(matrix)
        if len(self.matrix) != cod.dim or any(len(r) != dom.dim for r in self.matrix):
            raise LieError("matrix shape does not match the algebras")
        if check:
            self.check().expect("Lie homomorphism")

    def __call__(self, v) -> tuple:
        return mat_vec(self.matrix, vec(v))

    def check(self) -> LieDiagnosis:
        n = self.dom.dim
        for i in range(n):
            fi = self(basis_vec(n, i))
            for j in range(n):
                resid = vsub(
                    self(self.dom.brackets[i][j]),
                    self.cod.bracket(fi, self(basis_vec(n, j))),
                )
                if any(x != 0 for x in resid):
                    return LieDiagnosis(False, "bracket not preserved", (i, j, resid))
        return LIE_VALID

    def compose(self, other: "LieMap") -> "LieMap":
        if other.cod is not self.dom and other.cod != self.dom:
            raise LieError("composition mismatch")
        return LieMap(other.dom, self.cod, mat_mul(self.matrix, other.matrix), check=False)

    def __eq__(self, other):
        return (
            isinstance(other, LieMap)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.matrix == other.matrix
        )

    def __repr__(self):
        return f"LieMap({self.dom.dim} -> {self.cod.dim})"


def identity_lie_map(L: LieAlgebra) -> LieMap:
    return LieMap(L, L, identity_mat(L.dim), check=False)


class LieAction:
    """An action by derivations: rho[a] is the matrix of basis element a."""

    def __init__(self, acting: LieAlgebra, target: LieAlgebra, rho, check: bool = True):
        self.acting = acting
        self.target = target
        self.rho = tuple(mat(m) for m in rho)
        if len(self.rho) != acting.dim or any(
            len(m) != target.dim or any(len(r) != target.dim for r in m)
            for m in self.rho
        ):
            raise LieError("action matrices have the wrong shape")
        if check:
            check_lie_action(self).expect("Lie action axioms")

    def of(self, u) -> tuple:
        """The matrix acting for a general element u of the acting algebra."""
        out = zero_mat(self.target.dim, self.target.dim)
        for a, c in enumerate(vec(u)):
            if c != 0:
                out = mat_add(out, tuple(vscale(c, row) for row in self.rho[a]))
        return out

    def __call__(self, u, x) -> tuple:
        return mat_vec(self.of(u), vec(x))

    def __eq__(self, other):
        return (
            isinstance(other, LieAction)
            and self.acting == other.acting
            and self.target == other.target
            and self.rho == other.rho
        )

    def __repr__(self):
        return f"LieAction({self.acting.dim} on {self.target.dim})"


def check_lie_action(act: LieAction) -> LieDiagnosis:
    """rho must be a Lie homomorphism into derivations of the target."""
    A, X = act.acting, act.target
    for a in range(A.dim):
        for b in range(A.dim):
            commutator = mat_sub(
                mat_mul(act.rho[a], act.rho[b]), mat_mul(act.rho[b], act.rho[a])
            )
            resid = mat_sub(act.of(A.brackets[a][b]), commutator)
            if any(x != 0 for row in resid for x in row):
                return LieDiagnosis(False, "rho is not a Lie homomorphism", (a, b))
    for a in range(A.dim):
        R = act.rho[a]
        for i in range(X.dim):
            Rei = mat_vec(R, basis_vec(X.dim, i))
            for j in range(X.dim):
                resid = vsub(
                    mat_vec(R, X.brackets[i][j]),
                    vadd(
                        X.bracket(Rei, basis_vec(X.dim, j)),
                        X.bracket(basis_vec(X.dim, i), mat_vec(R, basis_vec(X.dim, j))),
                    ),
                )
                if any(x != 0 for x in resid):
                    return LieDiagnosis(False, "rho(a) is not a derivation", (a, i, j))
    return LIE_VALID


def trivial_lie_action(acting: LieAlgebra, target: LieAlgebra) -> LieAction:
    return LieAction(
        acting,
        target,
        tuple(zero_mat(target.dim, target.dim) for _ in range(acting.dim)),
        check=False,
    )


def adjoint_action(L: LieAlgebra) -> LieAction:
    return LieAction(
        L, L, tuple(L.ad(basis_vec(L.dim, a)) for a in range(L.dim)), check=False
    )


def pullback_lie_action(f: LieMap, act: LieAction) -> LieAction:
    if f.cod != act.acting:
        raise LieError("pullback: codomain does not match the acting algebra")
    rho = tuple(act.of(f(basis_vec(f.dom.dim, a))) for a in range(f.dom.dim))
    return LieAction(f.dom, act.target, rho, check=False)


class LieMutualActions:
    """rho_nm: N acting on M; rho_mn: M acting on N."""

    def __init__(self, rho_nm: LieAction, rho_mn: LieAction):
        if rho_nm.acting != rho_mn.target or rho_mn.acting != rho_nm.target:
            raise LieError("mutual actions: algebras do not match up")
        self.rho_nm = rho_nm
        self.rho_mn = rho_mn

    @property
    def M(self) -> LieAlgebra:
        return self.rho_nm.target

    @property
    def N(self) -> LieAlgebra:
        return self.rho_mn.target

    def swapped(self) -> "LieMutualActions":
        return LieMutualActions(self.rho_mn, self.rho_nm)

    def __eq__(self, other):
        return (
            isinstance(other, LieMutualActions)
            and self.rho_nm == other.rho_nm
            and self.rho_mn == other.rho_mn
        )


def lie_compatible(mut: LieMutualActions) -> LieDiagnosis:
    """The two compatibility equations on basis triples.

    (C1): rho_NM(rho_MN(m) n) m' = [m, rho_NM(n) m'] - rho_NM(n) [m, m']
    (C2): rho_MN(rho_NM(n) m) n' = [n, rho_MN(m) n'] - rho_MN(m) [n, n']
    """
    M, N = mut.M, mut.N
    nm, mn = mut.rho_nm, mut.rho_mn
    for i in range(M.dim):
        m = basis_vec(M.dim, i)
        for j in range(N.dim):
            n = basis_vec(N.dim, j)
            act = nm.of(mn(m, n))
            for k in range(M.dim):
                m2 = basis_vec(M.dim, k)
                lhs = mat_vec(act, m2)
                rhs = vsub(M.bracket(m, nm(n, m2)), nm(n, M.bracket(m, m2)))
                resid = vsub(lhs, rhs)
                if any(x != 0 for x in resid):
                    return LieDiagnosis(False, "first equation fails", (i, j, k, resid))
    for j in range(N.dim):
        n = basis_vec(N.dim, j)
        for i in range(M.dim):
            m = basis_vec(M.dim, i)
            act = mn.of(nm(n, m))
            for k in range(N.dim):
                n2 = basis_vec(N.dim, k)
                lhs = mat_vec(act, n2)
                rhs = vsub(N.bracket(n, mn(m, n2)), mn(m, N.bracket(n, n2)))
                resid = vsub(lhs, rhs)
                if any(x != 0 for x in resid):
                    return LieDiagnosis(False, "second equation fails", (j, i, k, resid))
    return LIE_VALID


class LieCrossedModule:
    """A boundary map X -> A equivariant for an action of A on X."""

    def __init__(self, boundary: LieMap, action: LieAction, check: bool = False):
        if boundary.dom != action.target or boundary.cod != action.acting:
            raise LieError("crossed module: boundary and action do not match")
        self.boundary = boundary
        self.action = action
        self.X = boundary.dom
        self.A = boundary.cod
        if check:
            self.check().expect("Lie crossed module axioms")

    def check(self) -> LieDiagnosis:
        return check_lie_xmod(self)

    def __repr__(self):
        return f"LieCrossedModule({self.X.dim} -> {self.A.dim})"


def check_lie_xmod(xm: LieCrossedModule) -> LieDiagnosis:
    X, A = xm.X, xm.A
    d, rho = xm.boundary, xm.action
    diag = d.check()
    if not diag.ok:
        return diag
    for a in range(A.dim):
        ea = basis_vec(A.dim, a)
        for i in range(X.dim):
            resid = vsub(
                d(mat_vec(rho.rho[a], basis_vec(X.dim, i))),
                A.bracket(ea, d(basis_vec(X.dim, i))),
            )
            if any(x != 0 for x in resid):
                return LieDiagnosis(False, "boundary is not equivariant", (a, i, resid))
    for i in range(X.dim):
        ei = basis_vec(X.dim, i)
        R = rho.of(d(ei))
        for j in range(X.dim):
            resid = vsub(mat_vec(R, basis_vec(X.dim, j)), X.brackets[i][j])
            if any(x != 0 for x in resid):
                return LieDiagnosis(False, "Peiffer identity fails", (i, j, resid))
    return LIE_VALID


def lie_induced_actions(xm_m: LieCrossedModule, xm_n: LieCrossedModule) -> LieMutualActions:
    if xm_m.A != xm_n.A:
        raise LieError("crossed modules have different base algebras")
    check_lie_xmod(xm_m).expect("Lie crossed module axioms (first)")
    check_lie_xmod(xm_n).expect("Lie crossed module axioms (second)")
    rho_nm = pullback_lie_action(xm_n.boundary, xm_m.action)
    rho_mn = pullback_lie_action(xm_m.boundary, xm_n.action)
    return LieMutualActions(rho_nm, rho_mn)


class LieSemidirect:
    """M + N with bracket twisted by rho_nm; basis is M's then N's."""

    def __init__(self, algebra, j_m, j_n, pi, action):
        self.algebra = algebra
        self.j_m = j_m
        self.j_n = j_n
        self.pi = pi
        self.action = action


def lie_semidirect(rho: LieAction) -> LieSemidirect:
    """[(m,n),(m',n')] = ([m,m'] + rho(n) m' - rho(n') m, [n,n'])."""
    M, N = rho.target, rho.acting
    dm, dn = M.dim, N.dim
    dim = dm + dn

    def pair(m, n):
        return tuple(m) + tuple(n)

    brackets = []
    for i in range(dim):
        m1 = basis_vec(dm, i) if i < dm else zero_vec(dm)
        n1 = basis_vec(dn, i - dm) if i >= dm else zero_vec(dn)
        row = []
        for j in range(dim):
            m2 = basis_vec(dm, j) if j < dm else zero_vec(dm)
            n2 = basis_vec(dn, j - dm) if j >= dm else zero_vec(dn)
            mpart = vadd(
                M.bracket(m1, m2), vsub(rho(n1, m2), rho(n2, m1))
            )
            row.append(pair(mpart, N.bracket(n1, n2)))
        brackets.append(tuple(row))
    S = LieAlgebra(dim, tuple(brackets), check=True)
    # matrices are rows-of-cod: build via columns then transpose
    j_m = _lie_map_from_columns(M, S, [pair(basis_vec(dm, i), zero_vec(dn)) for i in range(dm)])
    j_n = _lie_map_from_columns(N, S, [pair(zero_vec(dm), basis_vec(dn, j)) for j in range(dn)])
    pi = _lie_map_from_columns(
        S, N, [zero_vec(dn)] * dm + [basis_vec(dn, j) for j in range(dn)]
    )
    j_m.check().expect("section into the semidirect sum")
    j_n.check().expect("section into the semidirect sum")
    pi.check().expect("projection from the semidirect sum")
    return LieSemidirect(S, j_m, j_n, pi, rho)


def _lie_map_from_columns(dom, cod, columns) -> LieMap:
    rows = tuple(
        tuple(columns[j][i] for j in range(dom.dim)) for i in range(cod.dim)
    )
    return LieMap(dom, cod, rows, check=False)


class LiePeifferProduct:
    """Quotient of the semidirect sum by the Peiffer ideal.

    lift sends a quotient basis vector to a representative in S; proj is a
    one-sided inverse to lift.
    """

    def __init__(self, algebra, semidirect, proj, lift, l_m, l_n, source, ideal_rows, ideal_pivots):
        self.algebra = algebra
        self.semidirect = semidirect
        self.proj = proj
        self.lift = lift
        self.l_m = l_m
        self.l_n = l_n
        self.source = source
        self.ideal_rows = ideal_rows
        self.ideal_pivots = ideal_pivots

    def __repr__(self):
        return f"LiePeifferProduct(dim={self.algebra.dim})"


def lie_peiffer_ideal(mut: LieMutualActions):
    """The ideal of the semidirect sum generated by the Peiffer elements.

    Generators (rho_NM(n) m, rho_MN(m) n) over basis pairs, closed under
    bracketing with all basis vectors; returned as an rref basis.
    """
    sd = lie_semidirect(mut.rho_nm)
    S = sd.algebra
    dm = mut.M.dim
    gens = []
    for i in range(dm):
        m = basis_vec(dm, i)
        for j in range(mut.N.dim):
            n = basis_vec(mut.N.dim, j)
            gens.append(tuple(mut.rho_nm(n, m)) + tuple(mut.rho_mn(m, n)))
    rows, pivots = rref(gens)
    work = list(rows)
    while work:
        v = work.pop()
        for b in range(S.dim):
            w = reduce_mod(rows, pivots, S.bracket(basis_vec(S.dim, b), v))
            if any(x != 0 for x in w):
                rows, pivots = rref(list(rows) + [w])
                work.append(w)
    return sd, rows, pivots


def lie_peiffer(mut: LieMutualActions) -> LiePeifferProduct:
    sd, rows, pivots = lie_peiffer_ideal(mut)
    S = sd.algebra
    free = [c for c in range(S.dim) if c not in pivots]
    dim = len(free)

    def project(v):
        red = reduce_mod(rows, pivots, v)
        return tuple(red[c] for c in free)

    brackets = []
    for a in range(dim):
        ea = basis_vec(S.dim, free[a])
        row = []
        for b in range(dim):
            row.append(project(S.bracket(ea, basis_vec(S.dim, free[b]))))
        brackets.append(tuple(row))
    P = LieAlgebra(dim, tuple(brackets), check=True)
    proj = _lie_map_from_columns(S, P, [project(basis_vec(S.dim, c)) for c in range(S.dim)])
    lift = _lie_map_from_columns(P, S, [basis_vec(S.dim, free[a]) for a in range(dim)])
    proj.check().expect("projection onto the quotient")
    l_m = proj.compose(sd.j_m)
    l_n = proj.compose(sd.j_n)
    return LiePeifferProduct(P, sd, proj, lift, l_m, l_n, mut, rows, pivots)


def lie_peiffer_actions(pp: LiePeifferProduct) -> tuple[LieAction, LieAction]:
    """The actions of the quotient on M and on N, checked well defined.

    On M a representative (m, n) acts as ad(m) + rho_NM(n); on N as
    ad(n) + rho_MN(m).  Well-definedness means every ideal basis vector
    acts as zero, which is checked exactly.
    """
    mut = pp.source
    M, N = mut.M, mut.N
    S = pp.semidirect.algebra
    dm = M.dim

    def split(v):
        return v[:dm], v[dm:]

    def act_on_m(v):
        m, n = split(v)
        return mat_add(M.ad(m), mut.rho_nm.of(n))

    def act_on_n(v):
        m, n = split(v)
        return mat_add(N.ad(n), mut.rho_mn.of(m))

    for row in pp.ideal_rows:
        for builder, tag in ((act_on_m, "M"), (act_on_n, "N")):
            mtx = builder(row)
            if any(x != 0 for r in mtx for x in r):
                raise LieError(
                    f"induced action on {tag} is not well defined, witness={row}"
                )
    P = pp.algebra
    lift = pp.lift
    rho_on_m = tuple(act_on_m(lift(basis_vec(P.dim, c))) for c in range(P.dim))
    rho_on_n = tuple(act_on_n(lift(basis_vec(P.dim, c))) for c in range(P.dim))
    return (
        LieAction(P, M, rho_on_m, check=True),
        LieAction(P, N, rho_on_n, check=True),
    )


def lie_peiffer_xmods(pp: LiePeifferProduct) -> tuple[LieCrossedModule, LieCrossedModule]:
    on_m, on_n = lie_peiffer_actions(pp)
    xm_m = LieCrossedModule(pp.l_m, on_m)
    xm_n = LieCrossedModule(pp.l_n, on_n)
    check_lie_xmod(xm_m).expect("crossed module structure on M")
    check_lie_xmod(xm_n).expect("crossed module structure on N")
    return xm_m, xm_n


def lie_universal_map(pp: LiePeifferProduct, xm_m: LieCrossedModule, xm_n: LieCrossedModule) -> LieMap:
    """The unique map P -> L through which both structure maps factor."""
    mut = pp.source
    if xm_m.X != mut.M or xm_n.X != mut.N:
        raise LieError("crossed modules are not over M and N")
    if lie_induced_actions(xm_m, xm_n) != mut:
        raise LieError("crossed modules do not induce the given actions")
    L = xm_m.A
    mu, nu = xm_m.boundary, xm_n.boundary
    S = pp.semidirect.algebra
    dm = mut.M.dim
    # h_S(m, n) = mu(m) + nu(n); it must kill the ideal
    h_cols = [
        tuple(mu.matrix[i][j] for i in range(L.dim)) for j in range(dm)
    ] + [
        tuple(nu.matrix[i][j] for i in range(L.dim)) for j in range(mut.N.dim)
    ]
    h_s = _lie_map_from_columns(S, L, h_cols)
    for row in pp.ideal_rows:
        v = h_s(row)
        if any(x != 0 for x in v):
            raise LieError(f"ideal not killed in the codomain, witness={row}")
    P = pp.algebra
    out_cols = [h_s(pp.lift(basis_vec(P.dim, c))) for c in range(P.dim)]
    out = _lie_map_from_columns(P, L, out_cols)
    out.check().expect("Lie homomorphism")
    for j in range(dm):
        resid = vsub(out(pp.l_m(basis_vec(dm, j))), mu(basis_vec(dm, j)))
        if any(x != 0 for x in resid):
            raise LieError("triangle over M fails")
    for j in range(mut.N.dim):
        resid = vsub(out(pp.l_n(basis_vec(mut.N.dim, j))), nu(basis_vec(mut.N.dim, j)))
        if any(x != 0 for x in resid):
            raise LieError("triangle over N fails")
    return out
