from itertools import permutations

import pytest

from peiffer.groups import (
    FiniteGroup,
    GroupError,
    Hom,
    automorphisms,
    aut_group,
    direct_product,
    identity_hom,
    is_isomorphic,
    is_normal,
    is_subgroup,
    normal_closure,
    quotient,
    subgroup_closure,
    subgroup_group,
    validate_table,
)
from peiffer.catalog import cyclic, klein_four, symmetric_3


def test_validate_accepts_cyclic():
    assert validate_table(cyclic(5).table).ok


def test_validate_rejects_nonsquare():
    d = validate_table(((0, 1), (1,)))
    assert not d.ok and d.reason == "table is not square"


def test_validate_rejects_no_inverse():
    # left-zero-ish table: 1 has no inverse
    d = validate_table(((0, 1), (1, 1)))
    assert not d.ok
    assert d.reason == "no inverse for element 1"
    assert d.witness == (1,)


def test_validate_rejects_nonassociative():
    # a quasigroup that is not a group: subtraction mod 3 has 0 as a right
    # identity only, so the identity check trips first
    table = tuple(tuple((i - j) % 3 for j in range(3)) for i in range(3))
    assert not validate_table(table).ok


def test_identity_not_forced_to_zero():
    # Z2 written with the identity at index 1
    G = FiniteGroup(((1, 0), (0, 1)))
    assert G.identity == 1
    assert G.inv(0) == 0


def test_element_orders_s3():
    S3 = symmetric_3()
    assert S3.order_multiset() == (1, 2, 2, 2, 3, 3)


def test_hom_checks_multiplicativity():
    Z4 = cyclic(4)
    Z2 = cyclic(2)
    Hom(Z4, Z2, (0, 1, 0, 1))  # reduction mod 2
    with pytest.raises(GroupError):
        Hom(Z4, Z2, (0, 1, 1, 0))


def test_hom_compose_and_inverse():
    Z6 = cyclic(6)
    f = Hom(Z6, Z6, tuple((5 * x) % 6 for x in range(6)))  # negation
    assert f.compose(f) == identity_hom(Z6)
    assert f.inverse() == f


def test_subgroup_closure_generates():
    S3 = symmetric_3()
    for x in S3.elements():
        C = subgroup_closure(S3, [x])
        assert len(C) == S3.element_order(x)
        assert is_subgroup(S3, C)


def test_normal_closure_oracle():
    # oracle: the smallest normal subgroup containing g, found by
    # intersecting every normal subgroup enumerated by brute force
    S3 = symmetric_3()
    all_subsets = []
    elems = list(S3.elements())
    for x in elems:
        all_subsets.append(subgroup_closure(S3, [x]))
    for x in elems:
        for y in elems:
            all_subsets.append(subgroup_closure(S3, [x, y]))
    normals = {S for S in all_subsets if is_normal(S3, S)}
    for g in elems:
        expected = frozenset(range(S3.order))
        for S in normals:
            if g in S and len(S) < len(expected):
                expected = S
        assert normal_closure(S3, [g]) == expected


def test_quotient_minimal_reps_and_projection():
    S3 = symmetric_3()
    A3 = frozenset(x for x in S3.elements() if S3.element_order(x) in (1, 3))
    Q, proj = quotient(S3, A3)
    assert Q.order == 2
    assert proj.kernel() == A3
    assert proj.is_surjective()
    # coset of the identity maps to the same index as the identity itself
    assert proj(S3.identity) == Q.identity


def test_quotient_rejects_non_normal():
    S3 = symmetric_3()
    t = next(x for x in S3.elements() if S3.element_order(x) == 2)
    with pytest.raises(GroupError):
        quotient(S3, subgroup_closure(S3, [t]))


def test_quotient_of_normal_closure():
    for G in (cyclic(6), symmetric_3(), klein_four()):
        for g in G.elements():
            K = normal_closure(G, [g])
            _, proj = quotient(G, K)
            assert proj.kernel() == K


def test_subgroup_group_inclusion():
    S3 = symmetric_3()
    A3 = frozenset(x for x in S3.elements() if S3.element_order(x) in (1, 3))
    H, incl = subgroup_group(S3, A3)
    assert H.order == 3
    assert incl.is_injective()
    assert is_isomorphic(H, cyclic(3)) is not None


def test_direct_product_indexing():
    Z2, Z3 = cyclic(2), cyclic(3)
    P = direct_product(Z2, Z3)
    # (g, h) lives at g*3+h
    assert P.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
    assert is_isomorphic(P, cyclic(6)) is not None


def _brute_force_auts(G):
    out = []
    for perm in permutations(range(G.order)):
        if all(
            perm[G.table[a][b]] == G.table[perm[a]][perm[b]]
            for a in range(G.order)
            for b in range(G.order)
        ):
            out.append(perm)
    return sorted(out)


@pytest.mark.parametrize("G", [cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric_3()])
def test_automorphisms_against_brute_force(G):
    assert [a.mapping for a in automorphisms(G)] == _brute_force_auts(G)


def test_aut_group_is_a_group():
    for G in (klein_four(), symmetric_3(), cyclic(6)):
        A, auts = aut_group(G)
        assert A.validate().ok
        # closure under composition matches the table
        for i, a in enumerate(auts):
            for j, b in enumerate(auts):
                comp = tuple(a.mapping[v] for v in b.mapping)
                assert auts[A.table[i][j]].mapping == comp


def test_aut_s3_is_s3():
    A, _ = aut_group(symmetric_3())
    assert is_isomorphic(A, symmetric_3()) is not None


def test_is_isomorphic_identity_on_same_table():
    S3 = symmetric_3()
    assert is_isomorphic(S3, S3) == identity_hom(S3)


def test_is_isomorphic_distinguishes_groups():
    assert is_isomorphic(cyclic(4), klein_four()) is None
    assert is_isomorphic(cyclic(6), symmetric_3()) is None


def test_is_isomorphic_symmetric():
    Z6 = cyclic(6)
    P = direct_product(cyclic(2), cyclic(3))
    f = is_isomorphic(Z6, P)
    g = is_isomorphic(P, Z6)
    assert f is not None and g is not None
    assert f.check().ok and g.check().ok


def test_is_isomorphic_cap():
    big = cyclic(65)
    with pytest.raises(GroupError):
        is_isomorphic(big, big, cap=64)


def test_automorphism_counts():
    assert len(automorphisms(cyclic(2))) == 1
    assert len(automorphisms(cyclic(3))) == 2
    assert len(automorphisms(klein_four())) == 6


def test_normal_closure_of_transposition_is_everything():
    S3 = symmetric_3()
    t = next(x for x in S3.elements() if S3.element_order(x) == 2)
    assert normal_closure(S3, [t]) == frozenset(range(6))
    assert normal_closure(S3, [S3.identity]) == frozenset({S3.identity})
