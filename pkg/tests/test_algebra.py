import itertools

import pytest

from hhring.algebra import (AlgebraElement, BasisPath, InvalidParams,
                            NonComposableWord, ParamsMismatch, algebra_create,
                            arrow_element, basis_all, basis_corner, centre,
                            idem, normal_form, path_mul, radical_membership)
from hhring.formulas import centre_basis_formula
from hhring.scalars import Matrix, field_create, rank_nullspace

Q = field_create(0)


def test_algebra_create():
    assert algebra_create(3, 1, Q).dimension == 12
    assert algebra_create(1, 2, field_create(2)).dimension == 8
    with pytest.raises(InvalidParams):
        algebra_create(0, 1, Q)
    with pytest.raises(InvalidParams):
        algebra_create(2, 0, Q)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_corner_dimension_table(m, N):
    P = algebra_create(m, N, Q)
    assert len(basis_all(P)) == 4 * m * N
    for i in range(m):
        for j in range(m):
            got = len(basis_corner(P, i, j))
            if m >= 3:
                if i == j:
                    want = 2 * N
                elif (i - j) % m in (1, m - 1):
                    want = N
                else:
                    want = 0
            elif m == 2:
                want = 2 * N
            else:
                want = 4 * N
            assert got == want, (m, N, i, j)


def test_normal_form_examples():
    P = algebra_create(3, 2, Q)
    assert normal_form(P, 0, [("a", 0), ("a", 1)]).is_zero()
    # (abar_{m-1} a_{m-1})^N at vertex 0 rewrites to the canonical socle
    word = [("b", 2), ("a", 2), ("b", 2), ("a", 2)]
    out = normal_form(P, 0, word)
    assert out.terms == {BasisPath(0, "a", 4): Q.one()}
    assert normal_form(P, 2, []).terms == {idem(2): Q.one()}
    with pytest.raises(NonComposableWord):
        normal_form(P, 0, [("a", 1)])
    # words longer than 2N vanish
    long_word = [("a", 0), ("b", 0)] * 2 + [("a", 0)]
    assert normal_form(P, 0, long_word).is_zero()


def test_multiply_examples():
    P = algebra_create(3, 2, Q)
    e0, e1 = (AlgebraElement.from_path(P, idem(i)) for i in (0, 1))
    assert e0.mul(e0) == e0
    assert e0.mul(e1).is_zero()
    # a_0(abar_0 a_0)^{N-1} . abar_0 = socle at vertex 0
    x = AlgebraElement.from_path(P, BasisPath(0, "a", 3))
    abar0 = arrow_element(P, "b", 0)
    assert x.mul(abar0).terms == {BasisPath(0, "a", 4): Q.one()}
    soc = AlgebraElement.from_path(P, BasisPath(0, "a", 4))
    assert soc.mul(arrow_element(P, "a", 0)).is_zero()
    with pytest.raises(ParamsMismatch):
        e0.mul(AlgebraElement.unit(algebra_create(2, 1, Q)))


@pytest.mark.parametrize("m,N", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)])
def test_associativity_and_unit(m, N):
    P = algebra_create(m, N, Q)
    paths = basis_all(P)
    unit = AlgebraElement.unit(P)
    elems = [AlgebraElement.from_path(P, p) for p in paths]
    for x in elems:
        assert unit.mul(x) == x == x.mul(unit)
    for x, y, z in itertools.islice(itertools.product(elems, repeat=3), 0, None):
        assert x.mul(y).mul(z) == x.mul(y.mul(z))


def test_path_mul_preserves_length():
    P = algebra_create(2, 3, Q)
    for p in basis_all(P):
        for q in basis_all(P):
            r = path_mul(P, p, q)
            if r is not None:
                assert r.length == p.length + q.length


def test_radical_membership():
    P = algebra_create(3, 1, Q)
    e0 = AlgebraElement.from_path(P, idem(0))
    a0 = arrow_element(P, "a", 0)
    assert not radical_membership(e0)
    assert radical_membership(a0)
    assert not radical_membership(e0.add(a0))


@pytest.mark.parametrize("m,N,char,want", [
    (2, 1, 0, 3), (1, 2, 0, 5), (5, 3, 0, 16), (3, 1, 0, 4),
    (4, 2, 3, 9), (1, 1, 2, 4), (2, 2, 2, 5), (6, 2, 5, 13),
])
def test_centre(m, N, char, want):
    F = field_create(char)
    P = algebra_create(m, N, F)
    c = centre(P)
    assert len(c) == want
    gens = [arrow_element(P, "a", i) for i in range(m)]
    gens += [arrow_element(P, "b", i) for i in range(m)]
    for z in c:
        for g in gens:
            assert z.mul(g) == g.mul(z)
    # span equals the published basis
    paths = basis_all(P)
    idx = {p: k for k, p in enumerate(paths)}

    def vec(e):
        v = [F.zero()] * len(paths)
        for p, cc in e.terms.items():
            v[idx[p]] = cc
        return v

    formula = centre_basis_formula(P)
    assert len(formula) == want
    rows = [vec(e) for e in c]
    r0, _ = rank_nullspace(Matrix(F, len(rows), len(paths), rows))
    rows += [vec(e) for e in formula]
    r1, _ = rank_nullspace(Matrix(F, len(rows), len(paths), rows))
    assert r0 == want == r1


def test_centre_m1_N2_span():
    P = algebra_create(1, 2, Q)
    got = {frozenset(z.terms) for z in centre(P)}
    want_elems = centre_basis_formula(P)
    # 1, (a abar)^2, a.abar + abar.a, a(abar a), abar(a abar)
    assert len(want_elems) == 5
    names = {e.render() for e in want_elems}
    assert "(a0 abar0)^2" in names
    assert any("a0(abar0 a0)^1" in n for n in names)


def test_render():
    P = algebra_create(3, 2, Q)
    assert BasisPath(0, "a", 4).render(P) == "(a0 abar0)^2"
    assert BasisPath(2, "b", 3).render(P) == "abar1(a1 abar1)^1"
    assert BasisPath(1, "a", 1).render(P) == "a1"
    assert idem(2).render(P) == "e2"
