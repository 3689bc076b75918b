import pytest

from hhring.algebra import algebra_create
from hhring.homcomplex import CohomologySession
from hhring.oracle import BarComplex, TooLarge, bar_cross_check, bar_hh_dimension
from hhring.scalars import field_create


def test_bar_dimensions_small():
    P = algebra_create(1, 1, field_create(0))
    B = BarComplex(P)
    assert B.dim(0) == 4          # the diagonal part of the algebra
    assert B.dim(1) == 3 * 4      # three radical paths, full corner values
    assert B.dim(2) == 9 * 4


def test_bar_hh0_is_centre():
    for (m, N, char, want) in [(1, 1, 0, 4), (2, 1, 0, 3), (3, 1, 2, 4),
                               (1, 2, 0, 5)]:
        P = algebra_create(m, N, field_create(char))
        assert bar_hh_dimension(P, 0) == want


def test_bar_differential_squares_to_zero():
    # columns of d composed with d vanish, checked per elementary cochain
    P = algebra_create(2, 1, field_create(0))
    B = BarComplex(P)
    for n in (0, 1, 2):
        for w_coords in B._coords_by_weight(n).values():
            for (word, value) in w_coords:
                col = B._column(n, word, value)
                acc = {}
                for (word2, value2), c in col.items():
                    for key, c2 in B._column(n + 1, word2, value2).items():
                        acc[key] = acc.get(key, 0) + c * c2
                assert all(v == 0 for v in acc.values()), (n, word, value)


@pytest.mark.parametrize("m,N,char,n_max", [(1, 1, 0, 4), (2, 1, 2, 3),
                                            (3, 1, 0, 3)])
def test_cross_check(m, N, char, n_max):
    S = CohomologySession(algebra_create(m, N, field_create(char)))
    rep = bar_cross_check(S, n_max)
    assert rep["ok"], rep


def test_too_large():
    P = algebra_create(1, 2, field_create(0))
    with pytest.raises(TooLarge):
        bar_hh_dimension(P, 3, max_coords=100)


def test_env_override(monkeypatch):
    monkeypatch.setenv("HH_MAX_COORDS", "50")
    P = algebra_create(1, 1, field_create(0))
    with pytest.raises(TooLarge):
        bar_hh_dimension(P, 3)
    monkeypatch.setenv("HH_MAX_COORDS", "100000")
    assert bar_hh_dimension(P, 3) == 6
