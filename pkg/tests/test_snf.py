import numpy as np
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from belyitools.snf import IntMatrix, ModSNF, determinant, smith_normal_form


def matrices(max_dim=4, lo=-9, hi=9):
    return st.integers(1, max_dim).flatmap(lambda r: st.integers(1, max_dim).flatmap(
        lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@given(matrices())
def test_smith_form_is_valid_and_matches_sympy(rows):
    M = IntMatrix.from_rows(rows)
    D, U, V = smith_normal_form(M)
    assert U @ M @ V == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    d = D.diagonal()
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(D[i, j] == 0 for i in range(D.rows) for j in range(D.cols) if i != j)
    theirs = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
    assert sorted(nz) == sorted(abs(int(theirs[i, i])) for i in range(min(theirs.shape))
                                if theirs[i, i] != 0)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_sympy(rows):
    assert determinant(IntMatrix.from_rows(rows)) == sympy.Matrix(rows).det()


@settings(max_examples=150)
@given(matrices(5, 0, 11), st.sampled_from([2, 4, 6, 8, 9, 12]))
def test_mod_snf_transforms(rows, e):
    M = np.array(rows, dtype=np.int64) % e
    S = ModSNF(M, e)
    r, c = M.shape
    assert (S.U @ S.Uinv % e == np.eye(r, dtype=np.int64)).all()
    assert (S.V @ S.Vinv % e == np.eye(c, dtype=np.int64)).all()
    D = S.U @ M @ S.V % e
    for i in range(r):
        for j in range(c):
            if i != j:
                assert D[i, j] == 0
    for i in range(min(r, c)):
        assert (D[i, i] - S.s[i]) % e == 0
    assert all(e % s == 0 for s in S.s)


@settings(max_examples=100)
@given(matrices(4, 0, 5), st.sampled_from([2, 3, 4, 6]))
def test_mod_snf_kernel_and_solve_bruteforce(rows, e):
    from itertools import product
    M = np.array(rows, dtype=np.int64) % e
    r, c = M.shape
    S = ModSNF(M, e)
    kernel = {x for x in product(range(e), repeat=c) if not (M @ np.array(x) % e).any()}
    gens, orders = S.kernel_basis()
    span = {tuple([0] * c)}
    for g in gens:
        span = {tuple((np.array(s) + k * g) % e) for s in span for k in range(e)}
    assert span == kernel
    assert np.prod(orders, dtype=int) == len(kernel)
    image = {tuple(M @ np.array(x) % e) for x in product(range(e), repeat=c)}
    for b in product(range(e), repeat=r):
        x = S.solve(b)
        if b in image:
            assert x is not None and tuple(M @ x % e) == b
        else:
            assert x is None
