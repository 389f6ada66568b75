import random
from fractions import Fraction

import pytest

from symfusion.shapes import Partition, count_semistandard, row_tableau, skew
from symfusion.symalg import GroupAlgebraElement, Permutation, e_tableau
from symfusion.tensorop import (AmbientMismatch, BilinearForm, SingularForm,
                                SparseOperator, act, alternating_form, decode,
                                dual_basis, encode, image_basis, intersect,
                                kernel_basis, perm_op, q_op, rank,
                                span_of_vectors, subspace_equal, symmetric_form,
                                traceless_basis)


def P(*parts):
    return Partition(parts)


def unit(N, n, index):
    return {encode(index, N): Fraction(1)}


def test_multiindex_encoding():
    assert encode((1, 1), 2) == 0
    assert encode((1, 2), 2) == 1
    assert encode((2, 1), 2) == 2  # first index most significant
    assert decode(5, 2, 3) == (2, 1, 2) and encode((2, 1, 2), 2) == 5


def test_perm_op_examples():
    I = perm_op(Permutation.identity(2), 2)
    assert I == SparseOperator.identity(2, 2)
    swap = perm_op(Permutation((2, 1)), 2)
    assert swap.apply(unit(2, 2, (1, 2))) == unit(2, 2, (2, 1))
    assert swap.apply(unit(2, 2, (2, 1))) == unit(2, 2, (1, 2))
    assert swap.nnz() == 4  # exactly N^n entries, all 1


def test_perm_op_is_a_homomorphism():
    rng = random.Random(3)
    for _ in range(5):
        images = list(range(1, 4))
        rng.shuffle(images)
        s = Permutation(images)
        rng.shuffle(images)
        t = Permutation(images)
        from symfusion.symalg import compose
        assert perm_op(s, 2) * perm_op(t, 2) == perm_op(compose(s, t), 2)


def test_form_validation():
    with pytest.raises(ValueError):
        BilinearForm("alternating", 3)
    with pytest.raises(ValueError):
        BilinearForm("symmetric", 2, [[0, 1], [-1, 0]])
    with pytest.raises(SingularForm):
        BilinearForm("symmetric", 2, [[1, 1], [1, 1]])


def test_dual_basis_examples():
    assert dual_basis(symmetric_form(2)) == [(1, 0), (0, 1)]
    alt = alternating_form(2)
    assert dual_basis(alt) == [(0, 1), (-1, 0)]  # v1 = e2, v2 = -e1
    # <e1, v1> = 1 and <e2, v1> = 0 define v1
    v1, v2 = dual_basis(alt)
    assert sum(alt.pairing(1, j + 1) * v1[j] for j in range(2)) == 1
    assert sum(alt.pairing(2, j + 1) * v1[j] for j in range(2)) == 0
    scaled = symmetric_form(2, [[2, 0], [0, 1]])
    assert dual_basis(scaled)[0] == (Fraction(1, 2), 0)


def test_q_op_symmetric_identity_form():
    form = symmetric_form(2)
    Q = q_op(1, 2, form, 2)
    w = {encode((1, 1), 2): Fraction(1), encode((2, 2), 2): Fraction(1)}
    assert Q.apply(unit(2, 2, (1, 1))) == w
    assert Q.apply(unit(2, 2, (1, 2))) == {}
    assert Q * Q == Q.scaled(2)


def test_q_op_alternating():
    form = alternating_form(2)
    Q = q_op(1, 2, form, 2)
    assert Q.apply(unit(2, 2, (1, 2))) == {encode((1, 2), 2): Fraction(1),
                                           encode((2, 1), 2): Fraction(-1)}
    assert Q.apply(unit(2, 2, (1, 1))) == {}


def test_q_op_relations_both_forms():
    for form in (symmetric_form(2), symmetric_form(3), alternating_form(2)):
        N = form.N
        sign = 1 if form.kind == "symmetric" else -1
        for n in (2, 3):
            I = SparseOperator.identity(N, n)
            for k in range(1, n):
                for l in range(k + 1, n + 1):
                    Q = q_op(k, l, form, n)
                    P_ = perm_op(Permutation.transposition(n, k, l), N)
                    assert Q * Q == Q.scaled(N)
                    assert Q == q_op(l, k, form, n)
                    assert (Q * (I - P_.scaled(sign))).is_zero()
                    assert P_ * Q == Q.scaled(sign)


def test_q_op_index_errors():
    with pytest.raises(IndexError):
        q_op(1, 1, symmetric_form(2), 2)
    with pytest.raises(IndexError):
        q_op(0, 2, symmetric_form(2), 2)


def test_pair_vector_is_basis_independent():
    # conjugating the Gram matrix must conjugate the contraction operator
    rng = random.Random(23)
    N = 2
    for kind in ("symmetric", "alternating"):
        base = symmetric_form(N) if kind == "symmetric" else alternating_form(N)
        while True:
            A = [[Fraction(rng.randint(-3, 3)) for _ in range(N)] for _ in range(N)]
            det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
            if det:
                break
        new_gram = [[sum(A[k][i] * base.gram[k][m] * A[m][j]
                         for k in range(N) for m in range(N))
                     for j in range(N)] for i in range(N)]
        changed = BilinearForm(kind, N, new_gram)
        Q_new = q_op(1, 2, changed, 2)
        Q_old = q_op(1, 2, base, 2)
        AxA = _two_slot(A, N)
        AxA_inv = _two_slot(_inv2(A), N)
        assert AxA_inv * Q_old * AxA == Q_new


def _two_slot(A, N):
    rows = {}
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for m in range(N):
                    v = A[i][k] * A[j][m]
                    if v:
                        rows.setdefault(i * N + j, {})[k * N + m] = v
    return SparseOperator(N, 2, rows)


def _inv2(A):
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    return [[A[1][1] / det, -A[0][1] / det], [-A[1][0] / det, A[0][0] / det]]


def test_act_examples():
    a = GroupAlgebraElement(2, {(1, 2): Fraction(1), (2, 1): Fraction(1)})
    out = act(a, 2).apply(unit(2, 2, (1, 2)))
    assert out == {encode((1, 2), 2): Fraction(1), encode((2, 1), 2): Fraction(1)}
    e11 = e_tableau(row_tableau(skew(P(1, 1))))
    assert act(e11, 1).is_zero()
    e21 = e_tableau(row_tableau(skew(P(2, 1))))
    assert rank(act(e21, 2)) == count_semistandard(skew(P(2, 1)), 2) == 2


def test_act_is_algebra_homomorphism():
    rng = random.Random(29)
    for n, N in ((3, 2), (4, 2), (3, 3)):
        for _ in range(3):
            def rand_elem():
                terms = {}
                for _ in range(rng.randint(1, 4)):
                    images = list(range(1, n + 1))
                    rng.shuffle(images)
                    terms[tuple(images)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                return GroupAlgebraElement(n, terms)
            a, b = rand_elem(), rand_elem()
            assert act(a * b, N) == act(a, N) * act(b, N)


def test_rank_and_bases():
    I = SparseOperator.identity(2, 2)
    assert rank(I) == 4
    P_ = perm_op(Permutation((2, 1)), 2)
    sym2 = I + P_
    assert rank(sym2) == 3
    assert image_basis(sym2).dim == 3
    assert kernel_basis(sym2).dim == 1
    assert rank(q_op(1, 2, symmetric_form(2), 2)) == 1
    assert rank(q_op(1, 2, alternating_form(2), 2)) == 1


def test_traceless_dimensions():
    assert traceless_basis(2, 2, symmetric_form(2)).dim == 3
    assert traceless_basis(2, 1, symmetric_form(2)).dim == 2
    assert traceless_basis(2, 2, alternating_form(2)).dim == 3
    # third power of the plane: only the single-row label survives,
    # a two-dimensional space of harmonic cubics
    assert traceless_basis(2, 3, symmetric_form(2)).dim == 2


def test_traceless_matches_stacked_kernel():
    for form in (symmetric_form(2), alternating_form(2), symmetric_form(3)):
        N, n = form.N, 3
        stacked = SparseOperator.zero(N, n)
        T = traceless_basis(N, n, form)
        for k in range(1, n):
            for l in range(k + 1, n + 1):
                Q = q_op(k, l, form, n)
                for vec in T.vectors:
                    dv = {i: v for i, v in enumerate(vec) if v}
                    assert Q.apply(dv) == {}


def test_subspace_operations():
    e1 = span_of_vectors(2, [(1, 0)])
    e2 = span_of_vectors(2, [(0, 1)])
    assert subspace_equal(e1, e1)
    assert not subspace_equal(e1, e2)
    assert intersect(e1, e2).dim == 0
    I = SparseOperator.identity(2, 2)
    P_ = perm_op(Permutation((2, 1)), 2)
    sym_img = image_basis(I + P_)
    tr = traceless_basis(2, 2, symmetric_form(2))
    meet = intersect(sym_img, tr)
    assert meet.dim == 2
    with pytest.raises(AmbientMismatch):
        subspace_equal(e1, span_of_vectors(3, [(1, 0, 0)]))


def test_operator_json_triplets():
    P_ = perm_op(Permutation((2, 1)), 2)
    trip = P_.to_triplets()
    assert trip[0] == {"row": 0, "col": 0, "value": "1"}
    assert {t["row"] for t in trip} == {0, 1, 2, 3}
