import random
from itertools import product

import pytest

from stablehom.exactla import (
    Mat, SparseMat, Subspace, field_desc, enumerate_subspaces, make_span,
    quotient_data, parse_field,
)
from stablehom.exactla.dense import random_mat


# -- independent oracles -----------------------------------------------------

def naive_gauss_rank(field, rows):
    """Plain fraction-free-ish Gaussian elimination, written independently of
    Mat.rref: eliminate downward column by column, count nonzero rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    n = len(rows[0])
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pval = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = field.mul(rows[i][col], field.inv(pval))
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def brute_kernel_vectors(field, mat):
    """All kernel vectors by exhausting F_q^n (tiny n only)."""
    out = []
    for v in product(range(field.q), repeat=mat.n):
        if all(x == 0 for x in mat.mulvec(list(v))):
            out.append(v)
    return set(out)


# -- fields -------------------------------------------------------------------

@pytest.mark.parametrize("p,d", [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)])
def test_field_axioms_exhaustive(p, d):
    F = field_desc(p, d)
    assert F.q == p ** d
    assert F.check_axioms()


def test_parse_field():
    assert parse_field("3").q == 3
    assert parse_field("2^3").q == 8
    assert parse_field("4").key == (2, 2)
    assert parse_field("9").key == (3, 2)
    with pytest.raises(ValueError):
        parse_field("6")


def test_extension_field_frobenius():
    F4 = field_desc(2, 2)
    for a in F4.elements():
        # x -> x^4 is the identity on GF(4)
        assert F4.power(a, 4) == a


# -- dense rank / kernel -------------------------------------------------------

def test_rank_identity_and_zero():
    F2 = field_desc(2)
    F3 = field_desc(3)
    assert Mat.identity(F2, 4).rank() == 4
    assert Mat.zeros(F3, 3, 5).rank() == 0


def test_rank_against_naive_oracle():
    F3 = field_desc(3)
    rng = random.Random(6)
    for _ in range(30):
        A = random_mat(F3, 6, 6, rng)
        assert A.rank() == naive_gauss_rank(F3, A.rows)


def test_rank_transpose_property():
    rng = random.Random(1)
    for q, d in [(2, 1), (3, 1), (2, 2)]:
        F = field_desc(q, d)
        for _ in range(20):
            A = random_mat(F, rng.randrange(1, 6), rng.randrange(1, 6), rng)
            assert A.rank() == A.transpose().rank()


def test_kernel_identity_zero_and_11():
    F2 = field_desc(2)
    assert Mat.identity(F2, 3).kernel_basis() == []
    K = Mat.zeros(F2, 2, 3).kernel_basis()
    assert Subspace.from_vectors(F2, 3, K) == Subspace.full(F2, 3)
    # 1x2 matrix (1 1) over F_2: kernel is span{(1,1)}, checked by enumerating all 4 vectors
    A = Mat.from_rows(F2, [[1, 1]])
    expected = {v for v in product(range(2), repeat=2)
                if (v[0] + v[1]) % 2 == 0}
    assert brute_kernel_vectors(F2, A) == expected
    ker = Subspace.from_vectors(F2, 2, A.kernel_basis())
    assert set(ker.vectors()) == expected


def test_rank_nullity():
    rng = random.Random(7)
    for q in (2, 3, 5):
        F = field_desc(q)
        for _ in range(15):
            A = random_mat(F, rng.randrange(1, 5), rng.randrange(1, 5), rng)
            ker = A.kernel_basis()
            assert A.rank() + len(ker) == A.n
            for v in ker:
                assert all(x == 0 for x in A.mulvec(v))


def test_solve():
    F3 = field_desc(3)
    rng = random.Random(3)
    for _ in range(20):
        A = random_mat(F3, 4, 3, rng)
        x = [rng.randrange(3) for _ in range(3)]
        b = A.mulvec(x)
        sol = A.solve(b)
        assert sol is not None
        assert A.mulvec(sol) == b


# -- sparse vs dense -----------------------------------------------------------

def test_sparse_dense_agree_rank_kernel():
    rng = random.Random(42)
    for (p, d) in [(2, 1), (3, 1), (2, 2), (5, 1)]:
        F = field_desc(p, d)
        for _ in range(100):
            m = rng.randrange(1, 7)
            n = rng.randrange(1, 7)
            A = Mat(F, [[rng.randrange(F.q) if rng.random() < 0.5 else 0
                         for _ in range(n)] for _ in range(m)], (m, n))
            S = SparseMat.from_dense(A)
            assert S.rank() == A.rank()
            dk = Subspace.from_vectors(F, n, A.kernel_basis())
            sk = Subspace.from_vectors(F, n, S.kernel_basis())
            assert dk == sk


def test_span_basis_matches_rank():
    rng = random.Random(9)
    for q in (2, 3):
        F = field_desc(q)
        for _ in range(25):
            n = rng.randrange(1, 8)
            vecs = [{j: rng.randrange(F.q) for j in range(n)} for _ in range(6)]
            span = make_span(F, n)
            for v in vecs:
                span.insert(v)
            rows = [[v.get(j, 0) for j in range(n)] for v in vecs]
            assert span.dim == Mat.from_rows(F, rows, n).rank()
            for v in vecs:
                assert span.contains(v)


# -- subspaces ------------------------------------------------------------------

def test_subspace_canonical_form():
    F3 = field_desc(3)
    rng = random.Random(11)
    for _ in range(25):
        vecs = [[rng.randrange(3) for _ in range(4)] for _ in range(3)]
        W = Subspace.from_vectors(F3, 4, vecs)
        # random invertible recombination spans the same set
        scrambled = []
        for _ in range(4):
            coeffs = [rng.randrange(3) for _ in vecs]
            v = [0] * 4
            for c, w in zip(coeffs, vecs):
                for j in range(4):
                    v[j] = F3.add(v[j], F3.mul(c, w[j]))
            scrambled.append(v)
        W2 = Subspace.from_vectors(F3, 4, scrambled)
        if set(W.vectors()) == set(W2.vectors()):
            assert W == W2


def test_subspace_counts():
    F2 = field_desc(2)
    assert len(enumerate_subspaces(F2, 3)) == 16
    assert len(enumerate_subspaces(F2, 3, dim=1)) == 7
    assert len(enumerate_subspaces(F2, 3, dim=2)) == 7
    assert len(enumerate_subspaces(F2, 4)) == 67
    F3 = field_desc(3)
    assert len(enumerate_subspaces(F3, 2, dim=1)) == 4


def test_intersection_and_sum():
    F2 = field_desc(2)
    planes = enumerate_subspaces(F2, 3, dim=2)
    assert len(planes) == 7
    for W in planes:
        assert W.intersection(W) == W
    # two distinct planes in F_2^3 always meet in a line (every pair checked)
    for i, W1 in enumerate(planes):
        for W2 in planes[i + 1:]:
            meet = W1.intersection(W2)
            assert meet.dim == 1
            assert W1.sum(W2).dim == 3
            brute = set(W1.vectors()) & set(W2.vectors())
            assert set(meet.vectors()) == brute


def test_preimage_image():
    F2 = field_desc(2)
    for W in enumerate_subspaces(F2, 3):
        assert W.preimage(Mat.identity(F2, 3)) == W
        assert W.image(Mat.identity(F2, 3)) == W
    F3 = field_desc(3)
    rng = random.Random(5)
    for _ in range(20):
        f = random_mat(F3, 3, 2, rng)
        W = Subspace.from_vectors(F3, 3, [[rng.randrange(3) for _ in range(3)]
                                          for _ in range(2)])
        pre = W.preimage(f)
        brute = {v for v in product(range(3), repeat=2)
                 if W.contains_vector(f.mulvec(list(v)))}
        assert set(pre.vectors()) == brute


def test_quotient_data():
    F3 = field_desc(3)
    W = Subspace.from_vectors(F3, 3, [[1, 2, 0]])
    section, proj = quotient_data(F3, 3, W)
    assert len(section) == 2 and proj.m == 2 and proj.n == 3
    # proj kills W and is the identity on the section
    for v in W.vectors():
        assert all(x == 0 for x in proj.mulvec(list(v)))
    for i, s in enumerate(section):
        image = proj.mulvec(s)
        assert image == [1 if j == i else 0 for j in range(2)]
