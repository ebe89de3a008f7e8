"""Shared helpers for the test suite: small random categories and modules."""

import random

from stablehom.exactla import Mat, field_desc
from stablehom.fincat import FinCat, group_cat
from stablehom.funrep.linrep import LinRep, projective_rep, rep_cokernel, constant_rep


def cyclic_group_cat(field, k):
    """Z/k as a one-object category with integer payloads."""
    return group_cat(list(range(k)), lambda a, b: (a + b) % k, 0,
                     kind=f"Z/{k}")


def attach_field(cat, field):
    cat.field = field
    return cat


def random_poset_cat(rng, max_elems=4):
    """A random finite poset as a thin category."""
    n = rng.randrange(2, max_elems + 1)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                leq[i][j] = True
    # transitive closure
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True
    C = FinCat("poset", list(range(n)))
    C.compose_payload = lambda gp, fp: (fp[0], gp[1])
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                C.add_morphism(i, j, (i, j))
    for i in range(n):
        C.set_identity(i, C.mid_of(i, i, (i, i)))
    return C.finish()


def random_small_cat(rng, field):
    """Poset or poset x cyclic-group product with <= 40 morphisms."""
    C = random_poset_cat(rng)
    if rng.random() < 0.5:
        k = rng.choice([2, 3])
        G = cyclic_group_cat(field, k)
        C = C.product(G)
        while C.n_morphisms() > 40:
            C = random_poset_cat(rng)
            C = C.product(cyclic_group_cat(field, 2))
    return attach_field(C, field)


def random_module(rng, cat, field, variance):
    """Cokernel of a random map between sums of standard projectives."""
    n = cat.n_objects()
    a = rng.randrange(n)
    b = rng.randrange(n)
    src = projective_rep(cat, a, variance)
    tgt = projective_rep(cat, b, variance)
    if rng.random() < 0.5:
        tgt = tgt.direct_sum(projective_rep(cat, rng.randrange(n), variance))
    # a map P_a -> P_b is precomposition by a formal sum in k[Hom(b, a)]
    maps = []
    if variance == "co":
        hom = cat.hom(b, a)
    else:
        hom = cat.hom(a, b)
    coeffs = [(m, rng.randrange(1, field.q)) for m in hom if rng.random() < 0.7]
    for o in range(n):
        M = Mat.zeros(field, tgt.dims[o], src.dims[o])
        for (m, c) in coeffs:
            # column f of the source projective maps to [f o m] (covariant)
            # or [m o f] (contravariant) with coefficient c
            if variance == "co":
                src_hom = cat.hom(a, o)
                tgt_index = {mm: i for i, mm in enumerate(cat.hom(b, o))}
                for j, f in enumerate(src_hom):
                    i = tgt_index[cat.compose(f, m)]
                    M.rows[i][j] = field.add(M.rows[i][j], c)
            else:
                src_hom = cat.hom(o, a)
                tgt_index = {mm: i for i, mm in enumerate(cat.hom(o, b))}
                for j, f in enumerate(src_hom):
                    i = tgt_index[cat.compose(m, f)]
                    M.rows[i][j] = field.add(M.rows[i][j], c)
        maps.append(M)
    return rep_cokernel(src, tgt, maps)
