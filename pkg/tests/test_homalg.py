import random

import pytest

from support import (
    attach_field, cyclic_group_cat, random_module, random_small_cat,
)

from stablehom.exactla import Mat, field_desc
from stablehom.fincat import (
    MonFunctor, build_grassmann_cat, build_quad_cat, build_set_cats,
    build_vect_cat,
)
from stablehom.funrep import CONST, G, ID, KQ2, S, evaluate
from stablehom.funrep.linrep import constant_rep, projective_rep
from stablehom.homalg import (
    bar_tor_oracle, build_category_of_elements, delta_restrict, hochschild,
    hom_bimodule_rep, iota, kan_extension, kappa, lam, lambda_into_omega,
    omega, omega_kappa_vs_varpi_delta, omega_x, op_rep, resolve, rho,
    tensor_over_cat, tor, varpi, external_product_rep,
)

F2 = field_desc(2)
F3 = field_desc(3)


# -- tensor over a category -------------------------------------------------------

def test_tensor_with_projective_is_evaluation():
    rng = random.Random(0)
    for seed in range(5):
        cat = random_small_cat(random.Random(seed), F3)
        Grep = random_module(random.Random(seed + 100), cat, F3, "contra")
        for c in range(cat.n_objects()):
            P = projective_rep(cat, c, "co")
            assert tensor_over_cat(Grep, P).dim == Grep.dims[c]


def test_tensor_const_const_initial_object():
    # a poset with a bottom element has connected nerve
    cat = attach_field(build_set_cats(2, "theta"), F2)
    one = constant_rep(cat, F2, 1, variance="contra")
    oneco = constant_rep(cat, F2, 1, variance="co")
    assert tensor_over_cat(one, oneco).dim == 1


def test_tensor_group_coinvariants():
    cat = attach_field(cyclic_group_cat(F3, 2), F3)
    triv = constant_rep(cat, F3, 1, variance="contra")
    # M = F_3 with the sign action of Z/2: coinvariants vanish
    sign = Mat.from_rows(F3, [[2]])

    def act(mid):
        return Mat.identity(F3, 1) if cat.is_identity(mid) else sign

    from stablehom.funrep.linrep import LinRep
    M = LinRep(cat, "co", [1], act, name="sign")
    assert tensor_over_cat(triv, M).dim == 0
    Mtriv = constant_rep(cat, F3, 1, variance="co")
    assert tensor_over_cat(triv, Mtriv).dim == 1


def test_tensor_generators_vs_all_morphisms():
    rng = random.Random(5)
    for seed in range(4):
        cat = random_small_cat(random.Random(seed), F2)
        Grep = random_module(random.Random(seed + 50), cat, F2, "contra")
        Frep = random_module(random.Random(seed + 99), cat, F2, "co")
        full = tensor_over_cat(Grep, Frep, gens=range(cat.n_morphisms()))
        gens = tensor_over_cat(Grep, Frep)
        assert full.dim == gens.dim


# -- resolutions --------------------------------------------------------------------

def test_resolve_projective_is_length_zero():
    cat = attach_field(build_set_cats(2, "theta"), F2)
    P = projective_rep(cat, 1, "co")
    res = resolve(P, 3)
    # P is projective: the kernel vanishes immediately
    assert res.gens[0] and not res.gens[1]
    res.validate_exactness()


def test_resolve_trivial_module_z2():
    cat = attach_field(cyclic_group_cat(F2, 2), F2)
    triv = constant_rep(cat, F2, 1, variance="co")
    res = resolve(triv, 4)
    # minimal resolution of k over F_2[Z/2]: one generator at every level
    for level in range(5):
        assert len(res.gens[level]) == 1
    res.validate_exactness()


def test_resolve_exactness_random():
    for seed in range(6):
        rng = random.Random(seed)
        cat = random_small_cat(rng, F3)
        Frep = random_module(rng, cat, F3, "co")
        res = resolve(Frep, 3)
        res.validate_exactness()


def test_tor_projective_argument():
    cat = attach_field(build_set_cats(2, "theta"), F3)
    Grep = random_module(random.Random(3), cat, F3, "contra")
    P = projective_rep(cat, 2, "co")
    dims, _ = tor(Grep, P, 3)
    assert dims == [Grep.dims[2], 0, 0, 0]


def test_tor_z2_trivial_coefficients():
    cat = attach_field(cyclic_group_cat(F2, 2), F2)
    triv_c = constant_rep(cat, F2, 1, variance="contra")
    triv = constant_rep(cat, F2, 1, variance="co")
    dims, _ = tor(triv_c, triv, 4)
    assert dims == [1, 1, 1, 1, 1]
    assert bar_tor_oracle(triv_c, triv, 4) == [1, 1, 1, 1, 1]


def test_tor_z3_trivial_coefficients_wrong_char():
    # over F_2 the group algebra of Z/3 is semisimple: higher Tor vanishes
    cat = attach_field(cyclic_group_cat(F2, 3), F2)
    triv_c = constant_rep(cat, F2, 1, variance="contra")
    triv = constant_rep(cat, F2, 1, variance="co")
    dims, _ = tor(triv_c, triv, 3)
    assert dims == [1, 0, 0, 0]


def test_tor_coinvariants_of_id_vanish():
    cat = build_vect_cat(F3, 2, "all")
    Id = evaluate(ID(), cat)
    triv = constant_rep(cat, F3, 1, variance="contra")
    assert tensor_over_cat(triv, Id).dim == 0
    dims, _ = tor(triv, Id, 0)
    assert dims == [0]


def test_tor_matches_bar_oracle_randomized():
    # the acceptance criterion runs 20 instances; keep a smaller CI copy here
    for seed in range(6):
        rng = random.Random(seed)
        field = F2 if seed % 2 == 0 else F3
        cat = random_small_cat(rng, field)
        Grep = random_module(rng, cat, field, "contra")
        Frep = random_module(rng, cat, field, "co")
        dims, _ = tor(Grep, Frep, 3)
        oracle = bar_tor_oracle(Grep, Frep, 3)
        assert dims == oracle, (seed, dims, oracle)


def test_tor_resolve_side_right():
    for seed in range(3):
        rng = random.Random(seed)
        cat = random_small_cat(rng, F3)
        Grep = random_module(rng, cat, F3, "contra")
        Frep = random_module(rng, cat, F3, "co")
        left, _ = tor(Grep, Frep, 2)
        right, _ = tor(Grep, Frep, 2, resolve_side="right")
        assert left == right


def test_tor_sweep_order_invariance():
    for seed in range(4):
        rng = random.Random(seed)
        cat = random_small_cat(rng, F2)
        Grep = random_module(rng, cat, F2, "contra")
        Frep = random_module(rng, cat, F2, "co")
        a, _ = tor(Grep, Frep, 2)
        order = list(range(cat.n_objects()))[::-1]
        b, _ = tor(Grep, Frep, 2, order=order)
        assert a == b


# -- kan extension -----------------------------------------------------------------

def _identity_functor(cat):
    return MonFunctor(cat, cat, list(range(cat.n_objects())),
                      {m: m for m in range(cat.n_morphisms())})


def test_kan_identity():
    cat = attach_field(build_set_cats(2, "theta"), F3)
    Q = _identity_functor(cat)
    Frep = random_module(random.Random(1), cat, F3, "contra")
    assert kan_extension(Q, Frep, 0) == Frep.dims


def test_kan_projectives():
    # Q_!(P^op_b) = P^op_{Q(b)} and derived degrees vanish on projectives
    theta = attach_field(build_set_cats(2, "theta"), F3)
    sigma = attach_field(build_set_cats(2, "sigma"), F3)
    # inclusion sigma -> theta
    obj_map = [theta.obj_index[o] for o in sigma.objects]
    mor_map = {}
    for m in range(sigma.n_morphisms()):
        s, t, p = sigma.morphisms[m]
        mor_map[m] = theta.mor_index[(obj_map[s], obj_map[t], p)]
    Q = MonFunctor(sigma, theta, obj_map, mor_map)
    Q.validate()
    for b in range(sigma.n_objects()):
        Pb = projective_rep(sigma, b, "contra")
        target = projective_rep(theta, obj_map[b], "contra")
        assert kan_extension(Q, Pb, 0) == target.dims
        assert kan_extension(Q, Pb, 1) == [0] * theta.n_objects()


# -- omega_x -----------------------------------------------------------------------

def _quadratic_forms_data(cat):
    """X = quadratic forms, contravariant on a vect category by pullback."""
    from stablehom.fincat.quadspace import QuadSpace, _tri_pairs
    from itertools import product as iproduct
    field = cat.field
    sets = []
    for o in range(cat.n_objects()):
        n = cat.objects[o]
        sets.append(list(iproduct(range(field.q), repeat=len(_tri_pairs(n)))))
    maps = {}
    for mid in range(cat.n_morphisms()):
        s, t, p = cat.morphisms[mid]
        A = Mat.from_payload(field, p)
        m = {}
        for coeffs in sets[t]:
            sp = QuadSpace(field, cat.objects[t], "q", coeffs)
            m[coeffs] = sp.pullback_by(A)
        maps[mid] = m
    return sets, maps


def test_omega_x_singleton_identity():
    cat = build_vect_cat(F3, 1, "inj")
    sets = [["*"] for _ in range(cat.n_objects())]
    maps = {mid: {"*": "*"} for mid in range(cat.n_morphisms())}
    CX, obj_map = build_category_of_elements(cat, sets, maps)
    Frep = random_module(random.Random(2), attach_field(CX, F3), F3, "contra")
    om = omega_x(Frep, cat, sets, maps, obj_map)
    assert om.dims == Frep.dims
    om.validate(pairs="all")


def test_omega_x_quadratic_forms():
    cat = build_vect_cat(F3, 2, "inj")
    sets, maps = _quadratic_forms_data(cat)
    CX, obj_map = build_category_of_elements(cat, sets, maps)
    CX.validate(max_pairs=100_000)
    const = constant_rep(attach_field(CX, F3), F3, 1, variance="contra")
    om = omega_x(const, cat, sets, maps, obj_map)
    # Omega_X(const)(V) has dimension |S^2(V^*)| = number of quadratic forms
    assert om.dims == [1, 3, 27]
    om.validate(pairs="generators")
    # Tor^{C_X}(F, U^* G) = Tor^C(Omega_X F, G) in degree 0
    Id = evaluate(ID(), cat)
    from stablehom.funrep.linrep import LinRep

    def uact(mid):
        s, t, (p, y) = CX.morphisms[mid]
        return Id.act(cat.mid_of(CX.objects[s][0], CX.objects[t][0], p))

    UId = LinRep(CX, "co", [cat.objects[CX.objects[k][0]]
                            for k in range(CX.n_objects())], uact, name="U*Id")
    lhs = tensor_over_cat(const, UId).dim
    rhs = tensor_over_cat(om, Id).dim
    assert lhs == rhs


# -- grassmann operators --------------------------------------------------------------

def test_lambda_kappa_identity():
    full = build_vect_cat(F2, 2, "all")
    gr = build_grassmann_cat(F2, 2)
    A = evaluate(KQ2(True), full)
    lk = lam(kappa(A, gr), full)
    assert lk.dims == A.dims
    for mid in range(full.n_morphisms()):
        assert lk.act(mid) == A.act(mid)


def test_omega_tensor_iota_projection():
    # omega(X (x) iota(F)) = omega(X) (x) F
    full = build_vect_cat(F2, 2, "all")
    gr = build_grassmann_cat(F2, 2)
    X = iota(evaluate(KQ2(True), full), gr)
    Fc = evaluate(KQ2(True), full)
    lhs = omega(X.tensor(iota(Fc, gr)), full)
    rhs = omega(X, full).tensor(Fc)
    assert lhs.dims == rhs.dims
    # with block-major index order both sides coincide on the nose
    for mid in range(full.n_morphisms()):
        assert lhs.act(mid) == rhs.act(mid)


def test_omega_kappa_vs_varpi_delta():
    full = build_vect_cat(F2, 2, "all")
    gr = build_grassmann_cat(F2, 2)
    inj = build_vect_cat(F2, 2, "inj")
    A = evaluate(KQ2(True), full)
    nat = omega_kappa_vs_varpi_delta(A, full, gr, inj)
    assert nat.is_iso()
    nat.validate(mids=range(full.n_morphisms()))


def test_lambda_into_omega_natural():
    full = build_vect_cat(F2, 2, "all")
    gr = build_grassmann_cat(F2, 2)
    X = iota(evaluate(KQ2(True), full), gr)
    nat = lambda_into_omega(X, full)
    nat.validate(mids=range(full.n_morphisms()))
    for M in nat.mats:
        assert M.rank() == M.n  # injective


# -- hochschild ---------------------------------------------------------------------

def test_hochschild_external_product():
    cat = attach_field(build_set_cats(2, "sigma"), F3)
    P = cat.op().product(cat)
    attach_field(P, F3)
    Frep = random_module(random.Random(7), cat, F3, "contra")
    Grep = projective_rep(cat, 1, "co")
    # build the bifunctor F boxtimes G directly
    from stablehom.funrep.standard import kron
    from stablehom.funrep.linrep import LinRep
    n = cat.n_objects()
    dims = [Frep.dims[o // n] * Grep.dims[o % n] for o in range(P.n_objects())]

    def act(mid):
        s, t, (pf, pg) = P.morphisms[mid]
        sa, sb = s // n, s % n
        ta, tb = t // n, t % n
        fm = Frep.act(cat.mid_of(ta, sa, pf))
        gm = Grep.act(cat.mid_of(sb, tb, pg))
        return kron(fm, gm)

    Bi = LinRep(P, "co", dims, act, name="FboxG")
    hh = hochschild(cat, Bi, 1)
    t0 = tensor_over_cat(Frep, Grep).dim
    assert hh[0] == t0
    assert hh[1] == 0  # projective second factor


def test_hochschild_empty():
    cat = attach_field(build_set_cats(1, "sigma"), F2)
    P = cat.op().product(cat)
    attach_field(P, F2)
    zero = constant_rep(P, F2, 0, variance="co")
    assert hochschild(cat, zero, 2) == [0, 0, 0]
