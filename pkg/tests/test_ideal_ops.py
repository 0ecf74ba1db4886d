import pytest

from germcodim import (INFINITE, Ideal, PolyMatrix, PolyRing, RingMap, RingMismatch,
                       WeightedDegRevLex, eliminate, fitting_ideal, ideal_membership,
                       jacobian_matrix, krull_dim, minors, preimage, relative_quotient_dim, vdim)

from oracles import nullspace_mod_p, random_poly, rng

R2 = PolyRing(["x", "y"])
R3 = PolyRing(["x", "y", "z"])
T3 = PolyRing(["X", "Y", "Z"])


def crosscap():
    return RingMap(T3, R2, [R2("x"), R2("y^2"), R2("x*y")])


def gb_strs(I):
    return sorted(str(g) for g in I.gb)


# -- jacobians, minors, Fitting ideals ------------------------------------------------------

def test_jacobian_examples():
    J = jacobian_matrix([R2("x"), R2("y^2"), R2("x*y")])
    assert [[str(e) for e in r] for r in J.rows] == [["1", "0"], ["0", "2*y"], ["y", "x"]]
    Z = jacobian_matrix([R2.constant(3), R2.constant(5)])
    assert all(e.is_zero() for r in Z.rows for e in r)
    with pytest.raises(ValueError):
        jacobian_matrix([])


def test_f1_jacobian_matrix():
    W = PolyRing(["x", "y", "z"], WeightedDegRevLex((1, 2, 3)))
    F = [W(s) for s in ("y^2+x*z", "x^5+y*z+x*y^2", "x^6+y^3+z^2", "x^7+x^4*z+x*z^2+y^2*z")]
    J = jacobian_matrix(F)
    expect = [["z", "2*y", "x"],
              ["5*x^4+y^2", "2*x*y+z", "y"],
              ["6*x^5", "3*y^2", "2*z"],
              ["7*x^6+4*x^3*z+z^2", "2*y*z", "x^4+y^2+2*x*z"]]
    assert [[e for e in r] for r in J.rows] == [[W(s) for s in r] for r in expect]


def test_minors_examples():
    I2 = PolyMatrix([[R2.one, R2.zero], [R2.zero, R2.one]])
    assert gb_strs(minors(I2, 2)) == ["1"]
    D = PolyMatrix([[R2("x"), R2.zero], [R2.zero, R2("y")]])
    assert gb_strs(minors(D, 1)) == ["x", "y"]
    assert minors(D, 3).generators == ()
    with pytest.raises(ValueError):
        minors(D, 0)
    J = jacobian_matrix([R2("x"), R2("y^2"), R2("x*y")])
    M = minors(J, 2)
    assert sorted(str(g) for g in M.generators) == sorted(["2*y", "x", str(R2("-2*y^2"))])
    assert krull_dim(M) == 0


def test_minor_matches_leibniz_determinant():
    r = rng(11)
    M = [[random_poly(R2, r, 2, 3) for _ in range(3)] for _ in range(3)]
    det = R2.zero
    from itertools import permutations
    for perm in permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        term = R2.constant(sign)
        for i in range(3):
            term = term * M[i][perm[i]]
        det = det + term
    m = minors(PolyMatrix(M), 3).generators
    assert (len(m) == 0 and det.is_zero()) or m[0] == det


def test_fitting_examples():
    L = PolyMatrix([[R2("x"), R2.zero], [R2.zero, R2("y")]])
    assert gb_strs(fitting_ideal(L, 0)) == ["x*y"]
    assert gb_strs(fitting_ideal(L, 1)) == ["x", "y"]
    assert gb_strs(fitting_ideal(L, 2)) == ["1"]
    assert gb_strs(fitting_ideal(L, 5)) == ["1"]
    wide = PolyMatrix([[R2("x")], [R2("y")], [R2("x+y")]])
    assert fitting_ideal(wide, 0).generators == ()
    with pytest.raises(ValueError):
        fitting_ideal(L, -1)


def test_fitting_size_convention_17():
    # 17 generators, Fitt_1 is built from 16x16 minors
    n = 17
    rows = [[R2.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = R2("x") if i == 0 else R2.one
    L = PolyMatrix(rows)
    assert gb_strs(fitting_ideal(L, 0)) == ["x"]
    assert gb_strs(fitting_ideal(L, 1)) == ["1"]


@pytest.mark.parametrize("seed", range(12))
def test_fitting_chain(seed):
    r = rng(100 + seed)
    n, m = r.randint(2, 3), r.randint(2, 4)
    L = PolyMatrix([[random_poly(R2, r, 2, 2) for _ in range(m)] for _ in range(n)])
    chain = [fitting_ideal(L, k) for k in range(n + 1)]
    for lo, hi in zip(chain, chain[1:]):
        for g in lo.generators:
            assert ideal_membership(g, hi)
    assert chain[-1].gb.is_unit()


# -- elimination -----------------------------------------------------------------------------

def test_eliminate_twisted_cubic():
    I = Ideal(R3, [R3("y-x^2"), R3("z-x^3")])
    E = eliminate(I, ["x"])
    assert E.ring.var_names == ("y", "z")
    assert len(E.gb) == 1
    assert E.gb[0] in (E.ring("y^3-z^2"), E.ring("z^2-y^3"))
    assert E.ring("y^3-z^2").evaluate((4, 8)) == 0


def test_eliminate_trivial_cases():
    E = eliminate(Ideal(R2, [R2("x")]), ["x"])
    assert E.generators == ()
    I = Ideal(R2, [R2("x^2-y")])
    assert eliminate(I, []).generators == I.generators


@pytest.mark.parametrize("seed", range(15))
def test_eliminate_contained_and_kill_free(seed):
    r = rng(200 + seed)
    gens = [random_poly(R3, r, 3, 3) for _ in range(2)]
    I = Ideal(R3, gens)
    E = eliminate(I, ["x"])
    for g in E.generators:
        lifted = R3.from_terms((c, (0,) + e) for c, e in g.terms)
        assert I.gb.contains(lifted)


# -- preimages ----------------------------------------------------------------------------

def test_preimage_crosscap_image():
    P = preimage(crosscap(), Ideal(R2, []))
    assert len(P.gb) == 1
    h = P.gb[0]
    assert h in (T3("Z^2-X^2*Y"), T3("X^2*Y-Z^2"))
    assert crosscap()(h).is_zero()


def test_preimage_crosscap_of_ideal():
    J = Ideal(R2, [R2("x^2"), R2("x*y")])
    P = preimage(crosscap(), J)
    assert gb_strs(P) == gb_strs(Ideal(T3, [T3("X^2"), T3("Z"), T3("X*Y")]))
    assert not ideal_membership(T3("X"), P) and not ideal_membership(T3("Y"), P)


def test_preimage_unit_and_mismatch():
    P = preimage(crosscap(), Ideal(R2, [R2.one]))
    assert P.gb.is_unit()
    with pytest.raises(RingMismatch):
        preimage(crosscap(), Ideal(T3, [T3("X")]))


def _monomials_wdeg(n, weights, dmax):
    out = []

    def rec(i, e, d):
        if i == n:
            out.append(tuple(e))
            return
        k = 0
        while d + k * weights[i] <= dmax:
            rec(i + 1, e + [k], d + k * weights[i])
            k += 1
    rec(0, [], 0)
    return out


MAPS = [
    ((1, 1), ["x", "y^2", "x*y"], ["x^2", "x*y"]),
    ((1, 1), ["x", "y^2", "y^3+x^2*y"], ["y^2", "x*y"]),
    ((1, 1), ["x", "y^2", "x*y"], []),
    ((1, 1), ["x+y", "x*y", "x^2"], ["x^3", "y^2"]),
    ((1, 2), ["x^2", "y", "x*y"], ["x^3"]),
]


@pytest.mark.parametrize("case", range(len(MAPS)))
def test_preimage_sound_and_maximal(case):
    w, imgs, jgens = MAPS[case]
    degs = []
    dst = PolyRing(["x", "y"], WeightedDegRevLex(w))
    images = [dst(s) for s in imgs]
    for f in images:
        degs.append(max(sum(a * b for a, b in zip(w, e)) for _, e in f.terms))
    src = PolyRing(["X", "Y", "Z"], WeightedDegRevLex(tuple(degs)))
    phi = RingMap(src, dst, images)
    J = Ideal(dst, [dst(s) for s in jgens])
    P = preimage(phi, J)
    for g in P.generators:
        assert ideal_membership(phi(g), J)
    # every polynomial of bounded degree whose image lies in J is in P
    mons = _monomials_wdeg(3, (1, 1, 1), 5)
    nfs = [J.gb.normal_form(phi(src.monomial(m))) for m in mons]
    support = sorted({e for f in nfs for _, e in f.terms})
    if support:
        rows = [[f.coefficient(e) for f in nfs] for e in support]
        kernel = nullspace_mod_p(rows, src.p)
    else:
        kernel = [[int(i == j) for j in range(len(mons))] for i in range(len(mons))]
    for vec in kernel:
        g = src.from_dict({m: c for m, c in zip(mons, vec) if c})
        assert ideal_membership(g, P)
    for m in mons:
        inJ = J.gb.contains(phi(src.monomial(m)))
        assert inJ == P.gb.contains(src.monomial(m))


# -- relative quotient dimensions --------------------------------------------------------------

def test_relative_quotient_examples():
    R1 = PolyRing(["x"])
    assert relative_quotient_dim(Ideal(R1, [R1("x")]), Ideal(R1, [R1("x^2")])) == 1
    A = Ideal(R2, [R2("x"), R2("y")])
    assert relative_quotient_dim(A, A) == 0
    B = Ideal(R2, [R2("x^2"), R2("x*y"), R2("y^2")])
    assert relative_quotient_dim(A, B) == 2
    assert relative_quotient_dim(Ideal(R2, [R2("x")]), Ideal(R2, [R2("y^3")])) == INFINITE


@pytest.mark.parametrize("seed", range(25))
def test_relative_quotient_is_vdim_difference(seed):
    r = rng(300 + seed)
    bg = [R2("x^%d" % r.randint(1, 4)) + random_poly(R2, r, 1, 2),
          R2("y^%d" % r.randint(1, 4)) + random_poly(R2, r, 1, 2)]
    bg = [g for g in bg if not g.is_zero()]
    B = Ideal(R2, bg + [random_poly(R2, r, 3, 2)])
    A = Ideal(R2, [random_poly(R2, r, 3, 3) for _ in range(r.randint(1, 3))])
    AB = Ideal(R2, list(A.generators) + list(B.generators))
    vb, vab = vdim(B), vdim(AB)
    if vb == INFINITE:
        pytest.skip("B not zero-dimensional")
    assert relative_quotient_dim(A, B) == vb - vab


def test_membership_examples():
    R1 = PolyRing(["x"])
    assert ideal_membership(R1("x^2"), Ideal(R1, [R1("x")]))
    assert not ideal_membership(R1.one, Ideal(R1, [R1("x")]))
    W = PolyRing(["X", "Y", "Z"], WeightedDegRevLex((2, 2, 3)))
    h = W("Z^2-X^2*Y")
    Jh = Ideal(W, [h.diff(i) for i in range(3)])
    assert ideal_membership(h, Jh)
    with pytest.raises(RingMismatch):
        ideal_membership(R2("x"), Ideal(R3, []))
