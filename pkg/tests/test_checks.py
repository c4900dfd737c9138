from fractions import Fraction

from symplie.checks import (
    Violation,
    Endo,
    Form,
    RepTensor,
    StructureTensor,
    check_bimodule,
    check_closed,
    check_commutative,
    check_complex_product,
    check_flat,
    check_jacobi,
    check_left_symmetric,
    check_metric_compatible,
    check_nondegenerate,
    check_parallel_form,
    check_plsa,
    check_representation,
    check_skew,
    check_special_symplectic,
    check_torsion_free,
    left_mult_basis,
    merge_reports,
    nijenhuis_torsion,
    report,
    st,
    sub_adjacent,
)
from symplie.linalg import frac, t3_is_zero, basis_vec, mat_vec
from symplie.catalog import catalog_get

from oracles import (
    brute_closed,
    brute_jacobi,
    brute_left_symmetric,
    product_vec,
    rand_mat,
    rand_tensor,
    rng,
    transport_product,
    rand_invertible,
    _basis,
)

Q = Fraction
AREA = Form(2, ((Q(0), Q(1)), (Q(-1), Q(0))))
NONAB = st(2, {(0, 1, 0): Q(1), (1, 0, 0): Q(-1)})  # [e1,e2] = e1


def test_st_builder():
    t = st(2, {(0, 1, 0): Q(3)})
    assert t.c[0][1][0] == 3
    assert t.c[1][0][0] == 0
    assert t3_is_zero(st(2).c)


class TestSkewNondegenerate:
    def test_area_passes(self):
        assert check_skew(AREA).verdict
        assert check_nondegenerate(AREA).verdict

    def test_one_sided_fails_skew(self):
        w = Form(2, ((Q(0), Q(1)), (Q(0), Q(0))))
        rep = check_skew(w)
        assert not rep.verdict
        assert rep.violations[0].indices == (0, 1)

    def test_zero_fails_nondegenerate(self):
        w = Form(2, ((Q(0),) * 2,) * 2)
        assert not check_nondegenerate(w).verdict


class TestJacobi:
    def test_matches_oracle_on_random_tensors(self):
        r = rng(101)
        for _ in range(30):
            c = rand_tensor(r, 3)
            assert check_jacobi(StructureTensor(3, c)).verdict == brute_jacobi(c)

    def test_known_bracket(self):
        assert check_jacobi(NONAB).verdict

    def test_heisenberg(self):
        h = st(3, {(0, 1, 2): Q(1), (1, 0, 2): Q(-1)})
        assert check_jacobi(h).verdict


class TestLeftSymmetric:
    def test_matches_oracle_on_random_tensors(self):
        r = rng(102)
        for _ in range(30):
            c = rand_tensor(r, 2)
            assert (check_left_symmetric(StructureTensor(2, c)).verdict
                    == brute_left_symmetric(c))

    def test_transported_catalog_product_passes(self):
        prec, succ = catalog_get("plsa-2d-III").payload
        dot = st(2, {(i, j, k): prec.c[i][j][k] + succ.c[i][j][k]
                     for i in range(2) for j in range(2) for k in range(2)})
        r = rng(103)
        for _ in range(5):
            p = rand_invertible(r, 2)
            c = transport_product(dot.c, p)
            assert brute_left_symmetric(c)
            assert check_left_symmetric(StructureTensor(2, c)).verdict

    def test_exact_residual(self):
        c = st(2, {(0, 0, 0): Q(1), (1, 0, 0): Q(1)})
        rep = check_left_symmetric(c)
        assert not rep.verdict
        lookup = {v.indices: v.residual for v in rep.violations}
        assert lookup[(0, 1, 0)] == (Q(-1), Q(0))


def test_commutative():
    assert check_commutative(st(2, {(0, 1, 0): Q(2), (1, 0, 0): Q(2)})).verdict
    assert not check_commutative(NONAB).verdict


def test_sub_adjacent_is_commutator():
    r = rng(104)
    c = rand_tensor(r, 3)
    br = sub_adjacent(StructureTensor(3, c))
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert br.c[i][j][k] == c[i][j][k] - c[j][i][k]


class TestPlsa:
    def test_catalog_pairs_pass(self):
        for name in ("plsa-2d-I", "plsa-2d-II", "plsa-2d-III", "plsa-2d-IV"):
            prec, succ = catalog_get(name).payload
            assert check_plsa(prec, succ).verdict, name

    def test_perturbed_pair_fails(self):
        prec, succ = catalog_get("plsa-2d-III").payload
        bad = st(2, {(0, 0, 0): Q(1), (0, 1, 0): Q(-1), (1, 0, 0): Q(-1)})
        assert not check_plsa(bad, succ).verdict


class TestConnection:
    def test_catalog_connection_flat_torsion_free(self):
        e = catalog_get("ssla-2d-3").payload
        assert check_torsion_free(e.bracket, e.conn).verdict
        assert check_flat(e.bracket, e.conn).verdict

    def test_perturbed_connection_fails(self):
        e = catalog_get("ssla-2d-3").payload
        bad = st(2, {(1, 0, 0): Q(-2), (1, 1, 1): Q(1)})
        assert not check_torsion_free(e.bracket, bad).verdict

    def test_parallel_form_on_catalog(self):
        for name in ("ssla-2d-1", "ssla-2d-2", "ssla-2d-3", "ssla-2d-4"):
            e = catalog_get(name).payload
            assert check_parallel_form(e.conn, e.omega).verdict, name


class TestClosed:
    def test_matches_oracle(self):
        r = rng(105)
        for _ in range(25):
            c = rand_tensor(r, 3)
            w = rand_mat(r, 3)
            got = check_closed(StructureTensor(3, c), Form(3, w)).verdict
            assert got == brute_closed(c, w)

    def test_area_closed_for_2d(self):
        assert check_closed(NONAB, AREA).verdict


def test_special_symplectic_fail_paths():
    e = catalog_get("ssla-2d-3").payload
    assert check_special_symplectic(e.bracket, e.conn, e.omega).verdict
    zero_w = Form(2, ((Q(0),) * 2,) * 2)
    rep = check_special_symplectic(e.bracket, e.conn, zero_w)
    assert not rep.verdict
    assert any("nondegenerate" in v.where for v in rep.violations)


class TestNijenhuis:
    def test_against_direct_formula(self):
        r = rng(106)
        for _ in range(15):
            c = rand_tensor(r, 3)
            nm = rand_mat(r, 3)
            br = StructureTensor(3, c)
            got = nijenhuis_torsion(br, Endo(3, nm))
            for i in range(3):
                for j in range(3):
                    x, y = _basis(3, i), _basis(3, j)
                    nx, ny = mat_vec(nm, x), mat_vec(nm, y)
                    t1 = product_vec(c, nx, ny)
                    t2 = mat_vec(nm, product_vec(c, nx, y))
                    t3_ = mat_vec(nm, product_vec(c, x, ny))
                    t4 = mat_vec(nm, mat_vec(nm, product_vec(c, x, y)))
                    exp = tuple(a - b - d + e for a, b, d, e
                                in zip(t1, t2, t3_, t4))
                    assert tuple(got.c[i][j]) == exp

    def test_two_dimensional_structures_are_torsion_free(self):
        J = Endo(2, ((Q(0), Q(-1)), (Q(1), Q(0))))
        E = Endo(2, ((Q(1), Q(0)), (Q(0), Q(-1))))
        for nm in (J, E):
            assert t3_is_zero(nijenhuis_torsion(NONAB, nm).c)


class TestComplexProduct:
    def test_standard_pair_on_abelian(self):
        ab = st(2)
        J = Endo(2, ((Q(0), Q(-1)), (Q(1), Q(0))))
        E = Endo(2, ((Q(1), Q(0)), (Q(0), Q(-1))))
        assert check_complex_product(ab, J, E).verdict

    def test_commuting_pair_fails(self):
        ab = st(2)
        J = Endo(2, ((Q(0), Q(-1)), (Q(1), Q(0))))
        assert not check_complex_product(ab, J, Endo(2, ((Q(1), Q(0)), (Q(0), Q(1))))).verdict

    def test_degenerate_metric_rejected(self):
        # compatibility includes nondegeneracy, and in two dimensions no
        # nondegenerate metric can anti-commute with a product structure
        J = Endo(2, ((Q(0), Q(-1)), (Q(1), Q(0))))
        E = Endo(2, ((Q(1), Q(0)), (Q(0), Q(-1))))
        g = Form(2, ((Q(0),) * 2,) * 2)
        rep = check_metric_compatible(g, J, E)
        assert not rep.verdict
        assert all("rank" in v.where or "nondegenerate" in v.where
                   for v in rep.violations)


class TestRepresentation:
    def test_adjoint_is_representation(self):
        ad = RepTensor(2, 2, tuple(left_mult_basis(NONAB, i) for i in range(2)))
        assert check_representation(NONAB, ad).verdict

    def test_bogus_rep_fails(self):
        rho = RepTensor(2, 2, (((Q(1), Q(0)), (Q(0), Q(0))),
                               ((Q(0), Q(1)), (Q(1), Q(0)))))
        assert not check_representation(NONAB, rho).verdict


class TestBimodule:
    def test_regular_bimodule(self):
        prec, succ = catalog_get("plsa-2d-IV").payload
        dot = st(2, {(i, j, k): prec.c[i][j][k] + succ.c[i][j][k]
                     for i in range(2) for j in range(2) for k in range(2)})
        L = RepTensor(2, 2, tuple(left_mult_basis(dot, i) for i in range(2)))
        # R.t[i] sends x to x o e_i: entry (k, j) = c[j][i][k]
        R = RepTensor(2, 2, tuple(
            tuple(tuple(dot.c[j][i][k] for j in range(2)) for k in range(2))
            for i in range(2)))
        assert check_bimodule(dot, L, R).verdict

    def test_broken_bimodule_fails(self):
        idem = st(1, {(0, 0, 0): Q(1)})
        l = RepTensor(1, 1, (((Q(1),),),))
        r = RepTensor(1, 1, (((Q(2),),),))
        assert not check_bimodule(idem, l, r).verdict


def test_merge_reports_prefixing():
    inner = report("inner", [])
    failing = report("flat", [Violation("curvature", (0, 1), (Q(1),))])
    merged = merge_reports("outer", [inner, failing], notes=("top",))
    assert not merged.verdict
    assert merged.violations[0].where == "flat: curvature"
    assert "top" in merged.notes
