from fractions import Fraction

import pytest

from symplie.checks import (
    Endo,
    Form,
    RepTensor,
    check_flat,
    check_hypersymplectic,
    check_jacobi,
    check_left_symmetric,
    check_metric_compatible,
    check_closed,
    check_parallel_form,
    check_plsa,
    check_special_symplectic,
    check_torsion_free,
    op_add,
    st,
    sub_adjacent,
    three_forms,
)
from symplie.constructions import (
    BadParams,
    CotangentExtensionData,
    FamilyParams,
    IrrationalSquareRoot,
    NotARepresentation,
    NotAnLSA,
    affine_cotangent_extension,
    coadjoint,
    cotangent_double,
    cotangent_double_from_connection,
    dual_left_action,
    hypersymplectic_from_cotangent,
    hypersymplectic_from_tangent,
    lsa_from_symplectic,
    phi_from_omega,
    plsa_from_special_symplectic,
    post_affine_check,
    semidirect_lie,
    tangent_double,
)
from symplie.constructions import DegenerateForm, InvalidInput
from symplie.matched import canonical_skew_pairing
from symplie.catalog import catalog_get
from symplie.linalg import frac, t3_zero

from oracles import _basis, brute_left_symmetric, form_value, product_vec, rand_tensor, rng

Q = Fraction
SSLA_NAMES = ("ssla-2d-1", "ssla-2d-2", "ssla-2d-3", "ssla-2d-4")
PLSA_NAMES = ("plsa-2d-I", "plsa-2d-II", "plsa-2d-III", "plsa-2d-IV")


def ssla(name):
    return catalog_get(name).payload


def plsa(name):
    return catalog_get(name).payload


class TestDualActions:
    def test_dual_left_action_entries(self):
        r = rng(201)
        op = st(3, {(i, j, k): q for (i, j, k), q in
                    {(0, 1, 2): Q(2), (2, 2, 0): Q(-1, 2), (1, 0, 1): Q(3)}.items()})
        dla = dual_left_action(op)
        for i in range(3):
            for a in range(3):
                for b in range(3):
                    assert dla.t[i][a][b] == -op.c[i][a][b]

    def test_coadjoint_matches_dual_left_of_bracket(self):
        br = ssla("ssla-2d-3").bracket
        assert coadjoint(br).t == dual_left_action(br).t


class TestSemidirect:
    def test_coadjoint_extension_satisfies_jacobi(self):
        for name in SSLA_NAMES:
            br = ssla(name).bracket
            big = semidirect_lie(br, coadjoint(br))
            assert check_jacobi(big).verdict, name
            assert big.n == 4

    def test_rejects_non_representation(self):
        br = ssla("ssla-2d-3").bracket
        bogus = RepTensor(2, 2, (((Q(1), Q(0)), (Q(0), Q(0))),
                                 ((Q(0), Q(1)), (Q(1), Q(0)))))
        with pytest.raises(NotARepresentation):
            semidirect_lie(br, bogus)


class TestDoubles:
    def test_tangent_double_structure(self):
        for name in SSLA_NAMES:
            s = ssla(name)
            d = tangent_double(s)
            assert d.omega_p is None
            assert d.ranges == ((0, 2), (2, 4))
            assert check_jacobi(d.bracket).verdict
            assert check_torsion_free(d.bracket, d.conn).verdict
            assert check_flat(d.bracket, d.conn).verdict
            for i in range(2):
                for j in range(2):
                    assert d.metric.m[i][j] == 0
                    assert d.metric.m[2 + i][2 + j] == 0
                    assert d.metric.m[i][2 + j] == s.omega.m[i][j]
                    assert d.metric.m[2 + j][i] == s.omega.m[i][j]

    def test_cotangent_double_structure(self):
        for name in SSLA_NAMES:
            s = ssla(name)
            d = cotangent_double(s)
            assert check_jacobi(d.bracket).verdict
            assert check_torsion_free(d.bracket, d.conn).verdict
            assert check_flat(d.bracket, d.conn).verdict
            for i in range(2):
                assert d.metric.m[i][2 + i] == 1
                assert d.metric.m[2 + i][i] == 1
                assert d.omega_p.m[i][2 + i] == -1
                assert d.omega_p.m[2 + i][i] == 1

    def test_relaxed_route_matches_when_special(self):
        s = ssla("ssla-2d-4")
        d1 = cotangent_double(s)
        d2 = cotangent_double_from_connection(s.bracket, s.conn)
        assert d1.bracket == d2.bracket
        assert d1.conn == d2.conn


class TestPhiFromOmega:
    def test_area_form(self):
        w = Form(2, ((Q(0), Q(1)), (Q(-1), Q(0))))
        f = phi_from_omega(w)
        assert f.m == ((Q(0), Q(-1)), (Q(1), Q(0)))

    def test_degenerate(self):
        with pytest.raises(DegenerateForm):
            phi_from_omega(Form(2, ((Q(0),) * 2,) * 2))


class TestFamilies:
    def test_family_parameter_guards(self):
        s = ssla("ssla-2d-1")
        with pytest.raises(BadParams):
            hypersymplectic_from_tangent(s, FamilyParams("F2", Q(1), Q(0)))
        with pytest.raises(BadParams):
            hypersymplectic_from_tangent(s, FamilyParams("F3", Q(5), Q(0), Q(0)))
        with pytest.raises(BadParams):
            hypersymplectic_from_tangent(s, FamilyParams("F3", Q(2), Q(0), Q(3)))
        with pytest.raises(IrrationalSquareRoot):
            hypersymplectic_from_tangent(s, FamilyParams("F3", Q(2), Q(0), Q(1)))
        with pytest.raises(BadParams):
            # degenerate discriminant combination
            hypersymplectic_from_tangent(s, FamilyParams("F3", Q(3), Q(1), Q(3)))

    def test_sample_instances_verify(self):
        cases = [("F1", Q(1), Q(0), None),
                 ("F1", Q(2), Q(-1, 2), None),
                 ("F2", Q(1), Q(1), None),
                 ("F3", Q(5), Q(0), Q(3))]
        for name in ("ssla-2d-2", "ssla-2d-3"):
            s = ssla(name)
            for fam, lam, mu, k in cases:
                for build in (hypersymplectic_from_tangent,
                              hypersymplectic_from_cotangent):
                    d, J, E, g = build(s, FamilyParams(fam, lam, mu, k))
                    rep = check_hypersymplectic(d.bracket, J, E, g)
                    assert rep.verdict, (name, fam, lam, mu, k, build.__name__,
                                         rep.violations[:3])

    def test_metric_and_forms_details(self):
        s = ssla("ssla-2d-2")
        d, J, E, g = hypersymplectic_from_tangent(
            s, FamilyParams("F1", Q(1), Q(0)))
        assert check_metric_compatible(g, J, E).verdict
        w1, w2, w3 = three_forms(g, J, E)
        for w in (w1, w2, w3):
            assert check_closed(d.bracket, w).verdict

    def test_sign_flips_e(self):
        s = ssla("ssla-2d-1")
        _, _, Ep, _ = hypersymplectic_from_tangent(
            s, FamilyParams("F1", Q(1), Q(0), None, 1))
        _, _, Em, _ = hypersymplectic_from_tangent(
            s, FamilyParams("F1", Q(1), Q(0), None, -1))
        assert Ep.m == tuple(tuple(-q for q in row) for row in Em.m)


class TestLsaFromSymplectic:
    def test_known_product(self):
        br = st(2, {(0, 1, 0): Q(1), (1, 0, 0): Q(-1)})
        w = Form(2, ((Q(0), Q(1)), (Q(-1), Q(0))))
        prod = lsa_from_symplectic(br, w)
        assert prod == st(2, {(0, 1, 0): Q(1), (1, 1, 1): Q(1)})

    def test_defining_identity(self):
        br = st(2, {(0, 1, 0): Q(1), (1, 0, 0): Q(-1)})
        w = Form(2, ((Q(0), Q(3)), (Q(-3), Q(0))))
        prod = lsa_from_symplectic(br, w)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    x, y, z = _basis(2, i), _basis(2, j), _basis(2, k)
                    lhs = form_value(w.m, product_vec(prod.c, x, y), z)
                    rhs = form_value(w.m, product_vec(br.c, x, z), y)
                    assert lhs == rhs

    def test_non_closed_form_rejected(self):
        br = st(4, {(0, 1, 2): Q(1), (1, 0, 2): Q(-1)})
        w = Form(4, ((Q(0), Q(1), Q(0), Q(0)),
                     (Q(-1), Q(0), Q(0), Q(0)),
                     (Q(0), Q(0), Q(0), Q(1)),
                     (Q(0), Q(0), Q(-1), Q(0))))
        with pytest.raises(InvalidInput, match="closed"):
            lsa_from_symplectic(br, w)


class TestPlsaExtraction:
    def test_reproduces_catalog_pairs(self):
        for sname, pname in zip(SSLA_NAMES, PLSA_NAMES):
            prec, succ = plsa_from_special_symplectic(ssla(sname))
            cprec, csucc = plsa(pname)
            assert prec == cprec, (sname, pname)
            assert succ == csucc, (sname, pname)

    def test_pair_sums_to_connection(self):
        s = ssla("ssla-2d-4")
        prec, succ = plsa_from_special_symplectic(s)
        assert op_add(prec, succ) == s.conn


class TestAffineCotangentExtension:
    def test_zero_phi_on_catalog_pairs(self):
        for name in PLSA_NAMES:
            prec, succ = plsa(name)
            base = op_add(prec, succ)
            data = CotangentExtensionData(base, dual_left_action(base),
                                          dual_left_action(prec), t3_zero(2))
            product, rep = affine_cotangent_extension(data)
            assert rep.verdict, (name, rep.violations[:3])
            assert brute_left_symmetric(product.c)

    def test_wrong_l_is_flagged(self):
        prec, succ = plsa("plsa-2d-III")
        base = op_add(prec, succ)
        data = CotangentExtensionData(base, dual_left_action(prec),
                                      dual_left_action(prec), t3_zero(2))
        _, rep = affine_cotangent_extension(data)
        assert any(v.where == "l-is-dual-left-action" for v in rep.violations)

    def test_asymmetric_phi_is_flagged(self):
        # over an abelian base with zero actions any phi yields a
        # left-symmetric product, but the canonical pairing is parallel only
        # when phi is symmetric in its last two slots, so the verdict drops
        base = st(2)
        zero_rep = dual_left_action(base)
        phi = [[[Q(0)] * 2 for _ in range(2)] for _ in range(2)]
        phi[0][1][0] = Q(1)
        phi = tuple(tuple(tuple(col) for col in plane) for plane in phi)
        product, rep = affine_cotangent_extension(
            CotangentExtensionData(base, zero_rep, zero_rep, phi))
        assert not rep.verdict
        assert any(v.where == "phi-symmetry" for v in rep.violations)
        assert brute_left_symmetric(product.c)
        pairing = canonical_skew_pairing(2)
        assert not check_parallel_form(product, pairing).verdict

    def test_symmetric_phi_on_abelian_base_passes(self):
        base = st(2)
        zero_rep = dual_left_action(base)
        phi = [[[Q(0)] * 2 for _ in range(2)] for _ in range(2)]
        phi[0][0][0] = Q(1)
        phi[0][1][0] = phi[0][0][1] = Q(2)
        phi[1][1][1] = Q(-3)
        phi = tuple(tuple(tuple(col) for col in plane) for plane in phi)
        product, rep = affine_cotangent_extension(
            CotangentExtensionData(base, zero_rep, zero_rep, phi))
        assert rep.verdict, rep.violations[:3]
        assert brute_left_symmetric(product.c)
        pairing = canonical_skew_pairing(2)
        assert check_parallel_form(product, pairing).verdict

    def test_verdict_tracks_left_symmetry(self):
        # the report verdict must agree with a brute-force evaluation of the
        # built product for arbitrary r-actions
        r = rng(202)
        for name in PLSA_NAMES:
            prec, succ = plsa(name)
            base = op_add(prec, succ)
            for _ in range(4):
                rt = rand_tensor(r, 2)
                data = CotangentExtensionData(
                    base, dual_left_action(base), RepTensor(2, 2, rt),
                    t3_zero(2))
                product, rep = affine_cotangent_extension(data)
                assert rep.verdict == brute_left_symmetric(product.c), name

    def test_rejects_non_lsa_base(self):
        bad = st(2, {(0, 0, 0): Q(1), (1, 0, 0): Q(1)})
        zero_rep = dual_left_action(st(2))
        with pytest.raises(NotAnLSA):
            affine_cotangent_extension(
                CotangentExtensionData(bad, zero_rep, zero_rep, t3_zero(2)))


class TestPostAffine:
    def test_succ_dot_pair_from_catalog_plsa(self):
        for name in PLSA_NAMES:
            prec, succ = plsa(name)
            dot = op_add(prec, succ)
            br = sub_adjacent(dot)
            rep = post_affine_check(succ, dot, br)
            assert rep.verdict, (name, rep.violations[:3])
            assert any("agrees: pass" in note for note in rep.notes)

    def test_incompatible_connections_fail(self):
        br = st(2, {(0, 1, 0): Q(1), (1, 0, 0): Q(-1)})
        conn = st(2, {(1, 0, 0): Q(-1), (1, 1, 1): Q(1)})
        conn2 = st(2, {(0, 1, 0): Q(1), (1, 1, 1): Q(1)})
        rep = post_affine_check(conn, conn2, br)
        assert not rep.verdict
        where = {v.where for v in rep.violations}
        assert "post-connection" in where
        assert not any(note.startswith("ALERT") for note in rep.notes)
