import random

from smallq import linalg
from smallq.charring import CharRing
from smallq.sl2_checks import center_report, fourier_report


def test_center_dimensions(u3, u5):
    # one 3-dim block per regular orbit plus the Steinberg line
    assert len(u3.center_basis()) == 4
    assert len(u5.center_basis()) == 7


def test_center_elements_commute(u5):
    u = u5
    rng = random.Random(31)
    for z in u.center_basis():
        for g in u.generators():
            assert u.multiply(z, g) == u.multiply(g, z)
        x = u.random_element(rng)
        assert u.multiply(z, x) == u.multiply(x, z)


def test_casimir_is_central(u5):
    u = u5
    fld = u.field
    qm1sq = (fld.q - fld.qpow(-1)) ** 2
    cas = u.multiply(u.F(), u.E()) + (
        u.K(1).scale(fld.q) + u.K(-1).scale(fld.qpow(-1))
    ).scale(qm1sq.inverse())
    for g in u.generators():
        assert u.multiply(cas, g) == u.multiply(g, cas)
    assert linalg.in_span([z.coeffs for z in u.center_basis()], cas.coeffs)


def test_transmute_counit(u3):
    assert u3.transmute(u3.counit_functional()) == u3.one()


def test_transmute_rank_on_c_r(u3):
    u = u3
    images = [u.transmute(p).coeffs for p in u.c_r_basis()]
    assert linalg.span_rank(images) == len(u.center_basis())


def test_transmute_multiplicative_on_characters_l3(u3):
    u = u3
    xi = [u.q_character(i) for i in range(3)]
    for i in range(3):
        for j in range(3):
            assert u.multiply(u.transmute(xi[i]), u.transmute(xi[j])) == u.transmute(
                u.convolve(xi[i], xi[j])
            )


def test_center_report_l3(u3):
    rep = center_report(u3)
    for c in rep.checks:
        assert c.ok, c.line()
    assert rep.data["dim_intersection"] == 2
    assert rep.data["dim_sum"] == 4


def test_center_report_l5(u5):
    rep = center_report(u5)
    for c in rep.checks:
        assert c.ok, c.line()
    # (Ztilde, Zprime, meet, sum) = (5, 5, 3, 7)
    assert rep.data["dim_intersection"] == 3
    assert rep.data["dim_sum"] == 7


def test_regular_block_products_l5(u5):
    u = u5
    zp = [u.phi_inv(u.q_character(i)) for i in range(5)]
    for i in range(2):  # regular orbits {0,3}, {1,2}
        t, s = zp[i], zp[5 - 2 - i]
        assert u.multiply(t, s) == u.zero()
        assert u.multiply(t, t) == u.zero()
        assert u.multiply(s, s) == u.zero()


def test_idempotents_l5(u5):
    u = u5
    idems = u.block_idempotents()
    assert len(idems) == 3
    total = u.zero()
    for e in idems:
        assert u.multiply(e, e) == e
        total = total + e
    assert total == u.one()
    zt_vecs = [u.transmute(u.q_character(i)).coeffs for i in range(5)]
    for e in idems:
        assert linalg.in_span(zt_vecs, e.coeffs)


def test_linkage_matches_orbits(u5):
    assert u5.linkage_classes() == [[0, 3], [1, 2], [4]]


def test_structure_constants_match_charring_l5(u5):
    u = u5
    ring = CharRing(5)
    zt = [u.transmute(u.q_character(i)) for i in range(5)]
    sc = u.structure_constants(zt)
    for i in range(5):
        for j in range(5):
            expected = ring.product(ring.xi(i), ring.xi(j)).coeffs
            for k in range(5):
                got = sc[i][j][k]
                want = u.field.from_rational(expected[k])
                if not isinstance(got, type(want)):
                    got = u.field.from_rational(got)
                assert got == want, (i, j, k)


def test_fourier_report_l3(u3):
    rep = fourier_report(u3)
    for c in rep.checks:
        assert c.ok, c.line()
    # at l = 3 the scalar happens to be l itself
    assert rep.data["fourier_unit_scalar"] == u3.field.from_rational(3)


def test_fourier_report_l5(u5):
    rep = fourier_report(u5)
    for c in rep.checks:
        assert c.ok, c.line()


def test_fourier_unit_and_square_l3(u3):
    u = u3
    lam = u.integral()
    kappa = u.field.from_rational(3)
    assert u.fourier(u.one()) == lam.scale(kappa)
    assert u.fourier(lam) == u.one()
    for z in u.center_basis():
        assert u.fourier(u.fourier(z)) == u.antipode_inv(z).scale(kappa)


def test_central_subalgebras_report(u3, u5):
    for u, xbar in ((u3, 2), (u5, 3)):
        cs = u.central_subalgebras()
        assert cs.dims == (u.l, u.l, xbar, 2 * u.l - xbar)
        assert len(cs.idempotents) == xbar
        assert len(cs.socle_z) == u.l  # Zprime = Soc Z has dimension l
        assert len(cs.radical_z) == len(u.center_basis()) - xbar
        # socle * radical = 0 inside Z
        for s in cs.socle_z:
            for r in cs.radical_z:
                assert u.multiply(s, r) == u.zero()


def test_fourier_swaps_subalgebras_l5(u5):
    u = u5
    xi = [u.q_character(i) for i in range(5)]
    zt_vecs = [u.transmute(p).coeffs for p in xi]
    zp_vecs = [u.phi_inv(p).coeffs for p in xi]
    from smallq.uqsl2 import AlgElem

    f_zt = [u.fourier(AlgElem(u, v)).coeffs for v in zt_vecs]
    f_zp = [u.fourier(AlgElem(u, v)).coeffs for v in zp_vecs]
    assert linalg.span_equal(f_zt, zp_vecs)
    assert linalg.span_equal(f_zp, zt_vecs)
