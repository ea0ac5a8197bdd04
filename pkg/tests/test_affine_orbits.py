import pytest

from smallq.affine_orbits import (
    BudgetExceededError,
    InadmissibleError,
    bullet_act,
    circ_act,
    orbit_correspondence,
    orbit_table,
)
from smallq.rootdata import build, pairing

A1 = build("A", 1)
A2 = build("A", 2)
A3 = build("A", 3)


def test_bullet_act_sl2():
    s = A1.simple_reflections[0]
    # s . 0 = -0 - 2 mod 5 = 3, and the Steinberg weight is fixed
    assert bullet_act(s, (0,), 5) == (3,)
    assert bullet_act(s, (4,), 5) == (4,)
    ident = A1.weyl_elements[0]
    assert ident.word == () and bullet_act(ident, (2,), 5) == (2,)


def test_circ_act_sl2():
    s = A1.simple_reflections[0]
    assert circ_act(s, (1,), 5) == (4,)
    assert circ_act(s, (0,), 5) == (0,)


def test_orbit_table_sl2_l5():
    t = orbit_table(A1, 5, "bullet")
    assert t.representatives == [(0,), (1,), (4,)]
    assert [o.size for o in t.orbits] == [2, 2, 1]
    assert [o.stabilizer_order for o in t.orbits] == [1, 1, 2]
    assert t.orbits[2].stabilizer_reflections == ((1,),)


def test_orbit_table_sl2_l3_bruteforce_oracle():
    # exhaustive action of the two-element group: s . i = -i - 2 mod 3
    orbits = {}
    for i in range(3):
        orbit = frozenset({i, (-i - 2) % 3})
        orbits[min(orbit)] = orbit
    expected = sorted(sorted(o) for o in orbits.values())
    t = orbit_table(A1, 3, "bullet")
    got = sorted(
        sorted({p[0] for p in _orbit_points(t, rec)}) for rec in t.orbits
    )
    assert got == expected == [[0, 1], [2]]


def _orbit_points(table, rec):
    from smallq.affine_orbits import _orbit_points as op

    return op(table.datum, table.l, table.action, rec.representative)


def test_orbit_profile_sl3():
    t5 = orbit_table(A2, 5, "bullet")
    assert t5.size_profile == {1: 1, 3: 4, 6: 2}
    assert sum(o.size for o in t5.orbits) == 25
    t7 = orbit_table(A2, 7, "bullet")
    assert t7.size_profile == {1: 1, 3: 6, 6: 5}
    assert sum(o.size for o in t7.orbits) == 49


def test_xbar_counts():
    # |Xbar| closed forms for rank 1 and 2
    for l in (3, 5, 7, 9, 11, 13):
        t = orbit_table(A1, l, "bullet")
        assert len(t.orbits) == (l + 1) // 2
    for l in (5, 7, 11, 13):
        t = orbit_table(A2, l, "bullet")
        assert len(t.orbits) == 1 + (l - 1) + (l - 1) * (l - 2) // 6


def test_steinberg_orbit_unique_fixed_point():
    # a bullet fixed point needs <lam + rho, alpha_i> = 0 mod l for all
    # simple roots, which pins lam = (l-1) rho uniquely
    for datum, l in [(A1, 5), (A2, 7), (A3, 5)]:
        t = orbit_table(datum, l, "bullet")
        singles = [o for o in t.orbits if o.size == 1]
        steinberg = tuple((l - 1) for _ in range(datum.rank))
        assert [o.representative for o in singles] == [steinberg]


def test_partition_and_lagrange():
    for datum, l in [(A1, 7), (A2, 5)]:
        t = orbit_table(datum, l, "bullet")
        seen = set()
        for o in t.orbits:
            pts = _orbit_points(t, o)
            assert len(pts) == o.size
            assert o.size * o.stabilizer_order == datum.weyl_order
            assert not (pts & seen)
            seen |= pts
            assert o.representative == min(pts)  # lexicographic minimality
        assert len(seen) == l**datum.rank


def test_stabilizer_reflections_generate_stabilizer():
    for datum, l in [(A1, 5), (A2, 5), (A2, 7)]:
        t = orbit_table(datum, l, "bullet")
        for o in t.orbits:
            shifted = tuple(x + 1 for x in o.representative)
            expected = tuple(
                alpha
                for alpha in datum.positive_roots
                if pairing(shifted, alpha) % l == 0
            )
            assert o.stabilizer_reflections == expected
            gens = [datum.reflection(a) for a in o.stabilizer_reflections]
            order = _closure_order(gens, datum.rank)
            assert order == o.stabilizer_order


def _closure_order(gens, rank):
    idm = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    elems = {idm}
    frontier = [idm]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = tuple(
                    tuple(
                        sum(m[i][k] * g.matrix[k][j] for k in range(rank))
                        for j in range(rank)
                    )
                    for i in range(rank)
                )
                if prod not in elems:
                    elems.add(prod)
                    new.append(prod)
        frontier = new
    return len(elems)


def test_bullet_and_circ_same_profile():
    for datum, l in [(A1, 5), (A1, 9), (A2, 5), (A2, 7), (A3, 5)]:
        b = orbit_table(datum, l, "bullet")
        c = orbit_table(datum, l, "circ")
        cq = orbit_table(datum, l, "circ_q")
        assert b.size_profile == c.size_profile == cq.size_profile


def test_regular_count_divisible_by_index_of_connection():
    # |X| is divisible by |P/Q| = det(Cartan); surfaced as a sanity check
    for datum, l in [(A1, 5), (A1, 7), (A2, 5), (A2, 7), (A3, 5)]:
        t = orbit_table(datum, l, "bullet")
        assert t.regular_count % datum.det_cartan == 0


def test_orbit_correspondence_sl2():
    matches = orbit_correspondence(A1, 5)
    by_beta = {m.beta: m for m in matches}
    # beta = alpha (residue 1): the congruent weight has <mu, alpha> = 2
    assert by_beta[(1,)].mu == (2,)
    assert len(matches) == 3
    sizes = sorted(m.size for m in matches)
    assert sizes == [1, 2, 2]


def test_orbit_correspondence_zero_and_sl3():
    for datum, l in [(A1, 5), (A2, 7)]:
        matches = orbit_correspondence(datum, l)
        zero = tuple(0 for _ in range(datum.rank))
        by_beta = {m.beta: m for m in matches}
        assert by_beta[zero].mu == zero
        # bijective and size-preserving by construction; spot-check totals
        assert sum(m.size for m in matches) == l**datum.rank


def test_inadmissible_and_budget_errors():
    with pytest.raises(InadmissibleError):
        orbit_table(A2, 9, "bullet")
    with pytest.raises(BudgetExceededError):
        orbit_table(A2, 7, "bullet", budget=10)
