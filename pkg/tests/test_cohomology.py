"""Cohomology groups, torsion data, coordinates, and ring consistency."""

import random

import pytest

from chainforms.cochains import Cochain, coboundary, random_cochain
from chainforms.cohomology import (
    coboundary_entries,
    coboundary_snf,
    cohomology,
    solve_coboundary,
    torsion_generators,
)
from chainforms.intlinalg import mat_mul, sparse_to_dense
from chainforms.rings import F2, Ring, Z, Zmod


def test_rp2_groups(rp2):
    assert cohomology(rp2, 1, F2).rank == 1
    b = cohomology(rp2, 2, Z)
    assert b.free_rank == 0 and b.torsion_invariants == [2]
    b6 = cohomology(rp2, 1, Zmod(6))
    assert b6.torsion_invariants == [2]


def test_sphere_top(sphere2):
    b = cohomology(sphere2, 2, Z)
    assert b.free_rank == 1 and not b.torsion_invariants


def test_degree_out_of_range(sphere2):
    with pytest.raises(ValueError):
        cohomology(sphere2, 3, Z)
    with pytest.raises(ValueError):
        cohomology(sphere2, -1, F2)


def test_torsion_generators(rp3, sphere3, wu_cex):
    gens = torsion_generators(rp3, 2)
    assert len(gens) == 1 and gens[0][1] == 2
    for k in range(sphere3.dim + 1):
        assert torsion_generators(sphere3, k) == []
    gens = torsion_generators(wu_cex, 3)
    assert len(gens) == 1 and gens[0][1] == 2


def test_representatives_are_cocycles_with_unit_coordinates(all_fixtures):
    rings = [Z, F2, Zmod(4), Zmod(3)]
    for K in all_fixtures[:8]:
        for ring in rings:
            for k in range(K.dim + 1):
                basis = cohomology(K, k, ring)
                for i, rep in enumerate(basis.representatives):
                    c = Cochain(K, k, ring, rep)
                    if k < K.dim:
                        assert coboundary(c).is_zero()
                    coords = basis.coordinates(rep)
                    want = tuple(1 if t == i else 0
                                 for t in range(basis.rank))
                    assert coords == want, (K.name, str(ring), k)


def test_coordinates_kill_coboundaries(rp3):
    rng = random.Random(5)
    for ring in (Z, F2, Zmod(4)):
        for k in range(1, rp3.dim + 1):
            b = cohomology(rp3, k, ring)
            db = coboundary(random_cochain(rp3, k - 1, ring, rng))
            assert all(c == 0 for c in b.coordinates(db))


def test_smith_postconditions_on_coboundaries(rp2, sphere2):
    for K in (rp2, sphere2):
        for k in range(K.dim):
            snf = coboundary_snf(K, k)
            a = sparse_to_dense(coboundary_entries(K, k),
                                K.n_simplices(k + 1), K.n_simplices(k))
            assert mat_mul(mat_mul(snf.s_dense(), a), snf.t_dense()) \
                == snf.d_dense()


def universal_coefficients_ok(K, p):
    for k in range(K.dim + 1):
        dim_p = cohomology(K, k, Zmod(p)).rank
        bz = cohomology(K, k, Z)
        above = cohomology(K, k + 1, Z) if k + 1 <= K.dim else None
        want = bz.free_rank \
            + sum(1 for d in bz.torsion_invariants if d % p == 0) \
            + (sum(1 for d in above.torsion_invariants if d % p == 0)
               if above else 0)
        if dim_p != want:
            return False
    return True


def test_universal_coefficients(all_fixtures):
    for K in all_fixtures:
        for p in (2, 3):
            assert universal_coefficients_ok(K, p), (K.name, p)


def test_mod4_structure_of_lens41(lens41):
    # H^1(L(4,1); Z/4) = Z/4 and H^2(; Z/4) = Z/4
    b1 = cohomology(lens41, 1, Zmod(4))
    assert b1.orders == [4]
    b2 = cohomology(lens41, 2, Zmod(4))
    assert b2.orders == [4]


def test_solve_coboundary_roundtrip(rp3):
    rng = random.Random(6)
    for ring in (Z, F2, Zmod(4)):
        for k in range(rp3.dim):
            b = coboundary(random_cochain(rp3, k, ring, rng))
            c = solve_coboundary(rp3, k, b)
            assert c is not None
            assert (coboundary(c) - b).is_zero()


def test_solve_coboundary_insoluble(rp2):
    # the torsion generator of H^2(RP2;Z) is not an integral coboundary
    gen, order = torsion_generators(rp2, 2)[0]
    assert solve_coboundary(rp2, 1, gen.cochain()) is None
    assert solve_coboundary(rp2, 1, gen.cochain().scale(order)) is not None
