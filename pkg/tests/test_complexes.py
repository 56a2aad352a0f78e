"""Complex ingestion, pseudomanifold structure, orientation, products."""

import pytest
from hypothesis import given, settings, strategies as st

from chainforms.complexes import (
    ComplexFormatError,
    SimplicialComplex,
    SizeBoundExceeded,
    TopologyError,
    barycentric_subdivision,
    circle_complex,
    closed_pseudomanifold_check,
    diagonal_vertex_map,
    mapping_torus,
    orient,
    parse_complex,
    point_complex,
    product_complex,
    product_projections,
    simplex_complex,
    sphere_complex,
    suspension,
)
from chainforms.cohomology import cohomology
from chainforms.fixtures import RP2_FACETS, rp2
from chainforms.rings import Z


# -- parsing ---------------------------------------------------------------


def test_parse_triangle_circle():
    K = parse_complex("0 1\n1 2\n0 2\n")
    assert K.f_vector == (3, 3)
    assert K.dim == 1


def test_parse_boundary_simplex():
    text = "\n".join("".join(str(v) + " " for v in f)
                     for f in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
    K = parse_complex(text)
    assert K.f_vector == (4, 6, 4)


def test_parse_rp2_downward_closure():
    text = "\n".join(" ".join(str(v) for v in f) for f in RP2_FACETS)
    K = parse_complex(text)
    assert K.f_vector == (6, 15, 10)


def test_parse_name_comment_and_normalization():
    K = parse_complex("# a comment\nname: weird\n10 30\n30 20\n10 20\n")
    assert K.name == "weird"
    assert K.vertex_count == 3
    assert K.simplices(1) == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("doc", [
    "", "# only a comment\n", "0 x 2\n", "0 1 1\n", "0 -2\n",
])
def test_parse_rejects_malformed(doc):
    with pytest.raises(ComplexFormatError):
        parse_complex(doc)


def test_emit_parse_roundtrip_identity(rp2, sphere3):
    for K in (rp2, sphere3):
        again = parse_complex(K.emit())
        assert again.skeleton == K.skeleton
        assert again.name == K.name
        assert parse_complex(again.emit()).emit() == again.emit()


@settings(max_examples=60, deadline=None)
@given(st.lists(
    st.lists(st.integers(0, 7), min_size=1, max_size=4, unique=True),
    min_size=1, max_size=8,
))
def test_roundtrip_random_complexes(facets):
    # normalization happens at parse time; emit/parse is then idempotent
    K = parse_complex(SimplicialComplex(facets).emit())
    again = parse_complex(K.emit())
    assert again.skeleton == K.skeleton
    assert again.emit() == K.emit()


# -- pseudomanifold check and orientation ----------------------------------


def test_pseudomanifold_examples(sphere2, rp2):
    assert closed_pseudomanifold_check(sphere2)
    assert closed_pseudomanifold_check(rp2)


def test_pseudomanifold_detects_boundary():
    K = SimplicialComplex(list(sphere_complex(2).facets)[:-1])
    rep = closed_pseudomanifold_check(K)
    assert not rep
    assert rep.bad_ridges  # the exposed ridges of the removed facet


def test_pseudomanifold_not_pure():
    K = SimplicialComplex([(0, 1, 2), (2, 3)])
    assert not closed_pseudomanifold_check(K)


def test_orient_sphere(sphere2):
    o = orient(sphere2)
    assert o.orientable
    # signed boundary vanishes: re-verified inside orient(); spot check signs
    assert set(o.signs.values()) <= {1, -1}
    assert len(o.signs) == 4


def test_orient_rp2_nonorientable(rp2):
    assert not orient(rp2).orientable


def test_orient_rp3(rp3):
    assert orient(rp3).orientable


def test_orient_requires_closed():
    K = SimplicialComplex(list(sphere_complex(2).facets)[:-1])
    with pytest.raises(TopologyError):
        orient(K)


# -- products ---------------------------------------------------------------


def test_product_square():
    P = product_complex(simplex_complex(1), simplex_complex(1))
    assert P.f_vector == (4, 5, 2)


def test_product_torus(torus):
    assert torus.f_vector == (9, 27, 18)
    assert torus.euler_characteristic == 0


def test_product_rp2_rp2(rp2):
    P = product_complex(rp2, rp2)
    assert P.vertex_count == 36
    assert P.n_simplices(4) == 600
    assert P.euler_characteristic == 1


def test_product_with_point(rp2):
    P = product_complex(rp2, point_complex())
    assert P.skeleton == rp2.skeleton  # face-poset identical


def test_product_closed(small_manifolds):
    for K in small_manifolds[:3]:
        for L in small_manifolds[:3]:
            assert closed_pseudomanifold_check(product_complex(K, L))


def test_product_bound():
    with pytest.raises(SizeBoundExceeded):
        product_complex(sphere_complex(2), sphere_complex(2), bound=10)


def test_projections_and_diagonal(circle):
    P = product_complex(circle, circle)
    pr1, pr2 = product_projections(P)
    assert len(pr1) == len(pr2) == P.vertex_count
    dmap = diagonal_vertex_map(circle, P)
    assert all(pr1[dmap[v]] == v and pr2[dmap[v]] == v
               for v in range(circle.vertex_count))


def test_euler_products_multiply(rp2, sphere2):
    P = product_complex(rp2, sphere2)
    assert P.euler_characteristic == \
        rp2.euler_characteristic * sphere2.euler_characteristic


# -- other constructions ----------------------------------------------------


def test_suspension_is_sphere():
    S2 = suspension(circle_complex(3))
    assert closed_pseudomanifold_check(S2)
    assert S2.euler_characteristic == 2


def test_barycentric_subdivision_counts(sphere2):
    sd = barycentric_subdivision(sphere2)
    assert sd.vertex_count == sum(sphere2.f_vector)
    assert sd.n_simplices(2) == 6 * sphere2.n_simplices(2)
    assert sd.euler_characteristic == sphere2.euler_characteristic


def test_mapping_torus_of_identity_matches_product(rp2):
    T = mapping_torus(rp2, list(range(rp2.vertex_count)))
    P = product_complex(rp2, circle_complex(3))
    assert T.f_vector == P.f_vector
    assert closed_pseudomanifold_check(T)
    for k in range(T.dim + 1):
        bt = cohomology(T, k, Z)
        bp = cohomology(P, k, Z)
        assert bt.free_rank == bp.free_rank
        assert bt.torsion_invariants == bp.torsion_invariants


def test_euler_vs_homology(all_fixtures):
    for K in all_fixtures:
        chi = sum((-1) ** k * cohomology(K, k, Z).free_rank
                  for k in range(K.dim + 1))
        assert chi == K.euler_characteristic, K.name
