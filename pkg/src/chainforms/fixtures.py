"""Built-in triangulations and fixture generators.

The two literature-grade small complexes are frozen facet lists that the
test suite re-validates structurally (ridge incidence, orientability,
homology, neighborliness) rather than trusting:

* RP2_FACETS: the 6-vertex real projective plane (antipodal icosahedron
  quotient; 2-neighborly, 10 triangles).
* CP2_FACETS: the 9-vertex complex projective plane, recovered here as the
  unique C3xC3-symmetric 3-neighborly closed 4-pseudomanifold with chi = 3;
  its automorphism group has order 54.

Lens spaces come from a quotient generator: S^3 is the join of two 2p-gons,
the free Z/p rotation acts with sigma and g^k(sigma) disjoint for every
simplex, so the quotient of the first barycentric subdivision is a genuine
triangulation of L(p, q).

The 5-dimensional counterexample fixture (orientable, middle Wu class with
no integral lift, non-alternating torsion linking form) is the mapping
torus of an order-2 symmetry of the 9-vertex CP^2 acting by -1 on H^2:
topologically the twisted product of a circle with CP^2 by complex
conjugation.  A 15-vertex triangulation of SU(3)/SO(3) from the published
censuses can be dropped in as external data (see `load_external_complex`);
everything specific to that file is checksum-gated.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .complexes import (
    SimplicialComplex,
    TopologyError,
    barycentric_subdivision,
    circle_complex,
    cyclic_quotient,
    mapping_torus,
    parse_complex,
    point_complex,
    product_complex,
    simplex_complex,
    sphere_complex,
    suspension,
)

RP2_FACETS = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
]

CP2_FACETS = [
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 5), (0, 1, 2, 4, 5), (0, 1, 3, 4, 6),
    (0, 1, 3, 5, 7), (0, 1, 3, 6, 7), (0, 1, 4, 5, 6), (0, 1, 5, 6, 8),
    (0, 1, 5, 7, 8), (0, 1, 6, 7, 8), (0, 2, 3, 4, 8), (0, 2, 3, 5, 8),
    (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 2, 4, 7, 8), (0, 2, 5, 6, 8),
    (0, 2, 6, 7, 8), (0, 3, 4, 6, 7), (0, 3, 4, 7, 8), (0, 3, 5, 7, 8),
    (1, 2, 3, 4, 8), (1, 2, 3, 5, 7), (1, 2, 3, 6, 7), (1, 2, 3, 6, 8),
    (1, 2, 4, 5, 7), (1, 2, 4, 7, 8), (1, 2, 6, 7, 8), (1, 3, 4, 6, 8),
    (1, 4, 5, 6, 8), (1, 4, 5, 7, 8), (2, 3, 5, 6, 7), (2, 3, 5, 6, 8),
    (2, 4, 5, 6, 7), (3, 4, 5, 6, 7), (3, 4, 5, 6, 8), (3, 4, 5, 7, 8),
]

# order-2 automorphism of CP2_FACETS acting by -1 on H^2 (conjugation)
CP2_CONJUGATION = [0, 1, 8, 6, 7, 5, 3, 4, 2]


def rp2() -> SimplicialComplex:
    return SimplicialComplex(RP2_FACETS, name="rp2")


def cp2() -> SimplicialComplex:
    return SimplicialComplex(CP2_FACETS, name="cp2")


def torus() -> SimplicialComplex:
    """9-vertex torus: staircase product of two 3-vertex circles."""
    return product_complex(circle_complex(3), circle_complex(3), name="torus")


def lens_space(p: int, q: int = 1) -> SimplicialComplex:
    """Triangulated L(p, q) for p >= 2, gcd(p, q) = 1.

    The join of two 2p-gon circles triangulates S^3 with facets
    {a_i, a_{i+1}} u {b_j, b_{j+1}}; the rotation a_i -> a_{i+2},
    b_j -> b_{j+2q} generates a free simplicial Z/p action whose facet
    translates are disjoint from the facets, so `cyclic_quotient`
    (quotient of the barycentric subdivision) applies.  L(2, 1) is RP^3.
    """
    from math import gcd
    if p < 2 or gcd(p, q) != 1:
        raise ValueError("need p >= 2 and gcd(p, q) = 1")
    n = 2 * p
    facets = []
    for i in range(n):
        for j in range(n):
            facets.append([i, (i + 1) % n, n + j, n + (j + 1) % n])
    join = SimplicialComplex(facets, name=f"join_s3_{p}")
    perm = [0] * (2 * n)
    for i in range(n):
        perm[i] = (i + 2) % n
        perm[n + i] = n + (i + 2 * q) % n
    return cyclic_quotient(join, perm, p, name=f"lens_{p}_{q}")


def rp3() -> SimplicialComplex:
    K = lens_space(2, 1)
    K.name = "rp3"
    return K


def wu_counterexample() -> SimplicialComplex:
    """Closed orientable 5-manifold whose linking form is not alternating.

    Mapping torus of the conjugation symmetry of the 9-vertex CP^2.  The
    monodromy acts by -1 on H^2(CP^2; Z), so H^3(total; Z) = Z/2 and the
    middle Wu class has no integral lift; the tests verify all of this
    rather than assuming it.
    """
    return mapping_torus(cp2(), CP2_CONJUGATION, name="wu_counterexample")


# ---------------------------------------------------------------------------
# external data (checksum-gated)

WU_MANIFOLD_FILE = "wu_manifold.cplx"


def load_external_complex(fixtures_dir, filename: str = WU_MANIFOLD_FILE,
                          expect_sha256: str | None = None):
    """Load an externally supplied complex file, or None when absent.

    If `<filename>.sha256` sits next to the file (or `expect_sha256` is
    given), the digest must match; on mismatch the file is rejected rather
    than silently used.
    """
    path = Path(fixtures_dir) / filename
    if not path.is_file():
        return None
    data = path.read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    sha_path = Path(str(path) + ".sha256")
    expected = expect_sha256
    if expected is None and sha_path.is_file():
        expected = sha_path.read_text().split()[0].strip()
    if expected is not None and digest != expected.lower():
        raise TopologyError(
            f"{filename}: sha256 mismatch (got {digest}, want {expected})"
        )
    K = parse_complex(data.decode("utf-8"))
    if not K.name:
        K.name = path.stem
    return K


# ---------------------------------------------------------------------------
# registry used by the CLI and the verification script


def builtin_fixtures() -> dict[str, SimplicialComplex]:
    return {
        "circle": circle_complex(3),
        "sphere2": sphere_complex(2),
        "sphere3": sphere_complex(3),
        "sphere5": sphere_complex(5),
        "torus": torus(),
        "rp2": rp2(),
        "rp3": rp3(),
        "cp2": cp2(),
        "lens_3_1": lens_space(3, 1),
        "lens_4_1": lens_space(4, 1),
        "wu_counterexample": wu_counterexample(),
    }


__all__ = [
    "RP2_FACETS", "CP2_FACETS", "CP2_CONJUGATION",
    "rp2", "cp2", "torus", "lens_space", "rp3", "wu_counterexample",
    "load_external_complex", "builtin_fixtures", "WU_MANIFOLD_FILE",
    "barycentric_subdivision", "circle_complex", "point_complex",
    "product_complex", "simplex_complex", "sphere_complex", "suspension",
]
