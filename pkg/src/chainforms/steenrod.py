"""Cohomology operations: Steenrod squares, Bockstein operators, the
secondary Bockstein, and the Cartan product check.

Sq^i on a degree-r mod-2 class is the class of z cup_{r-i} z for a cocycle
representative z (0 for i > r, the cup square for i = r).  Bockstein
operators are computed at chain level from canonical integer lifts:

* mod-2^n Bockstein: d(lift)/2^n reduced mod 2^n  (coefficient sequence
  Z/2^n -> Z/2^{2n} -> Z/2^n; works for any prime power);
* integral Bockstein: d(lift)/m as an honest integral cocycle (sequence
  Z -> Z -> Z/m); its class is m-torsion and vanishes iff the input lifts
  to an integral class;
* secondary Bockstein: defined on ker(beta_1); corrects the integer lift so
  the coboundary becomes divisible by 4 and returns d(corrected lift)/4
  mod 2, well-defined up to the image of beta_1 (the `SecondaryClass`
  carries that indeterminacy and answers membership queries exactly).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from .cochains import Cochain, coboundary, cup, cup_i, pullback, random_cochain, zero_cochain
from .cohomology import CohomologyClass, cohomology, solve_coboundary
from .complexes import SimplicialComplex, product_complex, product_projections
from .intlinalg import F2Reducer
from .rings import F2, Ring, Z


def _require_mod2(x: CohomologyClass) -> None:
    if x.ring != F2:
        raise ValueError(f"operation needs Z/2 coefficients, got {x.ring}")


def _formal_zero(K: SimplicialComplex, degree: int, ring: Ring) -> CohomologyClass:
    """Zero class in a degree beyond the complex dimension (zero group)."""
    return CohomologyClass(K, degree, ring, (), ())


def sq(i: int, x: CohomologyClass) -> CohomologyClass:
    """Steenrod square Sq^i: H^r(;Z/2) -> H^{r+i}(;Z/2)."""
    _require_mod2(x)
    if i < 0:
        raise ValueError("sq needs i >= 0")
    K, r = x.complex, x.degree
    if i > r or r + i > K.dim:
        if r + i > K.dim:
            return _formal_zero(K, r + i, F2)
        return cohomology(K, r + i, F2).zero()
    z = x.cochain()
    w = cup_i(z, z, r - i)
    return cohomology(K, r + i, F2).class_from_vector(w)


def total_sq(x: CohomologyClass) -> list[CohomologyClass]:
    """[Sq^0 x, Sq^1 x, ...] up to the dimension of the complex."""
    return [sq(i, x) for i in range(0, x.complex.dim - x.degree + 1)]


def bockstein(x: CohomologyClass) -> CohomologyClass:
    """Connecting map for Z/l^n -> Z/l^{2n} -> Z/l^n (prime-power modulus)."""
    pp = x.ring.prime_power()
    if pp is None:
        raise ValueError(f"bockstein needs a prime-power modulus, got {x.ring}")
    m = x.ring.modulus
    K, k = x.complex, x.degree
    if k >= K.dim:
        return cohomology(K, k + 1, x.ring).zero() if k + 1 <= K.dim \
            else _formal_zero(K, k + 1, x.ring)
    lift = x.cochain().lift_integer()
    dz = coboundary(lift)
    vals = []
    for v in dz.values:
        assert v % m == 0, "input is not a cocycle mod m"
        vals.append((v // m) % m)
    return cohomology(K, k + 1, x.ring).class_from_vector(tuple(vals))


def integral_bockstein(x: CohomologyClass) -> CohomologyClass:
    """Connecting map for Z -> Z -> Z/m; the lifting obstruction."""
    if x.ring.is_integers:
        raise ValueError("integral bockstein needs Z/m coefficients")
    m = x.ring.modulus
    K, k = x.complex, x.degree
    if k >= K.dim:
        return cohomology(K, k + 1, Z).zero() if k + 1 <= K.dim \
            else _formal_zero(K, k + 1, Z)
    lift = x.cochain().lift_integer()
    dz = coboundary(lift)
    vals = []
    for v in dz.values:
        assert v % m == 0, "input is not a cocycle mod m"
        vals.append(v // m)
    return cohomology(K, k + 1, Z).class_from_vector(tuple(vals))


def reduction(x: CohomologyClass, ring: Ring) -> CohomologyClass:
    """Coefficient reduction H^k(;Z) -> H^k(;Z/m) or Z/m -> Z/m' (m' | m)."""
    K, k = x.complex, x.degree
    return cohomology(K, k, ring).class_from_vector(
        tuple(ring.reduce(v) for v in x.vector)
    )


@dataclass
class SecondaryClass:
    """Value of a secondary operation plus its indeterminacy subgroup."""

    value: CohomologyClass
    indeterminacy: list[CohomologyClass] = field(default_factory=list)

    def contains(self, candidate: CohomologyClass) -> bool:
        """Is candidate in value + span(indeterminacy) (mod-2 coefficients)?"""
        rank = len(self.value.coords)
        red = F2Reducer()
        for cls in self.indeterminacy:
            mask = 0
            for t, c in enumerate(cls.coords):
                if c & 1:
                    mask |= 1 << t
            red.add(mask)
        diff = 0
        for t in range(rank):
            if (candidate.coords[t] ^ self.value.coords[t]) & 1:
                diff |= 1 << t
        return red.contains(diff)

    def __eq__(self, other):
        if isinstance(other, CohomologyClass):
            return self.contains(other)
        if isinstance(other, SecondaryClass):
            return self.contains(other.value)
        return NotImplemented


def secondary_bockstein(x: CohomologyClass, rng: Random | None = None) -> SecondaryClass:
    """Secondary Bockstein on ker(beta_1) in mod-2 cohomology.

    Picks an integer lift xt of x; d xt = 2 w with w an integral cocycle
    whose mod-2 class is beta_1(x), required to vanish.  Writing w = d c
    mod 2 and correcting xt by -2c makes the coboundary divisible by 4;
    the value is d(corrected)/4 mod 2.  A supplied rng re-randomizes every
    choice (lift, correction, representative); the class moves only inside
    the recorded indeterminacy, which the tests exercise.
    """
    _require_mod2(x)
    K, k = x.complex, x.degree
    basis_up = cohomology(K, k + 1, F2)
    z = x.cochain()
    if rng is not None:
        # same class, different cocycle representative
        if k > 0:
            z = z + coboundary(random_cochain(K, k - 1, F2, rng))
    lift = z.lift_integer()
    if rng is not None:
        lift = lift + random_cochain(K, k, Z, rng).scale(2)
    dz = coboundary(lift)
    assert all(v % 2 == 0 for v in dz.values)
    w = Cochain(K, k + 1, Z, tuple(v // 2 for v in dz.values))
    w2 = w.to_ring(F2)
    if not basis_up.class_from_vector(w2).is_zero():
        raise ValueError("secondary bockstein needs beta_1(x) = 0")
    c = solve_coboundary(K, k, w2)
    assert c is not None
    clift = c.lift_integer()
    if rng is not None:
        clift = clift + random_cochain(K, k, Z, rng).scale(2)
    corrected = lift - clift.scale(2)
    dcorr = coboundary(corrected)
    assert all(v % 4 == 0 for v in dcorr.values)
    y = Cochain(K, k + 1, F2, tuple((v // 4) % 2 for v in dcorr.values))
    value = basis_up.class_from_vector(y)
    indet = []
    for b in cohomology(K, k, F2).classes():
        img = bockstein(b)
        if not img.is_zero():
            indet.append(img)
    return SecondaryClass(value, indet)


# ---------------------------------------------------------------------------
# Cartan formula on products


@dataclass
class CartanReport:
    complex_left: str
    complex_right: str
    pairs: list[dict]

    @property
    def all_pass(self) -> bool:
        return all(p["pass"] for p in self.pairs)


def cartan_check(K: SimplicialComplex, L: SimplicialComplex,
                 bound: int | None = 1_000_000) -> CartanReport:
    """Verify Sq(pr1* e . pr2* f) = pr1* Sq(e) . pr2* Sq(f) for all basis
    classes e of H*(K;Z/2), f of H*(L;Z/2)."""
    P = product_complex(K, L, bound=bound)
    pr1, pr2 = product_projections(P)
    dim = P.dim
    pairs = []
    k_classes = [c for k in range(K.dim + 1) for c in cohomology(K, k, F2).classes()]
    l_classes = [c for k in range(L.dim + 1) for c in cohomology(L, k, F2).classes()]
    for e in k_classes:
        pe = pullback(e.cochain(), pr1, P)
        for f in l_classes:
            pf = pullback(f.cochain(), pr2, P)
            deg = e.degree + f.degree
            if deg > dim:
                continue
            prod = cohomology(P, deg, F2).class_from_vector(cup(pe, pf))
            ok = True
            detail = []
            for j in range(0, dim - deg + 1):
                lhs = sq(j, prod)
                rhs_vec = zero_cochain(P, deg + j, F2)
                for a in range(0, j + 1):
                    b = j - a
                    if a > e.degree or b > f.degree:
                        continue
                    sa = sq(a, e)
                    sb = sq(b, f)
                    if sa.is_zero() or sb.is_zero():
                        continue
                    rhs_vec = rhs_vec + cup(
                        pullback(sa.cochain(), pr1, P),
                        pullback(sb.cochain(), pr2, P),
                    )
                rhs = cohomology(P, deg + j, F2).class_from_vector(rhs_vec)
                same = lhs == rhs
                ok = ok and same
                detail.append({"sq": j, "pass": same})
            pairs.append({
                "left_degree": e.degree, "left_coords": list(e.coords),
                "right_degree": f.degree, "right_coords": list(f.coords),
                "pass": ok, "squares": detail,
            })
    return CartanReport(K.name, L.name, pairs)
