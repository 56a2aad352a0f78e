"""Poincare duality data, torsion linking forms, Wu and Stiefel-Whitney
classes, and the alternation criterion.

Conventions.  All pairings integrate cup products against the signed
fundamental chain fixed by `orient` (mod 2 no orientation is needed).  The
torsion linking form on H^{k+1}(K;Z)_tors of a closed oriented
(2k+1)-manifold is

    link(a, b) = (1/m) * integrate(a . c)  mod Z,   where d c = m * rep(b);

exactness of the integral solve makes this independent of every choice (the
tests re-randomize lifts).  Values are Fractions in [0, 1).

The Wu class v_i is the unique mod-2 class with
integrate(Sq^i(x)) = integrate(v_i . x) for all x in H^{dim-i}; the total
Stiefel-Whitney class is w = Sq(v).  A dimension-(4d+1) complex is
"alternating" iff v_{2d} admits an integral lift, i.e. its integral
Bockstein vanishes; the report cross-checks that criterion against the
diagonal of the 2-primary linking form computed independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from random import Random

from .cochains import (
    Cochain,
    coboundary,
    cup,
    indicator_cochain,
    pullback,
    random_cochain,
    unit_cochain,
    zero_cochain,
)
from .cohomology import (
    CohomologyClass,
    cohomology,
    coboundary_snf,
    solve_coboundary,
    torsion_generators,
)
from .complexes import (
    SimplicialComplex,
    TopologyError,
    closed_pseudomanifold_check,
    diagonal_vertex_map,
    orient,
    product_complex,
    product_projections,
)
from .intlinalg import bareiss_det, invariant_factors, smith_normal_form
from .rings import F2, Ring, Z, Zmod
from .steenrod import bockstein, integral_bockstein, sq


# ---------------------------------------------------------------------------
# fundamental class and integration


@dataclass
class FundamentalData:
    complex: SimplicialComplex
    ring: Ring
    signs: dict[tuple, int]
    top_generator: CohomologyClass

    def integrate(self, x) -> int:
        """Evaluate a top-degree cochain or class against the fundamental
        chain; the result lives in the coefficient ring."""
        if isinstance(x, CohomologyClass):
            values = x.vector
        elif isinstance(x, Cochain):
            values = x.values
        else:
            values = tuple(x)
        K = self.complex
        acc = 0
        for facet, sgn in self.signs.items():
            acc += sgn * values[K.index_of(facet)]
        return self.ring.reduce(acc)


def fundamental_data(K: SimplicialComplex, ring: Ring) -> FundamentalData:
    report = closed_pseudomanifold_check(K)
    if not report:
        raise TopologyError("fundamental_data: not a closed connected pseudomanifold")
    if ring.modulus == 2:
        signs = {f: 1 for f in K.facets}
    else:
        o = orient(K)
        if not o.orientable:
            raise TopologyError(f"fundamental_data over {ring}: non-orientable")
        signs = o.signs
    f0 = K.facets[0]
    gen_cochain = indicator_cochain(K, f0, ring, value=signs[f0])
    basis = cohomology(K, K.dim, ring)
    top = basis.class_from_vector(gen_cochain)
    fd = FundamentalData(K, ring, signs, top)
    assert fd.integrate(top) == ring.reduce(1)
    return fd


# ---------------------------------------------------------------------------
# duality check


@dataclass
class DegreePairing:
    degree: int
    matrix: list[list[int]]
    perfect: bool
    detail: str = ""


@dataclass
class DualityReport:
    complex: str
    ring: str
    degrees: list[DegreePairing]

    @property
    def all_perfect(self) -> bool:
        return all(d.perfect for d in self.degrees)


def pairing_matrix(K: SimplicialComplex, ring: Ring, i: int,
                   fd: FundamentalData | None = None) -> list[list[int]]:
    """Matrix integrate(e_a . f_b) over basis classes of H^i and H^{d-i}."""
    fd = fd or fundamental_data(K, ring)
    left = cohomology(K, i, ring).classes()
    right = cohomology(K, K.dim - i, ring).classes()
    return [
        [fd.integrate(cup(e.cochain(), f.cochain())) for f in right]
        for e in left
    ]


def _perfect_over_modm(P: list[list[int]], left_orders: list[int],
                       right_orders: list[int], m: int) -> tuple[bool, str]:
    """Is x -> <x, -> an isomorphism H_left -> Hom(H_right, Z/m)?"""
    if sorted(left_orders) != sorted(right_orders):
        return False, f"invariant mismatch {left_orders} vs {right_orders}"
    na, nb = len(left_orders), len(right_orders)
    # Hom(Z/c', Z/m) = (m/c') Z/m ~ Z/c'; divide the pairing entries out
    q = [[0] * nb for _ in range(na)]
    for a in range(na):
        for b in range(nb):
            cb = right_orders[b]
            step = m // cb
            if P[a][b] % step:
                return False, "pairing value violates torsion order"
            q[a][b] = (P[a][b] // step) % cb
            ca = left_orders[a]
            if (ca * P[a][b]) % m:
                return False, "pairing not annihilated by source order"
    # surjectivity of the induced map := triviality of coker over Z
    rows: dict[int, dict[int, int]] = {}
    for b in range(nb):
        row = {}
        for a in range(na):
            if q[a][b]:
                row[a] = q[a][b]
        row[na + b] = right_orders[b]
        rows[b] = row
    facs = invariant_factors(rows, nrows=nb, ncols=na + nb)
    snf_rank = smith_normal_form(rows, nrows=nb, ncols=na + nb,
                                 transforms=False).rank
    if snf_rank < nb or facs:
        return False, f"cokernel nontrivial (invariants {facs})"
    return True, ""


def _perfect_over_z(P: list[list[int]], left_orders: list[int],
                    right_orders: list[int]) -> tuple[bool, str]:
    """Unimodularity of the free-part pairing (torsion pairs to 0 in Z)."""
    li = [t for t, d in enumerate(left_orders) if d == 0]
    ri = [t for t, d in enumerate(right_orders) if d == 0]
    if len(li) != len(ri):
        return False, f"free ranks differ: {len(li)} vs {len(ri)}"
    sub = [[P[a][b] for b in ri] for a in li]
    det = bareiss_det(sub) if sub else 1
    if abs(det) != 1:
        return False, f"free pairing determinant {det}"
    return True, ""


def duality_check(K: SimplicialComplex, ring: Ring,
                  degrees: list[int] | None = None) -> DualityReport:
    fd = fundamental_data(K, ring)
    out = []
    for i in degrees if degrees is not None else range(K.dim + 1):
        left = cohomology(K, i, ring)
        right = cohomology(K, K.dim - i, ring)
        P = pairing_matrix(K, ring, i, fd)
        if ring.is_integers:
            ok, why = _perfect_over_z(P, left.orders, right.orders)
        else:
            ok, why = _perfect_over_modm(P, left.orders, right.orders,
                                         ring.modulus)
        out.append(DegreePairing(i, P, ok, why))
    return DualityReport(K.name, str(ring), out)


# ---------------------------------------------------------------------------
# the middle-degree pairing <x, y> = integrate(x . beta y)


def pairing_n(K: SimplicialComplex, n: int, x: CohomologyClass,
              y: CohomologyClass) -> int:
    """integrate(x . beta(y)) in Z/2^n on a (4d+1)-complex, both classes in
    middle degree 2d with Z/2^n coefficients."""
    if K.dim % 4 != 1:
        raise TopologyError(f"pairing needs dimension 4d+1, got {K.dim}")
    mid = (K.dim - 1) // 2
    ring = Zmod(2 ** n)
    if x.degree != mid or y.degree != mid:
        raise ValueError(f"classes must be in degree {mid}")
    if x.ring != ring or y.ring != ring:
        raise ValueError(f"classes must have {ring} coefficients")
    fd = fundamental_data(K, ring)
    by = bockstein(y)
    return fd.integrate(cup(x.cochain(), by.cochain()))


# ---------------------------------------------------------------------------
# torsion linking form


@dataclass
class TorsionForm:
    complex: str
    degree: int
    orders: list[int]
    gram: list[list[Fraction]]
    generators: list[CohomologyClass] = field(repr=False, default_factory=list)

    @property
    def is_alternating(self) -> bool:
        return all(self.gram[i][i] == 0 for i in range(len(self.orders)))

    @property
    def is_skew_symmetric(self) -> bool:
        n = len(self.orders)
        return all(
            (self.gram[i][j] + self.gram[j][i]) % 1 == 0
            for i in range(n) for j in range(n)
        )

    @property
    def is_nondegenerate(self) -> bool:
        """The adjoint map to the Pontrjagin dual is an isomorphism."""
        n = len(self.orders)
        if n == 0:
            return True
        rows = {}
        for j in range(n):
            row = {}
            for i in range(n):
                v = self.gram[i][j] * self.orders[j]
                assert v.denominator == 1
                if int(v) % self.orders[j]:
                    row[i] = int(v) % self.orders[j]
            row[n + j] = self.orders[j]
            rows[j] = row
        snf = smith_normal_form(rows, nrows=n, ncols=2 * n, transforms=False)
        return snf.rank == n and not snf.invariant_factors()

    def prime_part(self, p: int) -> "TorsionForm":
        keep = [i for i, d in enumerate(self.orders) if d % p == 0]
        # p-primary component of each kept generator
        idx = [i for i in keep]
        orders = []
        gram = []
        for i in idx:
            d = self.orders[i]
            pe = 1
            while d % p == 0:
                d //= p
                pe *= p
            orders.append(pe)
        for a, i in enumerate(idx):
            row = []
            for b, j in enumerate(idx):
                # restrict to p-parts: scale by the prime-to-p cofactors
                ci = self.orders[i] // orders[a]
                cj = self.orders[j] // orders[b]
                row.append((self.gram[i][j] * ci * cj) % 1)
            gram.append(row)
        return TorsionForm(self.complex, self.degree, orders, gram,
                           [self.generators[i] for i in idx] if self.generators else [])


def linking_form(K: SimplicialComplex, k: int,
                 rng: Random | None = None) -> TorsionForm:
    """Q/Z-valued linking form on H^{k+1}(K;Z)_tors, dim K = 2k+1.

    With rng given, generators' representatives and the integral lifts are
    re-randomized; the output must not change (exactness guarantee, and a
    test obligation).
    """
    if K.dim != 2 * k + 1:
        raise TopologyError(f"linking form needs dim = 2k+1 = {2 * k + 1}, got {K.dim}")
    o = orient(K)
    if not o.orientable:
        raise TopologyError("linking form needs an orientable complex")
    fd = fundamental_data(K, Z)
    gens = torsion_generators(K, k + 1)
    reps: list[Cochain] = []
    orders: list[int] = []
    for cls, order in gens:
        rep = cls.cochain()
        if rng is not None:
            rep = rep + coboundary(random_cochain(K, k, Z, rng))
        reps.append(rep)
        orders.append(order)
    lifts: list[Cochain] = []
    for rep, order in zip(reps, orders):
        c = solve_coboundary(K, k, rep.scale(order))
        assert c is not None, "torsion order does not annihilate the class"
        if rng is not None:
            snf = coboundary_snf(K, k)
            kc = [j for j in range(snf.ncols) if
                  (snf.diag[j] if j < len(snf.diag) else 0) == 0]
            if kc:
                j = kc[rng.randrange(len(kc))]
                extra = snf.t_col(j)
                c = c + Cochain(K, k, Z, tuple(
                    rng.randint(-2, 2) * v for v in extra))
        lifts.append(c)
    n = len(gens)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            val = fd.integrate(cup(reps[i], lifts[j]))
            gram[i][j] = Fraction(val, orders[j]) % 1
    return TorsionForm(K.name, k + 1, orders,
                       gram, [cls for cls, _ in gens])


def linking_vs_middle_pairing(K: SimplicialComplex, n: int) -> bool:
    """Compatibility of the linking form with the mod-2^n middle pairing.

    For 2-primary torsion classes a = d(c)/2^n the cochain c mod 2^n maps
    onto a under the connecting surjection; the claim checked is

        link(a_i, a_j) = -(1/2^n) <x_i, x_j>   in Q/Z

    for those preimages x (the sign is the cup-commutation between the two
    lift conventions; the statement is exact, not up to sign).
    """
    if K.dim % 4 != 1:
        raise TopologyError("needs dimension 4d+1")
    k = (K.dim - 1) // 2
    m = 2 ** n
    ring = Zmod(m)
    fd = fundamental_data(K, Z)
    form = linking_form(K, k)
    two_primary = [
        (i, cls, order) for i, (cls, order) in
        enumerate(zip(form.generators, form.orders))
        if order % 2 == 0 and m % order == 0
    ]
    basis_mid = cohomology(K, k, ring)
    for (i, a, oi) in two_primary:
        ci = solve_coboundary(K, k, a.cochain().scale(oi))
        xi = basis_mid.class_from_vector(ci.scale(m // oi).to_ring(ring))
        for (j, b, oj) in two_primary:
            cj = solve_coboundary(K, k, b.cochain().scale(oj))
            xj = basis_mid.class_from_vector(cj.scale(m // oj).to_ring(ring))
            val = pairing_n(K, n, xi, xj)
            expect = form.gram[i][j]
            if (Fraction(-val, m) - expect) % 1 != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Wu and Stiefel-Whitney classes


def wu_classes(K: SimplicialComplex) -> list[CohomologyClass]:
    """v_0..v_dim with integrate(Sq^i x) = integrate(v_i . x) for all x in
    H^{dim-i}(;Z/2); unique because the mod-2 duality matrix is invertible
    (singularity raises, flagging non-manifold input)."""
    fd = fundamental_data(K, F2)
    d = K.dim
    out = []
    for i in range(d + 1):
        basis_i = cohomology(K, i, F2)
        basis_comp = cohomology(K, d - i, F2)
        if basis_i.rank == 0:
            out.append(basis_i.zero())
            continue
        rows = []
        rhs = []
        for x in basis_comp.classes():
            rows.append([
                fd.integrate(cup(e.cochain(), x.cochain()))
                for e in basis_i.classes()
            ])
            rhs.append(fd.integrate(sq(i, x)))
        sol = _solve_f2_system(rows, rhs)
        if sol is None:
            raise TopologyError(
                f"duality matrix singular in degree {i}: not a manifold?"
            )
        out.append(basis_i.class_from_coords(sol))
    return out


def _solve_f2_system(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """Solve (rows) x = rhs over F2; None if insoluble; unique solution
    expected (square invertible systems), otherwise least-support pick."""
    if not rows:
        return []
    n = len(rows[0])
    aug = []
    for row, b in zip(rows, rhs):
        aug.append(sum((row[t] & 1) << t for t in range(n)) | ((b & 1) << n))
    basis: list[int] = []
    for vec in aug:
        for bb in basis:
            if vec & (bb & -bb):
                vec ^= bb
        if vec:
            if vec == 1 << n:
                return None
            basis.append(vec)
    sol = [0] * n
    for bb in sorted(basis, key=lambda v: -((v & -v).bit_length())):
        low = (bb & -bb).bit_length() - 1
        if low >= n:
            return None
        acc = (bb >> n) & 1
        for t in range(low + 1, n):
            if bb >> t & 1:
                acc ^= sol[t]
        sol[low] = acc
    return sol


def stiefel_whitney_classes(K: SimplicialComplex,
                            wu: list[CohomologyClass] | None = None
                            ) -> list[CohomologyClass]:
    """Total class w = Sq(v) by graded components: w_k = sum Sq^i(v_{k-i})."""
    wu = wu or wu_classes(K)
    d = K.dim
    out = []
    for k in range(d + 1):
        acc = cohomology(K, k, F2).zero()
        vec = zero_cochain(K, k, F2)
        for i in range(0, k + 1):
            vj = wu[k - i]
            if vj.is_zero() or i > vj.degree:
                continue
            term = sq(i, vj)
            vec = vec + term.cochain()
        out.append(cohomology(K, k, F2).class_from_vector(vec))
    return out


@dataclass
class WuReport:
    complex: str
    wu: list[CohomologyClass]
    stiefel_whitney: list[CohomologyClass]
    middle_obstruction: CohomologyClass | None = None
    alternating: bool | None = None
    gram_diagonal: list[Fraction] | None = None
    cross_check: bool | None = None

    @property
    def wu_coords(self) -> list[list[int]]:
        return [list(v.coords) for v in self.wu]

    @property
    def sw_coords(self) -> list[list[int]]:
        return [list(w.coords) for w in self.stiefel_whitney]


def wu_report(K: SimplicialComplex) -> WuReport:
    wu = wu_classes(K)
    sw = stiefel_whitney_classes(K, wu)
    return WuReport(K.name, wu, sw)


def alternation_report(K: SimplicialComplex) -> WuReport:
    """Dimension-(4d+1) verdict: alternating iff the middle Wu class lifts
    integrally; cross-checked against the 2-primary linking form diagonal."""
    if K.dim % 4 != 1:
        raise TopologyError(f"alternation criterion needs dim 4d+1, got {K.dim}")
    o = orient(K)
    if not o.orientable:
        raise TopologyError("alternation criterion needs orientable input")
    rep = wu_report(K)
    mid = (K.dim - 1) // 2
    v_mid = rep.wu[mid]
    obstruction = integral_bockstein(v_mid)
    rep.middle_obstruction = obstruction
    rep.alternating = obstruction.is_zero()
    form = linking_form(K, mid).prime_part(2)
    rep.gram_diagonal = [form.gram[i][i] for i in range(len(form.orders))]
    diag_zero = all(x == 0 for x in rep.gram_diagonal)
    rep.cross_check = (rep.alternating == diag_zero)
    return rep


def bockstein_square_identity(K: SimplicialComplex) -> list[dict]:
    """On a (4d+1)-complex: u . beta(u) = Sq^{2d}(beta u) for every u in the
    middle mod-2 basis; both sides computed independently at chain level."""
    if K.dim % 4 != 1:
        raise TopologyError(f"identity needs dim 4d+1, got {K.dim}")
    mid = (K.dim - 1) // 2
    fd = fundamental_data(K, F2)
    top = cohomology(K, K.dim, F2)
    out = []
    for u in cohomology(K, mid, F2).classes():
        bu = bockstein(u)
        lhs = top.class_from_vector(cup(u.cochain(), bu.cochain()))
        rhs = sq(mid, bu)
        out.append({
            "coords": list(u.coords),
            "lhs": fd.integrate(lhs),
            "rhs": fd.integrate(rhs),
            "pass": lhs == rhs,
        })
    return out


# ---------------------------------------------------------------------------
# diagonal class and the pushforward identity


def dual_bases(K: SimplicialComplex) -> tuple[list[CohomologyClass], list[CohomologyClass]]:
    """All-degree mod-2 basis {e_i} and Poincare-dual basis {f_i} with
    integrate(e_i . f_j) = delta_ij (within complementary degrees)."""
    fd = fundamental_data(K, F2)
    d = K.dim
    es: list[CohomologyClass] = []
    fs: list[CohomologyClass] = []
    for k in range(d + 1):
        bk = cohomology(K, k, F2)
        bc = cohomology(K, d - k, F2)
        if bk.rank == 0:
            continue
        P = [
            [fd.integrate(cup(e.cochain(), f.cochain())) for f in bc.classes()]
            for e in bk.classes()
        ]
        # invert P over F2: dual of e_a is sum_b (P^{-1})[b][a] f_b
        n = bk.rank
        if bc.rank != n:
            raise TopologyError(f"mod-2 duality rank mismatch in degree {k}")
        inv = _invert_f2(P)
        if inv is None:
            raise TopologyError(f"mod-2 duality singular in degree {k}")
        for a, e in enumerate(bk.classes()):
            es.append(e)
            vec = zero_cochain(K, d - k, F2)
            for b, f in enumerate(bc.classes()):
                if inv[b][a]:
                    vec = vec + f.cochain()
            fs.append(bc.class_from_vector(vec))
    return es, fs


def _invert_f2(P: list[list[int]]) -> list[list[int]] | None:
    n = len(P)
    rows = [
        sum((P[i][j] & 1) << j for j in range(n)) | (1 << (n + i))
        for i in range(n)
    ]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r] >> col & 1:
                piv = r
                break
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(n):
            if r != col and rows[r] >> col & 1:
                rows[r] ^= rows[col]
    return [
        [rows[i] >> (n + j) & 1 for j in range(n)] for i in range(n)
    ]


@dataclass
class DiagonalData:
    square: SimplicialComplex
    pr1: list[int]
    pr2: list[int]
    diagonal: CohomologyClass
    basis: list[CohomologyClass]
    dual_basis: list[CohomologyClass]


def diagonal_class(K: SimplicialComplex, bound: int | None = 1_000_000) -> DiagonalData:
    """[Delta] = sum_i pr1*(e_i) . pr2*(f_i) in H^dim(K x K; Z/2)."""
    KK = product_complex(K, K, bound=bound, name=f"{K.name}^2")
    pr1, pr2 = product_projections(KK)
    es, fs = dual_bases(K)
    vec = zero_cochain(KK, K.dim, F2)
    for e, f in zip(es, fs):
        vec = vec + cup(pullback(e.cochain(), pr1, KK),
                        pullback(f.cochain(), pr2, KK))
    cls = cohomology(KK, K.dim, F2).class_from_vector(vec)
    return DiagonalData(KK, pr1, pr2, cls, es, fs)


def diagonal_restriction_euler(K: SimplicialComplex,
                               data: DiagonalData | None = None) -> int:
    """integrate of [Delta] pulled back to the diagonal = chi(K) mod 2."""
    data = data or diagonal_class(K)
    dmap = diagonal_vertex_map(K, data.square)
    restricted = pullback(data.diagonal.cochain(), dmap, K)
    fd = fundamental_data(K, F2)
    return fd.integrate(restricted)


def _kunneth_coords(data: DiagonalData, K: SimplicialComplex,
                    cls: CohomologyClass) -> dict[tuple[int, int], int]:
    """Coordinates of a class on K x K in the product basis
    {pr1* e_a . pr2* e_b}."""
    KK = data.square
    deg = cls.degree
    basis = cohomology(KK, deg, F2)
    cols = []
    labels = []
    for a, ea in enumerate(data.basis):
        for b, eb in enumerate(data.basis):
            if ea.degree + eb.degree != deg:
                continue
            prod = cup(pullback(ea.cochain(), data.pr1, KK),
                       pullback(eb.cochain(), data.pr2, KK))
            cols.append(basis.coordinates(prod))
            labels.append((a, b))
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(basis.rank)]
    sol = _solve_f2_system(rows, list(cls.coords))
    if sol is None:
        raise TopologyError("class escapes the product basis (Kunneth failure)")
    return {labels[c]: sol[c] for c in range(len(cols)) if sol[c]}


def pushforward_wu_check(K: SimplicialComplex, bound: int | None = 1_000_000) -> dict:
    """Verify pr1_*(Sq([Delta])) = Sq(v) degree by degree.

    pr1_* acts on the product basis by pr1_*(pr1* a . pr2* b) =
    a * integrate(b), which kills everything except top-degree right
    factors.  The left side needs Sq of the diagonal class on K x K; the
    right side is the total Stiefel-Whitney class computed intrinsically.
    """
    data = diagonal_class(K, bound=bound)
    fdK = fundamental_data(K, F2)
    d = K.dim
    sw = stiefel_whitney_classes(K)
    results = []
    for j in range(0, d + 1):
        sq_j = sq(j, data.diagonal)
        push = zero_cochain(K, j, F2)
        if not sq_j.is_zero():
            coords = _kunneth_coords(data, K, sq_j)
            for (a, b), bit in coords.items():
                if not bit:
                    continue
                eb = data.basis[b]
                if eb.degree != d:
                    continue
                factor = fdK.integrate(eb)
                if factor & 1:
                    ea = data.basis[a]
                    push = push + ea.cochain()
        lhs = cohomology(K, j, F2).class_from_vector(push)
        ok = lhs == sw[j]
        results.append({"degree": j, "pass": ok,
                        "pushforward": list(lhs.coords),
                        "sq_v": list(sw[j].coords)})
    return {"complex": K.name, "pass": all(r["pass"] for r in results),
            "degrees": results}
