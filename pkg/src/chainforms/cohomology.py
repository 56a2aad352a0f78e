"""Cohomology groups with exact torsion data and canonical coordinates.

For each degree k the coboundary d^k is a sparse integer matrix; its Smith
form (with transforms, computed once and cached on the complex) powers
everything at that degree:

* over Z:  ker d^k is spanned by the T-columns hitting zero diagonal
  entries; quotienting by the coordinates of im d^{k-1} in that basis (a
  second, small Smith form) yields free rank, the divisibility chain of
  torsion invariants, generator cocycles and a coordinate map.
* over Z/m:  the lattice V = {x : d^k x = 0 (mod m)} has integer basis
  {(m/gcd(d_j, m)) T_j}; dividing by im d^{k-1} + m Z^{n_k}, presented in
  that basis, is again a finite-abelian-group computation done by a Smith
  form over Z.  This stays valid for composite m (Z/4, Z/8, ...), where
  field elimination would be wrong.
* over Z/2 there is a fast path: kernels, images and coordinates via
  bit-packed Gaussian elimination, which is what makes mod-2 work on
  product complexes with thousands of simplices cheap.

Coordinates list torsion generators first (in divisibility order) and free
generators last; torsion coordinates are reduced mod their order.  All
choices are deterministic, so bases are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .intlinalg import F2Reducer, SmithForm, smith_normal_form
from .rings import Ring, Z
from .cochains import Cochain


# ---------------------------------------------------------------------------
# coboundary matrices


def coboundary_entries(K: SimplicialComplex, k: int) -> dict[int, dict[int, int]]:
    """Sparse rows of d: C^k -> C^{k+1} over Z (rows: (k+1)-simplices)."""
    key = ("cob", k)
    if key in K._cache:
        return K._cache[key]
    rows: dict[int, dict[int, int]] = {}
    idx = K._index[k]
    for i, tau in enumerate(K.simplices(k + 1)):
        row = {}
        for j in range(len(tau)):
            face = tau[:j] + tau[j + 1:]
            row[idx[face]] = (-1) ** j
        rows[i] = row
    K._cache[key] = rows
    return rows


def coboundary_matrix(K: SimplicialComplex, k: int, ring: Ring) -> list[list[int]]:
    """Dense matrix of d: C^k -> C^{k+1}, entries reduced in `ring`."""
    if k < 0 or k >= K.dim:
        raise ValueError(f"coboundary degree {k} out of range 0..{K.dim - 1}")
    nrows = K.n_simplices(k + 1)
    ncols = K.n_simplices(k)
    out = [[0] * ncols for _ in range(nrows)]
    for i, row in coboundary_entries(K, k).items():
        for j, v in row.items():
            out[i][j] = ring.reduce(v)
    return out


def coboundary_snf(K: SimplicialComplex, k: int) -> SmithForm:
    """Smith form (with transforms) of d^k; d^dim is the zero map."""
    key = ("cob_snf", k)
    if key in K._cache:
        return K._cache[key]
    ncols = K.n_simplices(k)
    if k >= K.dim:
        snf = smith_normal_form({}, nrows=0, ncols=ncols, transforms=True)
    else:
        snf = smith_normal_form(
            coboundary_entries(K, k), nrows=K.n_simplices(k + 1), ncols=ncols,
            transforms=True,
        )
    K._cache[key] = snf
    return snf


def _diag(snf: SmithForm, j: int) -> int:
    return snf.diag[j] if j < len(snf.diag) else 0


# ---------------------------------------------------------------------------
# classes and bases


@dataclass(frozen=True)
class CohomologyClass:
    complex: SimplicialComplex
    degree: int
    ring: Ring
    vector: tuple[int, ...]
    coords: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CohomologyClass)
            and self.complex is other.complex
            and self.degree == other.degree
            and self.ring == other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.complex), self.degree, self.ring, self.coords))

    def cochain(self) -> Cochain:
        return Cochain(self.complex, self.degree, self.ring, self.vector)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        basis = cohomology(self.complex, self.degree, self.ring)
        red = self.ring.reduce
        return basis.class_from_vector(
            tuple(red(a + b) for a, b in zip(self.vector, other.vector))
        )


class CohomologyBasis:
    """Group structure of H^k plus representatives and a coordinate map.

    orders[i] is 0 for a free generator (over Z) and the exact annihilator
    otherwise; over Z/m a generator of full order m plays the free role.
    """

    def __init__(self, complex: SimplicialComplex, degree: int, ring: Ring,
                 orders: list[int], representatives: list[tuple[int, ...]],
                 coord_fn):
        self.complex = complex
        self.degree = degree
        self.ring = ring
        self.orders = orders
        self.representatives = representatives
        self._coord_fn = coord_fn

    @property
    def free_rank(self) -> int:
        if self.ring.is_integers:
            return sum(1 for d in self.orders if d == 0)
        return sum(1 for d in self.orders if d == self.ring.modulus)

    @property
    def torsion_invariants(self) -> list[int]:
        if self.ring.is_integers:
            return [d for d in self.orders if d > 1]
        return [d for d in self.orders if 1 < d < self.ring.modulus]

    @property
    def rank(self) -> int:
        return len(self.orders)

    def coordinates(self, vector) -> tuple[int, ...]:
        if isinstance(vector, Cochain):
            vector = vector.values
        return self._coord_fn(list(vector))

    def class_from_vector(self, vector) -> CohomologyClass:
        if isinstance(vector, Cochain):
            vector = vector.values
        vector = tuple(self.ring.reduce(v) for v in vector)
        return CohomologyClass(
            self.complex, self.degree, self.ring, vector,
            self.coordinates(vector),
        )

    def class_from_coords(self, coords) -> CohomologyClass:
        n = self.complex.n_simplices(self.degree)
        vec = [0] * n
        for c, rep in zip(coords, self.representatives):
            if c:
                for t in range(n):
                    vec[t] += c * rep[t]
        return self.class_from_vector(tuple(self.ring.reduce(v) for v in vec))

    def classes(self) -> list[CohomologyClass]:
        return [
            CohomologyClass(
                self.complex, self.degree, self.ring, rep,
                tuple(1 if t == i else 0 for t in range(self.rank)),
            )
            for i, rep in enumerate(self.representatives)
        ]

    def zero(self) -> CohomologyClass:
        n = self.complex.n_simplices(self.degree)
        return CohomologyClass(
            self.complex, self.degree, self.ring, (0,) * n,
            (0,) * self.rank,
        )

    def summary(self) -> dict:
        return {
            "degree": self.degree,
            "ring": str(self.ring),
            "free_rank": self.free_rank,
            "torsion_invariants": self.torsion_invariants,
        }


# ---------------------------------------------------------------------------
# constructions per ring


def _kernel_cols(snf: SmithForm) -> list[int]:
    return [j for j in range(snf.ncols) if _diag(snf, j) == 0]


def _integer_basis(K: SimplicialComplex, k: int) -> CohomologyBasis:
    snf = coboundary_snf(K, k)
    kcols = _kernel_cols(snf)
    r = len(kcols)
    pos = {j: t for t, j in enumerate(kcols)}
    n = K.n_simplices(k)
    # relations: coordinates of im d^{k-1} in the kernel basis
    rel_cols: list[list[int]] = []
    if k > 0:
        prev = coboundary_entries(K, k - 1)
        nprev = K.n_simplices(k - 1)
        cols: dict[int, dict[int, int]] = {}
        for i, row in prev.items():
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        for j in range(nprev):
            col = [0] * n
            for i, v in cols.get(j, {}).items():
                col[i] = v
            y = snf.tinv_apply(col)
            assert all(
                y[t] == 0 for t in range(n) if t not in pos
            ), "image column escapes the kernel lattice"
            rel_cols.append([y[j2] for j2 in kcols])
    rel = {
        i: {j: rel_cols[j][i] for j in range(len(rel_cols)) if rel_cols[j][i]}
        for i in range(r)
    }
    rel = {i: row for i, row in rel.items() if row}
    qsnf = smith_normal_form(rel, nrows=r, ncols=len(rel_cols), transforms=True)
    orders: list[int] = []
    gens: list[tuple[int, ...]] = []
    keep: list[int] = []
    for i in range(r):
        d = _diag(qsnf, i)
        if d == 1:
            continue
        keep.append(i)
        orders.append(d)
        coeff = qsnf.sinv_col(i)
        vec = [0] * n
        for t, c in enumerate(coeff):
            if c:
                col = snf.t_col(kcols[t])
                for idx in range(n):
                    vec[idx] += c * col[idx]
        gens.append(tuple(vec))
    # sort: torsion (in divisibility order, which smith already gives) then free
    order_sort = sorted(range(len(keep)), key=lambda t: (orders[t] == 0, t))
    orders = [orders[t] for t in order_sort]
    gens = [gens[t] for t in order_sort]
    keep = [keep[t] for t in order_sort]

    def coord_fn(vec: list[int]) -> tuple[int, ...]:
        y = snf.tinv_apply(vec)
        if any(y[t] != 0 for t in range(n) if t not in pos):
            raise ValueError("vector is not a cocycle over Z")
        u = [y[j] for j in kcols]
        full = qsnf.s_apply(u)
        out = []
        for t, i in enumerate(keep):
            d = orders[t]
            out.append(full[i] % d if d else full[i])
        return tuple(out)

    return CohomologyBasis(K, k, Z, orders, gens, coord_fn)


def _mod2_basis(K: SimplicialComplex, k: int) -> CohomologyBasis:
    n = K.n_simplices(k)
    ring = Ring(2)
    # kernel of d^k over F2 via incremental column reduction: when a column
    # is dependent on the previously added independent ones, the tracked
    # combination (plus the column itself) is a kernel vector
    kernel: list[int] = []
    if k < K.dim:
        cols: dict[int, int] = {}
        for i, row in coboundary_entries(K, k).items():
            for j, v in row.items():
                if v & 1:
                    cols[j] = cols.get(j, 0) | (1 << i)
        red = F2Reducer(track=True)
        added: list[int] = []
        for j in range(n):
            vec = cols.get(j, 0)
            residual, combo = red.reduce(vec)
            if residual == 0:
                mask = 1 << j
                for bit_pos, col_j in enumerate(added):
                    if combo >> bit_pos & 1:
                        mask |= 1 << col_j
                kernel.append(mask)
            else:
                red.add(vec)
                added.append(j)
    else:
        kernel = [1 << j for j in range(n)]
    # image of d^{k-1} over F2
    img = F2Reducer()
    if k > 0:
        prev = coboundary_entries(K, k - 1)
        nprev = K.n_simplices(k - 1)
        pcols: dict[int, int] = {}
        for i, row in prev.items():
            for j, v in row.items():
                if v & 1:
                    pcols[j] = pcols.get(j, 0) | (1 << i)
        for j in range(nprev):
            img.add(pcols.get(j, 0))
    # quotient: reduce kernel vectors by the image, keep independent ones
    reps_red = F2Reducer(track=True)
    reps: list[int] = []
    for vec in kernel:
        v1, _ = img.reduce(vec)
        v2, _ = reps_red.reduce(v1)
        if v2:
            reps_red.add(v1)
            reps.append(v1)
    rank = len(reps)

    def coord_fn(vec: list[int]) -> tuple[int, ...]:
        mask = 0
        for j, v in enumerate(vec):
            if v & 1:
                mask |= 1 << j
        v1, _ = img.reduce(mask)
        v2, combo = reps_red.reduce(v1)
        if v2:
            raise ValueError("vector is not a mod-2 cocycle")
        return tuple((combo >> t) & 1 for t in range(rank))

    gens = [
        tuple((rep >> j) & 1 for j in range(n)) for rep in reps
    ]
    return CohomologyBasis(K, k, ring, [2] * rank, gens, coord_fn)


def _modm_basis(K: SimplicialComplex, k: int, ring: Ring) -> CohomologyBasis:
    m = ring.modulus
    snf = coboundary_snf(K, k)
    n = K.n_simplices(k)
    from math import gcd
    scale = [m // gcd(_diag(snf, j), m) for j in range(n)]
    # lattice basis of {x : d^k x = 0 mod m} is {scale_j * T_j}
    # relations in that basis: im d^{k-1} and m * Z^n
    rel_cols: list[dict[int, int]] = []
    if k > 0:
        prev = coboundary_entries(K, k - 1)
        nprev = K.n_simplices(k - 1)
        cols: dict[int, dict[int, int]] = {}
        for i, row in prev.items():
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        for j in range(nprev):
            col = [0] * n
            for i, v in cols.get(j, {}).items():
                col[i] = v
            y = snf.tinv_apply(col)
            entry = {}
            for t in range(n):
                if y[t]:
                    assert y[t] % scale[t] == 0
                    entry[t] = y[t] // scale[t]
            rel_cols.append(entry)
    # m * e_t in the scaled basis: entries m * Tinv[j][t] / scale_j
    tinv_cols: dict[int, dict[int, int]] = {}
    for j2, row in snf.tinv_rows.items():
        for t, v in row.items():
            tinv_cols.setdefault(t, {})[j2] = v
    for t in range(n):
        entry = {}
        for j2, v in tinv_cols.get(t, {}).items():
            val = m * v
            assert val % scale[j2] == 0
            entry[j2] = val // scale[j2]
        rel_cols.append(entry)
    rel = {}
    for cidx, entry in enumerate(rel_cols):
        for rowi, v in entry.items():
            rel.setdefault(rowi, {})[cidx] = v
    qsnf = smith_normal_form(rel, nrows=n, ncols=len(rel_cols), transforms=True)
    orders: list[int] = []
    gens: list[tuple[int, ...]] = []
    keep: list[int] = []
    for i in range(n):
        d = _diag(qsnf, i)
        assert d != 0, "mod-m cohomology must be finite"
        if d == 1:
            continue
        keep.append(i)
        orders.append(d)
        coeff = qsnf.sinv_col(i)
        vec = [0] * n
        for t, c in enumerate(coeff):
            if c:
                col = snf.t_col(t)
                cs = c * scale[t]
                for idx in range(n):
                    vec[idx] += cs * col[idx]
        gens.append(tuple(ring.reduce(v) for v in vec))

    def coord_fn(vec: list[int]) -> tuple[int, ...]:
        y = snf.tinv_apply(vec)
        u = []
        for t in range(n):
            if y[t] % scale[t]:
                raise ValueError("vector is not a cocycle mod m")
            u.append(y[t] // scale[t])
        full = qsnf.s_apply(u)
        return tuple(full[i] % orders[t] for t, i in enumerate(keep))

    return CohomologyBasis(K, k, ring, orders, gens, coord_fn)


def cohomology(K: SimplicialComplex, k: int, ring: Ring) -> CohomologyBasis:
    if k < 0 or k > K.dim:
        raise ValueError(f"degree {k} out of range 0..{K.dim}")
    key = ("H", k, ring)
    if key in K._cache:
        return K._cache[key]
    if ring.is_integers:
        basis = _integer_basis(K, k)
    elif ring.modulus == 2:
        basis = _mod2_basis(K, k)
    else:
        basis = _modm_basis(K, k, ring)
    K._cache[key] = basis
    return basis


def torsion_generators(K: SimplicialComplex, k: int) -> list[tuple[CohomologyClass, int]]:
    basis = cohomology(K, k, Z)
    out = []
    for cls, order in zip(basis.classes(), basis.orders):
        if order > 1:
            out.append((cls, order))
    return out


# ---------------------------------------------------------------------------
# solvers against coboundary maps


def solve_coboundary(K: SimplicialComplex, k: int, target: Cochain):
    """Find a k-cochain c with d c = target (over target.ring), or None."""
    ring = target.ring
    snf = coboundary_snf(K, k)
    b = list(target.values)
    sb = snf.s_apply(b)
    n = K.n_simplices(k)
    nrows = snf.nrows
    y = [0] * n
    if ring.is_integers:
        for j in range(nrows):
            d = _diag(snf, j)
            if j < n and d:
                if sb[j] % d:
                    return None
                y[j] = sb[j] // d
            elif sb[j]:
                return None
    else:
        m = ring.modulus
        from math import gcd
        for j in range(nrows):
            d = _diag(snf, j) if j < n else 0
            rhs = sb[j] % m
            if d == 0:
                if rhs:
                    return None
                continue
            g = gcd(d, m)
            if rhs % g:
                return None
            from .intlinalg import modinv
            mm = m // g
            if mm == 1:
                y[j] = 0
            else:
                y[j] = ((rhs // g) * modinv((d // g) % mm, mm)) % mm
    x = snf.t_apply(y)
    return Cochain(K, k, ring, tuple(ring.reduce(v) for v in x))
