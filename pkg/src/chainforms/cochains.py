"""Chain-level machinery: cochains, coboundary, cup and cup-i products.

Conventions, fixed once for the whole package:

* a k-cochain is a coefficient vector indexed by the sorted k-skeleton;
* (du)(t) = u(boundary t) with the alternating-sign face convention in the
  global vertex order;
* the cup product is the front-face/back-face product
  (u v)(v_0..v_{r+s}) = u(v_0..v_r) * v(v_r..v_{r+s}), which satisfies the
  Leibniz rule d(uv) = du v + (-1)^r u dv exactly over Z;
* cup_i is the overlapping-interval product: on a q-simplex (q = r+s-i) sum
  over breakpoints 0 <= a_1 < ... < a_{i+1} <= q; the closed intervals they
  cut alternate between the two factors (sharing endpoints), and the term
  sign is

      (-1) ** ( i*q  +  sum |I_t| * |I_{t'}| )

  with the sum over pairs t < t' of an even-position interval followed by an
  odd-position one (interval sizes counted in vertices).  With this sign the
  coboundary homotopy formula

      d(u cup_i v) - (-1)^i [du cup_i v + (-1)^r u cup_i dv]
          = (-1)^{i-1} u cup_{i-1} v - (-1)^{rs} v cup_{i-1} u

  holds entrywise over the integers; the test suite enforces it on random
  cochains, which pins the convention against drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random

from .complexes import SimplicialComplex
from .rings import Ring, Z


@dataclass(frozen=True)
class Cochain:
    complex: SimplicialComplex
    degree: int
    ring: Ring
    values: tuple[int, ...]

    def __post_init__(self):
        expected = self.complex.n_simplices(self.degree)
        if len(self.values) != expected:
            raise ValueError(
                f"degree-{self.degree} cochain needs {expected} values, "
                f"got {len(self.values)}"
            )

    def __call__(self, simplex: tuple) -> int:
        return self.values[self.complex.index_of(simplex)]

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        r = self.ring.reduce
        return Cochain(
            self.complex, self.degree, self.ring,
            tuple(r(a + b) for a, b in zip(self.values, other.values)),
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        _check_compatible(self, other)
        r = self.ring.reduce
        return Cochain(
            self.complex, self.degree, self.ring,
            tuple(r(a - b) for a, b in zip(self.values, other.values)),
        )

    def scale(self, c: int) -> "Cochain":
        r = self.ring.reduce
        return Cochain(
            self.complex, self.degree, self.ring,
            tuple(r(c * v) for v in self.values),
        )

    def is_zero(self) -> bool:
        return all(self.ring.reduce(v) == 0 for v in self.values)

    def to_ring(self, ring: Ring) -> "Cochain":
        """Reduce (or reinterpret canonical representatives) into `ring`."""
        return Cochain(
            self.complex, self.degree, ring,
            tuple(ring.reduce(v) for v in self.values),
        )

    def lift_integer(self) -> "Cochain":
        """Tautological integer lift of the canonical 0..m-1 representatives."""
        return Cochain(self.complex, self.degree, Z, tuple(self.values))


def _check_compatible(u: Cochain, v: Cochain) -> None:
    if u.complex is not v.complex:
        raise ValueError("cochains live on different complexes")
    if u.ring != v.ring:
        raise ValueError(f"coefficient mismatch: {u.ring} vs {v.ring}")


def zero_cochain(K: SimplicialComplex, k: int, ring: Ring = Z) -> Cochain:
    return Cochain(K, k, ring, (0,) * K.n_simplices(k))


def unit_cochain(K: SimplicialComplex, ring: Ring = Z) -> Cochain:
    """The constant-1 vertex cochain: a cocycle representing 1 in H^0."""
    return Cochain(K, 0, ring, (1,) * K.n_simplices(0))


def indicator_cochain(K: SimplicialComplex, simplex: tuple, ring: Ring = Z,
                      value: int = 1) -> Cochain:
    k = len(simplex) - 1
    vals = [0] * K.n_simplices(k)
    vals[K.index_of(tuple(simplex))] = ring.reduce(value)
    return Cochain(K, k, ring, tuple(vals))


def random_cochain(K: SimplicialComplex, k: int, ring: Ring, rng: Random,
                   span: int = 9) -> Cochain:
    if ring.is_integers:
        vals = tuple(rng.randint(-span, span) for _ in range(K.n_simplices(k)))
    else:
        vals = tuple(rng.randrange(ring.modulus) for _ in range(K.n_simplices(k)))
    return Cochain(K, k, ring, vals)


def coboundary(u: Cochain) -> Cochain:
    K, k = u.complex, u.degree
    if k >= K.dim:
        raise ValueError(f"no simplices in degree {k + 1} (dim {K.dim})")
    r = u.ring.reduce
    out = []
    for tau in K.simplices(k + 1):
        acc = 0
        for j in range(len(tau)):
            acc += (-1) ** j * u.values[K.index_of(tau[:j] + tau[j + 1:])]
        out.append(r(acc))
    return Cochain(K, k + 1, u.ring, tuple(out))


def is_cocycle(u: Cochain) -> bool:
    if u.degree >= u.complex.dim:
        return True
    return coboundary(u).is_zero()


def cup(u: Cochain, v: Cochain) -> Cochain:
    _check_compatible(u, v)
    K = u.complex
    r, s = u.degree, v.degree
    k = r + s
    red = u.ring.reduce
    out = []
    if k > K.dim:
        raise ValueError(f"cup degree {k} exceeds dim {K.dim}")
    for sigma in K.simplices(k):
        out.append(
            red(u.values[K.index_of(sigma[: r + 1])]
                * v.values[K.index_of(sigma[r:])])
        )
    return Cochain(K, k, u.ring, tuple(out))


def cup_i(u: Cochain, v: Cochain, i: int) -> Cochain:
    """Steenrod interval cup-i product; cup_0 coincides with cup."""
    _check_compatible(u, v)
    if i < 0:
        raise ValueError("cup-i needs i >= 0")
    if i == 0:
        return cup(u, v)
    K = u.complex
    r, s = u.degree, v.degree
    q = r + s - i
    if q < 0:
        raise ValueError(f"negative result degree {q}")
    if q > K.dim:
        raise ValueError(f"cup-{i} degree {q} exceeds dim {K.dim}")
    red = u.ring.reduce
    uvals, vvals = u.values, v.values
    uidx = K._index[r]
    vidx = K._index[s]
    out = []
    for sigma in K.simplices(q):
        acc = 0
        for bps in combinations(range(q + 1), i + 1):
            cuts = (0,) + bps + (q,)
            upart: list[int] = []
            vpart: list[int] = []
            sizes = []
            for t in range(i + 2):
                seg = range(cuts[t], cuts[t + 1] + 1)
                sizes.append(cuts[t + 1] - cuts[t] + 1)
                (upart if t % 2 == 0 else vpart).extend(seg)
            if len(upart) != r + 1 or len(vpart) != s + 1:
                continue
            if len(set(upart)) != r + 1 or len(set(vpart)) != s + 1:
                continue
            exp = i * q
            for t in range(i + 2):
                if t % 2 == 0:
                    continue
                st = sizes[t]
                for t2 in range(t + 1, i + 2):
                    if t2 % 2 == 0:
                        exp += st * sizes[t2]
            term = (uvals[uidx[tuple(sigma[t] for t in upart)]]
                    * vvals[vidx[tuple(sigma[t] for t in vpart)]])
            acc += term if exp % 2 == 0 else -term
        out.append(red(acc))
    return Cochain(K, q, u.ring, tuple(out))


def pullback(u: Cochain, vertex_map: list[int],
             source: SimplicialComplex) -> Cochain:
    """(f* u)(sigma) = u(f(sigma)); degenerate images contribute 0.

    `vertex_map` must be weakly monotone on every simplex of `source` (true
    for product projections and diagonal inclusions, which is all we use),
    so no reordering signs arise.
    """
    K = u.complex
    k = u.degree
    idx = K._index[k]
    out = []
    for sigma in source.simplices(k):
        image = tuple(vertex_map[v] for v in sigma)
        if any(image[t] > image[t + 1] for t in range(len(image) - 1)):
            raise ValueError("vertex map is not monotone on a simplex")
        if len(set(image)) != len(image):
            out.append(0)
            continue
        out.append(u.values[idx[image]])
    return Cochain(source, k, u.ring, tuple(out))


def integrate_against(signs: dict[tuple, int], u: Cochain) -> int:
    """Evaluate a top cochain against a signed facet chain."""
    acc = 0
    for facet, sgn in signs.items():
        acc += sgn * u.values[u.complex.index_of(facet)]
    return u.ring.reduce(acc)
