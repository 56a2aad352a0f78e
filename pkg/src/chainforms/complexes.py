"""Finite abstract simplicial complexes with a global vertex order.

A complex is stored as its full skeleton: for each dimension k, the sorted
list of k-simplices, each a strictly increasing tuple of vertex indices
0..vertex_count-1.  The global numeric order on vertices is what every
cochain-level formula in this package (front/back face products, interval
cup-i products, coboundaries) evaluates against, so it is fixed once at
construction and never revisited.

Complexes are immutable after construction; derived data (cohomology bases
etc.) is memoized on the instance by other modules, keyed by arguments, and
is an observable no-op.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations


class ComplexFormatError(ValueError):
    """Malformed complex document (bad token, repeated vertex, empty)."""


class TopologyError(ValueError):
    """Input lacks a topological precondition (closedness, orientation...)."""


class SizeBoundExceeded(RuntimeError):
    """A product construction exceeded the configured simplex budget."""


class SimplicialComplex:
    def __init__(self, facets, name: str = "", vertex_labels=None):
        facet_set = set()
        maxv = -1
        for f in facets:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise ComplexFormatError(f"repeated vertex in facet {f}")
            if not t:
                raise ComplexFormatError("empty facet")
            if t[0] < 0:
                raise ComplexFormatError(f"negative vertex id in {f}")
            facet_set.add(t)
            maxv = max(maxv, t[-1])
        if not facet_set:
            raise ComplexFormatError("complex has no facets")
        self.name = name
        self.vertex_count = maxv + 1
        self.facets = sorted(facet_set)
        self.dim = max(len(f) for f in self.facets) - 1
        self.vertex_labels = list(vertex_labels) if vertex_labels is not None else None
        skeleton: list[set] = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            k = len(f) - 1
            for j in range(1, len(f) + 1):
                for face in combinations(f, j):
                    skeleton[j - 1].add(face)
        self.skeleton: list[list[tuple]] = [sorted(s) for s in skeleton]
        self._index = [
            {s: i for i, s in enumerate(level)} for level in self.skeleton
        ]
        self._cache: dict = {}

    # -- basic queries ------------------------------------------------------

    def simplices(self, k: int) -> list[tuple]:
        if k < 0 or k > self.dim:
            return []
        return self.skeleton[k]

    def n_simplices(self, k: int) -> int:
        return len(self.simplices(k))

    def index_of(self, simplex: tuple) -> int:
        return self._index[len(simplex) - 1][simplex]

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.skeleton)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def __repr__(self):
        label = self.name or "complex"
        return f"<{label}: dim {self.dim}, f={self.f_vector}>"

    # -- serialization ------------------------------------------------------

    def emit(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name: {self.name}")
        for f in self.facets:
            lines.append(" ".join(str(v) for v in f))
        return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    """Parse the facet-list format.

    Lines starting with '#' are comments; an optional "name: <label>" line
    may precede the facets; every other nonempty line is one facet given as
    space-separated nonnegative integer vertex ids.  Vertex ids are
    normalized to 0..n-1 preserving numeric order.
    """
    name = ""
    raw_facets: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("name:"):
            if raw_facets:
                raise ComplexFormatError(f"line {lineno}: name after facets")
            name = stripped[len("name:"):].strip()
            continue
        toks = stripped.split()
        try:
            verts = [int(t) for t in toks]
        except ValueError as e:
            raise ComplexFormatError(f"line {lineno}: non-integer token ({e})")
        if any(v < 0 for v in verts):
            raise ComplexFormatError(f"line {lineno}: negative vertex id")
        if len(set(verts)) != len(verts):
            raise ComplexFormatError(f"line {lineno}: repeated vertex in facet")
        raw_facets.append(verts)
    if not raw_facets:
        raise ComplexFormatError("empty document: no facets found")
    used = sorted({v for f in raw_facets for v in f})
    remap = {v: i for i, v in enumerate(used)}
    return SimplicialComplex(
        [[remap[v] for v in f] for f in raw_facets], name=name
    )


# ---------------------------------------------------------------------------
# pseudomanifold structure and orientation


@dataclass
class PseudomanifoldReport:
    is_closed_pseudomanifold: bool
    pure: bool
    connected: bool
    bad_ridges: list[tuple] = field(default_factory=list)

    def __bool__(self):
        return self.is_closed_pseudomanifold


def closed_pseudomanifold_check(K: SimplicialComplex) -> PseudomanifoldReport:
    """True iff K is pure, every ridge lies in exactly two facets, and the
    facet adjacency graph is connected."""
    d = K.dim
    pure = all(len(f) == d + 1 for f in K.facets)
    if not pure:
        return PseudomanifoldReport(False, False, False, [])
    ridge_facets: dict[tuple, list[int]] = {}
    for fi, f in enumerate(K.facets):
        for ridge in combinations(f, d):
            ridge_facets.setdefault(ridge, []).append(fi)
    bad = sorted(r for r, fs in ridge_facets.items() if len(fs) != 2)
    # facet adjacency connectivity
    adj: dict[int, set[int]] = {i: set() for i in range(len(K.facets))}
    for fs in ridge_facets.values():
        if len(fs) == 2:
            a, b = fs
            adj[a].add(b)
            adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    connected = len(seen) == len(K.facets)
    ok = pure and not bad and connected
    return PseudomanifoldReport(ok, pure, connected, bad)


@dataclass
class Orientation:
    orientable: bool
    signs: dict[tuple, int] = field(default_factory=dict)


def orient(K: SimplicialComplex) -> Orientation:
    """Propagate facet signs across ridges; the signed facet sum must be an
    integral cycle.  Raises TopologyError if K is not a closed
    pseudomanifold."""
    report = closed_pseudomanifold_check(K)
    if not report:
        raise TopologyError("orient: not a closed pseudomanifold")
    d = K.dim
    ridge_facets: dict[tuple, list[tuple[int, int]]] = {}
    for fi, f in enumerate(K.facets):
        for drop in range(d + 1):
            ridge = f[:drop] + f[drop + 1:]
            ridge_facets.setdefault(ridge, []).append((fi, drop))
    signs = {0: 1}
    stack = [0]
    neighbors: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(len(K.facets))}
    for pairs in ridge_facets.values():
        (fa, da), (fb, db) = pairs
        neighbors[fa].append((fb, da, db))
        neighbors[fb].append((fa, db, da))
    while stack:
        fa = stack.pop()
        for fb, da, db in neighbors[fa]:
            # compatible orientations induce opposite signs on the shared ridge
            want = -signs[fa] * (-1) ** da * (-1) ** db
            if fb in signs:
                if signs[fb] != want:
                    return Orientation(False)
            else:
                signs[fb] = want
                stack.append(fb)
    # exact check: boundary of the signed fundamental chain is zero
    boundary: dict[tuple, int] = {}
    for fi, f in enumerate(K.facets):
        for drop in range(d + 1):
            ridge = f[:drop] + f[drop + 1:]
            boundary[ridge] = boundary.get(ridge, 0) + signs[fi] * (-1) ** drop
    assert all(v == 0 for v in boundary.values())
    return Orientation(True, {K.facets[i]: s for i, s in signs.items()})


# ---------------------------------------------------------------------------
# constructions


def simplex_complex(n: int, name: str = "") -> SimplicialComplex:
    return SimplicialComplex([list(range(n + 1))], name=name or f"delta{n}")


def sphere_complex(n: int, name: str = "") -> SimplicialComplex:
    """Boundary of the (n+1)-simplex: the minimal triangulated n-sphere."""
    verts = list(range(n + 2))
    return SimplicialComplex(
        list(combinations(verts, n + 1)), name=name or f"sphere{n}"
    )


def circle_complex(k: int = 3, name: str = "") -> SimplicialComplex:
    if k < 3:
        raise ValueError("a triangulated circle needs at least 3 vertices")
    return SimplicialComplex(
        [[i, (i + 1) % k] for i in range(k)], name=name or f"circle{k}"
    )


def point_complex() -> SimplicialComplex:
    return SimplicialComplex([[0]], name="point")


def suspension(K: SimplicialComplex, name: str = "") -> SimplicialComplex:
    """Join with two new cone points (placed after the original vertices)."""
    n = K.vertex_count
    facets = []
    for f in K.facets:
        facets.append(list(f) + [n])
        facets.append(list(f) + [n + 1])
    return SimplicialComplex(facets, name=name or f"susp({K.name})")


def product_complex(K: SimplicialComplex, L: SimplicialComplex,
                    bound: int | None = None,
                    name: str = "") -> SimplicialComplex:
    """Staircase (shuffle) triangulation of |K| x |L|.

    Vertices are pairs (a, b) ordered lexicographically with the K
    coordinate major; for each facet pair (sigma^p, tau^q) the C(p+q, p)
    monotone lattice paths through the (p+1) x (q+1) grid give the top
    simplices.  The result carries `vertex_labels` = the (a, b) pairs, so
    the two projections stay recoverable.
    """
    nL = L.vertex_count

    def vid(a: int, b: int) -> int:
        return a * nL + b

    facets: list[list[int]] = []
    total = 0
    for sig in K.facets:
        p = len(sig) - 1
        for tau in L.facets:
            q = len(tau) - 1
            # monotone paths from (0,0) to (p,q)
            paths = [[(0, 0)]]
            for _ in range(p + q):
                new = []
                for path in paths:
                    i, j = path[-1]
                    if i < p:
                        new.append(path + [(i + 1, j)])
                    if j < q:
                        new.append(path + [(i, j + 1)])
                paths = new
            for path in paths:
                facets.append([vid(sig[i], tau[j]) for i, j in path])
                total += 1
                if bound is not None and total > bound:
                    raise SizeBoundExceeded(
                        f"product exceeds {bound} top simplices"
                    )
    labels = [
        (a, b) for a in range(K.vertex_count) for b in range(nL)
    ]
    return SimplicialComplex(
        facets, name=name or f"{K.name}x{L.name}", vertex_labels=labels
    )


def product_projections(P: SimplicialComplex) -> tuple[list[int], list[int]]:
    """Vertex maps of the two projections of a product complex."""
    assert P.vertex_labels is not None
    return (
        [lab[0] for lab in P.vertex_labels],
        [lab[1] for lab in P.vertex_labels],
    )


def diagonal_vertex_map(K: SimplicialComplex, KK: SimplicialComplex) -> list[int]:
    """Vertex map of the diagonal inclusion K -> K x K."""
    lookup = {lab: i for i, lab in enumerate(KK.vertex_labels)}
    return [lookup[(a, a)] for a in range(K.vertex_count)]


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """First barycentric subdivision; vertex i is the i-th simplex of K in
    the (dimension, lexicographic) order, facets are the maximal flags."""
    order: list[tuple] = []
    for level in K.skeleton:
        order.extend(level)
    vid = {s: i for i, s in enumerate(order)}
    facets: list[list[int]] = []

    def extend(flag: list[tuple], top: tuple):
        if len(flag[-1]) == 1:
            facets.append([vid[s] for s in flag])
            return
        for drop in range(len(flag[-1])):
            sub = flag[-1][:drop] + flag[-1][drop + 1:]
            extend(flag + [sub], top)

    for f in K.facets:
        extend([f], f)
    return SimplicialComplex(facets, name=f"sd({K.name})", vertex_labels=order)


def cyclic_quotient(K: SimplicialComplex, perm: list[int], order: int,
                    name: str = "") -> SimplicialComplex:
    """Quotient of |K| by the free cyclic action generated by `perm`.

    Requires sigma and g^k(sigma) disjoint for every simplex sigma and every
    k != 0 mod `order`; under that condition the quotient of the first
    barycentric subdivision by the induced action is a simplicial complex
    homeomorphic to |K| / (Z/order), which is what gets returned.  The
    disjointness is checked on facets (faces inherit it) and the facet
    orbit count is verified after the fact.
    """
    perms = [list(range(K.vertex_count))]
    for _ in range(order - 1):
        perms.append([perm[v] for v in perms[-1]])
    if [perm[v] for v in perms[-1]] != perms[0]:
        raise ValueError("perm does not have the stated order")
    for f in K.facets:
        fs = set(f)
        for k in range(1, order):
            if fs & {perms[k][v] for v in f}:
                raise ValueError(
                    "action is not combinatorially free enough: "
                    f"facet {f} meets its translate"
                )
    sd = barycentric_subdivision(K)
    # orbit of an sd vertex = orbit of the underlying simplex of K
    orbit_id: dict[tuple, int] = {}
    n_orbits = 0
    orbit_of_vertex = [0] * sd.vertex_count
    for i, simplex in enumerate(sd.vertex_labels):
        if simplex in orbit_id:
            orbit_of_vertex[i] = orbit_id[simplex]
            continue
        rep = n_orbits
        n_orbits += 1
        for k in range(order):
            image = tuple(sorted(perms[k][v] for v in simplex))
            orbit_id[image] = rep
        orbit_of_vertex[i] = rep
    quotient_facets = {
        tuple(sorted(orbit_of_vertex[v] for v in f)) for f in sd.facets
    }
    if len(quotient_facets) * order != len(sd.facets):
        raise TopologyError("quotient is not simplicial: facet orbits collide")
    for f in quotient_facets:
        if len(f) != sd.dim + 1:
            raise TopologyError("quotient is not simplicial: facet collapsed")
    return SimplicialComplex(sorted(quotient_facets), name=name)


def mapping_torus(K: SimplicialComplex, perm: list[int],
                  name: str = "") -> SimplicialComplex:
    """Triangulated mapping torus of the simplicial automorphism `perm`.

    Three prism stages (levels 0-1, 1-2, and 2-0 twisted by the map) keep
    the stage simplices on disjoint level pairs, so no three-vertex wrap
    collisions can occur.  Vertex (v, t) has id 3*v + t.
    """
    if sorted(perm) != list(range(K.vertex_count)):
        raise ValueError("perm is not a permutation of the vertices")
    image_facets = {tuple(sorted(perm[v] for v in f)) for f in K.facets}
    if image_facets != set(K.facets):
        raise ValueError("perm is not an automorphism of the complex")

    def vid(v: int, t: int) -> int:
        return 3 * v + t

    facets: list[list[int]] = []
    stages = [(0, 1, None), (1, 2, None), (2, 0, perm)]
    for f in K.facets:
        d = len(f) - 1
        for t, t2, psi in stages:
            for j in range(d + 1):
                top = [vid(v, t) for v in f[: j + 1]]
                if psi is None:
                    bot = [vid(v, t2) for v in f[j:]]
                else:
                    bot = [vid(psi[v], t2) for v in f[j:]]
                facets.append(top + bot)
    labels = [(v, t) for v in range(K.vertex_count) for t in range(3)]
    return SimplicialComplex(
        facets, name=name or f"torus({K.name})", vertex_labels=labels
    )


def vertex_link(K: SimplicialComplex, v: int) -> SimplicialComplex | None:
    """Link of a vertex, or None if it is empty."""
    facets = [tuple(w for w in f if w != v) for f in K.facets if v in f]
    facets = [f for f in facets if f]
    if not facets:
        return None
    used = sorted({w for f in facets for w in f})
    remap = {w: i for i, w in enumerate(used)}
    return SimplicialComplex(
        [[remap[w] for w in f] for f in facets], name=f"link({K.name},{v})"
    )
