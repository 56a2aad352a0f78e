"""Exact linear algebra over Z, Z/m and F2.

Everything here is arbitrary-precision integer arithmetic; no floats appear
anywhere in the package.  Three families of routines:

* Smith normal form over Z, with or without unimodular transforms.  The
  transform-tracking variant keeps A, S, Sinv, T, Tinv in sparse form so that
  boundary matrices of mid-sized complexes (a few thousand rows) stay cheap:
  such matrices are riddled with +-1 pivots and reduce with little fill.
* A Howell-style normal form over Z/m, valid for composite m, used for
  kernels and linear solves of cochain maps with Z/2^n coefficients.  Over
  Z/m kernels and images are modules, not vector spaces, so plain Gaussian
  elimination is wrong; the Howell form restores a canonical span.
* Dense bit-packed matrices over F2 (rows as Python ints) for the large
  mod-2 computations on product complexes.

Matrices over Z are lists of lists of ints unless noted; "sparse" means
dict-of-rows {i: {j: value}}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with g = a*x + b*y, g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def modinv(a: int, m: int) -> int:
    g, x, _ = xgcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return x % m


def unit_multiplier(a: int, m: int) -> int:
    """A unit u mod m with u*a == gcd(a, m) (mod m).

    Standard trick for normalizing pivots over Z/m: a = g*a' with
    gcd(a', m/g) = 1; invert a' mod m/g and nudge by multiples of m/g
    until coprime to m (always possible, and m is tiny here).
    """
    a %= m
    if a == 0:
        return 1
    g = gcd(a, m)
    a1 = a // g
    m1 = m // g
    u = 1 if m1 == 1 else modinv(a1 % m1, m1)
    while gcd(u, m) != 1:
        u += m1
    return u % m


# ---------------------------------------------------------------------------
# sparse helpers


def to_sparse(rows: list[list[int]]) -> dict[int, dict[int, int]]:
    out: dict[int, dict[int, int]] = {}
    for i, row in enumerate(rows):
        r = {j: v for j, v in enumerate(row) if v}
        if r:
            out[i] = r
    return out


def sparse_to_dense(sp: dict[int, dict[int, int]], nrows: int, ncols: int) -> list[list[int]]:
    out = [[0] * ncols for _ in range(nrows)]
    for i, row in sp.items():
        for j, v in row.items():
            out[i][j] = v
    return out


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k = len(a), len(b[0]) if b else 0
    out = [[0] * k for _ in range(n)]
    for i, arow in enumerate(a):
        orow = out[i]
        for t, av in enumerate(arow):
            if av:
                brow = b[t]
                for j, bv in enumerate(brow):
                    if bv:
                        orow[j] += av * bv
    return out


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant; used only in tests on small matrices."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SmithForm:
    """S * A * T = D with S, T unimodular and D diagonal, d_i | d_{i+1}.

    Transforms are stored sparsely: `s_rows[i]` is row i of S, `t_cols[j]`
    column j of T, and similarly for the inverses.  `diag` lists the
    diagonal in divisibility order (1s first, then proper invariants, then
    zeros); rank = number of nonzero entries.
    """

    nrows: int
    ncols: int
    diag: list[int]
    s_rows: dict[int, dict[int, int]] | None = None
    sinv_cols: dict[int, dict[int, int]] | None = None
    t_cols: dict[int, dict[int, int]] | None = None
    tinv_rows: dict[int, dict[int, int]] | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)

    def invariant_factors(self) -> list[int]:
        return [d for d in self.diag if d not in (0, 1)]

    def s_apply(self, vec: list[int]) -> list[int]:
        out = [0] * self.nrows
        for i, row in self.s_rows.items():
            out[i] = sum(v * vec[j] for j, v in row.items())
        return out

    def t_apply(self, vec: list[int]) -> list[int]:
        out = [0] * self.ncols
        for j, col in self.t_cols.items():
            vj = vec[j]
            if vj:
                for i, v in col.items():
                    out[i] += v * vj
        return out

    def tinv_apply(self, vec: list[int]) -> list[int]:
        out = [0] * self.ncols
        for i, row in self.tinv_rows.items():
            out[i] = sum(v * vec[j] for j, v in row.items())
        return out

    def t_col(self, j: int) -> list[int]:
        out = [0] * self.ncols
        for i, v in self.t_cols.get(j, {}).items():
            out[i] = v
        return out

    def sinv_col(self, i: int) -> list[int]:
        out = [0] * self.nrows
        for k, v in self.sinv_cols.get(i, {}).items():
            out[k] = v
        return out

    def s_dense(self) -> list[list[int]]:
        return sparse_to_dense(self.s_rows, self.nrows, self.nrows)

    def t_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.ncols)]
        for j, col in self.t_cols.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def d_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for k, d in enumerate(self.diag):
            if k < self.nrows and k < self.ncols:
                out[k][k] = d
        return out


class _SmithWorker:
    """Elimination engine; entries stay exact integers throughout."""

    def __init__(self, sparse: dict[int, dict[int, int]], nrows: int, ncols: int,
                 transforms: bool):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in sparse.items()}
        self.col_index: dict[int, set[int]] = {}
        for i, row in self.rows.items():
            for j in row:
                self.col_index.setdefault(j, set()).add(i)
        self.transforms = transforms
        if transforms:
            self.s_rows = {i: {i: 1} for i in range(nrows)}
            self.sinv_cols = {i: {i: 1} for i in range(nrows)}
            self.t_cols = {j: {j: 1} for j in range(ncols)}
            self.tinv_rows = {j: {j: 1} for j in range(ncols)}

    # elementary operations; each mirrors onto the transforms so that
    # S*A*T stays equal to the original matrix image at every step

    def _set(self, i: int, j: int, v: int) -> None:
        row = self.rows.setdefault(i, {})
        if v:
            if j not in row:
                self.col_index.setdefault(j, set()).add(i)
            row[j] = v
        else:
            if j in row:
                del row[j]
                self.col_index[j].discard(i)

    def row_add(self, i: int, k: int, c: int) -> None:
        # R_i += c * R_k
        if not c:
            return
        for j, v in list(self.rows.get(k, {}).items()):
            self._set(i, j, self.rows.get(i, {}).get(j, 0) + c * v)
        if self.transforms:
            si = self.s_rows.setdefault(i, {})
            for j, v in self.s_rows.get(k, {}).items():
                nv = si.get(j, 0) + c * v
                if nv:
                    si[j] = nv
                elif j in si:
                    del si[j]
            ck = self.sinv_cols.setdefault(k, {})
            for t, v in self.sinv_cols.get(i, {}).items():
                nv = ck.get(t, 0) - c * v
                if nv:
                    ck[t] = nv
                elif t in ck:
                    del ck[t]

    def col_add(self, j: int, k: int, c: int) -> None:
        # C_j += c * C_k
        if not c:
            return
        for i in list(self.col_index.get(k, set())):
            v = self.rows[i].get(k, 0)
            if v:
                self._set(i, j, self.rows.get(i, {}).get(j, 0) + c * v)
        if self.transforms:
            tj = self.t_cols.setdefault(j, {})
            for i, v in self.t_cols.get(k, {}).items():
                nv = tj.get(i, 0) + c * v
                if nv:
                    tj[i] = nv
                elif i in tj:
                    del tj[i]
            rk = self.tinv_rows.setdefault(k, {})
            for t, v in self.tinv_rows.get(j, {}).items():
                nv = rk.get(t, 0) - c * v
                if nv:
                    rk[t] = nv
                elif t in rk:
                    del rk[t]

    def row_swap(self, i: int, k: int) -> None:
        if i == k:
            return
        ri, rk = self.rows.get(i, {}), self.rows.get(k, {})
        for j in set(ri) | set(rk):
            self.col_index.setdefault(j, set())
            if j in ri:
                self.col_index[j].add(k)
            else:
                self.col_index[j].discard(k)
            if j in rk:
                self.col_index[j].add(i)
            else:
                self.col_index[j].discard(i)
        self.rows[i], self.rows[k] = rk, ri
        if not self.rows[i]:
            del self.rows[i]
        if not self.rows[k]:
            del self.rows[k]
        if self.transforms:
            self.s_rows[i], self.s_rows[k] = self.s_rows.get(k, {}), self.s_rows.get(i, {})
            self.sinv_cols[i], self.sinv_cols[k] = self.sinv_cols.get(k, {}), self.sinv_cols.get(i, {})

    def col_swap(self, j: int, k: int) -> None:
        if j == k:
            return
        for i in self.col_index.get(j, set()) | self.col_index.get(k, set()):
            row = self.rows[i]
            vj, vk = row.get(j), row.get(k)
            if vj is None and vk is not None:
                row[j] = vk
                del row[k]
            elif vk is None and vj is not None:
                row[k] = vj
                del row[j]
            elif vj is not None and vk is not None:
                row[j], row[k] = vk, vj
        cj, ck = self.col_index.get(j, set()), self.col_index.get(k, set())
        self.col_index[j], self.col_index[k] = ck, cj
        if self.transforms:
            self.t_cols[j], self.t_cols[k] = self.t_cols.get(k, {}), self.t_cols.get(j, {})
            self.tinv_rows[j], self.tinv_rows[k] = self.tinv_rows.get(k, {}), self.tinv_rows.get(j, {})

    def row_negate(self, i: int) -> None:
        for j in list(self.rows.get(i, {})):
            self.rows[i][j] = -self.rows[i][j]
        if self.transforms:
            self.s_rows[i] = {j: -v for j, v in self.s_rows.get(i, {}).items()}
            self.sinv_cols[i] = {t: -v for t, v in self.sinv_cols.get(i, {}).items()}

    def _pick_pivot(self, start: int) -> tuple[int, int] | None:
        best = None
        best_key = None
        for i, row in self.rows.items():
            if i < start:
                continue
            nr = len(row)
            for j, v in row.items():
                if j < start:
                    continue
                a = abs(v)
                nc = sum(1 for t in self.col_index.get(j, ()) if t >= start)
                key = (a, (nr - 1) * (nc - 1), i, j)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (i, j)
            if best_key is not None and best_key[0] == 1 and best_key[1] == 0:
                break
        return best

    def diagonalize(self) -> list[int]:
        n = min(self.nrows, self.ncols)
        k = 0
        while k < n:
            piv = self._pick_pivot(k)
            if piv is None:
                break
            i, j = piv
            self.row_swap(k, i)
            self.col_swap(k, j)
            while True:
                a = self.rows.get(k, {}).get(k, 0)
                assert a != 0
                done = True
                for i in [t for t in self.col_index.get(k, set()) if t > k]:
                    v = self.rows[i].get(k, 0)
                    if v % a == 0:
                        self.row_add(i, k, -(v // a))
                    else:
                        g, x, y = xgcd(a, v)
                        # 2x2 unimodular transform bringing gcd into pivot
                        self._two_row_transform(k, i, x, y, -(v // g), a // g)
                        done = False
                        break
                if not done:
                    continue
                for j in [t for t in list(self.rows.get(k, {})) if t > k]:
                    v = self.rows[k].get(j, 0)
                    if v % a == 0:
                        self.col_add(j, k, -(v // a))
                    else:
                        g, x, y = xgcd(a, v)
                        self._two_col_transform(k, j, x, y, -(v // g), a // g)
                        done = False
                        break
                if done:
                    break
            if self.rows.get(k, {}).get(k, 0) < 0:
                self.row_negate(k)
            k += 1
        diag = [self.rows.get(t, {}).get(t, 0) for t in range(n)]
        return self._fix_divisibility(diag)

    def _two_row_transform(self, k: int, i: int, x: int, y: int, z: int, w: int) -> None:
        # (R_k, R_i) <- (x R_k + y R_i, z R_k + w R_i); det = xw - yz = 1
        rk = dict(self.rows.get(k, {}))
        ri = dict(self.rows.get(i, {}))
        for j in set(rk) | set(ri):
            a, b = rk.get(j, 0), ri.get(j, 0)
            self._set(k, j, x * a + y * b)
            self._set(i, j, z * a + w * b)
        if self.transforms:
            sk = self.s_rows.get(k, {})
            si = self.s_rows.get(i, {})
            new_k, new_i = {}, {}
            for j in set(sk) | set(si):
                a, b = sk.get(j, 0), si.get(j, 0)
                va, vb = x * a + y * b, z * a + w * b
                if va:
                    new_k[j] = va
                if vb:
                    new_i[j] = vb
            self.s_rows[k], self.s_rows[i] = new_k, new_i
            # inverse of [[x,y],[z,w]] is [[w,-y],[-z,x]]; columns of Sinv
            ck = self.sinv_cols.get(k, {})
            ci = self.sinv_cols.get(i, {})
            new_ck, new_ci = {}, {}
            for t in set(ck) | set(ci):
                a, b = ck.get(t, 0), ci.get(t, 0)
                va, vb = a * w - b * z, -a * y + b * x
                if va:
                    new_ck[t] = va
                if vb:
                    new_ci[t] = vb
            self.sinv_cols[k], self.sinv_cols[i] = new_ck, new_ci

    def _two_col_transform(self, k: int, j: int, x: int, y: int, z: int, w: int) -> None:
        # (C_k, C_j) <- (x C_k + y C_j, z C_k + w C_j)
        for i in self.col_index.get(k, set()) | self.col_index.get(j, set()):
            row = self.rows[i]
            a, b = row.get(k, 0), row.get(j, 0)
            self._set(i, k, x * a + y * b)
            self._set(i, j, z * a + w * b)
        if self.transforms:
            tk = self.t_cols.get(k, {})
            tj = self.t_cols.get(j, {})
            new_k, new_j = {}, {}
            for t in set(tk) | set(tj):
                a, b = tk.get(t, 0), tj.get(t, 0)
                va, vb = x * a + y * b, z * a + w * b
                if va:
                    new_k[t] = va
                if vb:
                    new_j[t] = vb
            self.t_cols[k], self.t_cols[j] = new_k, new_j
            rk = self.tinv_rows.get(k, {})
            rj = self.tinv_rows.get(j, {})
            new_rk, new_rj = {}, {}
            for t in set(rk) | set(rj):
                a, b = rk.get(t, 0), rj.get(t, 0)
                va, vb = a * w - b * z, -a * y + b * x
                if va:
                    new_rk[t] = va
                if vb:
                    new_rj[t] = vb
            self.tinv_rows[k], self.tinv_rows[j] = new_rk, new_rj

    def _fix_divisibility(self, diag: list[int]) -> list[int]:
        n = len(diag)
        changed = True
        while changed:
            changed = False
            for k in range(n - 1):
                a, b = diag[k], diag[k + 1]
                if a and b and b % a != 0:
                    # standard pair repair: bring gcd/lcm onto the diagonal
                    self.col_add(k, k + 1, 1)
                    g, x, y = xgcd(a, b)
                    self._two_row_transform(k, k + 1, x, y, -(b // g), a // g)
                    # now row k has pivot g plus fill at column k+1; clear it
                    v = self.rows.get(k, {}).get(k + 1, 0)
                    self.col_add(k + 1, k, -(v // g))
                    v2 = self.rows.get(k + 1, {}).get(k + 1, 0)
                    if v2 < 0:
                        self.row_negate(k + 1)
                    diag[k] = self.rows.get(k, {}).get(k, 0)
                    diag[k + 1] = self.rows.get(k + 1, {}).get(k + 1, 0)
                    changed = True
                elif a == 0 and b != 0:
                    self.row_swap(k, k + 1)
                    self.col_swap(k, k + 1)
                    diag[k], diag[k + 1] = b, 0
                    changed = True
        return diag


def smith_normal_form(a, nrows: int | None = None, ncols: int | None = None,
                      transforms: bool = True) -> SmithForm:
    """Smith normal form of an integer matrix (dense list-of-lists or sparse).

    Returns a SmithForm with S*A*T = D exactly.  Deterministic: pivot choice
    is by (1) least absolute value, (2) least fill estimate, (3) position.
    """
    if isinstance(a, dict):
        sp = a
        assert nrows is not None and ncols is not None
    else:
        sp = to_sparse(a)
        nrows = len(a)
        ncols = len(a[0]) if a else (ncols or 0)
    w = _SmithWorker(sp, nrows, ncols, transforms)
    diag = w.diagonalize()
    return SmithForm(
        nrows=nrows,
        ncols=ncols,
        diag=diag,
        s_rows=w.s_rows if transforms else None,
        sinv_cols=w.sinv_cols if transforms else None,
        t_cols=w.t_cols if transforms else None,
        tinv_rows=w.tinv_rows if transforms else None,
    )


def invariant_factors(a, nrows: int | None = None, ncols: int | None = None) -> list[int]:
    """Nontrivial invariant factors (diagonal entries > 1), no transforms.

    Two-phase: unit pivots are eliminated greedily with local (min row nnz,
    then min column nnz) selection, which keeps boundary-matrix reductions
    near-linear; whatever survives is handed to the dense Smith routine.
    Unit-pivot row/column elimination is a sequence of legal Smith steps, so
    the invariant factors of the core are exactly the nontrivial ones.
    """
    if isinstance(a, dict):
        rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in a.items()}
    else:
        rows = to_sparse(a)
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)

    import heapq
    heap = [(len(row), i) for i, row in rows.items()]
    heapq.heapify(heap)
    while heap:
        _, i = heapq.heappop(heap)
        row = rows.get(i)
        if row is None:
            continue
        units = [(len(cols[j]), j) for j, v in row.items() if v in (1, -1)]
        if not units:
            # no unit in this row now; the final sweep below revisits it
            continue
        _, j = min(units)
        piv = row[j]
        col_rows = [r for r in cols[j] if r != i]
        for r in col_rows:
            c = rows[r].pop(j, 0)
            cols[j].discard(r)
            if not c:
                continue
            factor = c * piv  # piv in {1,-1}: c/piv == c*piv
            rrow = rows[r]
            for jj, v in row.items():
                if jj == j:
                    continue
                nv = rrow.get(jj, 0) - factor * v
                if nv:
                    if jj not in rrow:
                        cols.setdefault(jj, set()).add(r)
                    rrow[jj] = nv
                else:
                    if jj in rrow:
                        del rrow[jj]
                        cols[jj].discard(r)
            if rrow:
                heapq.heappush(heap, (len(rrow), r))
            else:
                del rows[r]
        # remove the pivot row and column entirely (contributes a unit factor)
        for jj in row:
            cols.get(jj, set()).discard(i)
        del rows[i]
    # rows without units may remain: re-run until stable, since eliminations
    # above can create new units in previously skipped rows
    changed = True
    while changed:
        changed = False
        for i in sorted(rows):
            row = rows.get(i)
            if not row:
                rows.pop(i, None)
                continue
            units = [(len(cols[j]), j) for j, v in row.items() if v in (1, -1)]
            if not units:
                continue
            _, j = min(units)
            piv = row[j]
            for r in [r for r in cols[j] if r != i]:
                c = rows[r].pop(j, 0)
                cols[j].discard(r)
                if not c:
                    continue
                factor = c * piv
                rrow = rows[r]
                for jj, v in row.items():
                    if jj == j:
                        continue
                    nv = rrow.get(jj, 0) - factor * v
                    if nv:
                        if jj not in rrow:
                            cols.setdefault(jj, set()).add(r)
                        rrow[jj] = nv
                    else:
                        if jj in rrow:
                            del rrow[jj]
                            cols[jj].discard(r)
                if not rrow:
                    del rows[r]
            for jj in row:
                cols.get(jj, set()).discard(i)
            del rows[i]
            changed = True
    if not rows:
        return []
    # dense fallback on the surviving core
    live_rows = sorted(rows)
    live_cols = sorted({j for row in rows.values() for j in row})
    rmap = {i: t for t, i in enumerate(live_rows)}
    cmap = {j: t for t, j in enumerate(live_cols)}
    core: dict[int, dict[int, int]] = {}
    for i, row in rows.items():
        core[rmap[i]] = {cmap[j]: v for j, v in row.items()}
    return smith_normal_form(core, nrows=len(live_rows), ncols=len(live_cols),
                             transforms=False).invariant_factors()


def solve_integer(a: list[list[int]], b: list[int]) -> list[int] | None:
    """One integer solution x of A x = b, or None if insoluble over Z."""
    nrows, ncols = len(a), len(a[0]) if a else 0
    snf = smith_normal_form(a, transforms=True)
    sb = snf.s_apply(b)
    y = [0] * ncols
    for k in range(min(nrows, ncols)):
        d = snf.diag[k]
        if d:
            if sb[k] % d:
                return None
            y[k] = sb[k] // d
        elif sb[k]:
            return None
    for k in range(ncols, nrows):
        pass
    if any(sb[k] for k in range(min(nrows, ncols), nrows)):
        return None
    return snf.t_apply(y)


# ---------------------------------------------------------------------------
# Howell normal form over Z/m


def howell_form(rows: list[list[int]], m: int, transform: bool = False):
    """Howell form of the row span of `rows` over Z/m.

    Returns (H, U) where H is the list of nonzero Howell rows and, if
    requested, U tracks each H row as a combination of input rows
    (H = U * rows mod m).  The Howell property (the span contains every
    truncation of its members) is what makes membership tests and kernel
    extraction valid over a non-field Z/m.
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    work = [[v % m for v in r] for r in rows]
    nin = len(work)
    u = [[1 if i == j else 0 for j in range(nin)] for i in range(nin)] if transform else None

    def addmul(dst: int, src: int, c: int) -> None:
        wr, ws = work[dst], work[src]
        for j in range(ncols):
            wr[j] = (wr[j] + c * ws[j]) % m
        if transform:
            ur, us = u[dst], u[src]
            for j in range(nin):
                ur[j] = (ur[j] + c * us[j]) % m

    def scale(dst: int, c: int) -> None:
        work[dst] = [(c * v) % m for v in work[dst]]
        if transform:
            u[dst] = [(c * v) % m for v in u[dst]]

    pivots: list[tuple[int, int]] = []  # (row, col)
    r = 0
    extra: list[tuple[list[int], list[int] | None]] = []
    col = 0
    while col < ncols:
        # find/combine rows with a nonzero entry in this column
        cand = [i for i in range(r, len(work)) if work[i][col] % m]
        if cand:
            i0 = cand[0]
            for i in cand[1:]:
                a, b = work[i0][col], work[i][col]
                g, x, y = xgcd(a, b)
                # unimodular over Z/m: [[x, y], [-b/g, a/g]]
                ri0, ri = work[i0][:], work[i][:]
                for j in range(ncols):
                    work[i0][j] = (x * ri0[j] + y * ri[j]) % m
                    work[i][j] = ((-(b // g)) * ri0[j] + (a // g) * ri[j]) % m
                if transform:
                    ui0, ui = u[i0][:], u[i][:]
                    for j in range(nin):
                        u[i0][j] = (x * ui0[j] + y * ui[j]) % m
                        u[i][j] = ((-(b // g)) * ui0[j] + (a // g) * ui[j]) % m
            if work[i0][col] % m:
                work[r], work[i0] = work[i0], work[r]
                if transform:
                    u[r], u[i0] = u[i0], u[r]
                g = gcd(work[r][col], m)
                scale(r, unit_multiplier(work[r][col], m))
                assert work[r][col] == g
                # reduce entries above the pivot mod g
                for i in range(r):
                    q = work[i][col] // g
                    if q:
                        addmul(i, r, -q)
                # Howell closure: (m/g) * row has zero leading entry but its
                # tail must stay in the span; feed it back in
                if g != 1:
                    tail = [((m // g) * v) % m for v in work[r]]
                    if any(tail):
                        work.append(tail)
                        if transform:
                            u.append([((m // g) * v) % m for v in u[r]])
                pivots.append((r, col))
                r += 1
        col += 1
        # rows appended by the closure step may have entries in earlier
        # columns? no: their leading entries move strictly right, so a single
        # left-to-right sweep suffices
    h = [work[i] for i in range(r)]
    uu = [u[i] for i in range(r)] if transform else []
    # drop zero rows that may linger (all-zero after closure)
    out_h, out_u = [], []
    for i, row in enumerate(h):
        if any(v % m for v in row):
            out_h.append([v % m for v in row])
            if transform:
                out_u.append([v % m for v in uu[i]])
    return out_h, out_u


def mod_kernel(a: list[list[int]], m: int) -> list[list[int]]:
    """Generators of {x in (Z/m)^ncols : A x = 0 mod m}.

    Works on the transpose: rows [A^T | I]; Howell rows whose A^T-part
    vanishes have their I-part generate the kernel (Howell closure makes
    this complete over Z/m).
    """
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    if ncols == 0:
        return []
    aug = []
    for j in range(ncols):
        row = [a[i][j] % m for i in range(nrows)] + [0] * ncols
        row[nrows + j] = 1
        aug.append(row)
    h, _ = howell_form(aug, m)
    out = []
    for row in h:
        if all(v % m == 0 for v in row[:nrows]):
            vec = [v % m for v in row[nrows:]]
            if any(vec):
                out.append(vec)
    return out


def mod_solve(a: list[list[int]], b: list[int], m: int) -> list[int] | None:
    """One solution x of A x = b over Z/m, or None."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    if ncols == 0:
        return [] if all(v % m == 0 for v in b) else None
    aug = []
    for j in range(ncols):
        row = [a[i][j] % m for i in range(nrows)] + [0] * ncols
        row[nrows + j] = 1
        aug.append(row)
    h, _ = howell_form(aug, m)
    # reduce b against the Howell rows of the column span
    resid = [v % m for v in b]
    combo = [0] * ncols
    for row in h:
        lead = next((j for j in range(nrows) if row[j] % m), None)
        if lead is None:
            continue
        g = row[lead]
        if resid[lead] % g == 0:
            c = resid[lead] // g
        else:
            return None
        if c:
            for j in range(nrows):
                resid[j] = (resid[j] - c * row[j]) % m
            for j in range(ncols):
                combo[j] = (combo[j] + c * row[nrows + j]) % m
    if any(v % m for v in resid):
        return None
    return combo


# ---------------------------------------------------------------------------
# dense F2 matrices, rows packed into ints


class F2Matrix:
    """Rows as bitmasks; column j is bit (1 << j)."""

    def __init__(self, rows: list[int], ncols: int):
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def from_lists(cls, rows: list[list[int]]) -> "F2Matrix":
        ncols = len(rows[0]) if rows else 0
        packed = []
        for r in rows:
            x = 0
            for j, v in enumerate(r):
                if v & 1:
                    x |= 1 << j
            packed.append(x)
        return cls(packed, ncols)

    @classmethod
    def from_sparse_cols(cls, cols: dict[int, dict[int, int]], nrows: int, ncols: int) -> "F2Matrix":
        rows = [0] * nrows
        for j, col in cols.items():
            for i, v in col.items():
                if v & 1:
                    rows[i] |= 1 << j
        return cls(rows, ncols)

    def rref(self) -> tuple[list[int], list[int]]:
        """Returns (reduced rows, pivot column per row)."""
        rows = [r for r in self.rows if r]
        pivots: list[int] = []
        out: list[int] = []
        for r in rows:
            for piv, orow in zip(pivots, out):
                if r >> piv & 1:
                    r ^= orow
            if r:
                piv = (r & -r).bit_length() - 1
                for t in range(len(out)):
                    if out[t] >> piv & 1:
                        out[t] ^= r
                out.append(r)
                pivots.append(piv)
        order = sorted(range(len(out)), key=lambda t: pivots[t])
        return [out[t] for t in order], [pivots[t] for t in order]

    def rank(self) -> int:
        return len(self.rref()[0])


class F2Reducer:
    """Incremental F2 row space with reduction and membership tracking.

    add(vec) returns the residual after reduction (0 if dependent); when
    track=True every stored row carries its expression in the added vectors,
    enabling solves ("which combination produced this residual").
    """

    def __init__(self, track: bool = False):
        self.rows: list[int] = []
        self.pivs: list[int] = []
        self.combos: list[int] = []
        self.track = track
        self.count = 0

    def reduce(self, vec: int) -> tuple[int, int]:
        combo = 0
        for row, piv, cmb in zip(self.rows, self.pivs, self.combos if self.track else self.rows):
            if vec >> piv & 1:
                vec ^= row
                if self.track:
                    combo ^= cmb
        return vec, combo

    def add(self, vec: int) -> int:
        red, combo = self.reduce(vec)
        idx = self.count
        self.count += 1
        if red:
            self.rows.append(red)
            self.pivs.append((red & -red).bit_length() - 1)
            if self.track:
                self.combos.append(combo ^ (1 << idx))
        return red

    def contains(self, vec: int) -> bool:
        return self.reduce(vec)[0] == 0

    def solve(self, vec: int) -> int | None:
        """Combination bitmask of added vectors yielding vec, or None."""
        assert self.track
        red, combo = self.reduce(vec)
        return combo if red == 0 else None
