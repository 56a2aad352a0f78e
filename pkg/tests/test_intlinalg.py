"""Exactness checks for the integer / Z/m / F2 linear algebra kernel."""

from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from chainforms.intlinalg import (
    F2Matrix,
    F2Reducer,
    bareiss_det,
    howell_form,
    identity,
    invariant_factors,
    mat_mul,
    mod_kernel,
    mod_solve,
    smith_normal_form,
    solve_integer,
    unit_multiplier,
    xgcd,
)

small_entries = st.integers(min_value=-9, max_value=9)


def matrices(max_dim=5):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda n: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda m: st.lists(
                st.lists(small_entries, min_size=m, max_size=m),
                min_size=n,
                max_size=n,
            )
        )
    )


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g == abs(gcd(a, b))
    assert a * x + b * y == g


@given(st.integers(0, 40), st.integers(2, 24))
def test_unit_multiplier(a, m):
    u = unit_multiplier(a, m)
    assert gcd(u, m) == 1
    assert (u * a) % m == gcd(a % m, m) % m


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_postconditions(a):
    snf = smith_normal_form(a)
    s, t, d = snf.s_dense(), snf.t_dense(), snf.d_dense()
    assert mat_mul(mat_mul(s, a), t) == d
    assert abs(bareiss_det(s)) == 1
    assert abs(bareiss_det(t)) == 1
    diag = snf.diag
    for i in range(len(diag) - 1):
        if diag[i] and diag[i + 1]:
            assert diag[i + 1] % diag[i] == 0
        if diag[i] == 0:
            assert diag[i + 1] == 0
    assert all(x >= 0 for x in diag)


def test_smith_examples():
    assert smith_normal_form([[1, 0], [0, 1]]).diag == [1, 1]
    assert smith_normal_form([[2, 0], [0, 3]]).diag == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]).diag == [0, 0]
    snf = smith_normal_form([[0, 0], [0, 0]])
    assert snf.s_dense() == identity(2)
    assert snf.t_dense() == identity(2)
    assert invariant_factors([[2, 0], [0, 3]]) == [6]


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_solve_integer_roundtrip(a, data):
    ncols = len(a[0])
    x = data.draw(st.lists(small_entries, min_size=ncols, max_size=ncols))
    b = [sum(a[i][j] * x[j] for j in range(ncols)) for i in range(len(a))]
    sol = solve_integer(a, b)
    assert sol is not None
    assert [sum(a[i][j] * sol[j] for j in range(ncols)) for i in range(len(a))] == b


def test_solve_integer_insoluble():
    assert solve_integer([[2]], [1]) is None
    assert solve_integer([[2, 0], [0, 0]], [2, 1]) is None


# ---------------------------------------------------------------------------
# Howell form over Z/m, validated against brute-force span enumeration


def span_mod(rows, m, ncols=3):
    """Brute-force row span of <= 3 rows over (Z/m)^ncols."""
    if not rows:
        return {(0,) * ncols}
    ncols = len(rows[0])
    out = set()
    coeffs = [[]]
    for _ in rows:
        coeffs = [c + [v] for c in coeffs for v in range(m)]
    for c in coeffs:
        vec = tuple(
            sum(c[i] * rows[i][j] for i in range(len(rows))) % m for j in range(ncols)
        )
        out.add(vec)
    return out


@settings(max_examples=80, deadline=None)
@given(
    st.integers(2, 9),
    st.lists(
        st.lists(st.integers(0, 8), min_size=3, max_size=3), min_size=1, max_size=3
    ),
)
def test_howell_span_preserved(m, rows):
    h, u = howell_form(rows, m, transform=True)
    assert span_mod(h, m) == span_mod(rows, m)
    for hrow, urow in zip(h, u):
        for j in range(3):
            assert (
                sum(urow[i] * rows[i][j] for i in range(len(rows))) % m
                == hrow[j] % m
            )


@settings(max_examples=80, deadline=None)
@given(
    st.integers(2, 8),
    st.lists(
        st.lists(st.integers(0, 7), min_size=2, max_size=2), min_size=1, max_size=3
    ),
)
def test_mod_kernel_complete(m, a):
    ncols = 2
    gens = mod_kernel(a, m)
    for g in gens:
        assert all(
            sum(a[i][j] * g[j] for j in range(ncols)) % m == 0 for i in range(len(a))
        )
    # brute force kernel must equal the span of the generators
    true_kernel = set()
    for x0 in range(m):
        for x1 in range(m):
            if all((a[i][0] * x0 + a[i][1] * x1) % m == 0 for i in range(len(a))):
                true_kernel.add((x0, x1))
    assert span_mod(gens, m, ncols=2) == true_kernel


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8), matrices(max_dim=3), st.data())
def test_mod_solve(m, a, data):
    ncols = len(a[0])
    x = data.draw(st.lists(st.integers(0, 7), min_size=ncols, max_size=ncols))
    b = [sum(a[i][j] * x[j] for j in range(ncols)) % m for i in range(len(a))]
    sol = mod_solve(a, b, m)
    assert sol is not None
    assert all(
        sum(a[i][j] * sol[j] for j in range(ncols)) % m == b[i] for i in range(len(a))
    )


def test_mod_solve_insoluble():
    assert mod_solve([[2]], [1], 4) is None


# ---------------------------------------------------------------------------
# F2 bit matrices


def test_f2_rank():
    m = F2Matrix.from_lists([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
    assert m.rank() == 2


def test_f2_reducer_solve():
    red = F2Reducer(track=True)
    v0 = 0b101
    v1 = 0b011
    red.add(v0)
    red.add(v1)
    combo = red.solve(0b110)
    assert combo == 0b11  # v0 ^ v1
    assert red.solve(0b111) is None
    assert red.contains(0b101)
