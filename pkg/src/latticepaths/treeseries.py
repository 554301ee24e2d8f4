"""Closed forms and generating functions for the tree families.

Same ground rules as the path-series module: exact arithmetic only, and
every formula is reachable by at least two independent routes so the tests
can confront them with each other and with exhaustive generation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List

from .combinat import binomial, motzkin_numbers, trinomial
from .series import (AlgebraicSubstitution, MarkerPoly, PowerSeries,
                     poly_substitution)


# ----------------------------------------------------------------------
# Unary-binary trees with a flat colors, graded by register number
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _v_of_z_b(b: int, order: int) -> PowerSeries:
    """Inverse of z = v/(1 + b v + v^2)."""
    return poly_substitution("z", "v", [1, b, 1], order).invert(order)


def _eval_b(expr: PowerSeries, b: int, order: int) -> PowerSeries:
    return expr.truncate(order).compose(_v_of_z_b(b, order))


def _geom_block(p: int, shift_down: bool, order: int) -> PowerSeries:
    """(1 - u^2) u^(2^p - 1) / (1 - u^(2^(p+1) if shift_down else 2^p))
    as a u-series; the two Horton layer shapes."""
    period = 2 ** (p + 1) if shift_down else 2 ** p
    base = 2 ** p - 1
    coeffs = [0] * (order + 1)
    e = base
    while e <= order:
        coeffs[e] += 1
        e += period
    geo = PowerSeries("u", coeffs, order)
    return PowerSeries("u", [1, 0, -1]).pad(order) * geo


def horton_Rp(p: int, a: int, order: int) -> PowerSeries:
    """Trees whose register number is exactly p, as a z-series:
    ((1-u^2)/u) u^(2^p)/(1 - u^(2^(p+1))) under z = u/(1+(a+2)u+u^2)."""
    if p < 0:
        raise ValueError("register rank must be >= 0")
    return _eval_b(_geom_block(p, True, order), a + 2, order)


def horton_Sp(p: int, a: int, order: int) -> PowerSeries:
    """Trees with register number >= p (so S_0 counts everything):
    ((1-u^2)/u) u^(2^p)/(1 - u^(2^p))."""
    if p < 0:
        raise ValueError("register rank must be >= 0")
    return _eval_b(_geom_block(p, False, order), a + 2, order)


def unary_binary_count(n: int, a: int) -> int:
    """Number of unary-binary trees with n nodes and a flat colors, by
    trinomial extraction of [z^n](1 + u)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    b = a + 2

    def T(k: int) -> int:
        return trinomial(n - 1, b, k)

    return T(n) + T(n - 1) - T(n - 2) - T(n - 3)


def _u_power_coeff(n: int, j: int, b: int) -> int:
    """[z^n] u^j under z = u/(1+bu+u^2), for n >= 1, j >= 1."""
    return trinomial(n - 1, b, n - j) - trinomial(n - 1, b, n - j - 2)


def horton_avg_reg(n: int, a: int) -> Fraction:
    """Exact average register number over all n-node trees."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = a + 2
    total = 0
    for m in range(2, n + 2, 2):
        v2 = (m & -m).bit_length() - 1
        diff = _u_power_coeff(n, m - 1, b)
        if m + 1 <= n:
            diff -= _u_power_coeff(n, m + 1, b)
        total += v2 * diff
    return Fraction(total, unary_binary_count(n, a))


def node_count_series(a: int, order: int) -> PowerSeries:
    """N(z) = 1 + u: the tree count with its closed square-root form
    (1 - az - sqrt(1 - 2(a+2)z + a(a+4)z^2))/(2z) checked in the tests."""
    return _eval_b(PowerSeries("u", [1, 1]).pad(order), a + 2, order)


# ----------------------------------------------------------------------
# Marked ordered trees (mark on a last edge with internal child)
# ----------------------------------------------------------------------

def marked_count_series(order: int) -> PowerSeries:
    """A(z) = (1 - z - sqrt(1 - 6z + 5z^2))/2 = z + z^2 + 3z^3 + 10z^4 + ..."""
    W = PowerSeries("z", [1, -6, 5]).pad(order).sqrt()
    return (PowerSeries("z", [1, -1]).pad(order) - W) * Fraction(1, 2)


def marked_leaf_series(order: int) -> PowerSeries:
    """Bivariate count of marked trees by nodes (z) and leaves (marker u):
    -z + zu/2 + 1/2 - (1/2) sqrt(1 - 4z + 4z^2 - 2zu + z^2 u^2)."""
    u = MarkerPoly.var("u")
    inner = PowerSeries("z", [1, -4 - 2 * u, 4 + u * u]).pad(order)
    lead = PowerSeries("z", [Fraction(1, 2), u * Fraction(1, 2) - 1]).pad(order)
    return lead - inner.sqrt() * Fraction(1, 2)


def marked_leaf_total(n: int) -> int:
    """Total leaves over all marked trees on n nodes: [z^n] z/(1-v) under
    z = v/(1+3v+v^2), extracted as a pair of trinomials."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    m = n - 1
    return trinomial(m - 1, 3, m) + trinomial(m - 1, 3, m - 1)


def marked_count(n: int) -> int:
    """Number of marked trees on n nodes (shares the unary-binary extractor
    since A(z) = z N(z) for one flat color)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return unary_binary_count(n - 1, 1)


def _pair_pows(h: int, order: int):
    one2 = PowerSeries("v", [1, 2]).pad(order) ** (h - 1)
    two1 = PowerSeries("v", [2, 1]).pad(order) ** (h - 1)
    return one2, two1


def marked_height_ph(h: int, order: int) -> PowerSeries:
    """Marked trees of height (in nodes) at most h:
    p_h = z(1+v) [(1+2v)^(h-1) - v^h (v+2)^(h-1)]
               / [(1+2v)^(h-1) - v^(h+1) (v+2)^(h-1)]."""
    if h < 1:
        raise ValueError("height bound must be >= 1")
    one2, two1 = _pair_pows(h, order)
    vh = PowerSeries("v", [0] * h + [1]).pad(order)
    num = one2 - vh * two1
    den = one2 - vh.shift(1).truncate(order) * two1
    v = PowerSeries.identity("v", order)
    expr = v * PowerSeries("v", [1, 1]).pad(order) * num / (
        PowerSeries("v", [1, 3, 1]).pad(order) * den)
    return _eval_b(expr, 3, order)


def marked_height_tail(h: int, order: int) -> PowerSeries:
    """Marked trees of height exceeding h:
    z(1 - v^2)(v+2)^(h-1) v^h / [(1+2v)^(h-1) - v^(h+1)(v+2)^(h-1)]."""
    if h < 1:
        raise ValueError("height bound must be >= 1")
    one2, two1 = _pair_pows(h, order)
    vh = PowerSeries("v", [0] * h + [1]).pad(order)
    den = one2 - vh.shift(1).truncate(order) * two1
    v = PowerSeries.identity("v", order)
    expr = v * PowerSeries("v", [1, 0, -1]).pad(order) * two1 * vh / (
        PowerSeries("v", [1, 3, 1]).pad(order) * den)
    return _eval_b(expr, 3, order)


def marked_height_total(n: int) -> int:
    """Total height (in nodes) over all marked trees on n nodes, by the
    layer recursion p_{h+1} = -z + (2z - z^2)/(1 - p_h) run with integer
    coefficient lists."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a_n = marked_count(n)

    def inv_unit(c: List[int]) -> List[int]:
        # reciprocal of a series with constant term 1, integer-exact
        out = [1] + [0] * n
        for i in range(1, n + 1):
            out[i] = -sum(c[k] * out[i - k] for k in range(1, i + 1) if k <= len(c) - 1)
        return out

    ph = [0, 1] + [0] * (n - 1)  # p_1 = z
    total = a_n  # every nonempty tree has height >= 1
    for _ in range(1, n):
        total += a_n - ph[n]
        # next layer
        one_minus = [1] + [-x for x in ph[1:]]
        inv = inv_unit(one_minus)
        nxt = [0] * (n + 1)
        for i in range(n + 1):
            acc = 0
            if i >= 1:
                acc += 2 * inv[i - 1]
            if i >= 2:
                acc -= inv[i - 2]
            nxt[i] = acc
        nxt[0] = 0
        nxt[1] += -1  # the -z term
        ph = nxt
    return total


# ----------------------------------------------------------------------
# Ternary trees by nodes and middle edges
# ----------------------------------------------------------------------

def ternary_T(n: int, k: int) -> int:
    """Ternary trees with n internal nodes and k middle edges:
    (1/n) C(n,k) C(2n, n-1-k)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    num = binomial(n, k) * binomial(2 * n, n - 1 - k)
    assert num % n == 0
    return num // n


def ternary_row(n: int) -> List[int]:
    if n == 0:
        return [1]
    return [ternary_T(n, k) for k in range(n)]


def ternary_row_sum(n: int) -> int:
    """All ternary trees with n internal nodes: (1/n) C(3n, n-1)."""
    if n == 0:
        return 1
    num = binomial(3 * n, n - 1)
    assert num % n == 0
    return num // n


def ternary_t_power(n: int, k: int, l: int) -> int:
    """[x^n u^k] t^l for the kernel root t = x(1-t+ut)/(1-t)^2:
    (l/n) C(n,k) C(2n-l-1, n-l-k)."""
    if l < 1 or n < 1:
        raise ValueError("need n, l >= 1")
    num = l * binomial(n, k) * binomial(2 * n - l - 1, n - l - k)
    assert num % n == 0
    return num // n


@lru_cache(maxsize=None)
def _t_of_x(order: int) -> PowerSeries:
    """Invert t = x (1 - t + u t)/(1 - t)^2 with marker u."""
    u = MarkerPoly.var("u")
    geom2 = PowerSeries("t", [i + 1 for i in range(order + 1)], order)
    phi = PowerSeries("t", [1, u - 1]).pad(order) * geom2
    return AlgebraicSubstitution("x", "t", phi).invert(order)


def ternary_root_series(which: str, order: int) -> PowerSeries:
    """Kernel roots of the ternary cubic u x G^3 + (1-u) x G^2 - G + 1 = 0.

    "r1" returns 1/(1-t) as an x-series (markers u).  "r2" and "r3" have
    Puiseux expansions, so their reciprocals are returned instead, as
    series in tau = t/u with markers U (u = 1 + U) and s (s^2 = ux):
    1/r_{2,3} = t/2 -+ s * Xi(tau).
    """
    if which == "r1":
        geom = PowerSeries("t", [1] * (order + 1), order)
        return geom.compose(_t_of_x(order))
    if which not in ("r2", "r3"):
        raise ValueError(f"unknown root {which!r}")
    U = MarkerPoly.var("U")
    s = MarkerPoly.var("s")
    xi = ternary_xi(order)
    half_t = PowerSeries("tau", [0, (1 + U) * Fraction(1, 2)]).pad(order)
    sign = -1 if which == "r2" else 1
    return half_t + sign * xi * PowerSeries.const("tau", s, order)


def ternary_xi(order: int) -> PowerSeries:
    """Xi(tau) = sqrt(C)/(1 - (1+U)tau) with
    C = 1 - (3+4U)/4 tau + U(1+U)/4 tau^2, so that 1/r_{2,3} = t/2 -+ s Xi."""
    U = MarkerPoly.var("U")
    C = PowerSeries("tau", [1, -(3 + 4 * U) * Fraction(1, 4),
                            U * (1 + U) * Fraction(1, 4)]).pad(order)
    den = PowerSeries("tau", [1, -(1 + U)]).pad(order)
    return C.sqrt() / den


def ternary_factorization_check(order: int) -> bool:
    """Verify the Vieta identities tying the three kernel roots together.

    Checks, exactly: the polynomial identities behind r2 + r3 and r2 r3,
    the discriminant factorization, r1 + r2 + r3 = (u-1)/u, and the series
    identity (1/r2)(1/r3) = -ux/r1 i.e. r1 u x r2 r3 = -1, to the given
    order in tau.  Returns True when everything holds.
    """
    t = MarkerPoly.var("t")
    u = MarkerPoly.var("u")
    A = -t + t * t - t * t * u
    B = t * (1 - t + u * t) * (4 * u + t - 4 * u * t - t * t + t * t * u)
    if A != -t * (1 - t + u * t):
        return False
    if A * A - B != -4 * u * t * (1 - t) * (1 - t + u * t):
        return False
    # r1 + r2 + r3 = (u-1)/u  <=>  u - (1 - t + ut) = (u - 1)(1 - t)
    if u - (1 - t + u * t) != (u - 1) * (1 - t):
        return False
    # series side: (1/r2)(1/r3) with s^2 -> ux equals -ux * r1 in tau
    U = MarkerPoly.var("U")
    uu = 1 + U
    r2i = ternary_root_series("r2", order)
    r3i = ternary_root_series("r3", order)
    prod = r2i * r3i
    # split off s^2 and substitute s^2 = ux = (1+U)^2 tau (1-(1+U)tau)^2 / (1+U(1+U)tau)
    tau = PowerSeries.identity("tau", order)
    one_minus = PowerSeries("tau", [1, -uu]).pad(order)
    denom = PowerSeries("tau", [1, U * uu]).pad(order)
    ux = tau * (uu * uu) * one_minus * one_minus / denom
    s0 = prod.map_coeffs(lambda c: c.marker_coeff("s", 0))
    s2 = prod.map_coeffs(lambda c: c.marker_coeff("s", 2))
    lhs = s0 + s2 * ux
    # r1 = 1/(1-t) with t = (1+U)tau
    r1 = PowerSeries("tau", [uu ** i for i in range(order + 1)], order)
    rhs = -(ux * r1)
    if lhs != rhs:
        return False
    # the factorization r1 = Xi^2 - t^2/(4ux), via the exact polynomial
    # identity C - tau(1 + U(1+U)tau)/4 = 1 - (1+U)tau
    xi = ternary_xi(order)
    tt_over = (tau * Fraction(1, 4)) * denom / (one_minus * one_minus)
    if xi * xi - tt_over != r1:
        return False
    return True


# ----------------------------------------------------------------------
# Trees with peaks only low or even (unit rises, height-restricted dips)
# ----------------------------------------------------------------------

def retakh_Gk(k: int, order: int) -> PowerSeries:
    """k-th convergent of the path continued fraction:
    G_k = (v/(1+v)) (1 - v^(2k))/(1 - v^(2k+1)) under z = v/(1+v+v^2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = PowerSeries.identity("v", order) * _one_minus_pow(2 * k, order)
    den = PowerSeries("v", [1, 1]).pad(order) * _one_minus_pow(2 * k + 1, order)
    return _eval_motz(num / den, order)


def _one_minus_pow(e: int, order: int) -> PowerSeries:
    return PowerSeries("v", [1] + [0] * (e - 1) + [-1], e).pad(order) if e <= order \
        else PowerSeries("v", [1], 0).pad(order)


@lru_cache(maxsize=None)
def _v_of_z(order: int) -> PowerSeries:
    return poly_substitution("z", "v", [1, 1, 1], order).invert(order)


def _eval_motz(expr: PowerSeries, order: int) -> PowerSeries:
    return expr.truncate(order).compose(_v_of_z(order))


def retakh_full(order: int) -> PowerSeries:
    """All such trees by edge pairs: z M(z) with M the Motzkin series."""
    m = motzkin_numbers(max(order - 1, 0))
    return PowerSeries("z", [0] + m[:order], order)


def retakh_leaf_series(order: int) -> PowerSeries:
    """Total leaves by nodes: v(1+v)(1 - v + 2v^2 - v^3)/((1-v)(1+v+v^2))."""
    num = (PowerSeries("v", [0, 1, 1]).pad(order)
           * PowerSeries("v", [1, -1, 2, -1]).pad(order))
    den = PowerSeries("v", [1, -1]).pad(order) * PowerSeries("v", [1, 1, 1]).pad(order)
    return _eval_motz(num / den, order)


_RETAKH_LEAF_W = [1, 1, 1, 2, 0, -1]


def retakh_leaf_total(n: int) -> int:
    """[z^n] of :func:`retakh_leaf_series` by trinomial extraction."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    return sum(c * trinomial(n - 2, 1, n - 1 - i)
               for i, c in enumerate(_RETAKH_LEAF_W) if c)


def retakh_bounded_count(n: int, h: int) -> int:
    """Trees on n nodes with height (in edges) at most h; heights beyond 1
    only matter in even amounts, so odd bounds reuse the even ones."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if h < 0:
        raise ValueError("h must be >= 0")
    if h == 0:
        return 1 if n == 1 else 0
    if h == 1:
        return 1  # the path-shaped comb: z/(1-z)
    k = h // 2  # heights 2k and 2k+1 agree for k >= 1
    # [z^n] v(1 - v^(2k+2))/(1 - v^(2k+4)) via [z^n]v^a pairs
    total = 0
    period = 2 * k + 4
    a = 1
    while a <= n:
        total += _motz_v_coeff(n, a)
        if a + 2 * k + 2 <= n:
            total -= _motz_v_coeff(n, a + 2 * k + 2)
        a += period
    return total


def _motz_v_coeff(n: int, a: int) -> int:
    """[z^n] v^a under z = v/(1+v+v^2)."""
    if a == 0:
        return 1 if n == 0 else 0
    return trinomial(n - 1, 1, n - a) - trinomial(n - 1, 1, n - a - 2)


def retakh_height_total(n: int) -> int:
    """Total path height over all trees on n nodes (tree height in edges
    equals the height of the corresponding path)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m_total = retakh_bounded_count(n, 2 * n)  # all of them
    total = 0
    h = 0
    while True:
        c = retakh_bounded_count(n, h)
        if c >= m_total:
            break
        total += m_total - c
        h += 1
    return total
