"""Closed-form and single-parameter formulas for the four path families.

Every formula is transcribed in its printed shape. Rational prefactors are
evaluated with :class:`~fractions.Fraction` and converted with
:func:`~latticepaths.core.ratio_to_int`, so a formula that does not reduce to
an integer raises :class:`~latticepaths.core.NonIntegralError` instead of being
silently rounded.
"""
from __future__ import annotations

from fractions import Fraction

from .core import DomainError, binomial, multinomial, ratio_to_int

CATALAN_METHODS = ("closed", "sum_s6", "split_s5", "halfbinom_s66", "recur_s66")
DELANNOY_METHODS = ("multinomial_r6", "binomsum_r66", "twopow_r666")
SCHRODER_TRI_METHODS = ("diff_h11", "diff_h2", "diff_h3", "weighted_h4")
SCHRODER_NUMBER_METHODS = (
    "gf1",
    "gf2_as_printed",
    "conv_s311",
    "threeterm_as_printed_s32",
    "threeterm_shifted",
)


def _nonneg(**kw: int) -> None:
    for name, v in kw.items():
        if v < 0:
            raise DomainError(f"{name} must be >= 0, got {v}")


def _check_method(method: str, allowed: tuple[str, ...]) -> None:
    if method not in allowed:
        raise DomainError(f"unknown method {method!r}; expected one of {allowed}")


def b_closed(k: int, r: int) -> int:
    _nonneg(k=k, r=r)
    return binomial(k + r, r)


def c_closed(p: int, q: int) -> int:
    """C(p, q) = (p - q + 1) / (p + 1) * binom(p + q, q)."""
    _nonneg(p=p, q=q)
    if q > p:
        raise DomainError(f"need q <= p, got p={p}, q={q}")
    return ratio_to_int(Fraction(p - q + 1, p + 1) * binomial(p + q, q))


def c_reflect(p: int, q: int) -> int:
    """Total paths minus the reflected bad ones: b(p, q) - b(p + 1, q - 1)."""
    _nonneg(p=p)
    if not 1 <= q <= p:
        raise DomainError(f"need 1 <= q <= p, got p={p}, q={q}")
    return b_closed(p, q) - b_closed(p + 1, q - 1)


def catalan_number(n: int, method: str = "closed") -> int:
    _check_method(method, CATALAN_METHODS)
    _nonneg(n=n)
    if method == "closed":
        return ratio_to_int(Fraction(1, n + 1) * binomial(2 * n, n))
    if n == 0:
        raise DomainError(f"method {method!r} needs n >= 1")
    if method == "sum_s6":
        total = sum(Fraction(n - k, n) * binomial(n + k - 1, k) for k in range(n))
        return ratio_to_int(total)
    if method == "split_s5":
        total = Fraction(1, n) * binomial(2 * n - 2, n - 1) + Fraction(
            3, n + 1
        ) * binomial(2 * n - 2, n - 2)
        return ratio_to_int(total)
    if method == "halfbinom_s66":
        return ratio_to_int(Fraction(2, n + 1) * binomial(2 * n - 1, n - 1))
    # recur_s66: C_m = 2(2m - 1)/(m + 1) * C_{m-1}, C_0 = 1
    c = Fraction(1)
    for m in range(1, n + 1):
        c = Fraction(2 * (2 * m - 1), m + 1) * c
    return ratio_to_int(c)


def _g_multinomial(p: int, q: int) -> int:
    return sum(
        multinomial(p + q - r, [p - r, q - r, r]) for r in range(min(p, q) + 1)
    )


def _g_binomsum(p: int, q: int) -> int:
    return sum(binomial(p, a) * binomial(q + a, p) for a in range(p + 1))


def _g_twopow(p: int, q: int) -> int:
    return sum(
        binomial(p, a) * binomial(q, a) * (1 << a) for a in range(min(p, q) + 1)
    )


_G = {
    "multinomial_r6": _g_multinomial,
    "binomsum_r66": _g_binomsum,
    "twopow_r666": _g_twopow,
}


def g_closed(p: int, q: int, method: str = "twopow_r666") -> int:
    """Delannoy number g(p, q) by one of three sum formulas."""
    _check_method(method, DELANNOY_METHODS)
    _nonneg(p=p, q=q)
    return _G[method](p, q)


def _h11(p: int, q: int) -> int:
    # upper limits transcribed literally; out-of-range terms vanish
    first = sum(
        multinomial(p + q - r, [p - r, q - r, r]) for r in range(min(p, q) + 1)
    )
    second = sum(
        multinomial(p + q - r, [p + 1 - r, q - 1 - r, r])
        for r in range(min(p + 1, q - 1) + 1)
    )
    return first - second


def _h2(p: int, q: int) -> int:
    first = sum(binomial(p, r) * binomial(q + r, p) for r in range(p + 1))
    second = sum(
        binomial(p + 1, r) * binomial(q - 1 + r, p + 1) for r in range(p + 2)
    )
    return first - second


def _h3(p: int, q: int) -> int:
    first = sum(
        binomial(p, r) * binomial(q, r) * (1 << r) for r in range(min(p, q) + 1)
    )
    second = sum(
        binomial(p + 1, r) * binomial(q - 1, r) * (1 << r)
        for r in range(min(p + 1, q - 1) + 1)
    )
    return first - second


def _h4(p: int, q: int) -> int:
    total = sum(
        Fraction(p - q + 1, p - r + 1) * multinomial(p + q - r, [p - r, q - r, r])
        for r in range(q + 1)
    )
    return ratio_to_int(total)


_R = {"diff_h11": _h11, "diff_h2": _h2, "diff_h3": _h3, "weighted_h4": _h4}


def r_closed(p: int, q: int, method: str = "weighted_h4") -> int:
    """Subdiagonal HVD count R(p, q) for 0 <= q <= p.

    The three ``diff_*`` methods evaluate g(p, q) - g(p + 1, q - 1) with the
    respective Delannoy sum and need q >= 1; ``weighted_h4`` also accepts q = 0.
    """
    _check_method(method, SCHRODER_TRI_METHODS)
    _nonneg(p=p, q=q)
    if q > p:
        raise DomainError(f"need q <= p, got p={p}, q={q}")
    if q == 0 and method != "weighted_h4":
        raise DomainError(f"method {method!r} needs q >= 1")
    return _R[method](p, q)


def _schroder_gf1(n: int) -> int:
    total = sum(
        Fraction(1, n - r + 1) * multinomial(2 * n - r, [n - r, n - r, r])
        for r in range(n + 1)
    )
    return ratio_to_int(total)


def _schroder_gf2(n: int) -> int:
    total = Fraction(1 << n) + sum(
        Fraction(r * (1 << r), n - r + 1) * binomial(n, r) * binomial(n - 1, r)
        for r in range(n)
    )
    return ratio_to_int(total)


def _schroder_conv(n: int) -> int:
    s = [1]
    for m in range(1, n + 1):
        s.append(s[m - 1] + sum(s[k] * s[m - 1 - k] for k in range(m)))
    return s[n]


def _schroder_threeterm(n: int, shifted: bool) -> int:
    s = [Fraction(1), Fraction(2)]
    for m in range(2, n + 1):
        if shifted:
            # (j + 2) S_{j+1} = 3(2j + 1) S_j - (j - 1) S_{j-1} with j = m - 1
            j = m - 1
            s.append((3 * (2 * j + 1) * s[j] - (j - 1) * s[j - 1]) / (j + 2))
        else:
            # (j + 2) S_{j+2} = 3(2j + 1) S_{j+1} - (j - 1) S_j with j = m - 2
            j = m - 2
            s.append((3 * (2 * j + 1) * s[j + 1] - (j - 1) * s[j]) / (j + 2))
        ratio_to_int(s[m])
    return ratio_to_int(s[n])


def schroder_number(n: int, method: str = "gf1") -> int:
    """Large Schröder number S_n.

    ``gf2_as_printed`` and ``threeterm_as_printed_s32`` return the literal
    value of the printed formula, which does not match S_n for every n; the
    recurrence methods raise NonIntegralError at the first index whose value
    does not reduce.
    """
    _check_method(method, SCHRODER_NUMBER_METHODS)
    _nonneg(n=n)
    if method == "gf1":
        return _schroder_gf1(n)
    if method == "gf2_as_printed":
        return _schroder_gf2(n)
    if method == "conv_s311":
        return _schroder_conv(n)
    return _schroder_threeterm(n, shifted=method == "threeterm_shifted")
