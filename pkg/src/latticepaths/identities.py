"""Registry of counting identities and an exact-arithmetic checker for them.

Each :class:`Identity` pairs two evaluators over a finite parameter grid
controlled by a single bound ``N``. :func:`verify` evaluates both sides on
every grid point and collects mismatches. A side that raises
:class:`~latticepaths.core.NonIntegralError` counts as a mismatch and its
rational value is kept in the counterexample.

Two entries (``GF2`` and ``S32_PRINTED``) are expected to fail as written;
they are flagged ``errata_expected`` and a refutation of them does not make
the suite fail.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable

from . import closedform as cf
from .core import (
    CountMatrix,
    DomainError,
    NonIntegralError,
    binomial,
    diag_pow2,
    mat_mul,
    mat_transpose,
    pascal_matrix,
    ratio_to_int,
)
from .tables import catalan_triangle, delannoy_table, rect_table, schroder_triangle

MAX_COUNTEREXAMPLES = 10

VERIFIED = "Verified"
REFUTED = "Refuted"

Params = tuple[int, ...]
Value = int | Fraction


class UnknownIdentity(KeyError):
    pass


# --- cached tables --------------------------------------------------------
# Tables are built at power-of-two sizes so that a sweep over a growing grid
# reuses a handful of tables instead of rebuilding one per cell.


def _size_for(index: int) -> int:
    size = 16
    while size <= index:
        size *= 2
    return size


@lru_cache(maxsize=None)
def _rect(size: int) -> CountMatrix:
    return rect_table(size, size)


@lru_cache(maxsize=None)
def _delannoy(size: int) -> CountMatrix:
    return delannoy_table(size, size)


@lru_cache(maxsize=None)
def _catalan(size: int):
    return catalan_triangle(size)


@lru_cache(maxsize=None)
def _schroder(size: int):
    return schroder_triangle(size)


@lru_cache(maxsize=None)
def _q_product(size: int) -> CountMatrix:
    p = pascal_matrix(size)
    return mat_mul(p, mat_transpose(p))


@lru_cache(maxsize=None)
def _k_product(size: int) -> CountMatrix:
    p = pascal_matrix(size)
    return mat_mul(mat_mul(p, diag_pow2(size)), mat_transpose(p))


def Q(p: int, q: int) -> int:
    return _rect(_size_for(max(p, q)))[p, q]


def K(p: int, q: int) -> int:
    return _delannoy(_size_for(max(p, q)))[p, q]


def C(p: int, q: int) -> int:
    # cells above the diagonal hold no subdiagonal paths
    if q > p:
        return 0
    return _catalan(_size_for(p))[p, q]


def R(p: int, q: int) -> int:
    if q > p:
        return 0
    return _schroder(_size_for(p))[p, q]


def S(n: int) -> int:
    return R(n, n)


# --- domains --------------------------------------------------------------


def _range1(lo: int) -> Callable[[int], Iterable[Params]]:
    return lambda n: ((i,) for i in range(lo, n + 1))


def _square(lo: int) -> Callable[[int], Iterable[Params]]:
    return lambda n: product(range(lo, n + 1), repeat=2)


def _lower(q_lo: int, strict: bool = False) -> Callable[[int], Iterable[Params]]:
    def dom(n: int):
        for p in range(n + 1):
            for q in range(q_lo, p if strict else p + 1):
                yield p, q

    return dom


def _cells(n: int) -> Iterable[Params]:
    return product(range(n), repeat=2)


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    anchor: str
    domain_text: str
    domain: Callable[[int], Iterable[Params]] = field(repr=False)
    lhs: Callable[..., Value] = field(repr=False)
    rhs: Callable[..., Value] = field(repr=False)
    errata_expected: bool = False
    note: str = ""

    def cases(self, bound: int) -> list[Params]:
        return list(self.domain(bound))


@dataclass(frozen=True)
class Counterexample:
    params: Params
    lhs: Value
    rhs: Value

    def as_dict(self) -> dict:
        return {
            "params": list(self.params),
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
        }


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    cases_checked: int
    status: str
    counterexamples: tuple[Counterexample, ...] = ()
    failures: int = 0
    bound: int | None = None

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def as_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "bound": self.bound,
            "cases_checked": self.cases_checked,
            "status": self.status,
            "failures": self.failures,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
        }


def format_value(v: Value) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _frac_sum(terms: Iterable[Fraction]) -> int:
    return ratio_to_int(sum(terms, Fraction(0)))


# --- registry -------------------------------------------------------------

_ENTRIES = [
    Identity(
        "B1",
        "Rectangular counts: each cell is the sum of its left and upper neighbours",
        "(b1) Q(p,q)=Q(p,q-1)+Q(p-1,q)",
        "1 <= p, q <= N",
        _square(1),
        lambda p, q: Q(p, q),
        lambda p, q: Q(p, q - 1) + Q(p - 1, q),
    ),
    Identity(
        "B2",
        "Rectangular counts: each cell is the prefix sum of the row above",
        "(b2) Q(p,q)=\\sum_{i=0}^{q}Q(p-1,i)",
        "1 <= p <= N, 0 <= q <= N",
        lambda n: product(range(1, n + 1), range(n + 1)),
        lambda p, q: Q(p, q),
        lambda p, q: sum(Q(p - 1, i) for i in range(q + 1)),
    ),
    Identity(
        "B3_DECOMP_Q",
        "Rectangular table equals P_N P_N^T cell by cell",
        "(b3) Q_{n}=P_{n}P_{n}^{T}",
        "0 <= i, j < N",
        _cells,
        lambda i, j: Q(i, j),
        lambda i, j: _q_product(_size_for(max(i, j)))[i, j],
    ),
    Identity(
        "A1",
        "Vandermonde-type sum of products of binomials",
        "(a1) \\sum_{k=0}^{min(i,j)-1}\\binom{i-1}{k}\\binom{j-1}{k}=\\binom{i+j-2}{i-1}",
        "1 <= i, j <= N",
        _square(1),
        lambda i, j: sum(
            binomial(i - 1, k) * binomial(j - 1, k) for k in range(min(i, j))
        ),
        lambda i, j: binomial(i + j - 2, i - 1),
    ),
    Identity(
        "A2",
        "Sum of squared binomials is a central binomial",
        "(a2) \\sum_{k=0}^{i-1}\\binom{i-1}{k}^{2}=\\binom{2i-2}{i-1}",
        "1 <= i <= N",
        _range1(1),
        lambda i: sum(binomial(i - 1, k) ** 2 for k in range(i)),
        lambda i: binomial(2 * i - 2, i - 1),
    ),
    Identity(
        "R3_VS_REFLECT",
        "Ballot formula agrees with total minus reflected paths",
        "(r3) C(p,q)=\\frac{p-q+1}{p+1}\\binom{p+q}{q} ; C(p,q)=b(p,q)-b(p+1,q-1)",
        "1 <= q <= p <= N",
        _lower(1),
        cf.c_closed,
        cf.c_reflect,
    ),
    Identity(
        "S3",
        "Subdiagonal rectangular counts: left plus upper neighbour",
        "(s3) C(p,q)=C(p-1,q)+C(p,q-1)",
        "1 <= q <= p <= N (cells above the diagonal are 0)",
        _lower(1),
        lambda p, q: C(p, q),
        lambda p, q: C(p - 1, q) + C(p, q - 1),
    ),
    Identity(
        "S4",
        "Subdiagonal rectangular counts: prefix sum of the row above",
        "(s4) C(p+1,q)=\\sum_{k=0}^{q}C(p,k)",
        "0 <= q <= p <= N",
        _lower(0),
        lambda p, q: C(p + 1, q),
        lambda p, q: sum(C(p, k) for k in range(q + 1)),
    ),
    Identity(
        "S5",
        "Catalan number from the cell left of the diagonal",
        "(s5) C_{n}=C(n,n-1)=\\frac{1}{n}\\binom{2n-2}{n-1}+\\frac{3}{n+1}\\binom{2n-2}{n-2}",
        "1 <= n <= N",
        _range1(1),
        lambda n: C(n, n - 1),
        lambda n: cf.catalan_number(n, "split_s5"),
    ),
    Identity(
        "S6",
        "Catalan number as a weighted binomial sum",
        "(s6) C_{n}=C(n,n)=\\sum_{k=0}^{n-1}\\frac{n-k}{n}\\binom{n+k-1}{k}",
        "1 <= n <= N",
        _range1(1),
        lambda n: C(n, n),
        lambda n: cf.catalan_number(n, "sum_s6"),
    ),
    Identity(
        "S66_HALF",
        "Catalan number from binom(2n-1, n-1)",
        "(s66) C_{n}=C(n,n)=\\frac{2}{n+1}\\binom{2n-1}{n-1}",
        "1 <= n <= N",
        _range1(1),
        lambda n: C(n, n),
        lambda n: cf.catalan_number(n, "halfbinom_s66"),
    ),
    Identity(
        "S66_RECUR",
        "First-order Catalan recurrence on the table diagonal",
        "(s66) C_{n}=\\frac{2(2n-1)}{n+1}C_{n-1}",
        "1 <= n <= N",
        _range1(1),
        lambda n: C(n, n),
        lambda n: ratio_to_int(Fraction(2 * (2 * n - 1), n + 1) * C(n - 1, n - 1)),
    ),
    Identity(
        "GG1",
        "Delannoy counts: left plus upper plus upper-left neighbour",
        "(gg1) g(k,r)=g(k,r-1)+g(k-1,r)+g(k-1,r-1)",
        "1 <= k, r <= N",
        _square(1),
        lambda k, r: K(k, r),
        lambda k, r: K(k, r - 1) + K(k - 1, r) + K(k - 1, r - 1),
    ),
    Identity(
        "R6_EQ_R66",
        "Multinomial sum equals binomial-product sum for Delannoy numbers",
        "(r6) g(p,q)=\\sum_{r=0}^{min(p,q)}\\frac{(p+q-r)!}{(p-r)!(q-r)!r!} ; "
        "(r66) g(p,q)=\\sum_{\\alpha=0}^{p}\\binom{p}{\\alpha}\\binom{q+\\alpha}{p}",
        "0 <= p, q <= N",
        _square(0),
        lambda p, q: cf.g_closed(p, q, "multinomial_r6"),
        lambda p, q: cf.g_closed(p, q, "binomsum_r66"),
    ),
    Identity(
        "R6_EQ_R666",
        "Multinomial sum equals powers-of-two sum for Delannoy numbers",
        "(r6) g(p,q)=\\sum_{r=0}^{min(p,q)}\\frac{(p+q-r)!}{(p-r)!(q-r)!r!} ; "
        "(r666) g(p,q)=\\sum_{\\alpha=0}^{min(p,q)}\\binom{p}{\\alpha}\\binom{q}{\\alpha}2^{\\alpha}",
        "0 <= p, q <= N",
        _square(0),
        lambda p, q: cf.g_closed(p, q, "multinomial_r6"),
        lambda p, q: cf.g_closed(p, q, "twopow_r666"),
    ),
    Identity(
        "C1_DECOMP_K",
        "Delannoy table equals P_N D_N P_N^T cell by cell",
        "(c1) K_{n}=P_{n}D_{n}P_{n}^{T}, D_{n}=diag(1,2,2^{2},...,2^{n-1})",
        "0 <= i, j < N",
        _cells,
        lambda i, j: K(i, j),
        lambda i, j: _k_product(_size_for(max(i, j)))[i, j],
    ),
    Identity(
        "H11_EQ_H2",
        "Delannoy differences via multinomial and binomial-product sums agree",
        "(h11) R(p,q)=g(p,q)-g(p+1,q-1) ; (h2)",
        "1 <= q <= p <= N",
        _lower(1),
        lambda p, q: cf.r_closed(p, q, "diff_h11"),
        lambda p, q: cf.r_closed(p, q, "diff_h2"),
    ),
    Identity(
        "H11_EQ_H3",
        "Delannoy differences via multinomial and powers-of-two sums agree",
        "(h11) R(p,q)=g(p,q)-g(p+1,q-1) ; (h3)",
        "1 <= q <= p <= N",
        _lower(1),
        lambda p, q: cf.r_closed(p, q, "diff_h11"),
        lambda p, q: cf.r_closed(p, q, "diff_h3"),
    ),
    Identity(
        "H11_EQ_H4",
        "Delannoy difference agrees with the weighted multinomial sum",
        "(h11) R(p,q)=g(p,q)-g(p+1,q-1) ; "
        "(h4) R(p,q)=\\sum_{r=0}^{q}\\frac{p-q+1}{p-r+1}\\binom{p+q-r}{p-r,q-r,r}",
        "1 <= q <= p <= N",
        _lower(1),
        lambda p, q: cf.r_closed(p, q, "diff_h11"),
        lambda p, q: cf.r_closed(p, q, "weighted_h4"),
    ),
    Identity(
        "GF1",
        "Large Schröder number as a weighted multinomial sum",
        "(gf1) S_{n}=R(n,n)=\\sum_{r=0}^{n}\\frac{1}{n-r+1}\\binom{2n-r}{n-r,n-r,r}",
        "0 <= n <= N",
        _range1(0),
        S,
        lambda n: cf.schroder_number(n, "gf1"),
    ),
    Identity(
        "GF2",
        "Large Schröder number as 2^n plus a binomial sum (as printed)",
        "(gf2) S_{n}=R(n,n)=2^{n}+\\sum_{r=0}^{n-1}[\\frac{r2^{r}}{n-r+1}\\binom{n}{r}\\binom{n-1}{r}]",
        "0 <= n <= N",
        _range1(0),
        S,
        lambda n: cf.schroder_number(n, "gf2_as_printed"),
        errata_expected=True,
        note="printed sum disagrees with the table diagonal",
    ),
    Identity(
        "S1",
        "Subdiagonal HVD counts: left plus upper plus upper-left neighbour",
        "(s1) R(p,q)=R(p-1,q-1)+R(p-1,q)+R(p,q-1)",
        "1 <= q <= p <= N (cells above the diagonal are 0)",
        _lower(1),
        lambda p, q: R(p, q),
        lambda p, q: R(p - 1, q - 1) + R(p - 1, q) + R(p, q - 1),
    ),
    Identity(
        "S11",
        "Diagonal cell is the diagonal above plus its left neighbour",
        "(s11) S_{n}=R(n,n)=R(n-1,n-1)+R(n,n-1)",
        "1 <= n <= N",
        _range1(1),
        S,
        lambda n: R(n - 1, n - 1) + R(n, n - 1),
    ),
    Identity(
        "S2",
        "Off-diagonal cell is twice a prefix sum of the row above plus one term",
        "(s2) R(p,q)=2[R(p-1,0)+...+R(p-1,q-1)]+R(p-1,q), p!=q",
        "0 <= q < p <= N",
        _lower(0, strict=True),
        lambda p, q: R(p, q),
        lambda p, q: 2 * sum(R(p - 1, k) for k in range(q)) + R(p - 1, q),
    ),
    Identity(
        "S31",
        "Diagonal cell is twice the full row above",
        "(s31) R(n,n)=2[R(n-1,0)+R(n-1,1)+...+R(n-1,n-1)]",
        "1 <= n <= N",
        _range1(1),
        S,
        lambda n: 2 * sum(R(n - 1, k) for k in range(n)),
    ),
    Identity(
        "S311",
        "Convolution recurrence for large Schröder numbers",
        "(s311) S_n=S_{n-1}+S_0S_{n-1}+S_1S_{n-2}+...+S_{n-1}S_0",
        "1 <= n <= N",
        _range1(1),
        S,
        lambda n: S(n - 1) + sum(S(k) * S(n - 1 - k) for k in range(n)),
    ),
    Identity(
        "S32_PRINTED",
        "Three-term recurrence for large Schröder numbers (as printed)",
        "(s32) (n+2)S_{n+2}=3(2n+1)S_{n+1}-(n-1)S_n",
        "0 <= n <= N",
        _range1(0),
        lambda n: (n + 2) * S(n + 2),
        lambda n: 3 * (2 * n + 1) * S(n + 1) - (n - 1) * S(n),
        errata_expected=True,
        note="indices of S are one too high on every term",
    ),
    Identity(
        "S32_SHIFTED",
        "Three-term recurrence with every S index lowered by one (hypothesized variant)",
        "(s32) with S indices shifted: (n+2)S_{n+1}=3(2n+1)S_{n}-(n-1)S_{n-1}",
        "1 <= n <= N",
        _range1(1),
        lambda n: (n + 2) * S(n + 1),
        lambda n: 3 * (2 * n + 1) * S(n) - (n - 1) * S(n - 1),
        note="hypothesized variant; empirical status only",
    ),
]

REGISTRY: dict[str, Identity] = {e.id: e for e in _ENTRIES}
assert len(REGISTRY) == len(_ENTRIES), "duplicate identity id"

ERRATA_EXPECTED = frozenset(k for k, e in REGISTRY.items() if e.errata_expected)


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def _evaluate(fn: Callable[..., Value], params: Params) -> Value:
    try:
        return fn(*params)
    except NonIntegralError as exc:
        return exc.value


def _order(params: Params) -> tuple:
    return (sum(params), params)


def check_case(identity: Identity, params: Params) -> Counterexample | None:
    """Evaluate one grid point; return a counterexample if the sides differ."""
    lhs = _evaluate(identity.lhs, params)
    rhs = _evaluate(identity.rhs, params)
    # a Fraction here always has denominator != 1 (ratio_to_int returned it)
    if isinstance(lhs, Fraction) or isinstance(rhs, Fraction) or lhs != rhs:
        return Counterexample(tuple(params), lhs, rhs)
    return None


def verify(identity_id: str, bound: int) -> VerificationReport:
    identity = get_identity(identity_id)
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    cases = identity.cases(bound)
    bad = [c for c in (check_case(identity, p) for p in cases) if c is not None]
    bad.sort(key=lambda c: _order(c.params))
    return VerificationReport(
        identity_id=identity.id,
        cases_checked=len(cases),
        status=REFUTED if bad else VERIFIED,
        counterexamples=tuple(bad[:MAX_COUNTEREXAMPLES]),
        failures=len(bad),
        bound=bound,
    )


def verify_all(bound: int) -> list[VerificationReport]:
    return [verify(key, bound) for key in REGISTRY]


def is_expected(report: VerificationReport) -> bool:
    """False only when an identity outside the errata set is refuted."""
    return report.verified or report.identity_id in ERRATA_EXPECTED


def all_expected(reports: Iterable[VerificationReport]) -> bool:
    return all(is_expected(r) for r in reports)


# --- matrix decompositions --------------------------------------------------

DECOMPOSITION_IDS = {"Q": "B3_DECOMP_Q", "K": "C1_DECOMP_K"}


@dataclass(frozen=True)
class Decomposition:
    which: str
    factors: tuple[CountMatrix, ...]
    product: CountMatrix
    table: CountMatrix


def decompose(which: str, n: int) -> Decomposition:
    """Factor matrices for Q_n = P P^T or K_n = P D P^T plus both sides."""
    if which not in DECOMPOSITION_IDS:
        raise DomainError(f"unknown matrix {which!r}; expected 'Q' or 'K'")
    if n < 1:
        raise DomainError(f"matrix order must be >= 1, got {n}")
    p = pascal_matrix(n)
    pt = mat_transpose(p)
    if which == "Q":
        factors = (p, pt)
        table = rect_table(n, n)
    else:
        factors = (p, diag_pow2(n), pt)
        table = delannoy_table(n, n)
    prod = factors[0]
    for f in factors[1:]:
        prod = mat_mul(prod, f)
    return Decomposition(which, factors, prod, table)


def verify_decomposition(which: str, n: int) -> VerificationReport:
    d = decompose(which, n)
    bad = [
        Counterexample((i, j), d.table[i, j], d.product[i, j])
        for i, j in _cells(n)
        if d.table[i, j] != d.product[i, j]
    ]
    bad.sort(key=lambda c: _order(c.params))
    return VerificationReport(
        identity_id=DECOMPOSITION_IDS[which],
        cases_checked=n * n,
        status=REFUTED if bad else VERIFIED,
        counterexamples=tuple(bad[:MAX_COUNTEREXAMPLES]),
        failures=len(bad),
        bound=n,
    )
