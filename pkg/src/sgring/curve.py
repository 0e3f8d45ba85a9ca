"""Projective monomial curves in P^3: rings k[x^n, x^(n-l) y^l, x^(n-m) y^m, y^n].

The four-generator machinery specializes: the lattice conditions collapse to
divisibility by n on the y-side, giving relation triples (ai, bi, ci) with
y-parts ci*n, determinant identities recovering n, m and l, a one-line
Cohen-Macaulay criterion b2 >= a2 + c2, and closed forms for two familiar
families.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import RingSpec
from .errors import DisagreementError, IdentityViolation, InvalidCurve
from .fourgen import BasisResult, FourGenConstants, is_cm as _fourgen_is_cm
from .fourgen import length_bound, monomial_basis
from .oracle import DEFAULT_BUDGET, corners, gsw_cm_check

Vec = tuple[int, int]


@dataclass(frozen=True)
class CurveSpec:
    """Exponent data (n, l, m) with 0 < l < m < n."""

    n: int
    l: int
    m: int

    def __post_init__(self) -> None:
        if not 0 < self.l < self.m < self.n:
            raise InvalidCurve(f"need 0 < l < m < n, got l={self.l}, m={self.m}, n={self.n}")

    def ring_gens(self) -> tuple[Vec, Vec]:
        return ((self.n - self.l, self.l), (self.n - self.m, self.m))


@dataclass(frozen=True)
class CurveConstants:
    """Minimal coefficients of the curve relations, y-parts ci * n.

        a1*l + b1*m = c1*n     a1, b1 > 0
       -a2*l + b2*m = c2*n     b2 minimal with c2 > 0, 0 <= a2 < n/gcd(l,n)
        a3*l - b3*m = c3*n     a3 minimal with c3 >= 0, 0 <= b3 < n/gcd(m,n)

    The first relation is the sum of the other two.  d = gcd(l, m, n).
    """

    n: int
    l: int
    m: int
    d: int
    a1: int
    b1: int
    c1: int
    a2: int
    b2: int
    c2: int
    a3: int
    b3: int
    c3: int

    @property
    def group_order(self) -> int:
        return self.n // self.d

    def h(self, i: int) -> int:
        return (self.c1, self.c2, self.c3)[i - 1] * self.n

    def to_fourgen(self) -> FourGenConstants:
        """The same data in four-generator form (d = n, gens (n-l, l), (n-m, m))."""
        n, l, m = self.n, self.l, self.m
        g2 = (self.b2 - self.a2 - self.c2) * n
        g3 = (self.a3 - self.b3 - self.c3) * n
        return FourGenConstants(
            d=n, n=n, e=n - l, l=l, f=n - m, m=m,
            a1=self.a1, b1=self.b1, g1=g2 + g3, h1=self.c1 * n,
            a2=self.a2, b2=self.b2, g2=g2, h2=self.c2 * n,
            a3=self.a3, b3=self.b3, g3=g3, h3=self.c3 * n,
        )


def constants(spec: CurveSpec) -> CurveConstants:
    """Minimal searches for the second and third relations; first is their sum."""
    n, l, m = spec.n, spec.l, spec.m
    bound_a = n // gcd(l, n)
    bound_b = n // gcd(m, n)

    a2 = b2 = c2 = None
    # b = n/gcd(m,n) with a = 0 gives b*m = (m/gcd(m,n))*n > 0, so this hits
    for b in range(1, bound_b + 1):
        for a in range(bound_a):
            r = b * m - a * l
            if r % n == 0:
                # sign rule: a nonnegative x-part forces a positive y-part
                assert not (b - a - r // n >= 0 and r <= 0)
                if r > 0:
                    a2, b2, c2 = a, b, r // n
                    break
        if c2 is not None:
            break
    assert c2 is not None

    a3 = b3 = c3 = None
    # a = n/gcd(l,n) with b = 0 gives a*l = (l/gcd(l,n))*n >= n
    for a in range(1, bound_a + 1):
        for b in range(bound_b):
            r = a * l - b * m
            if r >= 0 and r % n == 0:
                a3, b3, c3 = a, b, r // n
                break
        if c3 is not None:
            break
    assert c3 is not None

    return CurveConstants(
        n=n, l=l, m=m, d=gcd(l, m, n),
        a1=a3 - a2, b1=b2 - b3, c1=c2 + c3,
        a2=a2, b2=b2, c2=c2,
        a3=a3, b3=b3, c3=c3,
    )


def is_cm(consts: CurveConstants) -> bool:
    """Cohen-Macaulay iff b2 >= a2 + c2."""
    return consts.b2 >= consts.a2 + consts.c2


def determinant_identities(consts: CurveConstants) -> dict[str, int]:
    """Evaluate the nine 2x2 determinants recovering n, m and l.

    Returns all nine scaled values; raises IdentityViolation if any of them
    misses its target (that would be an implementation bug).
    """
    d = consts.d
    a1, b1, c1 = consts.a1, consts.b1, consts.c1
    a2, b2, c2 = consts.a2, consts.b2, consts.c2
    a3, b3, c3 = consts.a3, consts.b3, consts.c3
    values = {
        "n_32": d * (a3 * b2 - a2 * b3),
        "n_31": d * (a3 * b1 + a1 * b3),
        "n_12": d * (a1 * b2 + a2 * b1),
        "m_32": d * (a3 * c2 + a2 * c3),
        "m_31": d * (a3 * c1 - a1 * c3),
        "m_12": d * (a1 * c2 + a2 * c1),
        "l_32": d * (c3 * b2 + b3 * c2),
        "l_31": d * (c3 * b1 + b3 * c1),
        "l_12": d * (c1 * b2 - c2 * b1),
    }
    targets = {"n": consts.n, "m": consts.m, "l": consts.l}
    for key, value in values.items():
        if value != targets[key[0]]:
            raise IdentityViolation(
                f"determinant {key} = {value} != {targets[key[0]]} for {consts}"
            )
    return values


def special_case_cm(spec: CurveSpec) -> bool | None:
    """Closed-form verdicts for two families; None when neither applies.

    l = 1 with n = q*m + r: Cohen-Macaulay iff r = 0 or q + r >= m.
    gcd(l, m) = 1 with l + m = n: Cohen-Macaulay iff m = l + 1.
    """
    if spec.l == 1:
        q, r = divmod(spec.n, spec.m)
        return r == 0 or q + r >= spec.m
    if gcd(spec.l, spec.m) == 1 and spec.l + spec.m == spec.n:
        return spec.m == spec.l + 1
    return None


def basis(spec: CurveSpec) -> BasisResult:
    """Monomial basis of R/(x^n, y^n) via the shared expansion loop.

    The loop state's y-part counter equals c* times n throughout, so the
    stopping rule b* >= a* + c* is the sign rule of the four-generator form.
    Trace rows expose c* as h_star // n.
    """
    return monomial_basis(constants(spec).to_fourgen())


@dataclass(frozen=True)
class BatchRow:
    n: int
    l: int
    m: int
    is_cm: bool
    group_order: int
    basis_size: int
    bound_attained: bool
    oracle_agree: bool | None = None


def batch_classify(
    max_n: int,
    oracle_up_to: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> list[BatchRow]:
    """Classify every curve with 0 < l < m < n <= max_n, rows sorted by (n, l, m).

    Each row cross-checks the numeric criterion against the closed-form
    special cases when one applies; for n <= oracle_up_to the basis monomials
    are also compared with the brute-force corner set and the bounded
    cone-shift check.
    """
    if max_n < 3:
        raise InvalidCurve(f"need max_n >= 3, got {max_n}")
    rows = []
    for n in range(3, max_n + 1):
        for l in range(1, n):
            for m in range(l + 1, n):
                spec = CurveSpec(n, l, m)
                consts = constants(spec)
                fg = consts.to_fourgen()
                verdict = is_cm(consts)
                closed = special_case_cm(spec)
                if closed is not None and closed != verdict:
                    raise DisagreementError(
                        f"special-case verdict {closed} != {verdict} for {spec}"
                    )
                result = monomial_basis(fg)
                attained = length_bound(fg, result)
                agree = None
                if n <= oracle_up_to:
                    ring = RingSpec(n, n, spec.ring_gens())
                    cs = corners(ring, budget)
                    agree = (
                        result.monomials == frozenset(cs.corners)
                        and gsw_cm_check(ring, cs)[0] == verdict
                        and _fourgen_is_cm(fg) == verdict
                    )
                rows.append(
                    BatchRow(
                        n=n, l=l, m=m,
                        is_cm=verdict,
                        group_order=consts.group_order,
                        basis_size=len(result.pairs),
                        bound_attained=attained,
                        oracle_agree=agree,
                    )
                )
    return rows
