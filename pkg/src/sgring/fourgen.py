"""Fast paths for rings with two middle generators: k[x^d, x^e y^l, x^f y^m, y^n].

Three integer relations between the middle generators modulo the lattice
dZ + nZ drive everything: a numeric Cohen-Macaulay criterion, the size of
the quotient by the parameter ideal, and an iterative algorithm that grows
an explicit monomial basis from a seed rectangle union.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import order_of
from .errors import InvalidDN, NonTermination, ZeroGeneratorPair

Vec = tuple[int, int]


@dataclass(frozen=True)
class FourGenConstants:
    """Minimal coefficients of the three generator relations.

        a1*(e,l) + b1*(f,m) = (g1,h1)      a1, b1 > 0
       -a2*(e,l) + b2*(f,m) = (g2,h2)      b2 > 0 minimal, 0 <= a2 < ord(e,l)
        a3*(e,l) - b3*(f,m) = (g3,h3)      a3 > 0 minimal, 0 <= b3 < ord(f,m)

    with every (gi,hi) in dZ + nZ, (g3,h3) componentwise nonnegative and
    nonzero, and (g2,h2) either zero or with a positive coordinate.  The
    first relation is the sum of the other two: (a1,b1) = (a3-a2, b2-b3).
    """

    d: int
    n: int
    e: int
    l: int
    f: int
    m: int
    a1: int
    b1: int
    g1: int
    h1: int
    a2: int
    b2: int
    g2: int
    h2: int
    a3: int
    b3: int
    g3: int
    h3: int

    @property
    def group_order(self) -> int:
        """|H|: order of the subgroup the two generators span mod (d, n)."""
        return self.a3 * self.b2 - self.a2 * self.b3

    def pair_log(self, a: int, b: int) -> Vec:
        """Exponent vector of (x^e y^l)^a * (x^f y^m)^b."""
        return (a * self.e + b * self.f, a * self.l + b * self.m)


def constants(d: int, n: int, el: Vec, fm: Vec) -> FourGenConstants:
    """Compute the relation coefficients by bounded minimal search.

    The second and third relations are searched directly; the first is their
    sum.  For each candidate b (resp. a) the congruence pins the partner
    coefficient uniquely inside its order range, so the scans are exact.
    """
    if d < 1 or n < 1:
        raise InvalidDN(f"need d, n >= 1, got d={d}, n={n}")
    if el == (0, 0):
        raise ZeroGeneratorPair("(e, l) = (0, 0) is not a monomial generator")
    if fm == (0, 0):
        raise ZeroGeneratorPair(
            "(f, m) = (0, 0): three-generator rings are always Cohen-Macaulay"
        )
    e, l = el
    f, m = fm
    ord_el = order_of((e % d, l % n), (d, n))
    ord_fm = order_of((f % d, m % n), (d, n))

    a2 = b2 = g2 = h2 = None
    for b in range(1, ord_fm + 1):
        bf, bm = b * f, b * m
        for a in range(ord_el):
            g, h = bf - a * e, bm - a * l
            if g % d == 0 and h % n == 0 and (g > 0 or h > 0 or (g == 0 and h == 0)):
                a2, b2, g2, h2 = a, b, g, h
                break
        if b2 is not None:
            break
    assert b2 is not None  # b = ord(f,m) always qualifies

    a3 = b3 = g3 = h3 = None
    for a in range(1, ord_el + 1):
        ae, al = a * e, a * l
        for b in range(ord_fm):
            g, h = ae - b * f, al - b * m
            if g >= 0 and h >= 0 and (g or h) and g % d == 0 and h % n == 0:
                a3, b3, g3, h3 = a, b, g, h
                break
        if a3 is not None:
            break
    assert a3 is not None  # a = ord(e,l) always qualifies

    assert a3 > a2 and b2 > b3  # proven for every input pair
    return FourGenConstants(
        d=d, n=n, e=e, l=l, f=f, m=m,
        a1=a3 - a2, b1=b2 - b3, g1=g2 + g3, h1=h2 + h3,
        a2=a2, b2=b2, g2=g2, h2=h2,
        a3=a3, b3=b3, g3=g3, h3=h3,
    )


def candidate_box(consts: FourGenConstants) -> frozenset[Vec]:
    """Seed set: pairs with a < a1, b < b2 joined with a < a3, b < b1.

    Its size is group_order; it maps to one monomial per congruence class.
    """
    box = {(a, b) for a in range(consts.a1) for b in range(consts.b2)}
    box.update((a, b) for a in range(consts.a3) for b in range(consts.b1))
    return frozenset(box)


def is_cm(consts: FourGenConstants) -> bool:
    """Cohen-Macaulay iff the second relation has no negative coordinate."""
    return consts.g2 >= 0 and consts.h2 >= 0


@dataclass(frozen=True)
class TraceStep:
    """State after one basis iteration; `branch` is the rule that fired.

    Rule 4 applies the first relation (a* >= a1), rule 5 the second
    (a* <= a1 - base), rule 6 the mixed case that also shrinks the base.
    """

    branch: int
    base: int
    a_star: int
    b_star: int
    g_star: int
    h_star: int
    added: int
    size: int


@dataclass(frozen=True)
class BasisResult:
    """Output of the basis algorithm.

    pairs     -- lattice exponents (a, b) of the basis monomials
    monomials -- their exponent vectors a*(e,l) + b*(f,m)
    trace     -- one TraceStep per iteration (post-iteration values)
    """

    consts: FourGenConstants
    pairs: frozenset[Vec]
    monomials: frozenset[Vec]
    initial_size: int
    trace: tuple[TraceStep, ...]

    @property
    def iterations(self) -> int:
        return len(self.trace)

    def sorted_monomials(self) -> list[Vec]:
        return sorted(self.monomials, key=lambda v: (v[1], v[0]))

    def sorted_pairs(self) -> list[Vec]:
        return sorted(self.pairs, key=lambda v: (v[1], v[0]))


def monomial_basis(consts: FourGenConstants) -> BasisResult:
    """Grow the seed box to a full monomial basis of R/(x^d, y^n).

    State (base, a*, b*, g*, h*) starts at (a1, a2, b2, g2, h2) and each
    iteration fires exactly one of three rules, appending a block of rows
    above the current b*.  All updates in a rule read pre-iteration values
    (in rule 6 the new base is a1 minus the old a*).  The loop provably
    stops within a3 <= |H| iterations; the guard only trips on a bug.
    """
    a1, b1, g1, h1 = consts.a1, consts.b1, consts.g1, consts.h1
    a2, b2, g2, h2 = consts.a2, consts.b2, consts.g2, consts.h2
    limit = consts.group_order + 1

    pairs = set(candidate_box(consts))
    initial_size = len(pairs)
    base, a_star, b_star, g_star, h_star = a1, a2, b2, g2, h2
    trace: list[TraceStep] = []

    while g_star < 0 or h_star < 0:
        if len(trace) >= limit:
            raise NonTermination(
                f"basis loop exceeded {limit} iterations for {consts}"
            )
        assert base >= 1  # loop invariant; rules are exclusive only then
        if a_star >= a1:
            branch = 4
            new = {(u, b_star + v) for u in range(base) for v in range(b1)}
            a_star, b_star = a_star - a1, b_star + b1
            g_star, h_star = g_star + g1, h_star + h1
        elif a_star <= a1 - base:
            branch = 5
            new = {(u, b_star + v) for u in range(base) for v in range(b2)}
            a_star, b_star = a_star + a2, b_star + b2
            g_star, h_star = g_star + g2, h_star + h2
        else:
            branch = 6
            new = {(u, b_star + v) for u in range(base) for v in range(b1)}
            new.update(
                (u, b_star + v) for u in range(a1 - a_star) for v in range(b2)
            )
            base = a1 - a_star
            a_star, b_star = a_star + a2, b_star + b2
            g_star, h_star = g_star + g2, h_star + h2
        added = len(new - pairs)
        pairs |= new
        trace.append(
            TraceStep(branch, base, a_star, b_star, g_star, h_star, added, len(pairs))
        )

    monomials = frozenset(consts.pair_log(a, b) for a, b in pairs)
    return BasisResult(
        consts=consts,
        pairs=frozenset(pairs),
        monomials=monomials,
        initial_size=initial_size,
        trace=tuple(trace),
    )


def length_bound(consts: FourGenConstants, result: BasisResult) -> bool:
    """Check the proven size bounds; True iff |B| = |H|(|H|+1)/2 exactly."""
    h = consts.group_order
    size = len(result.pairs)
    assert size <= h * (h + 1) // 2
    assert h <= consts.d * consts.n
    return size == h * (h + 1) // 2
