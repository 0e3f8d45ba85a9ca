"""Hilbert data of (x^a, y^b) from per-class corner ladders.

For each congruence class the corners form a staircase.  The anchor is a
corner of least weighted degree; walking the staircase rows below it (and,
mirrored, the columns left of it) yields two ladders whose lengths sum to
the class's contribution to the Hilbert constant, and whose degree profile
determines when the Hilbert function settles onto the polynomial.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .core import RingSpec, subgroup_classes, weighted_degree
from .errors import ClassNotInSubgroup, InfeasibleHilbertData, TrivialSubgroup
from .oracle import DEFAULT_BUDGET, CornerSet, corners

Vec = tuple[int, int]


@dataclass(frozen=True)
class StaircaseClass:
    """Ladder data of one congruence class.

    anchor     -- corner of minimal weighted degree (ties: least beta, then
                  least alpha)
    corners    -- the class's corners, beta ascending
    n_rows     -- rows below the anchor that still meet the staircase
    n_cols     -- columns left of the anchor, mirrored
    row_ladder -- per row below the anchor, the least monomial on that row
    col_ladder -- per column left of the anchor, the least monomial there
    row_gap    -- largest run of rows whose ladder degree exceeds both ends
    col_gap    -- mirrored
    settle     -- max(row_gap, col_gap): this class's contribution to the
                  Hilbert function is constant from that index on
    """

    cls: Vec
    anchor: Vec
    corners: tuple[Vec, ...]
    n_rows: int
    n_cols: int
    row_ladder: tuple[Vec, ...]
    col_ladder: tuple[Vec, ...]
    row_gap: int
    col_gap: int
    settle: int


def _max_gap(degs: list[int]) -> int:
    """Largest gap in the greedy descent over a degree profile.

    From the top index repeatedly jump to the largest lower index whose
    degree does not exceed the current one (index 0 always qualifies);
    the answer is the widest stretch of skipped indices.
    """
    gap = 0
    cur = len(degs) - 1
    while cur > 0:
        nxt = cur - 1
        while degs[nxt] > degs[cur]:
            nxt -= 1
        if cur - nxt - 1 > gap:
            gap = cur - nxt - 1
        cur = nxt
    return gap


def class_staircase(
    spec: RingSpec,
    cls: Vec,
    corner_set: CornerSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> StaircaseClass:
    """Build the ladders of one congruence class from the corner set."""
    cs = corner_set if corner_set is not None else corners(spec, budget)
    cls = (cls[0] % spec.a, cls[1] % spec.b)
    if cls not in cs.by_class:
        raise ClassNotInSubgroup(f"class {cls} is not generated by {spec.gens}")
    cls_corners = cs.by_class[cls]  # beta ascending, alpha descending
    a, b = spec.a, spec.b

    anchor = min(cls_corners, key=lambda v: (weighted_degree(spec, v), v[1], v[0]))
    betas = [v[1] for v in cls_corners]
    alphas_desc = [v[0] for v in cls_corners]
    min_beta = betas[0]
    min_alpha = alphas_desc[-1]
    n_rows = (anchor[1] - min_beta) // b
    n_cols = (anchor[0] - min_alpha) // a

    # Least monomial on each staircase row below the anchor: the corner of
    # greatest beta not above the row gives the least alpha there.
    row_ladder = []
    for i in range(1, n_rows + 1):
        row = anchor[1] - i * b
        idx = bisect_right(betas, row) - 1
        row_ladder.append((alphas_desc[idx], row))

    # Mirrored for columns left of the anchor.
    col_ladder = []
    for i in range(1, n_cols + 1):
        col = anchor[0] - i * a
        # corners with alpha <= col form a suffix; its least beta is first
        lo, hi = 0, len(cls_corners)
        while lo < hi:
            mid = (lo + hi) // 2
            if alphas_desc[mid] <= col:
                hi = mid
            else:
                lo = mid + 1
        col_ladder.append((col, betas[lo]))

    anchor_deg = weighted_degree(spec, anchor)
    row_degs = [anchor_deg] + [weighted_degree(spec, v) for v in row_ladder]
    col_degs = [anchor_deg] + [weighted_degree(spec, v) for v in col_ladder]
    row_gap = _max_gap(row_degs)
    col_gap = _max_gap(col_degs)

    return StaircaseClass(
        cls=cls,
        anchor=anchor,
        corners=cls_corners,
        n_rows=n_rows,
        n_cols=n_cols,
        row_ladder=tuple(row_ladder),
        col_ladder=tuple(col_ladder),
        row_gap=row_gap,
        col_gap=col_gap,
        settle=max(row_gap, col_gap),
    )


@dataclass(frozen=True)
class HilbertData:
    """Hilbert polynomial P(n) = multiplicity*(n+1) + constant of (x^a, y^b).

    The Hilbert function equals P exactly for n >= stabilization.
    """

    multiplicity: int
    constant: int
    stabilization: int

    @property
    def slope(self) -> int:
        return self.multiplicity

    @property
    def intercept(self) -> int:
        return self.multiplicity + self.constant

    def value(self, n: int) -> int:
        return self.multiplicity * (n + 1) + self.constant


def staircases(
    spec: RingSpec,
    corner_set: CornerSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[StaircaseClass]:
    """Ladder data for every congruence class, sorted by class."""
    cs = corner_set if corner_set is not None else corners(spec, budget)
    return [class_staircase(spec, cls, cs) for cls in sorted(cs.by_class)]


def hilbert_data(
    spec: RingSpec,
    corner_set: CornerSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> HilbertData:
    """Aggregate the per-class ladders into the Hilbert polynomial."""
    cs = corner_set if corner_set is not None else corners(spec, budget)
    constant = 0
    settle = 0
    for cls in cs.by_class:
        sc = class_staircase(spec, cls, cs)
        constant += sc.n_rows + sc.n_cols
        if sc.settle > settle:
            settle = sc.settle
    return HilbertData(
        multiplicity=len(cs.by_class), constant=constant, stabilization=settle
    )


def is_cm(
    spec: RingSpec,
    corner_set: CornerSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Cohen-Macaulay iff every congruence class has exactly one corner."""
    cs = corner_set if corner_set is not None else corners(spec, budget)
    return all(len(v) == 1 for v in cs.by_class.values())


def construct_ring(
    a: int,
    b: int,
    class_gens,
    constant: int,
    stabilization: int,
) -> RingSpec:
    """Build a ring whose parameter ideal has the requested Hilbert data.

    The result R = k[x^a, gens..., y^b] satisfies multiplicity = |H| (the
    subgroup generated by `class_gens` mod (a, b)), Hilbert constant
    `constant`, and Hilbert function equal to the polynomial exactly from
    `stabilization` on.  One distinguished class carries a ladder of length
    `constant` whose corners sit at positions {0..constant-stabilization-1}
    and {constant}, leaving a degree bump of exactly `stabilization` rows;
    every other nonzero class gets a single deep generator.

    A stabilization index N >= 1 requires constant > N (the bump lives
    strictly inside the ladder), so other pairs are rejected.
    """
    group = subgroup_classes(RingSpec(a, b, tuple((p % a, q % b) for p, q in class_gens
                                                  if (p % a, q % b) != (0, 0))))
    if group == {(0, 0)}:
        raise TrivialSubgroup("the generated congruence subgroup is trivial")
    if constant < 0 or stabilization < 0:
        raise InfeasibleHilbertData("constant and stabilization must be >= 0")
    if stabilization >= 1 and stabilization >= constant:
        raise InfeasibleHilbertData(
            f"no ring has Hilbert constant {constant} with stabilization "
            f"{stabilization}: stabilization >= 1 forces constant > stabilization"
        )

    c, s = constant, stabilization
    depth = c + s + 1  # pure-power padding; keeps generator products deep
    span = depth + c + s
    p0, q0 = min(v for v in group if v != (0, 0))

    gens = []
    for p, q in sorted(group):
        if (p, q) != (0, 0):
            gens.append((p + depth * a, q + span * b))
    ladder_positions = list(range(c - s)) + [c]
    for j in ladder_positions:
        gens.append((p0 + (depth + j) * a, q0 + (span - j) * b))
    return RingSpec(a, b, tuple(gens))
