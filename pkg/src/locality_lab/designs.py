"""Combinatorial designs carried by the supports of fixed-weight codewords.

Blocks are the distinct supports of the weight-w codewords of a code (a
"simple" design: scalar multiples collapse to one block).  Verification is
exhaustive: a t-design must cover every t-subset of coordinates the same
number of times, and that count is established by direct enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import combinations

from .code_core import Caps, LinearCode, dual, exact_weight_words, minimum_distance
from .errors import BadParameters
from .locality import minimum_linear_locality

__all__ = ["DesignReport", "support_blocks", "verify_t_design",
           "analyze_design", "one_design_locality_link"]


@dataclass(frozen=True)
class DesignReport:
    n: int
    block_size: int
    blocks: tuple[tuple[int, ...], ...]
    t_lambda: dict[int, int]
    is_steiner: bool

    def block_count(self) -> int:
        return len(self.blocks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "block_size": self.block_size,
            "block_count": len(self.blocks),
            "blocks": [list(b) for b in self.blocks],
            "t_lambda": {str(t): lam for t, lam in self.t_lambda.items()},
            "is_steiner": self.is_steiner,
        }


def support_blocks(C: LinearCode, w: int,
                   caps: Caps | None = None) -> DesignReport:
    """Distinct supports of the weight-w codewords, as a design skeleton
    (no t-design verification yet)."""
    words = exact_weight_words(C, w, caps)
    seen: set[tuple[int, ...]] = set()
    blocks = []
    for lw in words:
        if lw.support not in seen:
            seen.add(lw.support)
            blocks.append(lw.support)
    blocks.sort()
    return DesignReport(n=C.n, block_size=w, blocks=tuple(blocks),
                        t_lambda={}, is_steiner=False)


def _coverage_counts(report: DesignReport, t: int) -> dict[tuple[int, ...], int]:
    counts: dict[tuple[int, ...], int] = {}
    for block in report.blocks:
        for sub in combinations(block, t):
            counts[sub] = counts.get(sub, 0) + 1
    return counts


def verify_t_design(report: DesignReport, t: int) -> int | None:
    """The constant λ if every t-subset of points lies in the same number
    of blocks (and that number is positive); None otherwise."""
    if not 1 <= t <= report.block_size:
        raise BadParameters(
            f"need 1 <= t <= block size {report.block_size}, got {t}")
    if not report.blocks:
        return None
    counts = _coverage_counts(report, t)
    if len(counts) != math.comb(report.n, t):
        return None  # some t-subset is uncovered
    values = set(counts.values())
    if len(values) != 1:
        return None
    lam = values.pop()
    _assert_downward_consistency(report, t, lam)
    return lam


def _assert_downward_consistency(report: DesignReport, t: int, lam: int) -> None:
    # a t-design is a t'-design for t' < t with binomially scaled λ
    n, w = report.n, report.block_size
    for tp in range(1, t):
        expected = lam * math.comb(n - tp, t - tp) // math.comb(w - tp, t - tp)
        assert lam * math.comb(n - tp, t - tp) % math.comb(w - tp, t - tp) == 0
        counts = _coverage_counts(report, tp)
        assert set(counts.values()) == {expected}, \
            f"{t}-design is not a {tp}-design with λ = {expected}"
        assert len(counts) == math.comb(n, tp)
    assert len(report.blocks) * math.comb(w, t) == lam * math.comb(n, t)


def analyze_design(C: LinearCode, w: int, t_max: int | None = None,
                   caps: Caps | None = None) -> DesignReport:
    """Support blocks plus t-design verification for 1 <= t <= t_max."""
    report = support_blocks(C, w, caps)
    if not report.blocks:
        return report
    if t_max is None:
        t_max = min(report.block_size, 4)
    t_lambda = {}
    for t in range(1, t_max + 1):
        lam = verify_t_design(report, t)
        if lam is not None:
            t_lambda[t] = lam
    steiner = any(t >= 2 and lam == 1 for t, lam in t_lambda.items())
    return replace(report, t_lambda=t_lambda, is_steiner=steiner)


def one_design_locality_link(C: LinearCode,
                             caps: Caps | None = None) -> bool:
    """Whether the minimum-weight dual supports form a 1-design; when they
    do, the locality must be d(dual) - 1, and that is asserted."""
    D = dual(C)
    d_dual = minimum_distance(D, caps)
    report = support_blocks(D, d_dual, caps)
    lam = verify_t_design(report, 1) if report.blocks else None
    if lam is None:
        return False
    locality = minimum_linear_locality(C, caps)
    assert locality.r_min == d_dual - 1, \
        "uniform dual coverage must pin the locality at d(dual) - 1"
    return True
