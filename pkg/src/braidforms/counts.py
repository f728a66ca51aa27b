"""Class counts, link counts, and the counting identity h(t) = sum(p + M).

The pipeline has two ends.  On the form side, the classes of
discriminant t^2 - 4 are enumerated and each is tagged with the
exponent residue mod 12 of a matrix representative, giving the number
x_count(t, n) of braid conjugacy classes with trace t and exponent n
(each form class lifts to exactly one exponent in any window of 12
consecutive integers).  On the link side, the exceptional-fiber
correction M from the closure classification converts class counts
into counts p = x_count - M of isotopy classes of braid-index-3 links
with writhe n and Alexander/Jones special value i^n (t - 2).  The main
identity h(t) = sum over a 12-window of (p + M) then ties the two ends
together; a cell where the subtraction would go negative falsifies the
data and raises instead of passing silently.

An independent census pipeline enumerates braid words directly,
buckets them by (form class of the integer matrix image, exponent sum),
and yields certified lower bounds for x_count that converge from below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import birman_menasco, quadforms, sl2z
from .quadforms import FormClassKey, QForm


@dataclass(frozen=True)
class ClassWithExponent:
    """A form class of discriminant trace^2 - 4 with its exponent residue."""

    key: FormClassKey
    trace: int
    residue: int  # exponent mod 12 of any matrix representative


@dataclass(frozen=True)
class CountsRow:
    """One cell of the counting table: p = x_count - m >= 0."""

    t: int
    n: int
    x_count: int
    m: int
    p: int

    def to_json(self) -> dict:
        return {"t": self.t, "n": self.n, "x_count": self.x_count,
                "m": self.m, "p": self.p}


class LinkCountError(RuntimeError):
    """More fiber corrections than conjugacy classes in a cell."""

    def __init__(self, t: int, n: int, x_count: int, m: int):
        super().__init__(
            f"cell (t={t}, n={n}): correction m={m} exceeds class count {x_count}")
        self.cell = (t, n)
        self.x_count = x_count
        self.m = m


@lru_cache(maxsize=None)
def trace_classes(t: int) -> tuple[ClassWithExponent, ...]:
    """All trace-t classes, one per form class, tagged with residues.

    The residue is computed from a single matrix representative; it is
    well defined because the exponent mod 12 is a class function.
    """
    if t in (2, -2):
        raise ValueError("t = +-2 is excluded")
    out = []
    for key in quadforms.enumerate_classes(t):
        rep = quadforms.matrix_of_form(key.rep_form(), t)
        out.append(ClassWithExponent(key, t, sl2z.exponent_mod12(rep)))
    return tuple(out)


def class_count(t: int, n: int) -> int:
    """x_count: trace-t classes whose exponent residue is n mod 12."""
    residue = n % 12
    return sum(1 for cls in trace_classes(t) if cls.residue == residue)


def counts_row(t: int, n: int) -> CountsRow:
    x = class_count(t, n)
    m = birman_menasco.class_excess(t, n)
    if x - m < 0:
        raise LinkCountError(t, n, x, m)
    return CountsRow(t, n, x, m, x - m)


def link_count(t: int, n: int) -> int:
    """p: isotopy classes of braid-index-3 links in cell (t, n)."""
    return counts_row(t, n).p


def default_sweep_exponent(t: int) -> int:
    """A writhe comfortably below every exceptional threshold for t."""
    return -abs(t - 3) - 24


@dataclass(frozen=True)
class MainIdentityReport:
    """Both sides of h(t) = sum_{j<12} (p + m)(t, n+j), with the rows."""

    t: int
    n: int
    h: int
    window_total: int
    rows: tuple[CountsRow, ...]
    ok: bool

    def to_json(self) -> dict:
        return {"t": self.t, "n": self.n, "h_lhs": self.h,
                "window_rhs": self.window_total,
                "rows": [r.to_json() for r in self.rows],
                "pass": self.ok}


def check_main_identity(t: int, n: int) -> MainIdentityReport:
    """Evaluate the identity at (t, n); inequality is reported, not raised."""
    h = quadforms.class_number(t)
    rows = tuple(counts_row(t, n + j) for j in range(12))
    total = sum(r.p + r.m for r in rows)
    return MainIdentityReport(t, n, h, total, rows, h == total)


@dataclass(frozen=True)
class SymmetryReport:
    """Window sums of p at (t, n) and at (-t, n+6), which agree for low n."""

    t: int
    n: int
    lhs: int
    rhs: int
    ok: bool

    def to_json(self) -> dict:
        return {"t": self.t, "n": self.n, "lhs": self.lhs, "rhs": self.rhs,
                "pass": self.ok}


def check_window_symmetry(t: int, n: int) -> SymmetryReport:
    lhs = sum(link_count(t, n + j) for j in range(12))
    rhs = sum(link_count(-t, n + 6 + j) for j in range(12))
    return SymmetryReport(t, n, lhs, rhs, lhs == rhs)


# --- braid word census -------------------------------------------------

_GEN_STEPS = (
    # (matrix as (a, b, c, d), exponent step, letter id, inverse letter id)
    ((1, 1, 0, 1), 1, 0, 1),
    ((1, -1, 0, 1), -1, 1, 0),
    ((1, 0, -1, 1), 1, 2, 3),
    ((1, 0, 1, 1), -1, 3, 2),
)

_census_tables: dict[tuple[int, int, int], dict[tuple[int, int], int]] = {}
_key_memo: dict[tuple[int, int, int, int], FormClassKey] = {}


def _matrix_class_key(m: tuple[int, int, int, int]) -> FormClassKey:
    key = _key_memo.get(m)
    if key is None:
        a, b, c, d = m
        key = quadforms.reduce(QForm(b, d - a, -c))
        _key_memo[m] = key
    return key


def census_table(max_len: int, trace_bound: int, exponent_bound: int) -> dict[tuple[int, int], int]:
    """Distinct-class counts per (t, n) cell from words up to max_len.

    Walks all freely reduced words (a letter never follows its inverse;
    free reduction preserves the group element, so nothing reachable is
    missed) and collects the class key of the integer matrix image
    together with the exact exponent sum.  Cells with |t| or |n| above
    the bounds, or t = +-2, are not tracked.
    """
    cache_key = (max_len, trace_bound, exponent_bound)
    table = _census_tables.get(cache_key)
    if table is not None:
        return table
    cells: dict[tuple[int, int], set[FormClassKey]] = {}

    def visit(m: tuple[int, int, int, int], eps: int, depth: int, last: int) -> None:
        t = m[0] + m[3]
        if abs(t) <= trace_bound and abs(eps) <= exponent_bound and t not in (2, -2):
            cells.setdefault((t, eps), set()).add(_matrix_class_key(m))
        if depth == max_len:
            return
        a, b, c, d = m
        for (e, f, g, h), step, letter, inverse in _GEN_STEPS:
            if inverse == last:
                continue
            visit((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h),
                  eps + step, depth + 1, letter)

    visit((1, 0, 0, 1), 0, 0, -1)
    table = {cell: len(keys) for cell, keys in cells.items()}
    _census_tables[cache_key] = table
    return table


def braid_census(t: int, n: int, max_len: int) -> int:
    """Certified lower bound for class_count(t, n) from words up to max_len.

    Monotone in max_len and never exceeds class_count: distinct census
    keys are distinct conjugacy classes of trace t and exponent n.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if t in (2, -2):
        raise ValueError("t = +-2 is excluded")
    table = census_table(max_len, max(8, abs(t)), max(8, abs(n)))
    return table.get((t, n), 0)
