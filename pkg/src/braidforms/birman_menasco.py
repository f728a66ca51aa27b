"""Exceptional fibers of the braid-closure map on conjugacy classes.

Closing a braid forgets some conjugacy data: the unknot closes three
distinct classes, each (2,k) torus link closes two classes that land in
different (trace, exponent) cells, and two infinite families of 3-braids

    iii: D^2k s1^-1 s2^u s1^-v s2^w          k in {0,1}, u != w, v >= 2
    iv:  D^2k s1^-1 s2^u s1^-1 s2^v s1^-1 s2^w   k in {1,2}, u,v,w distinct

each close a pair of distinct classes (the partner word swaps u and w
in family iii and v and w in family iv) to a single link.  This module
evaluates the closed trace/exponent formulas of those families, counts
how many links of each kind occupy a given (trace, exponent) cell, and
produces the correction

    class_excess(t, n) = #classes in the cell - #links in the cell

used to convert class counts into link counts.  A parameter set is
counted once per link: {u, w} unordered in family iii and {u, v, w}
unordered in family iv, since permuting those slots reproduces the same
closure.  Counting ordered tuples instead would double (respectively
sextuple) the family contributions and push link counts negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import braid3
from .braid3 import BraidWord


def _delta_even_power(k: int) -> BraidWord:
    return braid3.garside_power(2 * k)


def _power_word(letter: int, count: int) -> tuple[int, ...]:
    if count >= 0:
        return (letter,) * count
    return (-letter,) * (-count)


def family_iii_word(u: int, v: int, w: int, k: int) -> BraidWord:
    """D^2k s1^-1 s2^u s1^-v s2^w."""
    return BraidWord(_delta_even_power(k).letters
                     + (-1,) + _power_word(2, u) + _power_word(-1, v) + _power_word(2, w))


def family_iv_word(u: int, v: int, w: int, k: int) -> BraidWord:
    """D^2k s1^-1 s2^u s1^-1 s2^v s1^-1 s2^w."""
    return BraidWord(_delta_even_power(k).letters
                     + (-1,) + _power_word(2, u)
                     + (-1,) + _power_word(2, v)
                     + (-1,) + _power_word(2, w))


def _check_family_iii(u: int, v: int, w: int, k: int) -> None:
    if min(u, v, w) < 1 or u == w or v < 2 or k not in (0, 1):
        raise ValueError(f"outside the family-iii domain: u={u} v={v} w={w} k={k}")


def _check_family_iv(u: int, v: int, w: int, k: int) -> None:
    if min(u, v, w) < 1 or len({u, v, w}) != 3 or k not in (1, 2):
        raise ValueError(f"outside the family-iv domain: u={u} v={v} w={w} k={k}")


def family_iii_trace_exp(u: int, v: int, w: int, k: int) -> tuple[int, int]:
    """Closed trace and exponent of the family-iii classes.

    trace = (-1)^k (2 + (u+w)(1+v) + uvw), exponent = u+w-v-1+6k;
    symmetric in u and w.
    """
    _check_family_iii(u, v, w, k)
    sign = -1 if k % 2 else 1
    return (sign * (2 + (u + w) * (1 + v) + u * v * w), u + w - v - 1 + 6 * k)


def family_iv_trace_exp(u: int, v: int, w: int, k: int) -> tuple[int, int]:
    """Closed trace and exponent of the family-iv classes.

    In elementary symmetric functions e1, e2, e3 of (u, v, w) the trace
    is (-1)^k (2 + 3 e1 + 2 e2 + e3) and the exponent is e1 - 3 + 6k;
    fully symmetric.  The grouping was calibrated against direct
    matrix computation on the explicit words.
    """
    _check_family_iv(u, v, w, k)
    e1 = u + v + w
    e2 = u * v + v * w + w * u
    e3 = u * v * w
    sign = -1 if k % 2 else 1
    return (sign * (2 + 3 * e1 + 2 * e2 + e3), e1 - 3 + 6 * k)


@lru_cache(maxsize=None)
def _family_solutions(t: int) -> tuple[tuple[str, tuple[int, int, int, int], int], ...]:
    """All normalized family parameter sets of trace t, with exponents.

    Family iii solutions are normalized to u < w, family iv to
    u < v < w, so each entry is one link.  The trace formulas have all
    terms positive after the (-1)^k sign, which bounds every parameter
    by |t| and fixes the usable k values by the sign of t.
    """
    sols = []
    for k in (0, 1):
        target = (t if k == 0 else -t) - 2  # (u+w)(1+v) + uvw
        if target < 2:
            continue
        for v in range(2, target + 1):
            for u in range(1, target + 1):
                rest = target - u * (1 + v)
                if rest <= 0:
                    break
                den = 1 + v + u * v
                if rest % den:
                    continue
                w = rest // den
                if w > u:  # u < w normalizes the unordered pair {u, w}
                    sols.append(("iii", (u, v, w, k), u + w - v - 1 + 6 * k))
    for k in (1, 2):
        target = (-t if k == 1 else t) - 2  # 3 e1 + 2 e2 + e3
        if target < 2:
            continue
        for u in range(1, target + 1):
            if 3 * u > target:
                break
            for v in range(u + 1, target + 1):
                rest = target - 3 * (u + v) - 2 * u * v
                if rest <= 0:
                    break
                den = 3 + 2 * (u + v) + u * v
                if rest % den:
                    continue
                w = rest // den
                if w > v:  # u < v < w normalizes the set {u, v, w}
                    sols.append(("iv", (u, v, w, k), u + v + w - 3 + 6 * k))
    return tuple(sols)


def shared_closure_count(t: int, n: int) -> int:
    """Number of links in cell (t, n) whose fiber is a pair of classes."""
    return sum(1 for _, _, exp in _family_solutions(t) if exp == n)


def _low_index_bonus(t: int, n: int) -> int:
    # Conjugacy classes in the cell whose closure has braid index 1 or 2:
    # the three unknot classes at (1, +-2) and (3, 0), and one torus class
    # at each of (t, t-3) and (t, 3-t) for the remaining traces.
    if t == 1:
        return 1 if n in (2, -2) else 0
    if t == 3:
        return 1 if n == 0 else 0
    return 1 if n in (t - 3, 3 - t) else 0


def class_excess(t: int, n: int) -> int:
    """The correction M: classes in cell (t, n) minus links in cell (t, n)."""
    return shared_closure_count(t, n) + _low_index_bonus(t, n)


@dataclass(frozen=True)
class ExceptionalWitness:
    """One exceptional fiber in a cell: its words and shared invariants."""

    family: str  # "unknot" | "torus" | "family-iii" | "family-iv"
    params: tuple[int, ...]
    words: tuple[BraidWord, ...]
    trace: int
    exponent: int

    def to_json(self) -> dict:
        return {"family": self.family,
                "params": list(self.params),
                "words": [w.render() for w in self.words]}


def _make_witness(family: str, params: tuple[int, ...],
                  words: tuple[BraidWord, ...]) -> ExceptionalWitness:
    values = {(braid3.trace_b3(w), braid3.exponent_sum(w)) for w in words}
    if len(values) != 1:
        raise AssertionError(f"witness words disagree on (trace, exponent): {values}")
    (t, n), = values
    return ExceptionalWitness(family, params, words, t, n)


def witnesses(t: int, n: int) -> list[ExceptionalWitness]:
    """Explicit braid words behind every unit counted in class_excess(t, n)."""
    out = []
    for family, (u, v, w, k), exp in _family_solutions(t):
        if exp != n:
            continue
        if family == "iii":
            words = (family_iii_word(u, v, w, k), family_iii_word(w, v, u, k))
            out.append(_make_witness("family-iii", (u, v, w, k), words))
        else:
            words = (family_iv_word(u, v, w, k), family_iv_word(u, w, v, k))
            out.append(_make_witness("family-iv", (u, v, w, k), words))
    if _low_index_bonus(t, n):
        if t == 1:
            word = BraidWord((1, 2)) if n == 2 else BraidWord((-1, -2))
            out.append(_make_witness("unknot", (), (word,)))
        elif t == 3:
            out.append(_make_witness("unknot", (), (BraidWord((1, -2)),)))
        elif n == t - 3:
            k = t - 2
            out.append(_make_witness("torus", (k,),
                                     (BraidWord(_power_word(1, k) + (-2,)),)))
        else:
            k = 2 - t
            out.append(_make_witness("torus", (k,),
                                     (BraidWord(_power_word(1, k) + (2,)),)))
    return out
