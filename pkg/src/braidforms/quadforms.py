"""Integral binary quadratic forms of discriminant t^2 - 4.

Covers the SL2(Z) substitution action, Gauss reduction (unique reduced
representative for definite forms, reduced cycles for indefinite ones),
class enumeration and class numbers, and the classical correspondence
between trace-t conjugacy classes and form classes of discriminant
t^2 - 4, in both directions.

For t != +-2 the discriminant t^2 - 4 is never zero or a perfect
square, so all forms in this pipeline have a != 0 and c != 0.  Both
definiteness signs are first-class citizens when the discriminant is
negative: a matrix of trace 0 may be conjugate to a rotation or its
inverse, and those two classes map to x^2 + y^2 and -x^2 - y^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .sl2z import Mat2Z


@dataclass(frozen=True)
class QForm:
    """The form a*x^2 + b*xy + c*y^2 with integer coefficients."""

    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __neg__(self) -> "QForm":
        return QForm(-self.a, -self.b, -self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class FormClassKey:
    """Canonical key of a form equivalence class.

    ``rep`` is the unique reduced representative for negative
    discriminant (sign of a preserved) and the lexicographically least
    member of the reduced cycle for positive discriminant.  Two keys
    are equal exactly when the underlying forms are equivalent; the
    cycle tuple is derived data and excluded from comparisons.
    """

    disc: int
    rep: tuple[int, int, int]
    cycle: tuple[tuple[int, int, int], ...] | None = field(default=None, compare=False)

    def rep_form(self) -> QForm:
        return QForm(*self.rep)

    def to_json(self) -> dict:
        out: dict = {"repr": list(self.rep), "discriminant": self.disc}
        if self.disc > 0:
            out["cycle"] = [list(f) for f in self.cycle or ()]
        return out


def act(m: Mat2Z, f: QForm) -> QForm:
    """Substitute (x, y) -> (a*x + b*y, c*x + d*y) into f.

    Composition order is act(M, act(N, f)) == act(N * M, f); the
    discriminant is preserved.
    """
    al, be, ga, de = m.a, m.b, m.c, m.d
    a, b, c = f.a, f.b, f.c
    return QForm(a * al * al + b * al * ga + c * ga * ga,
                 2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
                 a * be * be + b * be * de + c * de * de)


def _check_discriminant(disc: int) -> int:
    if disc == 0:
        raise ValueError("zero discriminant is not supported")
    if disc > 0:
        r = math.isqrt(disc)
        if r * r == disc:
            raise ValueError(f"square discriminant {disc} is not supported")
        return r
    return 0


def _reduce_definite(a: int, b: int, c: int) -> tuple[int, int, int]:
    # Positive definite Gauss reduction: -a < b <= a <= c, b >= 0 if a == c.
    while True:
        if c < a:
            a, b, c = c, -b, a
        elif b > a or b <= -a:
            r = (b + a) % (2 * a)
            bp = r - a
            if bp == -a:
                bp = a
            k = (bp - b) // (2 * a)
            c = a * k * k + b * k + c
            b = bp
        else:
            if a == c and b < 0:
                b = -b
            return (a, b, c)


def _is_reduced_indefinite(f: tuple[int, int, int], root: int) -> bool:
    a, b, _ = f
    if b < 1 or b > root:
        return False
    return root - b + 1 <= 2 * abs(a) <= root + b


def _neighbor(f: tuple[int, int, int], disc: int, root: int) -> tuple[int, int, int]:
    """One reduction step (a,b,c) -> (c,b',c') with b' = -b mod 2|c|.

    For |c| <= root the new middle coefficient is the largest value
    below sqrt(disc) in its residue class; otherwise it is the absolutely
    least one.  Iterating from any form of positive non-square
    discriminant reaches a reduced form, and on reduced forms this step
    walks the cycle.
    """
    _, b, c = f
    m = 2 * abs(c)
    if abs(c) > root:
        bp = (-b) % m
        if bp > abs(c):
            bp -= m
    else:
        bp = -b + m * ((root + b) // m)
    num = bp * bp - disc
    assert num % (4 * c) == 0
    return (c, bp, num // (4 * c))


def _indefinite_cycle(f: tuple[int, int, int], disc: int, root: int) -> tuple[tuple[int, int, int], ...]:
    g = f
    for _ in range(100000):
        if _is_reduced_indefinite(g, root):
            break
        g = _neighbor(g, disc, root)
    else:
        raise RuntimeError(f"reduction did not terminate on {f}")
    cycle = [g]
    h = _neighbor(g, disc, root)
    while h != g:
        cycle.append(h)
        h = _neighbor(h, disc, root)
    # Rotate to start at the least member so the cycle is canonical.
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def reduce(f: QForm) -> FormClassKey:
    """Canonical class key of f.  Rejects square and zero discriminants."""
    disc = f.discriminant()
    root = _check_discriminant(disc)
    if disc < 0:
        if f.a > 0:
            rep = _reduce_definite(f.a, f.b, f.c)
        else:
            x, y, z = _reduce_definite(-f.a, -f.b, -f.c)
            rep = (-x, -y, -z)
        return FormClassKey(disc, rep)
    cycle = _indefinite_cycle(f.triple(), disc, root)
    return FormClassKey(disc, min(cycle), cycle)


def equivalent(f: QForm, g: QForm) -> bool:
    """Same SL2(Z) orbit test, via equality of class keys."""
    if f.discriminant() != g.discriminant():
        _check_discriminant(f.discriminant())
        _check_discriminant(g.discriminant())
        return False
    return reduce(f) == reduce(g)


def _reduced_indefinite_forms(disc: int, root: int) -> list[tuple[int, int, int]]:
    # All reduced forms: 0 < b < sqrt(disc), ac = (b^2 - disc)/4 < 0,
    # and sqrt(disc) - b < 2|a| < sqrt(disc) + b.
    out = []
    for b in range(1, root + 1):
        if (disc - b * b) % 4:
            continue
        prod = (disc - b * b) // 4  # |a| * |c|
        for aa in range(1, math.isqrt(prod) + 1):
            if prod % aa:
                continue
            for mag in {aa, prod // aa}:
                if root - b + 1 <= 2 * mag <= root + b:
                    cc = prod // mag
                    out.append((mag, b, -cc))
                    out.append((-mag, b, cc))
    return sorted(set(out))


@lru_cache(maxsize=None)
def enumerate_classes(t: int) -> tuple[FormClassKey, ...]:
    """All form classes of discriminant t^2 - 4, for t != +-2.

    Negative discriminant (|t| < 2): reduced positive definite forms
    are enumerated with the classical bound a <= sqrt(|D|/3), and each
    contributes its negative as a separate negative definite class.
    Positive discriminant: all reduced forms are enumerated and grouped
    into neighbor-step cycles, one class per cycle.
    """
    if t in (2, -2):
        raise ValueError("t = +-2 is excluded (discriminant 0)")
    disc = t * t - 4
    root = _check_discriminant(disc)
    if disc < 0:
        reps = []
        for a in range(1, math.isqrt(-disc // 3) + 1):
            for b in range(-a + 1, a + 1):
                if (b * b - disc) % (4 * a):
                    continue
                c = (b * b - disc) // (4 * a)
                if c < a or (a == c and b < 0):
                    continue
                reps.append((a, b, c))
        keys = [FormClassKey(disc, rep) for rep in reps]
        keys += [FormClassKey(disc, (-a, -b, -c)) for a, b, c in reps]
        return tuple(keys)
    remaining = set(_reduced_indefinite_forms(disc, root))
    keys = []
    while remaining:
        seed = min(remaining)
        cycle = _indefinite_cycle(seed, disc, root)
        for g in cycle:
            remaining.discard(g)
        keys.append(FormClassKey(disc, min(cycle), cycle))
    return tuple(sorted(keys, key=lambda k: k.rep))


def class_number(t: int) -> int:
    """h(t): the number of form classes of discriminant t^2 - 4."""
    return len(enumerate_classes(t))


def form_of_matrix(m: Mat2Z) -> QForm:
    """The form b*x^2 + (d-a)*xy - c*y^2 attached to [[a,b],[c,d]].

    Constant on conjugacy classes up to equivalence, with discriminant
    trace^2 - 4; defined for trace != +-2.
    """
    if m.trace() in (2, -2):
        raise ValueError("trace +-2 is excluded")
    return QForm(m.b, m.d - m.a, -m.c)


def matrix_of_form(f: QForm, t: int) -> Mat2Z:
    """A trace-t matrix mapping back to f under form_of_matrix.

    With f = (a, b, c) of discriminant t^2 - 4 the matrix is
    [[(t-b)/2, a], [-c, (t+b)/2]]: the parity b = t mod 2 is forced by
    the discriminant, the determinant is 1, and the round trip
    form_of_matrix(matrix_of_form(f, t)) == f is exact.
    """
    if t in (2, -2):
        raise ValueError("t = +-2 is excluded")
    if f.discriminant() != t * t - 4:
        raise ValueError(f"discriminant {f.discriminant()} does not match t^2 - 4 = {t * t - 4}")
    return Mat2Z((t - f.b) // 2, f.a, -f.c, (t + f.b) // 2)
