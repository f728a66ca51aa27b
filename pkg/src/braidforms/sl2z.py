"""Exact SL2(Z) arithmetic, generator decomposition, and conjugacy.

The group is generated by S = [[1,1],[0,1]] and T = [[1,0],[-1,1]],
subject to STS = TST and (ST)^6 = I.  Abelianizing that presentation
identifies S and T and kills 12 times the generator, so the total
power sum of any S/T decomposition of a matrix is well defined modulo
12.  That residue is the exponent class function computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

#: An S/T word: pairs (generator, power) with generator "S" or "T",
#: multiplied left to right.
STWord = list[tuple[str, int]]


@dataclass(frozen=True)
class Mat2Z:
    """A 2x2 integer matrix [[a,b],[c,d]] of determinant +1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant is not 1: {self.as_rows()}")

    def __mul__(self, other: "Mat2Z") -> "Mat2Z":
        return Mat2Z(self.a * other.a + self.b * other.c,
                     self.a * other.b + self.b * other.d,
                     self.c * other.a + self.d * other.c,
                     self.c * other.b + self.d * other.d)

    def inverse(self) -> "Mat2Z":
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def trace(self) -> int:
        return self.a + self.d

    def as_rows(self) -> list[list[int]]:
        """Row-major nested lists, the JSON rendering of a matrix."""
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = Mat2Z(1, 0, 0, 1)
S = Mat2Z(1, 1, 0, 1)
T = Mat2Z(1, 0, -1, 1)


def gen_power(gen: str, p: int) -> Mat2Z:
    """S**p or T**p in closed form."""
    if gen == "S":
        return Mat2Z(1, p, 0, 1)
    if gen == "T":
        return Mat2Z(1, 0, -p, 1)
    raise ValueError(f"unknown generator {gen!r}")


def st_product(word: STWord) -> Mat2Z:
    """Multiply out an S/T word."""
    m = IDENTITY
    for gen, p in word:
        m = m * gen_power(gen, p)
    return m


def _round_div(n: int, d: int) -> int:
    # Nearest integer to n/d, ties toward +infinity.
    if d < 0:
        n, d = -n, -d
    return (2 * n + d) // (2 * d)


def decompose_st(m: Mat2Z) -> STWord:
    """Write m as a word in S and T powers.

    The first column is reduced by the Euclidean algorithm: T powers
    shrink the lower-left entry modulo the upper-left one and S powers
    do the reverse, until the matrix is upper triangular; a final S
    power and, for diagonal -1, the relation (ST)^3 = -I finish the
    job.  The output word is not canonical; its defining property is
    st_product(decompose_st(m)) == m.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    prefix: list[tuple[str, int]] = []  # product(prefix) * m == current

    def apply(gen: str, p: int) -> None:
        nonlocal a, b, c, d
        if p == 0:
            return
        if gen == "S":
            a, b = a + p * c, b + p * d
        else:
            c, d = c - p * a, d - p * b
        prefix.insert(0, (gen, p))

    while c != 0:
        if a == 0:
            apply("S", 1)
            continue
        apply("T", _round_div(c, a))
        if c != 0:
            apply("S", -_round_div(a, c))
    if a == 1:
        apply("S", -b)
    else:
        # a == d == -1; clear b, then cancel -I against (ST)^3.
        apply("S", b)
        for _ in range(3):
            apply("T", 1)
            apply("S", 1)
    assert (a, b, c, d) == (1, 0, 0, 1)
    word = [(gen, -p) for gen, p in reversed(prefix)]
    # Merge adjacent equal generators so every stored power is nonzero.
    merged: STWord = []
    for gen, p in word:
        if merged and merged[-1][0] == gen:
            p += merged[-1][1]
            merged.pop()
        if p != 0:
            merged.append((gen, p))
    return merged


def exponent_mod12(m: Mat2Z) -> int:
    """Total S/T power sum of m, modulo 12.

    This is a class function and a homomorphism onto Z/12; on images
    of braid words it reduces the braid exponent sum mod 12.
    """
    return sum(p for _, p in decompose_st(m)) % 12


def is_conjugate(m: Mat2Z, n: Mat2Z) -> bool:
    """Decide SL2(Z) conjugacy for matrices of shared trace t != +-2.

    Routes through the trace-t matrices <-> discriminant t^2-4 form
    classes correspondence: conjugate matrices yield equivalent forms
    and vice versa.
    """
    if m.trace() in (2, -2) or n.trace() in (2, -2):
        raise ValueError("trace +-2 (parabolic/central) is not supported")
    if m.trace() != n.trace():
        return False
    from . import quadforms

    return quadforms.equivalent(quadforms.form_of_matrix(m),
                                quadforms.form_of_matrix(n))
