"""Braid words in B3 and the invariants of their closures.

B3 has Artin generators s1, s2 with s1 s2 s1 = s2 s1 s2 and Garside
element D = s1 s2 s1.  Words are plain letter sequences; no normal
form is computed.  Three compatible measurements are taken along a
word: the exponent sum (abelianization), the reduced Burau matrix over
Z[q^{+-1}], and the integer matrix image under s1 -> S, s2 -> T, which
is the Burau matrix specialized at q = -1.  The Alexander and Jones
polynomials of the braid closure are closed functions of the Burau
trace and the exponent sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sl2z
from .laurent import (CYCLOTOMIC3, GaussInt, HalfLaurent, NEG_INV_SQRT_Q,
                      NEG_Q, ONE, SQRT_Q, ZERO, i_power, monomial_pow)

#: Letters are +-1 and +-2: the generator index, negated for inverses.
VALID_LETTERS = (1, -1, 2, -2)


class BraidParseError(ValueError):
    """Syntax error in a braid word, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class BraidWord:
    """A finite word in the generators of B3 and their inverses."""

    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter not in VALID_LETTERS:
                raise ValueError(f"invalid letter {letter}; use +-1, +-2")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse the whitespace-separated token grammar.

        A token is a signed generator index 1 or 2 with an optional
        integer power, e.g. "1 2 -1" or "1^-1 2^3".  Negative powers
        invert the letter; a power of zero contributes nothing.
        """
        letters: list[int] = []
        pos = 0
        for token in text.split():
            pos = text.index(token, pos)
            base, _, power_text = token.partition("^")
            try:
                letter = int(base)
            except ValueError:
                raise BraidParseError(f"malformed generator {base!r}", pos) from None
            if letter not in VALID_LETTERS:
                raise BraidParseError(f"generator index out of range for B3: {base}", pos)
            power = 1
            if "^" in token:
                try:
                    power = int(power_text)
                except ValueError:
                    raise BraidParseError(f"malformed power {power_text!r}", pos) from None
            if power < 0:
                letter, power = -letter, -power
            letters.extend([letter] * power)
            pos += len(token)
        return cls(tuple(letters))

    def render(self) -> str:
        """Inverse of parse on its image: runs collapse to powers."""
        parts = []
        i = 0
        letters = self.letters
        while i < len(letters):
            j = i
            while j < len(letters) and letters[j] == letters[i]:
                j += 1
            run = j - i
            parts.append(str(letters[i]) if run == 1 else f"{letters[i]}^{run}")
            i = j
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def exponent_sum(w: BraidWord) -> int:
    """The abelianization B3 -> Z: signed letter count."""
    return sum(1 if letter > 0 else -1 for letter in w.letters)


def garside_power(k: int) -> BraidWord:
    """The word (s1 s2 s1)**k for k >= 0; exponent sum 3k."""
    if k < 0:
        raise ValueError("negative powers are built from inverse letters by the caller")
    return BraidWord((1, 2, 1) * k)


@dataclass(frozen=True)
class BurauMat:
    """A 2x2 matrix over Z[q^{+-1}], row-major entries."""

    e11: HalfLaurent
    e12: HalfLaurent
    e21: HalfLaurent
    e22: HalfLaurent

    def __mul__(self, other: "BurauMat") -> "BurauMat":
        return BurauMat(self.e11 * other.e11 + self.e12 * other.e21,
                        self.e11 * other.e12 + self.e12 * other.e22,
                        self.e21 * other.e11 + self.e22 * other.e21,
                        self.e21 * other.e12 + self.e22 * other.e22)

    def trace(self) -> HalfLaurent:
        return self.e11 + self.e22

    def det(self) -> HalfLaurent:
        return self.e11 * self.e22 - self.e12 * self.e21

    def entries(self) -> tuple[HalfLaurent, HalfLaurent, HalfLaurent, HalfLaurent]:
        return (self.e11, self.e12, self.e21, self.e22)

    def at_q_minus_one(self) -> sl2z.Mat2Z:
        """Entrywise evaluation at q = -1; the result is integral."""
        values = []
        for entry in self.entries():
            g = entry.at_q_minus_one()
            if g.im != 0:
                raise ArithmeticError(f"non-integer specialization {g} of {entry}")
            values.append(g.re)
        return sl2z.Mat2Z(*values)


_BURAU_IDENTITY = BurauMat(ONE, ZERO, ZERO, ONE)

# Generator images and their exact symbolic inverses.
_BURAU_GEN = {
    1: BurauMat(ONE, NEG_Q, ZERO, NEG_Q),
    -1: BurauMat(ONE, HalfLaurent({0: -1}), ZERO, HalfLaurent({-2: -1})),
    2: BurauMat(NEG_Q, ZERO, HalfLaurent({0: -1}), ONE),
    -2: BurauMat(HalfLaurent({-2: -1}), ZERO, HalfLaurent({-2: -1}), ONE),
}

_PHI_GEN = {
    1: sl2z.S,
    -1: sl2z.S.inverse(),
    2: sl2z.T,
    -2: sl2z.T.inverse(),
}


def burau(w: BraidWord) -> BurauMat:
    """The reduced Burau matrix of w: the ordered product of generator images."""
    m = _BURAU_IDENTITY
    for letter in w.letters:
        m = m * _BURAU_GEN[letter]
    return m


def phi(w: BraidWord) -> sl2z.Mat2Z:
    """The integer matrix image of w under s1 -> S, s2 -> T."""
    m = sl2z.IDENTITY
    for letter in w.letters:
        m = m * _PHI_GEN[letter]
    return m


def trace_b3(w: BraidWord) -> int:
    """Trace of phi(w); a class function on B3."""
    return phi(w).trace()


def alexander(w: BraidWord) -> HalfLaurent:
    """Alexander polynomial of the closure of w.

    Computed as (-1/sqrt(q))^(eps-2) * (1 - tr Burau + (-q)^eps) / (1+q+q^2);
    the division is exact for every braid word.
    """
    eps = exponent_sum(w)
    numerator = ONE - burau(w).trace() + monomial_pow(NEG_Q, eps)
    quotient = numerator.exact_div(CYCLOTOMIC3)
    return monomial_pow(NEG_INV_SQRT_Q, eps - 2) * quotient


def jones(w: BraidWord) -> HalfLaurent:
    """Jones polynomial of the closure of w: sqrt(q)^eps * (q + 1/q + tr Burau)."""
    eps = exponent_sum(w)
    ring_part = HalfLaurent({2: 1, -2: 1}) + burau(w).trace()
    return monomial_pow(SQRT_Q, eps) * ring_part


def special_value(w: BraidWord) -> GaussInt:
    """i^eps * (trace - 2): the shared value of Alexander and Jones at q = -1."""
    return i_power(exponent_sum(w)) * GaussInt(trace_b3(w) - 2, 0)
