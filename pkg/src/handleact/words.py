"""Freely reduced words in a rank-g free group, and moves on image tuples.

A letter is a nonzero integer: +i stands for the generator x_i and -i for
its inverse, with 1 <= i <= rank.  Words are kept freely reduced at all
times.  Text form is whitespace-separated tokens "x3" / "X3" (uppercase
means inverse), e.g. "x1 x1 X2 X1".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DomainError, InputError


def free_reduce(letters: Iterable[int]) -> tuple:
    stack = []
    for v in letters:
        if stack and stack[-1] == -v:
            stack.pop()
        else:
            stack.append(v)
    return tuple(stack)


class FreeWord:
    """An immutable freely reduced word; letters are signed generator indices."""

    __slots__ = ("rank", "letters")

    def __init__(self, rank: int, letters: Iterable[int] = ()):
        if rank < 0:
            raise InputError("rank must be nonnegative")
        reduced = free_reduce(letters)
        for v in reduced:
            if v == 0 or abs(v) > rank:
                raise InputError("letter %d outside rank %d" % (v, rank))
        self.rank = rank
        self.letters = reduced

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return word_multiply(self, other)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-v for v in reversed(self.letters)))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        out = FreeWord(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return (isinstance(other, FreeWord)
                and self.rank == other.rank and self.letters == other.letters)

    def __hash__(self):
        return hash((self.rank, self.letters))

    def __repr__(self):
        return "FreeWord(%d, %r)" % (self.rank, format_word(self))

    def exponent_sums(self) -> list:
        """Abelianized image: exponent sum per generator, length = rank."""
        sums = [0] * self.rank
        for v in self.letters:
            sums[abs(v) - 1] += 1 if v > 0 else -1
        return sums

    def is_identity(self) -> bool:
        return not self.letters


def generator(rank: int, i: int, sign: int = 1) -> FreeWord:
    return FreeWord(rank, (i * sign,))


def word_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    if u.rank != v.rank:
        raise DomainError("rank mismatch: %d vs %d" % (u.rank, v.rank))
    return FreeWord(u.rank, u.letters + v.letters)


def evaluate_word(w: FreeWord, group, images: Sequence[int]) -> int:
    """Image of w under the homomorphism sending x_i to images[i-1]."""
    if len(images) != w.rank:
        raise DomainError("need %d images, got %d" % (w.rank, len(images)))
    acc = group.identity
    mul = group.mul
    inv = group.inv
    for v in w.letters:
        e = images[v - 1] if v > 0 else inv[images[-v - 1]]
        acc = mul[acc][e]
    return acc


_TOKEN = re.compile(r"^([xX])([1-9][0-9]*)$")


def parse_word(text: str, rank: int) -> FreeWord:
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise InputError("bad word token %r (expected e.g. x2 or X2)" % tok)
        i = int(m.group(2))
        if i > rank:
            raise InputError("generator index %d exceeds rank %d" % (i, rank))
        letters.append(i if m.group(1) == "x" else -i)
    return FreeWord(rank, letters)


def format_word(w: FreeWord) -> str:
    return " ".join("x%d" % v if v > 0 else "X%d" % -v for v in w.letters)


def attaching_words(g: int, n: int) -> list:
    """The g handle-attaching relators x_i^n (x_1 ... x_g)^-n, freely reduced.

    Requires g >= 2; the genus 0 and 1 cases are excluded from the closed
    constructions (see the actions module) and rejected here.
    """
    if g < 2:
        raise DomainError("attaching words need genus >= 2, got %d" % g)
    if n < 1:
        raise DomainError("twist order must be positive, got %d" % n)
    full_loop = FreeWord(g, range(1, g + 1))
    neg = full_loop.inverse() ** n
    return [generator(g, i) ** n * neg for i in range(1, g + 1)]


# ---------------------------------------------------------------------------
# Nielsen moves

SWAP = "swap"
INVERT = "invert"
LEFT_MULTIPLY = "left-multiply"
RIGHT_MULTIPLY = "right-multiply"

_KINDS = (SWAP, INVERT, LEFT_MULTIPLY, RIGHT_MULTIPLY)


@dataclass(frozen=True)
class NielsenMove:
    """One elementary move on a g-tuple; indices are 1-based.

    swap(i, j) exchanges entries; invert(i) inverts one entry;
    right-multiply(i, j, s) replaces t_i by t_i * t_j^s and left-multiply
    by t_j^s * t_i.
    """

    kind: str
    i: int
    j: Optional[int] = None
    sign: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise InputError("unknown Nielsen move kind %r" % self.kind)
        if self.i < 1:
            raise InputError("move index must be >= 1")
        if self.kind == INVERT:
            if self.j is not None or self.sign is not None:
                raise InputError("invert takes a single index")
        elif self.kind == SWAP:
            if self.j is None or self.sign is not None:
                raise InputError("swap takes two indices and no sign")
            if self.i == self.j:
                raise InputError("swap needs two distinct indices")
        else:
            if self.j is None or self.sign not in (1, -1):
                raise InputError("%s takes indices i, j and sign +-1" % self.kind)
            if self.i == self.j:
                raise DomainError("multiply moves need i != j")

    def inverse(self) -> "NielsenMove":
        if self.kind in (SWAP, INVERT):
            return self
        return NielsenMove(self.kind, self.i, self.j, -self.sign)

    def to_json(self) -> dict:
        d = {"kind": self.kind, "i": self.i}
        if self.j is not None:
            d["j"] = self.j
        if self.sign is not None:
            d["sign"] = self.sign
        return d

    @staticmethod
    def from_json(d: dict) -> "NielsenMove":
        return NielsenMove(d["kind"], d["i"], d.get("j"), d.get("sign"))


def apply_nielsen_move(group, images: Sequence[int], move: NielsenMove) -> tuple:
    """Image tuple after one elementary move."""
    g = len(images)
    if move.i > g or (move.j is not None and move.j > g):
        raise DomainError("move index outside tuple of length %d" % g)
    t = list(images)
    i = move.i - 1
    if move.kind == SWAP:
        j = move.j - 1
        t[i], t[j] = t[j], t[i]
    elif move.kind == INVERT:
        t[i] = group.inv[t[i]]
    else:
        j = move.j - 1
        factor = t[j] if move.sign > 0 else group.inv[t[j]]
        if move.kind == RIGHT_MULTIPLY:
            t[i] = group.mul[t[i]][factor]
        else:
            t[i] = group.mul[factor][t[i]]
    return tuple(t)


def elementary_moves(g: int) -> Iterator[NielsenMove]:
    """All single moves on a g-tuple, in a fixed order."""
    for i in range(1, g + 1):
        yield NielsenMove(INVERT, i)
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            yield NielsenMove(SWAP, i, j)
    for i, j in product(range(1, g + 1), repeat=2):
        if i == j:
            continue
        for sign in (1, -1):
            yield NielsenMove(RIGHT_MULTIPLY, i, j, sign)
            yield NielsenMove(LEFT_MULTIPLY, i, j, sign)
