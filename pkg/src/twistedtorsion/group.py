"""Free-group words, finite presentations, integral group rings and Fox calculus."""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed word or presentation input."""


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; ``letters`` is a tuple of ``(generator, +1 | -1)``."""

    letters: tuple = ()

    @classmethod
    def reduce(cls, letters) -> FreeWord:
        return cls(tuple(word_reduce(letters)))

    @classmethod
    def generator(cls, i: int, e: int = 1) -> FreeWord:
        return cls(((i, 1 if e > 0 else -1),))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        a, b = self.letters, other.letters
        k = 0
        while k < len(a) and k < len(b) and a[-1 - k][0] == b[k][0] and a[-1 - k][1] == -b[k][1]:
            k += 1
        return FreeWord(a[: len(a) - k] + b[k:])

    def inverse(self) -> FreeWord:
        return FreeWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def __pow__(self, n: int) -> FreeWord:
        base = self if n >= 0 else self.inverse()
        out = FreeWord()
        for _ in range(abs(n)):
            out = out * base
        return out

    def exponent_sums(self, ngens: int) -> list[int]:
        sums = [0] * ngens
        for i, e in self.letters:
            sums[i] += e
        return sums

    def rotate(self, k: int) -> FreeWord:
        """Cyclic rotation (then free reduction)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return FreeWord.reduce(self.letters[k:] + self.letters[:k])

    def format(self, names) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[i] if e > 0 else f"{names[i]}^-1" for i, e in self.letters)


IDENTITY = FreeWord()


def word_reduce(letters) -> list:
    """Free reduction by cancelling adjacent ``x x^-1`` pairs (stack based)."""
    out = []
    for i, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {e}")
        if out and out[-1][0] == i and out[-1][1] == -e:
            out.pop()
        else:
            out.append((i, e))
    return out


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^\{?([+-]?\d+)\}?)?$")


def parse_word(text: str, names) -> FreeWord:
    """Parse whitespace-separated tokens ``name`` or ``name^k`` (``k`` any integer)."""
    index = {n: i for i, n in enumerate(names)}
    letters = []
    text = text.strip()
    if text in ("", "1"):
        return IDENTITY
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"malformed token {tok!r}")
        name, exp = m.group(1), m.group(2)
        if name not in index:
            raise ParseError(f"unknown generator {name!r} in token {tok!r}")
        k = int(exp) if exp is not None else 1
        letters.extend([(index[name], 1 if k > 0 else -1)] * abs(k))
    return FreeWord.reduce(letters)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be unique")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            for i, _ in r.letters:
                if not 0 <= i < len(gens):
                    raise ValueError(f"relator references generator index {i}")

    @classmethod
    def parse(cls, generators, relators) -> GroupPresentation:
        gens = tuple(generators)
        return cls(gens, tuple(parse_word(r, gens) for r in relators))

    @property
    def deficiency(self) -> int:
        return len(self.generators) - len(self.relators)

    def word(self, text: str) -> FreeWord:
        return parse_word(text, self.generators)

    def format_relator(self, i: int) -> str:
        return self.relators[i].format(self.generators)

    def fox_matrix(self):
        """Rows indexed by relators, columns by generators."""
        return [[fox_derivative(r, j) for j in range(len(self.generators))] for r in self.relators]


class GroupRingElement:
    """Finite integral combination of free words (an element of Z[F])."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            if c:
                clean[w] = c
        self.terms = clean

    @classmethod
    def word(cls, w: FreeWord, c: int = 1) -> GroupRingElement:
        return cls({w: c})

    @classmethod
    def one(cls) -> GroupRingElement:
        return cls({IDENTITY: 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement({IDENTITY: other})
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement({IDENTITY: other})
        out = defaultdict(int, self.terms)
        for w, c in other.terms.items():
            out[w] += c
        return GroupRingElement(out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement({IDENTITY: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        if isinstance(other, FreeWord):
            other = GroupRingElement.word(other)
        return ring_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, FreeWord):
            return ring_multiply(GroupRingElement.word(other), self)
        return NotImplemented

    def format(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0].letters)):
            body = w.format(names)
            if body == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GroupRingElement({self.terms!r})"


def ring_multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution product in Z[F] with free reduction of the product words."""
    out = defaultdict(int)
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            out[u * v] += c * d
    return GroupRingElement(out)


def fox_derivative(w: FreeWord, j: int) -> GroupRingElement:
    """Fox derivative of ``w`` with respect to generator ``j``.

    Scanning left to right with running prefix ``u``: a letter ``x_j``
    contributes ``+u``, a letter ``x_j^-1`` contributes ``-u x_j^-1``.
    """
    out = defaultdict(int)
    prefix = IDENTITY
    for i, e in w.letters:
        step = FreeWord(((i, e),))
        if i == j:
            if e > 0:
                out[prefix] += 1
            else:
                out[prefix * step] -= 1
        prefix = prefix * step
    return GroupRingElement(out)
