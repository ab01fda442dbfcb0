"""Group presentations and free-group words.

Concrete syntax::

    < x, y, z | x^3 y^-2, [y,z] >

Generators are comma-separated identifiers, relators comma-separated words.
``^k`` binds to the preceding letter, ``(...)`` group or ``[u,v]``
commutator, and ``[u,v]`` means ``u v u^-1 v^-1``.  Uppercase letters are
ordinary generator names, never inverse shorthand.  ``()`` is the empty word.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Letter = Tuple[int, int]


class PresentationError(ValueError):
    """Base class for errors raised while reading a presentation."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PresentationSyntaxError(PresentationError):
    pass


class UnknownGeneratorError(PresentationError):
    pass


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if g < 0:
            raise ValueError(f"generator index must be nonnegative, got {g}")
        if stack and stack[-1] == (g, -s):
            stack.pop()
        else:
            stack.append((g, s))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """An element of a free group, stored freely reduced.

    ``letters`` is a tuple of ``(generator index, sign)`` pairs.  Construction
    always reduces, so two equal group elements compare equal.
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def exponent_sum(self, generator: int) -> int:
        return sum(s for g, s in self.letters if g == generator)

    def occurrences(self, generator: int) -> int:
        return sum(1 for g, _ in self.letters if g == generator)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    @classmethod
    def letter(cls, generator: int, sign: int = 1) -> "Word":
        return cls(((generator, sign),))


IDENTITY = Word()


def free_reduce(letters: Iterable[Letter] | Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    if isinstance(letters, Word):
        return letters
    return Word(tuple(letters))


def invert(w: Word) -> Word:
    return Word(tuple((g, -s) for g, s in reversed(w.letters)))


def concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def power(w: Word, k: int) -> Word:
    if k < 0:
        return power(invert(w), -k)
    return Word(w.letters * k)


def expand_commutator(a: Word, b: Word) -> Word:
    """``[a, b] = a b a^-1 b^-1``, freely reduced."""
    return Word(a.letters + b.letters + invert(a).letters + invert(b).letters)


@dataclass(frozen=True)
class Generator:
    index: int
    name: str


@dataclass(frozen=True)
class Presentation:
    generators: tuple[Generator, ...] = ()
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for i, g in enumerate(self.generators):
            if g.index != i:
                raise PresentationError(f"generator {g.name!r} has index {g.index}, expected {i}")
        for r in self.relators:
            if r.max_generator() >= len(self.generators):
                raise UnknownGeneratorError(
                    f"relator uses generator index {r.max_generator()} but only "
                    f"{len(self.generators)} generators exist"
                )

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @classmethod
    def from_names(cls, names: Sequence[str], relators: Sequence[Word] = ()) -> "Presentation":
        return cls(tuple(Generator(i, s) for i, s in enumerate(names)), tuple(relators))


# -- formatting ---------------------------------------------------------------

def format_word(w: Word, names: Sequence[str], compact: bool = False) -> str:
    """Letter-by-letter form, e.g. ``x x x y^-1 y^-1``, or with runs collapsed
    (``x^3 y^-2``) when ``compact``.  The empty word is ``()``."""
    if not w:
        return "()"
    if not compact:
        return " ".join(names[g] if s > 0 else f"{names[g]}^-1" for g, s in w.letters)
    parts = []
    for (g, s), run in itertools.groupby(w.letters):
        e = s * len(list(run))
        parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
    return " ".join(parts)


def format_presentation(p: Presentation) -> str:
    gens = ", ".join(p.names)
    rels = ", ".join(format_word(r, p.names) for r in p.relators)
    return f"<{gens} | {rels}>" if rels else f"<{gens} | >"


# -- parsing ------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"([+-]?)\s*(\d+)")
# keeps a typo like x^1000000000 from exhausting memory
MAX_EXPONENT = 100_000


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.names: dict[str, int] = {}

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise PresentationSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def ident(self) -> str:
        self._skip()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            raise PresentationSyntaxError("expected identifier", self.pos)
        self.pos = m.end()
        return m.group()

    def signed_int(self) -> int:
        self._skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise PresentationSyntaxError("expected integer exponent", self.pos)
        value = int(m.group(2))
        if value > MAX_EXPONENT:
            raise PresentationSyntaxError(f"exponent {value} exceeds {MAX_EXPONENT}", self.pos)
        self.pos = m.end()
        return -value if m.group(1) == "-" else value

    def presentation(self) -> Presentation:
        self.expect("<")
        gens: list[str] = []
        if self.peek() != "|":
            while True:
                start = self.pos
                name = self.ident()
                if name in self.names:
                    raise PresentationSyntaxError(f"duplicate generator {name!r}", start)
                self.names[name] = len(gens)
                gens.append(name)
                if self.peek() != ",":
                    break
                self.pos += 1
        self.expect("|")
        rels: list[Word] = []
        if self.peek() != ">":
            while True:
                rels.append(self.word())
                if self.peek() != ",":
                    break
                self.pos += 1
        self.expect(">")
        self._skip()
        if self.pos != len(self.text):
            raise PresentationSyntaxError("trailing input after '>'", self.pos)
        if not gens and rels:
            raise PresentationError("relators given but the generator list is empty")
        return Presentation.from_names(gens, rels)

    def word(self) -> Word:
        out = IDENTITY
        while self.peek() and (self.peek().isalpha() or self.peek() in "(["):
            out = concat(out, self.factor())
        return out

    def factor(self) -> Word:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
        elif ch == "[":
            self.pos += 1
            a = self.word()
            self.expect(",")
            b = self.word()
            self.expect("]")
            w = expand_commutator(a, b)
        else:
            name = self.ident()
            if name not in self.names:
                raise UnknownGeneratorError(f"unknown generator {name!r}", start)
            w = Word.letter(self.names[name])
        if self.peek() == "^":
            self.pos += 1
            w = power(w, self.signed_int())
        return w


def parse_presentation(text: str) -> Presentation:
    """Parse ``< gens | rels >`` into a :class:`Presentation`.

    Relators are expanded and freely reduced.  A relator that reduces to the
    identity is kept; ``< x | >`` has no relators at all.
    """
    return _Parser(text).presentation()


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse a single word over the given generator names."""
    p = _Parser(text)
    p.names = {s: i for i, s in enumerate(names)}
    w = p.word()
    p._skip()
    if p.pos != len(text):
        raise PresentationSyntaxError("unexpected input in word", p.pos)
    return w


def is_identifier(name: str) -> bool:
    return bool(_IDENT.fullmatch(name))
