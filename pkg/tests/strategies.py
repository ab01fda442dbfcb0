"""Random presentations shared by the property and acceptance tests."""

import random

from hypothesis import strategies as st

from mingenus.presentation import Presentation, Word

NAMES = ("x", "y", "z", "w", "a5", "b6")


def random_presentation(rng: random.Random, max_gens=4, max_rels=4, max_len=12) -> Presentation:
    n = rng.randint(0, max_gens)
    r = rng.randint(0, max_rels) if n else 0
    rels = []
    for _ in range(r):
        length = rng.randint(0, max_len)
        rels.append(Word(tuple((rng.randrange(n), rng.choice((1, -1))) for _ in range(length))))
    return Presentation.from_names(NAMES[:n], rels)


@st.composite
def letters(draw, n=3, max_len=12):
    return draw(st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from((1, -1))), max_size=max_len))


@st.composite
def presentations(draw, max_gens=4, max_rels=4, max_len=12):
    n = draw(st.integers(0, max_gens))
    if n == 0:
        return Presentation.from_names((), ())
    rels = draw(st.lists(letters(n, max_len), max_size=max_rels))
    return Presentation.from_names(NAMES[:n], [Word(tuple(r)) for r in rels])
