from fractions import Fraction

import pytest
from hypothesis import strategies as st

from thompson_tsp.words import GroupWord, pl_from_word, preset


@pytest.fixture(scope="session")
def std2():
    return preset("std2")


def word(text, alphabet="std2"):
    return GroupWord.parse(text, preset(alphabet))


def element(text, alphabet="std2"):
    return pl_from_word(word(text, alphabet))


@st.composite
def words(draw, max_size=12, alphabet="std2"):
    alpha = preset(alphabet)
    letters = draw(st.lists(st.sampled_from(alpha.signed_letters()), max_size=max_size))
    return GroupWord(alpha, tuple(letters))


@st.composite
def elements(draw, max_size=12):
    return pl_from_word(draw(words(max_size=max_size)))


def naive_eval(points, t):
    """Linear search plus Fraction interpolation; independent of PLMap internals."""
    t = Fraction(t)
    pts = [(x.to_fraction(), y.to_fraction()) for x, y in points]
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= t <= x1:
            return y0 + (t - x0) * (y1 - y0) / (x1 - x0)
    raise ValueError(t)
