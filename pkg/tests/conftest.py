import random

import mpmath
import pytest
from hypothesis import strategies as st

from valkit.modfunc import j_function

mpmath.mp.dps = 60


def words(max_letter=10, max_len=12, even=True):
    lengths = st.integers(1, max_len // 2).map(lambda k: 2 * k) if even else st.integers(1, max_len)
    return lengths.flatmap(lambda n: st.lists(st.integers(1, max_letter), min_size=n, max_size=n)).map(tuple)


def random_even_word(rng: random.Random, max_letter=10, max_len=12):
    n = 2 * rng.randint(1, max_len // 2)
    return tuple(rng.randint(1, max_letter) for _ in range(n))


def mp_period_value(letters, reps=80):
    """[a1; a2, ...] repeated, evaluated backwards in mpmath."""
    x = mpmath.mpf(letters[0])
    seq = list(letters) * reps
    x = mpmath.mpf(seq[-1])
    for a in reversed(seq[:-1]):
        x = a + 1 / x
    return x


@pytest.fixture(scope="session")
def j():
    return j_function()
