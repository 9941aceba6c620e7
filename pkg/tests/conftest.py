import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_string(rng, max_len=8, max_entry=9, force_big=True):
    n = rng.randrange(1, max_len + 1)
    s = [rng.randrange(2, max_entry + 1) for _ in range(n)]
    if force_big and max(s) < 3:
        s[rng.randrange(n)] = rng.randrange(3, max_entry + 1)
    return tuple(s)
