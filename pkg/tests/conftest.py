import itertools
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from quiverhh.quiver import Arrow, Quiver

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


def quiver_from_pairs(nv, pairs):
    vs = tuple(f"v{i}" for i in range(nv))
    return Quiver(vs, tuple(Arrow(f"a{k}", vs[s], vs[d]) for k, (s, d) in enumerate(pairs)))


def all_small_quivers(max_vertices=3, max_arrows=4):
    """Every quiver on 1..max_vertices labelled vertices with up to max_arrows arrows (as multisets)."""
    for nv in range(1, max_vertices + 1):
        pairs = list(itertools.product(range(nv), repeat=2))
        for k in range(max_arrows + 1):
            for combo in itertools.combinations_with_replacement(pairs, k):
                yield quiver_from_pairs(nv, combo)


@st.composite
def quivers(draw, max_vertices=4, max_arrows=6):
    nv = draw(st.integers(1, max_vertices))
    pair = st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1))
    pairs = draw(st.lists(pair, max_size=max_arrows))
    return quiver_from_pairs(nv, pairs)
