from collections import Counter
from functools import lru_cache
from math import comb

import pytest
from hypothesis import strategies as st

from snchar.partitions import Partition


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def gouyou_beauchamps(n: int) -> int:
    """Involutions of [n] without a decreasing subsequence of length 5"""
    return catalan((n + 1) // 2) * catalan(n // 2 + 1)


@lru_cache(maxsize=None)
def _syt_count(shape: tuple[int, ...]) -> int:
    # place the largest entry in each removable corner
    if not shape:
        return 1
    total = 0
    for i, part in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if part > below:
            smaller = list(shape)
            smaller[i] -= 1
            total += _syt_count(tuple(p for p in smaller if p > 0))
    return total


def brute_syt_count(lam: Partition) -> int:
    return _syt_count(lam.parts)


def P(*parts: int) -> Partition:
    return Partition.from_parts(parts)


@st.composite
def partition_strategy(draw, max_n=8, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))

    # Assign each cell to a random row
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bins)

    return Partition.from_parts(counts.values())


@st.composite
def mu0_strategy(draw, max_weight=5):
    parts = draw(
        st.lists(st.integers(min_value=2, max_value=max_weight), max_size=max_weight // 2)
    )
    if sum(parts) > max_weight:
        parts = []
    return Partition.from_parts(parts)


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch, tmp_path):
    """Keep SNCHAR_* settings from the developer's shell out of the tests"""
    for name in (
        "SNCHAR_LOG_LEVEL",
        "SNCHAR_CATALOG_DIR",
        "SNCHAR_WORKERS",
        "SNCHAR_MAX_ORDER",
        "SNCHAR_MAX_DEGREE",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
