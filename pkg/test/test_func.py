from __future__ import annotations

from hypothesis import given, strategies as st
import pytest

from pyultrashift.func import T, map_mt_with_tqdm


def st_any() -> st.SearchStrategy[object]:
    return st.none() | st.booleans() | st.binary() | st.integers() | st.floats() | st.text()

def st_num_jobs(
    *,
    valid_value: bool = True,
    min_valid: int = 1,
    max_valid: int = 8,
) -> st.SearchStrategy[int]:
    if valid_value:
        return st.integers(min_value=min_valid, max_value=max_valid)

    return st.integers(max_value=0)


@given(st.lists(st_any()), st_num_jobs(valid_value=False))
def test_map_mt_with_tqdm_invalid_num_jobs(values: list[object], n_jobs: int):
    with pytest.raises(ValueError):
        map_mt_with_tqdm(values, lambda x: x, n_jobs=n_jobs, desc=None)

@given(st.lists(st_any()), st_num_jobs())
def test_map_mt_with_tqdm_preserves_order(values: list[object], n_jobs: int):
    attempt_count = 0

    def identity(x: T) -> T:
        nonlocal attempt_count
        attempt_count += 1

        return x

    assert map_mt_with_tqdm(values, identity, n_jobs=n_jobs, desc=None) == values, 'Incorrect value'
    assert attempt_count == len(values), 'Incorrect number of attempts'

@given(st.lists(st.integers(), min_size=1), st_num_jobs())
def test_map_mt_with_tqdm_progress_bar(values: list[int], n_jobs: int):
    assert map_mt_with_tqdm(values, lambda x: 2 * x, n_jobs=n_jobs, desc='Doubling') == [2 * x for x in values]

@given(st.lists(st.integers(), min_size=1), st_num_jobs())
def test_map_mt_with_tqdm_reraises(values: list[int], n_jobs: int):
    class Boom(Exception):
        pass

    def fail(x: int) -> int:
        raise Boom(str(x))

    with pytest.raises(Boom):
        map_mt_with_tqdm(values, fail, n_jobs=n_jobs, desc=None)
