import warnings

import pytest

import resolvekit as rk


@pytest.fixture(autouse=True)
def _silence_below_range_warnings():
    # r=2 / n=1 instances are exercised on purpose in oracle-scale tests.
    with warnings.catch_warnings():
        warnings.filterwarnings(
            "ignore", message=".*below the usual.*", category=UserWarning)
        warnings.filterwarnings(
            "ignore", message="single-vertex graph.*", category=UserWarning)
        yield


@pytest.fixture(scope="session")
def bf3():
    return rk.butterfly(3)


@pytest.fixture(scope="session")
def bf3_dm(bf3):
    return rk.all_pairs_distances(bf3)
