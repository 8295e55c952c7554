"""Shared fixtures.

The expensive objects in this suite are exact Laplacian pseudoinverses, which
Network caches per instance.  These factories memoize the networks themselves
for the whole session so each pseudoinverse is computed exactly once no matter
how many tests touch it.
"""

import pytest

from prismres import build_ladder, build_prism


def _memoized(builder):
    cache = {}

    def get(n: int):
        if n not in cache:
            cache[n] = builder(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def prisms():
    return _memoized(build_prism)


@pytest.fixture(scope="session")
def ladders():
    return _memoized(build_ladder)


@pytest.fixture(scope="session")
def float_prisms(prisms):
    return _memoized(lambda n: prisms(n).to_float())


@pytest.fixture(scope="session")
def float_ladders(ladders):
    return _memoized(lambda n: ladders(n).to_float())
