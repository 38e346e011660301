import pytest

from starbench import build_ring, build_scalar_algebra, parse_ring_expr

_CACHE = {}


def cached_ring(text):
    """Rings are immutable once built, so share them across the session."""
    if text not in _CACHE:
        _CACHE[text] = build_ring(parse_ring_expr(text))
    return _CACHE[text]


@pytest.fixture(scope="session")
def ring_of():
    return cached_ring


@pytest.fixture(scope="session")
def z6():
    return cached_ring("Z(6)")


@pytest.fixture(scope="session")
def m2z3():
    return cached_ring("M(2,Z(3))")


@pytest.fixture(scope="session")
def m2z2():
    return cached_ring("M(2,Z(2))")


@pytest.fixture(scope="session")
def prod23():
    return cached_ring("prod(Z(2),Z(3))")


@pytest.fixture(scope="session")
def sub93():
    """{0, 3, 6} inside Z(9): no unity, every product zero."""
    return cached_ring("sub(Z(9); 3)")


@pytest.fixture(scope="session")
def algebra_of():
    def build(ring_text, scalar_text, action="natural"):
        return build_scalar_algebra(
            cached_ring(ring_text), cached_ring(scalar_text), action=action
        )

    return build
