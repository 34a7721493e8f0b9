from hypothesis import settings, strategies as st

from orbitkit.partition import ClassicalType, Partition, is_type

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def small_partitions(draw, max_size=14):
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    while n > 0:
        v = draw(st.integers(min_value=1, max_value=n))
        parts.append(v)
        n -= v
    return Partition(tuple(parts))


@st.composite
def typed(draw, X, max_size=14):
    """A random type-X partition, built by filtering a random partition."""
    X = ClassicalType(X)
    p = draw(small_partitions(max_size).filter(lambda q: is_type(q, X)))
    return p
