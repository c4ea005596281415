import pytest

from medians.triangle import MedianTriangle

# (f, g) = (2, 1)
FIRST_EXAMPLE = (131, 127, 158, 255, 261, 204)
# (f, g) = (1, 2)
SECOND_EXAMPLE = (619, 377, 404, 477, 975, 942)
# sides 136, 170, 174
SMALL_DUAL = (68, 85, 87, 158, 131, 127)


@pytest.fixture
def first_example():
    return MedianTriangle(*FIRST_EXAMPLE)


@pytest.fixture
def second_example():
    return MedianTriangle(*SECOND_EXAMPLE)


@pytest.fixture
def small_dual():
    return MedianTriangle(*SMALL_DUAL)
