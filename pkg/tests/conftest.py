"""Shared fixtures: five worked singularities used as golden data throughout.

Keys: ``a1`` the 3-dimensional A_1 cone, ``ca4`` a cA_4 singularity with
class group Z, ``z2``/``z3`` torsion class groups Z + Z/2 and Z + Z/3, and
``z4`` a 4-dimensional example over Z + Z/4 whose graded quotient has a
two-element kernel.
"""

from functools import cache

import pytest

from toricnccr import FGGroup, grading_context, validate

SYSTEM_SPECS = {
    "a1": (1, (), [[1], [1], [-1], [-1]]),
    "ca4": (1, (), [[2], [3], [-2], [-3]]),
    "z2": (1, (2,), [[1, 0], [1, 1], [-1, 0], [-1, 1]]),
    "z3": (1, (3,), [[1, 0], [1, 0], [-1, 1], [-1, 2]]),
    "z4": (1, (4,), [[1, 0], [1, 1], [-1, 0], [-1, 1], [0, 2]]),
}

EXPECTED_CLASS_COUNTS = {"a1": 1, "ca4": 2, "z2": 2, "z3": 3, "z4": 2}
EXPECTED_VERTEX_COUNTS = {
    "a1": [2],
    "ca4": [5, 5],
    "z2": [4, 4],
    "z3": [6, 6, 6],
    "z4": [8, 8],
}


@cache
def build_system(key):
    rank, torsion, vecs = SYSTEM_SPECS[key]
    group = FGGroup(rank, torsion)
    return validate(group, [group.from_vector(v) for v in vecs])


@cache
def build_context(key):
    return grading_context(build_system(key))


@cache
def build_class_quiver(key, class_index, bound=None):
    from toricnccr import endomorphism_quiver, nccr_classes

    ctx = build_context(key)
    return endomorphism_quiver(ctx, nccr_classes(ctx)[class_index], bound)


@pytest.fixture(params=sorted(SYSTEM_SPECS))
def system_key(request):
    return request.param


@pytest.fixture
def ctx(system_key):
    return build_context(system_key)


@pytest.fixture
def a1():
    return build_context("a1")


@pytest.fixture
def ca4():
    return build_context("ca4")


@pytest.fixture
def z2():
    return build_context("z2")


@pytest.fixture
def z3():
    return build_context("z3")


@pytest.fixture
def z4():
    return build_context("z4")
