from __future__ import annotations

import sys

import pytest
from hypothesis import HealthCheck, settings

from hopfcat.catalog import Catalog, inversion_action, subgroup_space
from hopfcat.groups import symmetric

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


@pytest.fixture(scope="session")
def cat() -> Catalog:
    return Catalog.standard()


@pytest.fixture(scope="session")
def s3_group():
    return symmetric(3)


@pytest.fixture(scope="session")
def sign_images(s3_group):
    return tuple(1 if s3_group.element_order(x) == 2 else 0 for x in range(6))


@pytest.fixture(scope="session")
def sign(cat, sign_images):
    return cat.hom("S3", "C2", sign_images).morphism


@pytest.fixture(scope="session")
def a3(s3_group, sign_images):
    return subgroup_space(s3_group, frozenset(x for x in range(6) if sign_images[x] == 0))


@pytest.fixture(scope="session")
def a3_inclusion(cat, s3_group):
    r = next(x for x in range(6) if s3_group.element_order(x) == 3)
    return cat.hom("C3", "S3", [s3_group.power(r, a) for a in range(3)]).morphism


@pytest.fixture(scope="session")
def transposition_section(cat, s3_group):
    t = next(x for x in range(6) if s3_group.element_order(x) == 2)
    return cat.hom("C2", "S3", [0, t]).morphism


@pytest.fixture(scope="session")
def inversion(cat):
    return inversion_action(cat)



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        title, ok = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
