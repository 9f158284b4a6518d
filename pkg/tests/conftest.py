"""Shared fixtures: one field per n, with the log tables prebuilt."""

import pytest

from diffspectrum.field import Field


@pytest.fixture(scope="session")
def f1() -> Field:
    field = Field(1)
    field.ensure_tables()
    return field


@pytest.fixture(scope="session")
def f2() -> Field:
    field = Field(2)
    field.ensure_tables()
    return field


@pytest.fixture(scope="session")
def f3() -> Field:
    field = Field(3)
    field.ensure_tables()
    return field


@pytest.fixture(scope="session")
def fields(f1, f2, f3) -> dict[int, Field]:
    return {1: f1, 2: f2, 3: f3}
