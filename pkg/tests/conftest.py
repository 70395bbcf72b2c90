"""
Shared fixtures: the small groups every suite is exercised on.
"""
import sys
from pathlib import Path

import pytest
from hypothesis import settings

# Add the project root to the import path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.fingroup import standard_group

settings.register_profile("crossedcheck", deadline=None, max_examples=40)
settings.load_profile("crossedcheck")


@pytest.fixture(scope="session")
def c2():
    return standard_group("cyclic", 2)


@pytest.fixture(scope="session")
def c3():
    return standard_group("cyclic", 3)


@pytest.fixture(scope="session")
def s3():
    return standard_group("symmetric", 3)


@pytest.fixture(scope="session")
def d4():
    return standard_group("dihedral", 4)


@pytest.fixture(scope="session", params=[("cyclic", 2), ("cyclic", 3), ("symmetric", 3)],
                ids=["C2", "C3", "S3"])
def small_group(request):
    kind, n = request.param
    return standard_group(kind, n)
