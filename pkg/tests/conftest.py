import pytest

from app.algebra.characters import CharacterManager
from app.algebra.class_algebra import ClassAlgebraManager
from app.algebra.double_coset import DoubleCosetManager
from app.algebra.oracle import OracleManager
from app.algebra.zonal_nearhook import ZonalNearHookManager
from app.configs.oracle_config import OracleConfig

@pytest.fixture(scope="session")
def oracle_config():
    return OracleConfig(cap_class=7, cap_coset=4, threads=1)

@pytest.fixture(scope="session")
def characters():
    return CharacterManager()

@pytest.fixture(scope="session")
def class_algebra(characters):
    return ClassAlgebraManager(characters)

@pytest.fixture(scope="session")
def zonal():
    return ZonalNearHookManager()

@pytest.fixture(scope="session")
def oracle(oracle_config, characters):
    return OracleManager(oracle_config, characters)

@pytest.fixture(scope="session")
def double_coset(oracle, zonal, characters):
    return DoubleCosetManager(oracle, zonal, characters)
