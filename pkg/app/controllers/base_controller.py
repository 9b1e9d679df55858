import logging
from typing import Optional

from app.algebra.characters import CharacterManager
from app.algebra.class_algebra import ClassAlgebraManager
from app.algebra.double_coset import DoubleCosetManager
from app.algebra.oracle import OracleManager
from app.algebra.zonal_nearhook import ZonalNearHookManager
from app.configs.oracle_config import OracleConfig
from app.utils.utility_manager import UtilityManager

logger = logging.getLogger(__name__)

class ControllerException(Exception):
    """Raised for requests the controllers cannot serve (bad kind, missing mu, ...)"""
    pass

class BaseController(UtilityManager):
    """Wires one set of algebra managers sharing a character cache."""

    def __init__(self, config: OracleConfig, characters: Optional[CharacterManager] = None) -> None:
        super().__init__()
        self.config = config
        self.characters = characters or CharacterManager()
        self.oracle = OracleManager(config, self.characters)
        self.class_algebra = ClassAlgebraManager(self.characters, threads=config.threads)
        self.zonal = ZonalNearHookManager(threads=config.threads)
        self.double_coset = DoubleCosetManager(self.oracle, self.zonal, self.characters, threads=config.threads)
