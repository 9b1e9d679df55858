import logging
import logging.handlers
from dataclasses import replace
from typing import Optional

from dotenv import load_dotenv

from app.configs.logging_config import LoggingConfig
from app.configs.oracle_config import OracleConfig
from app.constants.app_constants import AppConstants
from app.enums.env_keys import EnvKeys
from app.utils.utility_manager import UtilityManager

class SettingsException(Exception):
    """Raised when the environment holds an unusable configuration"""
    pass

class Settings(UtilityManager):
    """Loads `.env`, builds the dataclass configs and configures logging."""

    def __init__(self, env_file: str = ".env", configure_logging: bool = True):
        super().__init__()
        loaded = load_dotenv(env_file)
        try:
            self.logging_config = self._load_logging_config()
            self.oracle_config = self._load_oracle_config()
        except ValueError as err:
            raise SettingsException(f"Invalid configuration: {err}") from err

        if configure_logging:
            self._configure_logging()
        logging.info("Env-loaded: {}".format(loaded))

    def _load_logging_config(self) -> LoggingConfig:
        return LoggingConfig(
            level=self.get_env_variable(EnvKeys.APP_LOGGING_LEVEL.value, AppConstants.DEFAULT_LOGGING_LEVEL),
            formatter=self.get_env_variable(EnvKeys.APP_LOGGING_FORMATTER.value, AppConstants.DEFAULT_LOGGING_FORMATTER),
            date_format=self.get_env_variable(EnvKeys.APP_LOGGING_DATEFORMAT.value, AppConstants.DEFAULT_LOGGING_DATEFORMAT),
            folder=self.get_env_variable(EnvKeys.APP_LOGGING_FOLDER.value, ""),
            log_file=self.get_env_variable(EnvKeys.APP_LOG_FILE.value, AppConstants.DEFAULT_LOG_FILE),
            max_bytes=self.get_int_env_variable(EnvKeys.APP_LOGGING_MAXBYTES.value, AppConstants.DEFAULT_LOGGING_MAXBYTES),
            backup_count=self.get_int_env_variable(EnvKeys.APP_LOGGING_BACKUPCOUNT.value, AppConstants.DEFAULT_LOGGING_BACKUPCOUNT),
        )

    def _load_oracle_config(self) -> OracleConfig:
        config = OracleConfig(
            cap_class=self.get_int_env_variable(EnvKeys.ORACLE_CAP_CLASS.value, AppConstants.DEFAULT_ORACLE_CAP_CLASS),
            cap_coset=self.get_int_env_variable(EnvKeys.ORACLE_CAP_COSET.value, AppConstants.DEFAULT_ORACLE_CAP_COSET),
            threads=self.get_int_env_variable(EnvKeys.COMPUTE_THREADS.value, AppConstants.DEFAULT_THREADS),
        )
        if config.threads < 1 or config.cap_class < 0 or config.cap_coset < 0:
            raise ValueError(f"caps must be >= 0 and threads >= 1, got {config}")
        return config

    def with_overrides(
        self,
        cap_class: Optional[int] = None,
        cap_coset: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> OracleConfig:
        """Return the oracle config with command-line values taking precedence."""
        overrides = {
            key: value
            for key, value in (("cap_class", cap_class), ("cap_coset", cap_coset), ("threads", threads))
            if value is not None
        }
        config = replace(self.oracle_config, **overrides)
        if config.threads < 1:
            raise SettingsException(f"threads must be >= 1, got {config.threads}")
        return config

    def _configure_logging(self) -> None:
        config = self.logging_config
        try:
            handlers = []
            if config.folder:
                log_folder_path = self.create_folder(folder_path=config.folder)
                handlers.append(logging.handlers.RotatingFileHandler(
                    log_folder_path / config.log_file,
                    maxBytes=config.max_bytes,
                    backupCount=config.backup_count
                ))

            logging.getLogger().handlers.clear()
            # console goes to stderr; stdout carries tables and reports
            console = logging.StreamHandler()
            console.setLevel(level=config.level)
            console.setFormatter(logging.Formatter(config.formatter))
            handlers.append(console)

            logging.basicConfig(
                handlers=handlers,
                level=config.level,
                format=config.formatter,
                datefmt=config.date_format,
                force=True,
            )
            logging.info("Logging Configuration Set.")

        except Exception as err:
            logging.error("Error setting up logging configuration.")
            raise SettingsException(f"Logging setup failed: {err}") from err
