from enum import Enum

class EnvKeys(Enum):
    ORACLE_CAP_CLASS='ORACLE_CAP_CLASS'
    ORACLE_CAP_COSET='ORACLE_CAP_COSET'
    COMPUTE_THREADS='COMPUTE_THREADS'
    APP_LOGGING_LEVEL='APP_LOGGING_LEVEL'
    APP_LOGGING_FOLDER='APP_LOGGING_FOLDER'
    APP_LOGGING_FORMATTER='APP_LOGGING_FORMATTER'
    APP_LOGGING_DATEFORMAT='APP_LOGGING_DATEFORMAT'
    APP_LOGGING_MAXBYTES='APP_LOGGING_MAXBYTES'
    APP_LOGGING_BACKUPCOUNT='APP_LOGGING_BACKUPCOUNT'
    APP_LOG_FILE='APP_LOG_FILE'
