class AppConstants:
    PROG_NAME = "conncoeff"
    PARTITION_SEPARATOR = "."
    EMPTY_PARTITION = "0"
    CSV_COLUMNS = ["lambda", "mu", "value"]

    DEFAULT_ORACLE_CAP_CLASS = 8
    DEFAULT_ORACLE_CAP_COSET = 4
    DEFAULT_THREADS = 1

    DEFAULT_LOGGING_LEVEL = "WARNING"
    DEFAULT_LOGGING_FORMATTER = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    DEFAULT_LOGGING_DATEFORMAT = "%Y-%m-%dT%H:%M:%S"
    DEFAULT_LOG_FILE = "connection_coefficients.log"
    DEFAULT_LOGGING_MAXBYTES = 1048576
    DEFAULT_LOGGING_BACKUPCOUNT = 3

    # hard ceilings for the brute-force enumerations, whatever the caps say
    MAX_CLASS_ORACLE_N = 9
    MAX_COSET_ORACLE_N = 5
