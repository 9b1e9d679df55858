class ExitCodes:
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    OVER_CAP = 3
