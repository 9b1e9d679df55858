class AppMessages:
    PASSED = "pass"
    FAILED = "FAIL"
    ALL_PASSED = "All {} identities hold."
    SOME_FAILED = "{} of {} identities failed."
    OVER_CAP = "n={} exceeds the {} oracle cap of {}; raise it with {} or {}."
    BAD_PARTITION = "malformed partition '{}': expected dot-joined positive parts such as 3.1.1"
    WEIGHT_MISMATCH = "partition {} has weight {}, expected n={}"
    MU_REQUIRED = "--mu is required for kind '{}'"
    NOT_A_NEAR_HOOK = "lambda {} is not a near hook (a,b,1^c)"
    N_POSITIVE = "n must be a positive integer, got {}"
    KIND_HELP = "series to report; the class series is scaled by 1/n, so n times its value is the raw count"
