class LogMessages:
    TABLE_START = "Building {} table for n={} from {}"
    TABLE_DONE = "{} table for n={} built: {} entries in {:.3f}s"
    COEFF_START = "Computing {} coefficient n={} lambda={} mu={}"
    VERIFY_START = "Running verification suite {} up to n={}"
    VERIFY_DONE = "Suite {} finished: {} checks, {} failures in {:.3f}s"
    IDENTITY_FAILED = "Identity '{}' failed at n={}: {}"

    CHARACTER_CACHE = "Character cache holds {} values"
    NON_INTEGRAL_CONNECTION = "Non-integral connection coefficient {} for {}: character data is inconsistent"
    NEGATIVE_CONNECTION = "Negative connection coefficient {} for {}"
    ZONAL_MISMATCH = "c*P and c'*Q disagree for near hook {}"
    FILLINGS_ENUMERATED = "{} fillings of shape {} and type {}"
    RFUNC_ZERO = "rfunc denominator factor {} vanishes at {}"
    FILLING_VIOLATION = "Filling {} of {} violates {}"
    PHI_TOP_MISMATCH = "phi_top closed form {} differs from box product {} for {}"

    HISTOGRAM_START = "Tabulating coset histogram of S_{} with {} worker(s)"
    HISTOGRAM_DONE = "Coset histogram for n={} done: {} permutations in {:.3f}s"
    CONVOLUTION_DONE = "{} convolution table for n={} nu={} done in {:.3f}s"
    CAP_REFUSED = "Refusing {} oracle at n={} (cap {})"
    UNPAIRED_COSET_TYPE = "Cycle type {} of f*wf*w^-1 is not paired"
