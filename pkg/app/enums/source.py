from enum import Enum

class Source(Enum):
    """Where table coefficients come from."""
    FORMULA='formula'
    ORACLE='oracle'
