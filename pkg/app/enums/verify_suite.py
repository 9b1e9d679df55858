from enum import Enum

class VerifySuite(Enum):
    CLASS_ORACLE='class-oracle'
    COSET_ORACLE='coset-oracle'
    ZONAL_ORACLE='zonal-oracle'
    CLOSED_FORMS='closed-forms'
    ALL='all'

    @classmethod
    def values(cls):
        return [suite.value for suite in cls]
