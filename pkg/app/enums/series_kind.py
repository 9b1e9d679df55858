from enum import Enum

class SeriesKind(Enum):
    CLASS='class'
    DOUBLECOSET='doublecoset'
    PI='pi'
    ZONAL_Q='zonalQ'
    ZONAL_P='zonalP'

    @classmethod
    def values(cls):
        return [kind.value for kind in cls]
