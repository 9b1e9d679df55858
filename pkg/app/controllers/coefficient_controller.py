import logging
from fractions import Fraction
from typing import Optional

from app.algebra.partitions import Partition, is_near_hook
from app.constants.app_messages import AppMessages
from app.constants.log_messages import LogMessages
from app.controllers.base_controller import ControllerException
from app.controllers.table_controller import TableController, to_records
from app.enums.series_kind import SeriesKind
from app.enums.source import Source
from app.models.output_record_model import TableResponseModel

logger = logging.getLogger(__name__)

class CoefficientController(TableController):
    """Single coefficients; reuses the table paths where a cell needs the whole table."""

    def coefficient(
        self,
        kind: SeriesKind,
        n: int,
        lam: Partition,
        mu: Optional[Partition] = None,
        source: Source = Source.FORMULA,
    ) -> TableResponseModel:
        """
        Raises:
            ControllerException: n < 1, missing mu, or a zonal shape that is not a near hook
        """
        if n < 1:
            raise ControllerException(AppMessages.N_POSITIVE.format(n))
        if kind != SeriesKind.PI and mu is None:
            raise ControllerException(AppMessages.MU_REQUIRED.format(kind.value))
        logger.info(LogMessages.COEFF_START.format(kind.value, n, lam, mu))

        value = self._value(kind, n, lam, mu, source)
        cell = (lam, None if kind == SeriesKind.PI else mu)
        return TableResponseModel(n=n, kind=kind.value, entries=to_records([(cell, value)]))

    def _value(self, kind: SeriesKind, n: int, lam: Partition, mu: Optional[Partition], source: Source) -> Fraction:
        if kind == SeriesKind.DOUBLECOSET and source == Source.FORMULA:
            return self.double_coset.main_series_coefficient(lam, mu)
        if kind == SeriesKind.PI and source == Source.FORMULA:
            return self.double_coset.pi_series(n)[lam]
        if kind in (SeriesKind.ZONAL_Q, SeriesKind.ZONAL_P):
            if not is_near_hook(lam):
                raise ControllerException(AppMessages.NOT_A_NEAR_HOOK.format(lam))
            return self.zonal_expansion(kind, lam, source)[mu]
        return self.table_entries(kind, n, source)[(lam, None if kind == SeriesKind.PI else mu)]
