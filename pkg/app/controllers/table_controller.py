import io
import logging
from datetime import datetime
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

import pandas as pd
from tabulate import tabulate

from app.algebra.arithmetic import format_rational
from app.algebra.monomial_expansion import MonomialExpansion
from app.algebra.partitions import Partition, c_products, enumerate_partitions, near_hooks
from app.constants.app_constants import AppConstants
from app.constants.app_messages import AppMessages
from app.constants.log_messages import LogMessages
from app.controllers.base_controller import BaseController, ControllerException
from app.enums.output_format import OutputFormat
from app.enums.series_kind import SeriesKind
from app.enums.source import Source
from app.models.output_record_model import OutputRecord, TableResponseModel
from app.utils.get_current_timestamp import calculate_response_time
from app.utils.partition_format import format_partition

logger = logging.getLogger(__name__)

Cell = Tuple[Partition, Optional[Partition]]

def to_records(entries: Iterable[Tuple[Cell, Fraction]]) -> list:
    return [
        OutputRecord(
            lambda_=format_partition(lam),
            mu=None if mu is None else format_partition(mu),
            value=format_rational(value),
        )
        for (lam, mu), value in entries
    ]

def render(response: TableResponseModel, output_format: OutputFormat) -> str:
    """Serialise a table as JSON, CSV (lambda,mu,value) or a plain-text grid."""
    if output_format == OutputFormat.JSON:
        return response.model_dump_json(by_alias=True)
    rows = [record.model_dump(by_alias=True) for record in response.entries]
    frame = pd.DataFrame(rows, columns=AppConstants.CSV_COLUMNS)
    if output_format == OutputFormat.CSV:
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        return buffer.getvalue().rstrip("\n")
    return tabulate(frame.fillna("").values.tolist(), headers=AppConstants.CSV_COLUMNS, tablefmt="plain")


class TableController(BaseController):
    """Builds full coefficient tables for each series kind."""

    def build_table(self, kind: SeriesKind, n: int, source: Source = Source.FORMULA) -> TableResponseModel:
        """
        Args:
            kind: which series or polynomial family
            n: weight, positive
            source: formula, or brute-force counts where available

        Raises:
            ControllerException: for n < 1
            OracleCapExceeded: when an oracle-backed table is above the cap
        """
        if n < 1:
            raise ControllerException(AppMessages.N_POSITIVE.format(n))
        start_at = datetime.now()
        logger.info(LogMessages.TABLE_START.format(kind.value, n, source.value))

        entries = list(self.table_entries(kind, n, source).items())
        response = TableResponseModel(n=n, kind=kind.value, entries=to_records(entries))
        logger.info(LogMessages.TABLE_DONE.format(kind.value, n, len(entries), calculate_response_time(start_at)))
        return response

    def table_entries(self, kind: SeriesKind, n: int, source: Source) -> Dict[Cell, Fraction]:
        oracle = source == Source.ORACLE
        if kind == SeriesKind.CLASS:
            connections = None
            if oracle:
                connections = self.oracle.class_convolution_table(n, (n,))
            return self.class_algebra.class_table(n, connections).entries
        if kind == SeriesKind.DOUBLECOSET:
            connections = self.oracle.double_coset_convolution_table(n, (n,)) if oracle else None
            return self.double_coset.doublecoset_table(n, connections).entries
        if kind == SeriesKind.PI:
            if oracle:
                series = self.double_coset.pi_series_from_connections(n, self.oracle.double_coset_convolution_table(n, (n,)))
            else:
                series = self.double_coset.pi_series(n)
            return {(lam, None): series[lam] for lam in enumerate_partitions(n)}
        if kind in (SeriesKind.ZONAL_Q, SeriesKind.ZONAL_P):
            entries: Dict[Cell, Fraction] = {}
            for shape in near_hooks(n):
                expansion = self.zonal_expansion(kind, shape, source)
                entries.update({(shape, mu): expansion[mu] for mu in enumerate_partitions(n)})
            return entries
        raise ControllerException(f"unknown series kind {kind}")

    def zonal_expansion(self, kind: SeriesKind, shape: Partition, source: Source) -> MonomialExpansion:
        """Q or P of a near hook, from fillings or from the spherical-sum oracle."""
        if source == Source.ORACLE:
            c, c_prime, _ = c_products(shape)
            divisor = c_prime if kind == SeriesKind.ZONAL_Q else c
            return self.oracle.zonal_oracle(shape).scale(Fraction(1, divisor))
        if kind == SeriesKind.ZONAL_Q:
            return self.zonal.q_near_hook(shape)
        return self.zonal.p_near_hook(shape)
