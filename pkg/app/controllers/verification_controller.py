import logging
from datetime import datetime
from typing import Callable, Dict, List

from tabulate import tabulate

from app.algebra.class_algebra import first_mismatch
from app.algebra.partitions import enumerate_partitions
from app.constants.app_messages import AppMessages
from app.constants.log_messages import LogMessages
from app.controllers.base_controller import BaseController, ControllerException
from app.enums.output_format import OutputFormat
from app.enums.verify_suite import VerifySuite
from app.models.verification_report_model import IdentityCheck, VerificationReport
from app.utils.get_current_timestamp import calculate_response_time

logger = logging.getLogger(__name__)

def render_report(report: VerificationReport, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON:
        return report.model_dump_json()
    rows = [
        (check.identity, check.n, AppMessages.PASSED if check.passed else AppMessages.FAILED, check.detail or "")
        for check in report.checks
    ]
    table = tabulate(rows, headers=["identity", "n", "status", "detail"], tablefmt="simple")
    failures = len(report.failures)
    summary = (
        AppMessages.ALL_PASSED.format(len(report.checks))
        if not failures
        else AppMessages.SOME_FAILED.format(failures, len(report.checks))
    )
    return f"{table}\n{summary}"


class VerificationController(BaseController):
    """Runs the acceptance batteries for every weight from 1 up to n."""

    def run(self, suite: VerifySuite, n: int) -> VerificationReport:
        """
        Raises:
            ControllerException: for n < 1
            OracleCapExceeded: before any work when n is above a cap the suite needs
        """
        if n < 1:
            raise ControllerException(AppMessages.N_POSITIVE.format(n))
        suites = self._suites()
        selected = list(suites) if suite == VerifySuite.ALL else [suite]
        for name in selected:
            if name == VerifySuite.CLASS_ORACLE:
                self.oracle.check_class_cap(n)
            if name in (VerifySuite.COSET_ORACLE, VerifySuite.ZONAL_ORACLE):
                self.oracle.check_coset_cap(n)

        start_at = datetime.now()
        logger.info(LogMessages.VERIFY_START.format(suite.value, n))
        report = VerificationReport(suite=suite.value)
        for name in selected:
            for m in range(1, n + 1):
                report.extend(suites[name](m))
        report.elapsed = calculate_response_time(start_at)

        for check in report.failures:
            logger.warning(LogMessages.IDENTITY_FAILED.format(check.identity, check.n, check.detail))
        logger.info(LogMessages.VERIFY_DONE.format(suite.value, len(report.checks), len(report.failures), report.elapsed))
        return report

    def _suites(self) -> Dict[VerifySuite, Callable[[int], List[IdentityCheck]]]:
        return {
            VerifySuite.CLASS_ORACLE: self.class_oracle_checks,
            VerifySuite.COSET_ORACLE: self.double_coset.verify_against_oracle,
            VerifySuite.ZONAL_ORACLE: self.zonal_oracle_checks,
            VerifySuite.CLOSED_FORMS: self.closed_form_checks,
        }

    def class_oracle_checks(self, n: int) -> List[IdentityCheck]:
        """Character formula against brute-force counts, then the two closed forms."""
        checks = []
        for nu in enumerate_partitions(n):
            counted = self.oracle.class_convolution_table(n, nu)
            detail = first_mismatch(counted, lambda lam, mu: self.class_algebra.connection_c(lam, mu, nu))
            checks.append(IdentityCheck(identity=f"c^{list(nu)} = brute-force count", n=n, passed=detail is None, detail=detail))

        checks.extend(self.class_algebra.verify_connection_consistency(n))
        checks.extend(self.class_algebra.verify_mv09(n))
        oracle_checks = self.class_algebra.verify_mv09(n, self.oracle.class_convolution_table(n, (n,)))
        for check in oracle_checks:
            check.identity = f"{check.identity} (oracle counts)"
        checks.extend(oracle_checks)
        checks.extend(self.class_algebra.verify_fv10(n))
        return checks

    def zonal_oracle_checks(self, n: int) -> List[IdentityCheck]:
        """Near-hook Z, Q and P against the spherical sums, the skew factors and a tableau count."""
        checks = []

        def record(identity: str, passed: bool, detail: str) -> None:
            checks.append(IdentityCheck(identity=identity, n=n, passed=passed, detail=None if passed else detail))

        for shape in self.zonal.near_hook_shapes(n):
            label = str(list(shape.parts))
            z_value = self.zonal.zonal_Z(shape)
            z_oracle = self.oracle.zonal_oracle(shape.parts)
            record(f"Z_{label} = spherical-sum Z", z_value == z_oracle, f"{z_value} vs {z_oracle}")

            q_value = self.zonal.q_near_hook(shape)
            q_skew = self.zonal.q_from_skew_factors(shape)
            record(f"Q_{label} = product of phi skew factors", q_value == q_skew, f"{q_value} vs {q_skew}")

            p_value = self.zonal.p_near_hook(shape)
            p_skew = self.zonal.p_from_skew_factors(shape)
            record(f"P_{label} = product of psi skew factors", p_value == p_skew, f"{p_value} vs {p_skew}")

            leading = p_value[shape.parts]
            record(f"[m_{label}] P_{label} = 1", leading == 1, f"got {leading}")

            fillings = sum(len(self.zonal.enumerate_fillings(shape, mu)) for mu in enumerate_partitions(n))
            tableaux = sum(self.oracle.count_tableaux(shape.parts, mu) for mu in enumerate_partitions(n))
            record(f"fillings of {label} = semistandard tableaux", fillings == tableaux, f"{fillings} vs {tableaux}")
        return checks

    def closed_form_checks(self, n: int) -> List[IdentityCheck]:
        return self.double_coset.verify_closed_forms(n) + self.double_coset.verify_integrality(n)
