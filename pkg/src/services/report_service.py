from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import replace
from typing import Any, Callable, Dict, List, Optional
import csv
import io
import math
import time

from tabulate import tabulate

from ..automata.chain import cocoa_size
from ..automata.constructions import cocoa_to_dpw, mh_determinize
from ..automata.decision import dpw_equivalent, residual_partition
from ..automata.lowerbound import certify_lower_bound
from ..families.cocoa_c import gen_cocoa_C
from ..families.prop1 import gen_prop1_cocoa, gen_prop1_dpw
from ..families.random_automata import random_chains
from ..families.theorem2 import gen_cocoa_theorem2
from ..families.windows import gen_dpw_P, gen_dpw_Phat
from ..models.cocoa import Cocoa
from ..models.size_report import SizeReport, SizeRow
from ..utils.config_manager import ConfigManager
from ..utils.errors import CocoaKitError
from ..utils.logger import get_logger


TABLES = ("theorem1", "theorem2", "prop1", "prop2", "prop4")

RANDOM_CHAIN_COUNT = 20


class ReportService:
    """Size comparisons between chain and parity representations"""

    def __init__(self, config: Dict[str, Any] = None):
        self.logger = get_logger(self.__class__.__name__)
        self.config_manager = ConfigManager()
        self.config = config or self.config_manager.load_config()
        tables = self.config.get('tables', {})
        self.max_workers = tables.get('max_workers', 4)
        self.seed = int(self.config.get('sampling', {}).get('seed', 0))

    def build(self, which: str, kmax: Optional[int] = None) -> SizeReport:
        builders: Dict[str, Callable[[int], List[SizeRow]]] = {
            "theorem1": self._theorem1_rows,
            "theorem2": self._theorem2_rows,
            "prop1": self._prop1_rows,
            "prop2": self._prop2_rows,
            "prop4": self._prop4_rows,
        }
        if which not in builders:
            raise CocoaKitError(f"unknown table {which!r}; choose from {', '.join(TABLES)}")
        if kmax is None:
            kmax = self.config.get('tables', {}).get('kmax', {}).get(which, 2)
        if kmax < 1:
            raise CocoaKitError(f"--kmax must be positive, got {kmax}")

        start_time = time.time()
        report = SizeReport(which)
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_k = {executor.submit(builders[which], k): k for k in range(1, kmax + 1)}
            for future in as_completed(future_to_k):
                k = future_to_k[future]
                try:
                    report.extend(future.result())
                except CocoaKitError as e:
                    self.logger.log_error(e, {"operation": "build_table", "table": which, "k": k})
                    raise

        if which == "prop2":
            report.extend(self._random_chain_rows())

        self.logger.log_performance(f"table {which}", time.time() - start_time,
                                    items_count=len(report.rows))
        return report

    @staticmethod
    def _timed(build: Callable[[], SizeRow]) -> SizeRow:
        start = time.perf_counter()
        row = build()
        elapsed = (time.perf_counter() - start) * 1000
        return replace(row, wall_ms=elapsed)

    @staticmethod
    def _chain_row(family: str, k: int, representation: str, chain: Cocoa,
                   residuals: Optional[int] = None, note: str = "") -> SizeRow:
        return SizeRow(family, k, representation, cocoa_size(chain), len(chain),
                       residuals=residuals, note=note)

    def _theorem1_rows(self, k: int) -> List[SizeRow]:
        chain = gen_cocoa_C(k)

        def dpw_row():
            dpw = cocoa_to_dpw(chain)
            certificate = certify_lower_bound(dpw, k)
            return SizeRow("theorem1", k, "dpw", dpw.state_count, dpw.color_count,
                           residuals=residual_partition(dpw).class_count,
                           bound=certificate.bound)

        return [self._timed(lambda: self._chain_row("theorem1", k, "cocoa", chain)),
                self._timed(dpw_row)]

    def _theorem2_rows(self, k: int) -> List[SizeRow]:
        full = gen_cocoa_theorem2(k)
        reduced = gen_cocoa_theorem2(k, nondominated_only=True)

        def full_row():
            level_k = mh_determinize(full.member(k))
            return self._chain_row("theorem2", k, "cocoa-full", full,
                                   residuals=residual_partition(level_k).class_count)

        def reduced_row():
            differing = [
                str(level) for level in range(1, len(full) + 1)
                if not dpw_equivalent(full.member(level), reduced.member(level))[0]
            ]
            note = f"differs at levels {','.join(differing)}" if differing else "same languages"
            return self._chain_row("theorem2", k, "cocoa-nondominated", reduced, note=note)

        def dpw_row():
            dpw = cocoa_to_dpw(full)
            return SizeRow("theorem2", k, "dpw", dpw.state_count, dpw.color_count)

        return [self._timed(full_row), self._timed(reduced_row), self._timed(dpw_row)]

    def _prop1_rows(self, k: int) -> List[SizeRow]:
        def dpw_row():
            dpw = gen_prop1_dpw(k)
            return SizeRow("prop1", k, "dpw", dpw.state_count, dpw.color_count)

        return [self._timed(dpw_row),
                self._timed(lambda: self._chain_row("prop1", k, "cocoa", gen_prop1_cocoa(k)))]

    def _prop2_rows(self, k: int) -> List[SizeRow]:
        chain = gen_cocoa_C(k)

        def product_row():
            dpw = cocoa_to_dpw(chain)
            bound = math.prod(3 ** member.state_count for member in chain.members)
            return SizeRow("prop2", k, "cocoa-c-product", dpw.state_count, dpw.color_count,
                           bound=bound)

        return [self._timed(product_row)]

    def _random_chain_rows(self) -> List[SizeRow]:
        rows = []
        for index, chain in enumerate(random_chains(self.seed, RANDOM_CHAIN_COUNT), start=1):
            def product_row(chain=chain, index=index):
                dpw = cocoa_to_dpw(chain)
                bound = math.prod(3 ** member.state_count for member in chain.members)
                sizes = "+".join(str(member.state_count) for member in chain.members)
                return SizeRow("prop2-random", index, "product", dpw.state_count,
                               dpw.color_count, bound=bound, note=f"members {sizes}")
            rows.append(self._timed(product_row))
        return rows

    def _prop4_rows(self, k: int) -> List[SizeRow]:
        def row(representation, build):
            dpw = build(k)
            return SizeRow("prop4", k, representation, dpw.state_count, dpw.color_count,
                           residuals=residual_partition(dpw).class_count)

        return [self._timed(lambda: row("dpw-p", gen_dpw_P)),
                self._timed(lambda: row("dpw-phat", gen_dpw_Phat))]

    def render(self, report: SizeReport, output_format: str = "text",
               timing: bool = False) -> str:
        """CSV omits wall time unless asked for; text always shows it"""
        if output_format == "csv":
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=report.columns(timing),
                                    lineterminator="\n")
            writer.writeheader()
            for row in report.sorted_rows():
                writer.writerow(row.to_dict(timing))
            return buffer.getvalue()

        rows = [row.to_dict(timing=True) for row in report.sorted_rows()]
        return tabulate(rows, headers="keys", tablefmt="github") + "\n"
