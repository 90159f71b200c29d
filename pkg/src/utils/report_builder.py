import io
import json
import logging
import math
import re
from typing import Any, List, Tuple

import pandas as pd

from ..services.scenario_service import ScenarioReport

logger = logging.getLogger(__name__)

FORMATS = ('table', 'csv', 'json')

# 18 significant digits: every float64 survives a text round trip
CSV_FLOAT_FORMAT = '%.17e'
NAN_TEXT = 'nan'

_HEADER_RE = re.compile(r'^(?P<name>.+) \[(?P<unit>[^\]]*)\]$')


def _json_safe(value: Any) -> Any:
    if isinstance(value, float) and math.isnan(value):
        return None
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_json_safe(item) for item in value]
    return value


class ReportBuilder:
    def create_frame(self, report: ScenarioReport) -> pd.DataFrame:
        headers = [f"{name} [{unit}]" for name, unit in report.columns]
        return pd.DataFrame(report.rows, columns=headers, dtype=float)

    def create_csv(self, report: ScenarioReport) -> str:
        return self.create_frame(report).to_csv(
            index=False, float_format=CSV_FLOAT_FORMAT, na_rep=NAN_TEXT, lineterminator='\n'
        )

    def create_json(self, report: ScenarioReport) -> str:
        return json.dumps(_json_safe(report.to_dict()), indent=2, sort_keys=True, allow_nan=False) + '\n'

    def create_table(self, report: ScenarioReport) -> str:
        request = report.request
        lines = [f"scenario: {request['scenario']}"]
        lines.append(f"tags: {', '.join(request['tags'])}")
        for name, param in request['params'].items():
            lines.append(f"  {name} = {param['value']:.6g} [{param['unit']}]")
        if 'sweep' in request:
            sweep = request['sweep']
            lines.append(f"sweep: {sweep['parameter']} from {sweep['min']:.6g} to {sweep['max']:.6g} "
                         f"[{sweep['unit']}], {sweep['count']} points")
        lines.append(f"provenance: {report.provenance}")
        lines.append('')
        lines.append(self.create_frame(report).to_string(index=False, float_format=lambda x: f"{x:.6e}"))
        if report.residuals:
            lines.append('')
            lines.append('residuals:')
            for name, value in report.residuals.items():
                lines.append(f"  {name} = {value:.3e}")
        if report.errors:
            lines.append('')
            lines.append('errors:')
            lines.extend(f"  {error}" for error in report.errors)
        return '\n'.join(lines) + '\n'

    def emit(self, report: ScenarioReport, fmt: str = 'table') -> bytes:
        """Render a report as UTF-8 bytes in one of FORMATS"""
        builders = {'table': self.create_table, 'csv': self.create_csv, 'json': self.create_json}
        if fmt not in builders:
            raise ValueError(f"Unknown output format {fmt!r} (expected one of: {', '.join(FORMATS)})")
        logger.debug(f"Emitting {report.request['scenario']} report as {fmt}")
        return builders[fmt](report).encode('utf-8')


def read_csv(text: str) -> Tuple[List[Tuple[str, str]], List[List[float]]]:
    """Parse emitted CSV back into (columns, rows)"""
    frame = pd.read_csv(io.StringIO(text), dtype=float, float_precision='round_trip',
                        na_values=[NAN_TEXT], keep_default_na=False)
    columns = []
    for header in frame.columns:
        match = _HEADER_RE.match(header)
        if not match:
            raise ValueError(f"CSV header {header!r} is not of the form 'name [unit]'")
        columns.append((match.group('name'), match.group('unit')))
    rows = [[float(value) for value in row] for row in frame.itertuples(index=False, name=None)]
    return columns, rows
