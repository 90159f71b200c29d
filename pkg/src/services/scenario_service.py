import asyncio
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import MAX_WORKERS, SCENARIO_CONFIGS
from ..physics.errors import PreconditionError, QuadratureError
from ..physics.types import MomentumTag
from ..providers.config_provider import ScenarioRequest
from ..runners import AVAILABLE_RUNNERS, BaseRunner

logger = logging.getLogger(__name__)


@dataclass
class ScenarioReport:
    """Result table of one request; every column carries a unit string"""
    request: Dict[str, Any]
    columns: List[Tuple[str, str]]
    rows: List[List[float]]
    residuals: Dict[str, float] = field(default_factory=dict)
    provenance: str = ''
    errors: List[str] = field(default_factory=list)

    @property
    def max_residual(self) -> float:
        finite = [value for value in self.residuals.values() if not math.isnan(value)]
        return max(finite, default=0.0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'request': self.request,
            'columns': [{'name': name, 'unit': unit} for name, unit in self.columns],
            'rows': [list(row) for row in self.rows],
            'residuals': dict(self.residuals),
            'provenance': self.provenance,
            'errors': list(self.errors),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ScenarioReport':
        def number(value) -> float:
            return math.nan if value is None else float(value)

        return cls(
            request=data['request'],
            columns=[(column['name'], column['unit']) for column in data['columns']],
            rows=[[number(value) for value in row] for row in data['rows']],
            residuals={name: number(value) for name, value in data.get('residuals', {}).items()},
            provenance=data.get('provenance', ''),
            errors=list(data.get('errors', [])),
        )


class ScenarioService:
    def __init__(self, max_workers: Optional[int] = MAX_WORKERS):
        self.max_workers = max_workers

    def get_runner(self, scenario: str) -> BaseRunner:
        runner_class = AVAILABLE_RUNNERS.get(scenario)
        if runner_class is None:
            raise ValueError(f"No runner registered for scenario {scenario!r}")
        return runner_class()

    def _evaluate_point(self, runner: BaseRunner, index: int, params: Dict[str, float],
                        tags: Sequence[MomentumTag]) -> Tuple[List[float], Optional[str]]:
        try:
            return runner.row(params, tags), None
        except (PreconditionError, QuadratureError) as e:
            logger.warning(f"{runner.scenario_id} point {index} rejected: {e}")
            return runner.empty_row(tags), f"point {index}: {e}"

    async def run_async(self, request: ScenarioRequest) -> ScenarioReport:
        """Evaluate every sweep point concurrently; rows keep request order"""
        runner = self.get_runner(request.scenario)
        points = request.points()
        logger.info(f"Running {request.scenario} over {len(points)} point(s), tags={[t.value for t in request.tags]}")

        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            results = await asyncio.gather(*[
                loop.run_in_executor(executor, self._evaluate_point, runner, index, params, request.tags)
                for index, params in enumerate(points)
            ])

        columns = runner.columns(request.tags)
        rows = [row for row, _ in results]
        if request.sweep is not None:
            parameter = request.sweep.parameter
            unit = SCENARIO_CONFIGS[request.scenario]['params'][parameter]['unit'] or '1'
            columns = [(parameter, unit)] + columns
            rows = [[params[parameter]] + row for params, row in zip(points, rows)]

        residuals = {}
        for name in runner.residual_columns(request.tags):
            position = [column for column, _ in columns].index(name)
            finite = [row[position] for row in rows if not math.isnan(row[position])]
            residuals[name] = max(finite) if finite else math.nan

        report = ScenarioReport(
            request=request.echo(),
            columns=columns,
            rows=rows,
            residuals=residuals,
            provenance=runner.provenance,
            errors=[error for _, error in results if error is not None],
        )
        logger.info(f"{request.scenario}: {len(rows)} row(s), {len(report.errors)} error(s), "
                    f"max residual {report.max_residual:.3e}")
        return report

    def run(self, request: ScenarioRequest) -> ScenarioReport:
        return asyncio.run(self.run_async(request))
