import json
import logging
import re
import tomllib
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pint import UnitRegistry
from pint.errors import PintError

from ..config.scenario_config import SCENARIO_CONFIGS, SCENARIO_NAMES
from ..physics.types import MomentumTag

logger = logging.getLogger(__name__)

ureg = UnitRegistry()

_EXPONENT_RE = re.compile(r'([A-Za-z]+)(\d+)')
_TOP_LEVEL_KEYS = {'scenario', 'tag', 'params', 'sweep'}
# Units of cycles per second; pint reads them as plain 1/s, which is off by 2 pi for angular frequencies
_CYCLE_FREQUENCY_UNITS = {'hertz'}


class ConfigError(ValueError):
    """Invalid scenario config; key_path points at the offending entry"""

    def __init__(self, key_path: str, message: str):
        self.key_path = key_path
        super().__init__(f"{key_path}: {message}")


@dataclass(frozen=True)
class SweepSpec:
    parameter: str
    minimum: float
    maximum: float
    count: int

    def points(self) -> List[float]:
        return [float(x) for x in np.linspace(self.minimum, self.maximum, self.count)]


@dataclass(frozen=True)
class ScenarioRequest:
    """Validated request; every parameter value is in SI units"""
    scenario: str
    params: Dict[str, float]
    tags: Tuple[MomentumTag, ...]
    sweep: Optional[SweepSpec] = None

    def points(self) -> List[Dict[str, float]]:
        """Parameter sets in request order; a single point without a sweep"""
        if self.sweep is None:
            return [dict(self.params)]
        return [{**self.params, self.sweep.parameter: value} for value in self.sweep.points()]

    def echo(self) -> Dict[str, Any]:
        schema = SCENARIO_CONFIGS[self.scenario]['params']
        echo = {
            'scenario': self.scenario,
            'tags': [tag.value for tag in self.tags],
            'params': {name: {'value': value, 'unit': schema[name]['unit'] or '1'}
                       for name, value in self.params.items()},
        }
        if self.sweep is not None:
            echo['sweep'] = {
                'parameter': self.sweep.parameter,
                'min': self.sweep.minimum,
                'max': self.sweep.maximum,
                'count': self.sweep.count,
                'unit': schema[self.sweep.parameter]['unit'] or '1',
            }
        return echo


def unit_expression(token: str) -> str:
    """Translate a key's unit token into a pint expression: W_per_m2 -> (W)/(m**2)"""
    if token.startswith('per_'):
        numerator, denominator = '', token[len('per_'):]
    elif '_per_' in token:
        numerator, denominator = token.split('_per_', 1)
    else:
        numerator, denominator = token, ''

    def factors(part: str) -> str:
        converted = []
        for factor in part.split('_'):
            if not factor:
                continue
            match = _EXPONENT_RE.fullmatch(factor)
            converted.append(f"{match.group(1)}**{match.group(2)}" if match else factor)
        return '*'.join(converted)

    expression = factors(numerator) or '1'
    if denominator:
        expression = f"({expression})/({factors(denominator)})"
    return expression


def _cycle_frequency_units(quantity) -> List[str]:
    found = []
    for unit_name, _ in quantity.unit_items():
        if any(base in _CYCLE_FREQUENCY_UNITS for _, base, _ in ureg.parse_unit_name(unit_name)):
            found.append(unit_name)
    return found


def _split_key(key: str, schema: Dict[str, Dict[str, Any]], section: str) -> Tuple[str, Optional[str]]:
    """Match '<param>_<unit token>' against the schema, longest parameter name first"""
    for name in sorted(schema, key=len, reverse=True):
        if key == name:
            return name, None
        if key.startswith(name + '_'):
            return name, key[len(name) + 1:]
    raise ConfigError(f"{section}.{key}", f"unknown parameter (expected one of: {', '.join(schema)})")


def _to_si(value: Any, name: str, token: Optional[str], spec: Dict[str, Any], key_path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(key_path, f"expected a number, got {type(value).__name__} {value!r}")
    expected = spec['unit']
    if token is None:
        if expected:
            raise ConfigError(key_path, f"missing unit token; '{name}' needs a unit compatible with {expected}")
        return float(value)

    try:
        quantity = ureg.Quantity(float(value), unit_expression(token))
    except (PintError, ValueError, AttributeError, SyntaxError) as e:
        raise ConfigError(key_path, f"cannot parse unit token {token!r}: {e}")

    target = ureg.parse_units(expected) if expected else ureg.dimensionless
    if quantity.dimensionality != target.dimensionality:
        raise ConfigError(
            key_path,
            f"unit mismatch: {token!r} has dimension {quantity.dimensionality}, expected {expected or 'dimensionless'}"
        )
    if spec.get('angular'):
        cycle_units = _cycle_frequency_units(quantity)
        if cycle_units:
            raise ConfigError(
                key_path,
                f"'{name}' is an angular frequency; {', '.join(cycle_units)} counts cycles, give it in rad/s"
            )
    return float(quantity.to(target).magnitude)


def _parse_tags(raw: Any) -> Tuple[MomentumTag, ...]:
    if raw is None or (isinstance(raw, str) and raw.strip().lower() == 'both'):
        return (MomentumTag.ABRAHAM, MomentumTag.MINKOWSKI)
    if not isinstance(raw, str):
        raise ConfigError('tag', f"expected 'abraham', 'minkowski' or 'both', got {raw!r}")
    try:
        return (MomentumTag.parse(raw),)
    except ValueError as e:
        raise ConfigError('tag', str(e))


def _parse_sweep(raw: Any, schema: Dict[str, Dict[str, Any]]) -> Optional[SweepSpec]:
    if raw is None:
        return None
    if not isinstance(raw, dict) or len(raw) != 1:
        raise ConfigError('sweep', "expected exactly one entry '<param>_<unit> = [min, max, count]'")
    (key, bounds), = raw.items()
    key_path = f"sweep.{key}"
    name, token = _split_key(key, schema, 'sweep')
    if not isinstance(bounds, list) or len(bounds) != 3:
        raise ConfigError(key_path, f"expected [min, max, count], got {bounds!r}")
    low, high, count = bounds
    if isinstance(count, bool) or not isinstance(count, int):
        raise ConfigError(key_path, f"sweep count must be an integer, got {count!r}")
    min_count = SCENARIO_CONFIGS['general']['sweep_min_count']
    if count < min_count:
        raise ConfigError(key_path, f"sweep count must be >= {min_count}, got {count}")
    return SweepSpec(
        parameter=name,
        minimum=_to_si(low, name, token, schema[name], key_path),
        maximum=_to_si(high, name, token, schema[name], key_path),
        count=count,
    )


def parse_document(document: Dict[str, Any]) -> ScenarioRequest:
    """Validate a decoded config document and apply schema defaults"""
    unknown = set(document) - _TOP_LEVEL_KEYS
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown top-level key")

    scenario = document.get('scenario')
    if scenario not in SCENARIO_NAMES:
        raise ConfigError('scenario', f"unknown scenario {scenario!r} (expected one of: {', '.join(SCENARIO_NAMES)})")
    schema = SCENARIO_CONFIGS[scenario]['params']

    raw_params = document.get('params', {})
    if not isinstance(raw_params, dict):
        raise ConfigError('params', "expected a table of parameters")

    params: Dict[str, float] = {}
    for key, value in raw_params.items():
        key_path = f"params.{key}"
        name, token = _split_key(key, schema, 'params')
        if name in params:
            raise ConfigError(key_path, f"parameter '{name}' given more than once")
        params[name] = _to_si(value, name, token, schema[name], key_path)

    sweep = _parse_sweep(document.get('sweep'), schema)
    if sweep is not None and sweep.parameter in params:
        (sweep_key,) = document['sweep']
        raise ConfigError(f"sweep.{sweep_key}",
                          f"'{sweep.parameter}' is already set in [params]; give it in one place only")
    for name, spec in schema.items():
        if name in params:
            continue
        if spec['default'] is not None:
            params[name] = float(spec['default'])
        elif sweep is None or sweep.parameter != name:
            raise ConfigError(f"params.{name}", f"missing required parameter '{name}' [{spec['unit'] or '1'}]")

    request = ScenarioRequest(
        scenario=scenario,
        params=params,
        tags=_parse_tags(document.get('tag')),
        sweep=sweep,
    )
    logger.info(f"Parsed {scenario} request with {len(request.points())} point(s)")
    return request


def parse_config(text: str, fmt: str = 'toml') -> ScenarioRequest:
    try:
        if fmt == 'toml':
            document = tomllib.loads(text)
        elif fmt == 'json':
            document = json.loads(text)
        else:
            raise ConfigError('<document>', f"unsupported config format {fmt!r}")
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise ConfigError('<document>', f"malformed {fmt} document: {e}")
    if not isinstance(document, dict):
        raise ConfigError('<document>', "expected a key-value document")
    return parse_document(document)


def load_config(path) -> ScenarioRequest:
    """Read a UTF-8 config file; the suffix selects TOML or JSON"""
    path = Path(path)
    fmt = 'json' if path.suffix.lower() == '.json' else 'toml'
    logger.debug(f"Loading {fmt} config from: {path}")
    try:
        text = path.read_text(encoding='utf-8')
    except FileNotFoundError:
        logger.error(f"Config file not found: {path}")
        raise
    return parse_config(text, fmt)
