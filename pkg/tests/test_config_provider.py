import json
from pathlib import Path

import pytest

from src.config import SCENARIO_NAMES
from src.physics import MomentumTag
from src.providers.config_provider import ConfigError, load_config, parse_config, unit_expression

CONFIG_DIR = Path(__file__).parent.parent / 'data' / 'configs'

MINIMAL_MIRROR = """
scenario = "mirror"

[params]
n = 1.33
E0_V_per_m = 1.0e3
omega_rad_per_s = 2.976e15
sigma_S_per_m = 5.96e7
"""


def config_error(text: str, fmt: str = 'toml') -> ConfigError:
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text, fmt)
    return excinfo.value


class TestUnitExpression:
    @pytest.mark.parametrize("token,expected", [
        ('m', 'm'),
        ('um', 'um'),
        ('Pa_s', 'Pa*s'),
        ('m2', 'm**2'),
        ('W_per_m2', '(W)/(m**2)'),
        ('kg_m_per_s', '(kg*m)/(s)'),
        ('rad_per_s', '(rad)/(s)'),
        ('per_s', '(1)/(s)'),
    ])
    def test_translation(self, token, expected):
        assert unit_expression(token) == expected


class TestParseConfig:
    def test_minimal_mirror_defaults_to_both_tags(self):
        request = parse_config(MINIMAL_MIRROR)
        assert request.scenario == 'mirror'
        assert request.tags == (MomentumTag.ABRAHAM, MomentumTag.MINKOWSKI)
        assert request.sweep is None
        assert request.params['n'] == 1.33
        assert request.params['E0'] == pytest.approx(1e3, rel=1e-15)
        assert request.params['quadrature_tol'] == 1e-8
        assert request.params['max_k_over_alpha'] == 0.2

    def test_units_are_converted_to_si(self):
        request = parse_config("""
scenario = "sphere-kick"
[params]
M_kg = 1.44e-10
a_um = 25
H_uJ = 5.9
n = 1.33
mu_Pa_s = 8.9e-4
L0_um = 300
delta_G_kg_m_per_s = 8.1e-12
""")
        assert request.params['a'] == pytest.approx(25e-6, rel=1e-12)
        assert request.params['H'] == pytest.approx(5.9e-6, rel=1e-12)
        assert request.params['L0'] == pytest.approx(300e-6, rel=1e-12)
        assert request.params['mu0'] == 1.8e-5
        assert request.params['n0'] == 1.0

    def test_wgm_index_default(self):
        request = parse_config('scenario = "wgm"\n[params]\na_um = 100\nP0_W = 100\nomega0_rad_per_s = 1000\n')
        assert request.params['n'] == 1.45
        assert request.params['t'] == 0.0

    def test_prefixed_units_scale(self):
        request = parse_config('scenario = "fiber"\n[params]\nH_mJ = 2.7\nn = 1.5\n')
        assert request.params['H'] == pytest.approx(2.7e-3, rel=1e-12)

    def test_longest_parameter_name_wins(self):
        request = parse_config('scenario = "interface"\n[params]\nE_t_V_per_m = 1e6\nn_from = 1.0\nn_to = 1.33\n')
        assert request.params == pytest.approx({'E_t': 1e6, 'n_from': 1.0, 'n_to': 1.33}, rel=1e-15)

    def test_sweep_expands_in_order(self):
        request = parse_config(MINIMAL_MIRROR.replace('n = 1.33\n', '') + '\n[sweep]\nn = [1.0, 1.6, 13]\n')
        assert request.sweep.parameter == 'n'
        points = request.points()
        assert len(points) == 13
        assert points[0]['n'] == 1.0
        assert points[-1]['n'] == 1.6
        assert [p['n'] for p in points] == sorted(p['n'] for p in points)

    def test_sweep_converts_units(self):
        text = MINIMAL_MIRROR.replace('sigma_S_per_m = 5.96e7\n', '')
        request = parse_config(text + '\n[sweep]\nsigma_MS_per_m = [10, 100, 4]\n')
        assert request.sweep.minimum == pytest.approx(1e7, rel=1e-12)
        assert request.sweep.maximum == pytest.approx(1e8, rel=1e-12)

    @pytest.mark.parametrize("tag,expected", [
        ('abraham', (MomentumTag.ABRAHAM,)),
        ('Minkowski', (MomentumTag.MINKOWSKI,)),
        ('both', (MomentumTag.ABRAHAM, MomentumTag.MINKOWSKI)),
    ])
    def test_tag_selection(self, tag, expected):
        assert parse_config(f'tag = "{tag}"\n' + MINIMAL_MIRROR).tags == expected

    def test_json_document(self):
        document = {
            'scenario': 'bec',
            'params': {'n': 1.0001, 'omega_rad_per_s': 2.415e15},
        }
        request = parse_config(json.dumps(document), 'json')
        assert request.params == pytest.approx({'n': 1.0001, 'omega': 2.415e15}, rel=1e-15)

    def test_echo_carries_units(self):
        echo = parse_config(MINIMAL_MIRROR).echo()
        assert echo['params']['E0']['value'] == pytest.approx(1e3, rel=1e-15)
        assert echo['params']['E0']['unit'] == 'V/m'
        assert echo['params']['n'] == {'value': 1.33, 'unit': '1'}
        assert echo['tags'] == ['abraham', 'minkowski']


class TestConfigErrors:
    def test_unknown_scenario(self):
        error = config_error('scenario = "levitation"\n')
        assert error.key_path == 'scenario'
        assert 'levitation' in str(error)

    def test_missing_parameter_names_it(self):
        error = config_error('scenario = "wgm"\n[params]\na_um = 100\nomega0_rad_per_s = 1000\n')
        assert error.key_path == 'params.P0'
        assert 'P0' in str(error)

    def test_unit_mismatch(self):
        error = config_error('scenario = "wgm"\n[params]\na_s = 100\nP0_W = 100\nomega0_rad_per_s = 1000\n')
        assert error.key_path == 'params.a_s'
        assert 'unit mismatch' in str(error)

    def test_missing_unit_token(self):
        error = config_error('scenario = "fiber"\n[params]\nH = 2.7e-3\nn = 1.5\n')
        assert error.key_path == 'params.H'

    def test_unparseable_unit_token(self):
        error = config_error('scenario = "fiber"\n[params]\nH_blorgs = 2.7e-3\nn = 1.5\n')
        assert error.key_path == 'params.H_blorgs'

    def test_mistyped_value(self):
        error = config_error('scenario = "fiber"\n[params]\nH_mJ = "2.7"\nn = 1.5\n')
        assert error.key_path == 'params.H_mJ'
        assert 'number' in str(error)

    def test_unknown_parameter(self):
        error = config_error('scenario = "fiber"\n[params]\nH_mJ = 2.7\nn = 1.5\nlength_m = 1\n')
        assert error.key_path == 'params.length_m'

    def test_duplicate_parameter(self):
        error = config_error('scenario = "fiber"\n[params]\nH_mJ = 2.7\nH_J = 0.0027\nn = 1.5\n')
        assert 'more than once' in str(error)

    def test_sweep_count_below_two(self):
        error = config_error(MINIMAL_MIRROR.replace('n = 1.33\n', '') + '\n[sweep]\nn = [1.0, 1.6, 1]\n')
        assert error.key_path == 'sweep.n'

    def test_sweep_shape(self):
        error = config_error(MINIMAL_MIRROR.replace('n = 1.33\n', '') + '\n[sweep]\nn = [1.0, 1.6]\n')
        assert error.key_path == 'sweep.n'

    def test_swept_parameter_also_in_params(self):
        error = config_error('scenario = "fiber"\n[params]\nH_mJ = 2.7\nn = 1.5\n[sweep]\nn = [1.0, 1.5, 3]\n')
        assert error.key_path == 'sweep.n'
        assert '[params]' in str(error)

    @pytest.mark.parametrize("key", ['omega_Hz', 'omega_THz', 'omega_GHz'])
    def test_cycle_frequency_for_angular_parameter(self, key):
        error = config_error(f'scenario = "bec"\n[params]\nn = 1.0\n{key} = 1.0\n')
        assert error.key_path == f'params.{key}'
        assert 'angular frequency' in str(error)

    def test_cycle_frequency_in_modulation_sweep(self):
        error = config_error('scenario = "wgm"\n[params]\na_um = 100\nP0_W = 100\n'
                             '[sweep]\nomega0_kHz = [1, 2, 3]\n')
        assert error.key_path == 'sweep.omega0_kHz'

    @pytest.mark.parametrize("key", ['omega_rad_per_s', 'omega_per_s'])
    def test_angular_units_accepted(self, key):
        request = parse_config(f'scenario = "bec"\n[params]\nn = 1.0\n{key} = 2.0\n')
        assert request.params['omega'] > 0

    def test_unknown_tag(self):
        assert config_error('tag = "einstein"\n' + MINIMAL_MIRROR).key_path == 'tag'

    def test_malformed_document(self):
        assert config_error('scenario = \n').key_path == '<document>'

    def test_config_error_is_value_error(self):
        assert issubclass(ConfigError, ValueError)


class TestLoadConfig:
    @pytest.mark.parametrize("path", sorted(CONFIG_DIR.glob('*.toml')), ids=lambda p: p.stem)
    def test_sample_configs_parse(self, path):
        assert load_config(path).scenario in SCENARIO_NAMES

    def test_sample_configs_cover_every_scenario(self):
        scenarios = {load_config(path).scenario for path in CONFIG_DIR.glob('*.toml')}
        assert scenarios == set(SCENARIO_NAMES)

    def test_json_suffix(self, tmp_path):
        path = tmp_path / 'fiber.json'
        path.write_text(json.dumps({'scenario': 'fiber', 'params': {'H_mJ': 2.7, 'n': 1.5}}), encoding='utf-8')
        assert load_config(path).params['H'] == pytest.approx(2.7e-3, rel=1e-12)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / 'absent.toml')
