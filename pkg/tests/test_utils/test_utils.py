import io
import json

import click
import pytest

from confsel.pipeline import PipelineConfig
from confsel.stability import StabilityConfig
from confsel.utils import NArgsParam, derive_seed, parallel_map, parse_config


def test_nargs_param():
    param = click.Option(['--pins'], default='a,b')
    parser = NArgsParam()
    assert parser.convert('x,y', param, None) == ['x', 'y']
    assert parser.convert('+c', param, None) == ['a', 'b', 'c']
    assert parser.convert('-a', param, None) == ['b']
    assert parser.convert(['p', 'q'], param, None) == ['p', 'q']

def test_derive_seed():
    assert derive_seed(1, 2, 3) == derive_seed(1, 2, 3)
    assert derive_seed(1, 2, 3) != derive_seed(1, 3, 2)
    assert derive_seed(1, 0) != derive_seed(2, 0)
    assert 0 <= derive_seed(5) < 2 ** 32

def test_parallel_map_keeps_order():
    assert parallel_map(abs, [-3, 2, -1], n_jobs=1) == [3, 2, 1]
    assert parallel_map(abs, [-3, 2, -1], n_jobs=2) == [3, 2, 1]

def test_parse_toml(toml_document):
    document = parse_config(io.StringIO(toml_document))
    assert StabilityConfig.from_config(document).window_width == 3
    config = PipelineConfig.from_config(document)
    assert config.alpha == 0.1
    assert config.draws == 500
    assert config.stability.window_width == 3
    assert config.ordering.pinned_high == ['age']

def test_parse_json(tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'confsel': {'stability': {'window_width': 7}}}))
    assert StabilityConfig.from_file(str(path)).window_width == 7

def test_unknown_option():
    with pytest.raises(ValueError):
        StabilityConfig.from_config({'confsel': {'stability': {'widht': 3}}})

def test_overrides_win(toml_document):
    document = parse_config(io.StringIO(toml_document))
    assert StabilityConfig.from_config(document, window_width=7).window_width == 7
    assert StabilityConfig.from_config(document, window_width=None).window_width == 3

def test_to_config_round_trip():
    config = PipelineConfig(seed=3, alpha=0.2)
    again = PipelineConfig.from_config(config.to_config())
    assert again == config
