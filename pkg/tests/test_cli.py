"""Test the bezdraw command line interface."""

from __future__ import annotations

import json

import pytest

from vb.bezdraw import cli


@pytest.fixture(autouse=True)
def config_dir(tmp_path, monkeypatch):
    """Private confuse user configuration directory."""
    path = tmp_path / 'config'
    path.mkdir()
    monkeypatch.setenv('BEZDRAWDIR', str(path))
    return path


@pytest.fixture
def kite_file(tmp_path):
    path = tmp_path / 'kite.json'
    assert cli.main(['gen', '--kite', '-o', str(path)]) == 0
    return path


@pytest.fixture
def rac_file(tmp_path, kite_file):
    path = tmp_path / 'rac.json'
    assert cli.main(['draw-rac', '-i', str(kite_file), '-o', str(path)]) == 0
    return path


def _load(path):
    return json.loads(path.read_text(encoding='utf-8'))


def test_draw_rac_with_everything(tmp_path, kite_file, capsys):
    out, svg, report = (tmp_path / name for name in ('d.json', 'd.svg', 'r.json'))
    code = cli.main(['draw-rac', '-i', str(kite_file), '-o', str(out), '--svg', str(svg),
                     '--verify', '--report', str(report)])
    assert code == 0
    assert len(_load(out)['edges']) == 6
    assert svg.read_text(encoding='utf-8').startswith('<?xml')
    assert _load(report)['verdict'] == 'pass'
    assert 'verdict: pass (rac)' in capsys.readouterr().err


def test_gen_random(tmp_path):
    path = tmp_path / 'emb.json'
    assert cli.main(['gen', '--n', '12', '--crossing-fraction', '1', '--seed', '5',
                     '-o', str(path)]) == 0
    data = _load(path)
    assert data['n'] == 12 + len(data['dummies'])


def test_gen_needs_n(tmp_path):
    with pytest.raises(SystemExit) as exc:
        cli.main(['gen', '-o', str(tmp_path / 'x.json')])
    assert exc.value.code == 2


def test_gen_bad_n(tmp_path, capsys):
    assert cli.main(['gen', '--n', '3', '-o', str(tmp_path / 'x.json')]) == 2
    assert capsys.readouterr().err.startswith('error: InputError: ')


def test_draw_planar_fixture(tmp_path):
    out = tmp_path / 'star.json'
    assert cli.main(['draw-planar', '--fixture', 'star-4', '-o', str(out), '--verify']) == 0
    assert len(_load(out)['edges']) == 4


def test_draw_planar_from_file(tmp_path):
    jb, out = tmp_path / 'wheel.json', tmp_path / 'd.json'
    assert cli.main(['fixture', 'wheel-6', '-o', str(jb)]) == 0
    assert _load(jb)['degrees'][0] == 6
    assert cli.main(['draw-planar', '-i', str(jb), '-o', str(out)]) == 0
    assert cli.main(['verify', '-i', str(out), '--mode', 'planar']) == 0


def test_draw_planar_needs_one_source(tmp_path):
    with pytest.raises(SystemExit):
        cli.main(['draw-planar', '-o', str(tmp_path / 'x.json')])


def test_unknown_fixture(tmp_path, capsys):
    assert cli.main(['fixture', 'cube', '-o', str(tmp_path / 'x.json')]) == 2
    assert 'error: JointBoxError: ' in capsys.readouterr().err


def test_verify_outputs(tmp_path, rac_file, capsys):
    report = tmp_path / 'r.json'
    assert cli.main(['verify', '-i', str(rac_file), '--json', '--report', str(report)]) == 0
    printed = json.loads(capsys.readouterr().out)
    assert printed == _load(report)
    assert printed['crossings'][0]['declared']
    assert cli.main(['verify', '-i', str(rac_file), '--tol-angle', '1e-3']) == 0
    assert 'violations: 0' in capsys.readouterr().out


def test_verify_planar_mode_rejects_crossings(rac_file, capsys):
    assert cli.main(['verify', '-i', str(rac_file), '--mode', 'planar']) == 1
    assert 'unexpected-intersection' in capsys.readouterr().out


def test_verify_bad_inputs(tmp_path, capsys):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"vertices": [[0, 0]], "edges": [{"u": 0}]}', encoding='utf-8')
    assert cli.main(['verify', '-i', str(bad)]) == 2
    assert 'error: FormatError: drawing: edges.0.v: Field required' in capsys.readouterr().err
    assert cli.main(['verify', '-i', str(tmp_path / 'none.json')]) == 2
    assert capsys.readouterr().err.startswith('error: FileNotFoundError: ')


def test_bad_tolerance(rac_file):
    with pytest.raises(SystemExit) as exc:
        cli.main(['verify', '-i', str(rac_file), '--tol-angle', '0'])
    assert exc.value.code == 2


def test_render(tmp_path, rac_file):
    svg = tmp_path / 'd.svg'
    assert cli.main(['render', '-i', str(rac_file), '-o', str(svg), '--labels']) == 0
    text = svg.read_text(encoding='utf-8')
    assert 'id="labels"' in text and 'id="crossings"' in text
    assert cli.main(['render', '-i', str(rac_file), '-o', str(svg), '--no-crossings']) == 0
    assert 'id="crossings"' not in svg.read_text(encoding='utf-8')


def test_user_configuration(tmp_path, rac_file, config_dir):
    (config_dir / 'config.yaml').write_text('render:\n    mark_crossings: no\n', encoding='utf-8')
    svg = tmp_path / 'd.svg'
    assert cli.main(['render', '-i', str(rac_file), '-o', str(svg)]) == 0
    assert 'id="crossings"' not in svg.read_text(encoding='utf-8')


def test_configured_derivative_tolerance(rac_file, config_dir, capsys):
    (config_dir / 'config.yaml').write_text('tolerances:\n    deriv: 1.0e+6\n', encoding='utf-8')
    assert cli.main(['verify', '-i', str(rac_file)]) == 1
    assert 'infinite-curvature' in capsys.readouterr().out


def test_invalid_user_configuration(rac_file, config_dir, capsys):
    (config_dir / 'config.yaml').write_text('curvature:\n    samples: many\n', encoding='utf-8')
    assert cli.main(['verify', '-i', str(rac_file)]) == 2
    assert capsys.readouterr().err.startswith('error: ConfigTypeError: ')


def test_config_command(config_dir, capsys):
    assert cli.main(['config', '--write']) == 0
    assert capsys.readouterr().out.startswith('written: ')
    assert (config_dir / 'config.yaml').exists()
    assert cli.main(['config', '--write', '--show']) == 0
    out = capsys.readouterr().out
    assert out.startswith('exists: ')
    assert 'Configuration debug print' in out


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(['--version'])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith('bezdraw ')


def test_schema(tmp_path, capsys):
    assert cli.main(['schema', 'drawing']) == 0
    assert 'vertices' in json.loads(capsys.readouterr().out)['properties']
    path = tmp_path / 'report.schema.json'
    assert cli.main(['schema', 'report', '-o', str(path)]) == 0
    assert _load(path)['title'] == 'ReportDocument'
