import json

import pytest

from colexcode import colexes
from colexcode.colexes import colex_io
from colexcode.errors import ColexParseError, ColexValidationError


def write(tmp_path, text, name='colex.json'):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.mark.parametrize('fixture', ['tesseract', 'tetra', 'torus'])
def test_save_then_load(request, tmp_path, fixture):
    colex = request.getfixturevalue(fixture)
    path = str(tmp_path / 'colex.json')
    colexes.save_colex(colex, path)
    assert colexes.load_colex(path) == colex


def test_saved_file_is_deterministic(tmp_path, tetra):
    first, second = str(tmp_path / 'a.json'), str(tmp_path / 'b.json')
    colexes.save_colex(tetra, first)
    colexes.save_colex(colexes.TetrahedralColexBuilder().build(), second)
    with open(first) as f, open(second) as g:
        assert f.read() == g.read()


def test_saved_fields(tetra):
    colex_dict = colex_io.colex_to_dict(tetra)
    assert colex_dict['version'] == colex_io.FORMAT_VERSION
    assert colex_dict['closed'] is False
    assert colex_dict['site_labels'] == list(range(1, 16))
    assert len(colex_dict['links']) == 28


def test_malformed_json_names_line(tmp_path):
    with pytest.raises(ColexParseError, match='line 2'):
        colexes.load_colex(write(tmp_path, '{"version": 1,\n "n_sites": }'))


def test_missing_field(tmp_path):
    with pytest.raises(ColexParseError, match='closed'):
        colexes.load_colex(write(tmp_path, json.dumps(dict(version=1, n_sites=2, links=[]))))


def test_bad_link_is_named(tmp_path):
    colex_dict = dict(version=1, n_sites=2, links=[[0, 1, 'r'], [0, 1, 'q']], closed=True)
    with pytest.raises(ColexParseError, match=r'links\[1\]'):
        colexes.load_colex(write(tmp_path, json.dumps(colex_dict)))


def test_site_out_of_range(tmp_path):
    colex_dict = dict(version=1, n_sites=2, links=[[0, 2, 'r']], closed=True)
    with pytest.raises(ColexParseError, match=r'links\[0\]'):
        colexes.load_colex(write(tmp_path, json.dumps(colex_dict)))


def test_wrong_version(tmp_path):
    colex_dict = dict(version=2, n_sites=0, links=[], closed=True)
    with pytest.raises(ColexParseError, match='version'):
        colexes.load_colex(write(tmp_path, json.dumps(colex_dict)))


def test_boolean_is_not_a_site_count(tmp_path):
    colex_dict = dict(version=1, n_sites=True, links=[], closed=True)
    with pytest.raises(ColexParseError, match='n_sites'):
        colexes.load_colex(write(tmp_path, json.dumps(colex_dict)))


def test_axiom_failure_on_load(tmp_path):
    colex_dict = dict(version=1, n_sites=2, links=[[0, 1, 'r']], closed=True)
    path = write(tmp_path, json.dumps(colex_dict))
    with pytest.raises(ColexValidationError) as excinfo:
        colexes.load_colex(path)
    assert 'site_degree' in excinfo.value.report.axioms_violated()
    assert colexes.load_colex(path, check=False).counts()['links'] == 1


def test_save_rejects_invalid(tmp_path):
    with pytest.raises(ColexValidationError):
        colexes.save_colex(colexes.Colex(2, [(0, 1, 'r')]), str(tmp_path / 'bad.json'))
