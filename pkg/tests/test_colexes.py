import pytest

from colexcode import colexes
from colexcode.code import code_from_colex
from colexcode.colexes import Color, COLORS, Colex, puncture, validate
from colexcode.colexes.torus_colex import four_color, lattice_graph
from colexcode.errors import ColexValidationError


def test_tesseract_counts(tesseract):
    assert tesseract.counts() == dict(sites=16, links=32, faces=24, cells=8)
    assert tesseract.closed
    assert validate(tesseract).passed


def test_tesseract_links_flip_one_bit(tesseract):
    for a, b, color in tesseract.links:
        assert a ^ b == 1 << color.index


def test_tesseract_faces_and_cells(tesseract):
    for face in tesseract.faces:
        assert len(face.sites) == 4
        assert len(face.color_pair) == 2
    for cell in tesseract.cells:
        assert len(cell.sites) == 8
        assert len(cell.faces) == 6
    for site in range(16):
        assert len(tesseract.cells_at(site)) == 4
        assert len(tesseract.faces_at(site)) == 6


def test_face_cycle_alternates_colors(tesseract):
    for face in tesseract.faces:
        link_colors = colexes.base_colex.complement(face.color_pair)
        seen = []
        for a, b in zip(face.sites, face.sites[1:] + face.sites[:1]):
            link_id = next(link_id for link_id in tesseract.links_at(a) if tesseract.other_end(link_id, a) == b)
            seen.append(tesseract.links[link_id].color)
        assert set(seen) == link_colors
        assert all(p != q for p, q in zip(seen, seen[1:]))


def test_tetra_counts(tetra):
    assert tetra.counts() == dict(sites=15, links=28, faces=18, cells=4)
    assert not tetra.closed
    assert tetra.site_labels == tuple(range(1, 16))
    report = validate(tetra)
    assert report.passed
    assert report.parity == 'odd'


def test_tetra_boundary_sites_miss_every_color(tetra):
    boundary = [site for site in range(tetra.n_sites) if tetra.degree(site) == 3]
    assert len(boundary) == 4
    missing = {color for site in boundary for color in COLORS if tetra.link_of(site, color) is None}
    assert missing == set(COLORS)


def test_punctured_site_hparam():
    colex = colexes.TetrahedralColexBuilder(hparams='punctured_site=5').build_validated()
    assert 5 not in colex.site_labels
    assert colex.counts()['sites'] == 15


COUNT_KEYS = ('sites', 'links', 'faces', 'cells')


@pytest.mark.parametrize('name', ['tesseract', 'torus'])
def test_puncture_every_site(name, request):
    colex = request.getfixturevalue(name)
    before = colex.counts()
    for site in range(colex.n_sites):
        punctured = puncture(colex, site)
        after = punctured.counts()
        assert tuple(before[key] - after[key] for key in COUNT_KEYS) == (1, 4, 6, 4)
        report = validate(punctured)
        assert report.passed, (site, report.violations)
        assert report.parity == 'odd'
        code_from_colex(punctured)


def test_punctured_small_torus_keeps_shared_face(torus, tmp_path):
    # at period 2 the removed cells also meet in a face away from the puncture
    punctured = puncture(torus, 0)
    in_cells = {face_id for cell in punctured.cells for face_id in cell.faces}
    assert len(in_cells) < len(punctured.faces)
    assert validate(punctured).passed
    path = str(tmp_path / 'torus_punctured.json')
    colexes.save_colex(punctured, path)
    assert colexes.load_colex(path) == punctured


def test_puncture_requires_closed(tetra):
    with pytest.raises(ValueError):
        puncture(tetra, 0)


def test_puncture_site_out_of_range(tesseract):
    with pytest.raises(ValueError):
        puncture(tesseract, 16)


def test_closed_mode_rejects_punctured(tetra):
    report = validate(tetra, 'closed')
    assert not report.passed
    assert 'site_degree' in report.axioms_violated()
    assert 'site_parity' in report.axioms_violated()


def test_validate_reports_bad_links():
    colex = Colex(2, [(0, 0, 'r'), (0, 1, 'g'), (0, 1, 'g')])
    violations = validate(colex).axioms_violated()
    assert 'self_loop' in violations
    assert 'distinct_link_colors' in violations
    assert 'site_degree' in violations


def test_validate_rejects_invalid_mode(tesseract):
    with pytest.raises(ValueError):
        validate(tesseract, 'open')


def test_color_tokens():
    assert Color.from_token('R') is Color.R
    assert Color.Y.index == 3
    with pytest.raises(ValueError):
        Color.from_token('q')


def test_torus_counts(torus):
    assert torus.counts() == dict(sites=96, links=192, faces=112, cells=16)
    assert torus.first_betti_number == 3
    assert torus.link_windings is not None
    assert validate(torus).passed


def test_torus_rejects_odd_period():
    with pytest.raises(ValueError):
        colexes.build_torus(3)
    with pytest.raises(ValueError):
        colexes.build_torus(0)


def test_four_coloring_is_proper():
    graph = lattice_graph(2)
    coloring = four_color(graph)
    assert set(coloring.values()) <= set(range(4))
    for u, v in graph.edges():
        assert coloring[u] != coloring[v]


def test_builder_registry():
    assert colexes.get_builder_class('tetrahedral') is colexes.TetrahedralColexBuilder
    assert colexes.get_builder_class('torus') is colexes.TorusColexBuilder
    with pytest.raises(ValueError):
        colexes.get_builder_class('cube')


def test_builder_rejects_unknown_hparam():
    with pytest.raises(ValueError):
        colexes.TorusColexBuilder(hparams='size=4')


def test_build_validated_raises_on_invalid():
    class BrokenBuilder(colexes.BaseColexBuilder):
        def build(self):
            return Colex(2, [(0, 1, 'r')])

    with pytest.raises(ColexValidationError) as excinfo:
        BrokenBuilder().build_validated()
    assert not excinfo.value.report.passed
