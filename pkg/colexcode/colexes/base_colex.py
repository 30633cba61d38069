import enum
import itertools
import logging
from collections import namedtuple
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from colexcode.errors import ColexValidationError
from colexcode.utils import hparams_utils

logger = logging.getLogger(__name__)


class Color(enum.Enum):
    R = 'r'
    G = 'g'
    B = 'b'
    Y = 'y'

    @property
    def index(self):
        return COLORS.index(self)

    @classmethod
    def from_token(cls, token):
        try:
            return cls(token.lower())
        except (ValueError, AttributeError):
            raise ValueError('Unknown color token %r' % (token,))

    def __str__(self):
        return self.value


COLORS = tuple(Color)
COLOR_PAIRS = tuple(frozenset(pair) for pair in itertools.combinations(COLORS, 2))


def complement(colors):
    return frozenset(COLORS) - frozenset(colors)


def pair_name(color_pair):
    return ''.join(c.value for c in sorted(color_pair, key=lambda c: c.index))


Link = namedtuple('Link', ['a', 'b', 'color'])
# color_pair is the complement of the colors of the face's links, i.e. the
# colors of the two cells the face lies between
Face = namedtuple('Face', ['color_pair', 'sites', 'links'])
Cell = namedtuple('Cell', ['color', 'sites', 'faces', 'links'])
OpenComponent = namedtuple('OpenComponent', ['kind', 'colors', 'sites'])


class Colex(object):
    def __init__(self, n_sites, links, closed=True, first_betti_number=None,
                 site_labels=None, link_windings=None):
        """
        A colored combinatorial 3-complex. Only sites and colored links are
        stored; faces and cells are derived as the components of the 2-color
        and 3-color subgraphs.

        Args:
            n_sites: number of sites, labelled 0..n_sites-1.
            links: iterable of (a, b, color) triples.
            closed: False for punctured colexes.
            first_betti_number: h1 of the underlying manifold, if known.
            site_labels: original site ids, recorded by `puncture`.
            link_windings: optional integer translation vector per link, used
                to recognise non-contractible cycles on the torus.
        """
        self.n_sites = int(n_sites)
        self.links = tuple(Link(int(a), int(b), c if isinstance(c, Color) else Color.from_token(c))
                           for a, b, c in links)
        self.closed = bool(closed)
        self.first_betti_number = first_betti_number
        self.site_labels = tuple(site_labels) if site_labels is not None else tuple(range(self.n_sites))
        if len(self.site_labels) != self.n_sites:
            raise ValueError('site_labels has %d entries for %d sites' % (len(self.site_labels), self.n_sites))
        if link_windings is not None:
            link_windings = tuple(tuple(int(w) for w in winding) for winding in link_windings)
            if len(link_windings) != len(self.links):
                raise ValueError('link_windings has %d entries for %d links'
                                 % (len(link_windings), len(self.links)))
        self.link_windings = link_windings

    @cached_property
    def _site_color_links(self):
        table = [{color: [] for color in COLORS} for _ in range(self.n_sites)]
        for link_id, (a, b, color) in enumerate(self.links):
            for site in (a, b):
                if 0 <= site < self.n_sites:
                    table[site][color].append(link_id)
        return table

    def links_at(self, site):
        return sorted(itertools.chain.from_iterable(self._site_color_links[site].values()))

    def link_of(self, site, color):
        """The id of the `color` link at `site`, or None."""
        link_ids = self._site_color_links[site][color]
        return link_ids[0] if len(link_ids) == 1 else None

    def degree(self, site):
        return sum(len(link_ids) for link_ids in self._site_color_links[site].values())

    def other_end(self, link_id, site):
        a, b, _ = self.links[link_id]
        return b if a == site else a

    def _components(self, colors):
        graph = nx.MultiGraph()
        for link_id, (a, b, color) in enumerate(self.links):
            if color in colors and a != b:
                graph.add_edge(a, b, key=link_id)
        components = []
        for sites in nx.connected_components(graph):
            link_ids = frozenset(key for _, _, key in graph.subgraph(sites).edges(keys=True))
            components.append((frozenset(sites), link_ids))
        return sorted(components, key=lambda component: min(component[0]))

    def _is_complete(self, sites, colors):
        return all(len(self._site_color_links[site][color]) == 1
                   for site in sites for color in colors)

    def _walk_face(self, sites, link_colors):
        p, q = sorted(link_colors, key=lambda c: c.index)
        start = min(sites)
        cycle = [start]
        site, color = start, p
        for _ in range(len(sites)):
            site = self.other_end(self._site_color_links[site][color][0], site)
            color = q if color == p else p
            if site == start:
                break
            cycle.append(site)
        return tuple(cycle)

    @cached_property
    def _derived(self):
        faces = []
        open_components = []
        for link_colors in COLOR_PAIRS:
            for sites, link_ids in self._components(link_colors):
                if self._is_complete(sites, link_colors):
                    cycle = self._walk_face(sites, link_colors)
                    faces.append(Face(complement(link_colors), cycle, link_ids))
                else:
                    open_components.append(OpenComponent('face', complement(link_colors), sites))
        faces.sort(key=lambda face: (sorted(c.index for c in face.color_pair), min(face.sites)))

        cell_index = {}
        cells = []
        for color in COLORS:
            cell_colors = complement([color])
            for sites, link_ids in self._components(cell_colors):
                if self._is_complete(sites, cell_colors):
                    cells.append((color, sites, link_ids))
                else:
                    open_components.append(OpenComponent('cell', frozenset([color]), sites))
        cells.sort(key=lambda cell: (cell[0].index, min(cell[1])))
        for cell_id, (color, sites, _) in enumerate(cells):
            for site in sites:
                cell_index[(site, color)] = cell_id

        cell_faces = [[] for _ in cells]
        for face_id, face in enumerate(faces):
            for color in face.color_pair:
                owners = {cell_index.get((site, color)) for site in face.sites}
                if len(owners) == 1 and None not in owners:
                    cell_faces[owners.pop()].append(face_id)
        cells = [Cell(color, sites, frozenset(cell_faces[cell_id]), link_ids)
                 for cell_id, (color, sites, link_ids) in enumerate(cells)]
        return tuple(faces), tuple(cells), cell_index, tuple(open_components)

    @property
    def faces(self):
        return self._derived[0]

    @property
    def cells(self):
        return self._derived[1]

    def open_components(self):
        return self._derived[3]

    def cell_of(self, site, color):
        """The id of the `color` cell containing `site`, or None."""
        return self._derived[2].get((site, color))

    @cached_property
    def _site_faces(self):
        table = [[] for _ in range(self.n_sites)]
        for face_id, face in enumerate(self.faces):
            for site in face.sites:
                table[site].append(face_id)
        return table

    def faces_at(self, site):
        return list(self._site_faces[site])

    def cells_at(self, site):
        return [cell_id for cell_id in (self.cell_of(site, color) for color in COLORS) if cell_id is not None]

    def counts(self):
        return dict(sites=self.n_sites, links=len(self.links), faces=len(self.faces), cells=len(self.cells))

    def __eq__(self, other):
        return (isinstance(other, Colex) and self.n_sites == other.n_sites and self.links == other.links
                and self.closed == other.closed and self.first_betti_number == other.first_betti_number
                and self.site_labels == other.site_labels and self.link_windings == other.link_windings)

    def __hash__(self):
        return hash((self.n_sites, self.links, self.closed))

    def __repr__(self):
        return 'Colex(%s, closed=%s)' % (', '.join('%s=%d' % item for item in self.counts().items()), self.closed)


@dataclass
class ValidationReport:
    mode: str
    violations: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    parity: str = 'even'

    @property
    def passed(self):
        return not self.violations

    def axioms_violated(self):
        return sorted({axiom for axiom, _ in self.violations})

    def to_dict(self):
        return dict(passed=self.passed, mode=self.mode,
                    violations=[dict(axiom=axiom, witness=witness) for axiom, witness in self.violations],
                    counts=dict(self.counts), parity=self.parity)


def _link_str(colex, link_id):
    a, b, color = colex.links[link_id]
    return 'link %d (%d-%d %s)' % (link_id, a, b, color)


def _lost_both_cells(colex, face):
    return all(colex.cell_of(site, color) is None for color in face.color_pair for site in face.sites)


def validate(colex, mode=None):
    """
    Checks the colex axioms. Never raises on axiom failures; they are
    collected as (axiom, witness) entries of the report.

    Args:
        mode: 'closed' or 'punctured'. Defaults to the colex's own flag.
    """
    if mode is None:
        mode = 'closed' if colex.closed else 'punctured'
    if mode not in ('closed', 'punctured'):
        raise ValueError('Invalid validation mode %s' % mode)
    report = ValidationReport(mode=mode)
    violations = report.violations
    n = colex.n_sites

    for link_id, (a, b, _) in enumerate(colex.links):
        if not (0 <= a < n and 0 <= b < n):
            violations.append(('site_range', _link_str(colex, link_id)))
        elif a == b:
            violations.append(('self_loop', _link_str(colex, link_id)))

    boundary_sites = []
    for site in range(n):
        per_color = colex._site_color_links[site]
        if any(len(link_ids) > 1 for link_ids in per_color.values()):
            violations.append(('distinct_link_colors', 'site %d' % site))
        degree = colex.degree(site)
        if degree == 4:
            continue
        if mode == 'punctured' and degree == 3:
            boundary_sites.append(site)
        else:
            violations.append(('site_degree', 'site %d has degree %d' % (site, degree)))

    if mode == 'punctured':
        missing = [color for site in boundary_sites
                   for color in COLORS if not colex._site_color_links[site][color]]
        if len(boundary_sites) != 4 or len(set(missing)) != 4:
            violations.append(('puncture_boundary', 'degree-3 sites %s miss colors %s'
                               % (boundary_sites, ''.join(c.value for c in missing))))
    boundary = set(boundary_sites)

    for face_id, face in enumerate(colex.faces):
        if len(face.sites) < 4 or len(face.sites) % 2:
            violations.append(('face_cycle', 'face %d has %d sites' % (face_id, len(face.sites))))
    for component in colex.open_components():
        if mode == 'closed' or not (component.sites & boundary):
            violations.append(('open_%s' % component.kind, '%s component %s at sites %s'
                               % (component.kind, pair_name(component.colors), sorted(component.sites)[:8])))

    cells_per_face = [0] * len(colex.faces)
    for cell in colex.cells:
        for face_id in cell.faces:
            cells_per_face[face_id] += 1
    allowed = (2,) if mode == 'closed' else (1, 2)
    for face_id, count in enumerate(cells_per_face):
        if count == 0 and mode == 'punctured' and _lost_both_cells(colex, colex.faces[face_id]):
            # on small periodic lattices the removed cells can share a face away from the puncture
            continue
        if count not in allowed:
            violations.append(('face_in_two_cells', 'face %d lies in %d cells' % (face_id, count)))

    faces_per_link = [0] * len(colex.links)
    for face in colex.faces:
        for link_id in face.links:
            faces_per_link[link_id] += 1
    for link_id, count in enumerate(faces_per_link):
        if count > 3 or (mode == 'closed' and count != 3):
            violations.append(('link_in_three_faces', '%s lies in %d faces' % (_link_str(colex, link_id), count)))

    if mode == 'closed':
        for site in range(n):
            if len(colex.cells_at(site)) != 4:
                violations.append(('site_in_four_cells', 'site %d' % site))

    report.parity = 'even' if n % 2 == 0 else 'odd'
    if (mode == 'closed') != (report.parity == 'even'):
        violations.append(('site_parity', '%d sites in a %s colex' % (n, mode)))
    report.counts = colex.counts()
    return report


def puncture(colex, site):
    """
    Removes a site together with its four links, six faces and four cells.
    Remaining sites are renumbered densely; `site_labels` keeps the original
    ids.
    """
    if not colex.closed:
        raise ValueError('only closed colexes can be punctured')
    if not 0 <= site < colex.n_sites:
        raise ValueError('site %d out of range for %d sites' % (site, colex.n_sites))
    report = validate(colex, 'closed')
    if not report.passed:
        raise ColexValidationError(report)

    def remap(s):
        return s if s < site else s - 1

    links = []
    windings = [] if colex.link_windings is not None else None
    for link_id, (a, b, color) in enumerate(colex.links):
        if site in (a, b):
            continue
        links.append((remap(a), remap(b), color))
        if windings is not None:
            windings.append(colex.link_windings[link_id])
    site_labels = colex.site_labels[:site] + colex.site_labels[site + 1:]
    punctured = Colex(colex.n_sites - 1, links, closed=False,
                      first_betti_number=colex.first_betti_number,
                      site_labels=site_labels, link_windings=windings)
    logger.info('punctured site %d: %s -> %s', site, colex.counts(), punctured.counts())
    return punctured


class BaseColexBuilder(object):
    def __init__(self, hparams_dict=None, hparams=None):
        """
        Args:
            hparams_dict: a dict of `name=value` pairs, where `name` must be
                defined in `self.get_default_hparams_dict()`.
            hparams: a string of comma separated list of `name=value` pairs,
                where `name` must be defined in `self.get_default_hparams_dict()`.
                These values overrides any values in hparams_dict (if any).
        """
        self.hparams = self.parse_hparams(hparams_dict, hparams)

    def get_default_hparams_dict(self):
        return dict()

    def parse_hparams(self, hparams_dict, hparams):
        return hparams_utils.parse_hparams(self.get_default_hparams_dict(), hparams_dict, hparams)

    def build(self):
        raise NotImplementedError

    def build_validated(self):
        colex = self.build()
        report = validate(colex)
        if not report.passed:
            raise ColexValidationError(report)
        return colex
