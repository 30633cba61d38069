"""
String operators (Z on q-links), membrane operators (X on pq-faces), and the
string-net and membrane-net logicals of the tetrahedral code.
"""
import collections
import itertools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from colexcode import gf2
from colexcode.code import equivalent_mod_stabilizers, syndrome
from colexcode.colexes.base_colex import COLORS, COLOR_PAIRS, pair_name
from colexcode.errors import SearchFailureError
from colexcode.pauli import PauliOp, commutes, multiply
from colexcode.utils import parallel

logger = logging.getLogger(__name__)

DEFAULT_MAX_WINDING = 2


class ColorString(NamedTuple):
    color: object
    link_ids: frozenset


class Membrane(NamedTuple):
    color_pair: frozenset
    face_ids: frozenset


def string_operator(colex, s):
    """B_s^Z: Z on every site touched by an odd number of links of s."""
    bits = 0
    for link_id in s.link_ids:
        a, b, color = colex.links[link_id]
        if color != s.color:
            raise ValueError('link %d has color %s, not %s' % (link_id, color, s.color))
        bits ^= (1 << a) ^ (1 << b)
    return PauliOp(colex.n_sites, z=bits)


def membrane_operator(colex, m):
    """B_m^X: X on every site in an odd number of faces of m."""
    bits = 0
    for face_id in m.face_ids:
        face = colex.faces[face_id]
        if face.color_pair != m.color_pair:
            raise ValueError('face %d is a %s-face, not %s'
                             % (face_id, pair_name(face.color_pair), pair_name(m.color_pair)))
        bits ^= gf2.bits_from_support(face.sites)
    return PauliOp(colex.n_sites, x=bits)


def _cell_bits(colex):
    return [gf2.bits_from_support(cell.sites) for cell in colex.cells]


def endpoints(colex, s):
    """The q-cells excited by a q-string."""
    z = string_operator(colex, s).z
    return frozenset(cell_id for cell_id, bits in enumerate(_cell_bits(colex)) if gf2.parity(bits & z))


@dataclass
class CrossingReport:
    overlap: int
    anticommute: bool
    disjoint_colors: bool
    deformations_checked: int = 0
    deformation_failures: list = field(default_factory=list)

    @property
    def crossing_parity_ok(self):
        return self.anticommute == bool(self.overlap % 2)

    @property
    def color_rule_ok(self):
        return not (self.disjoint_colors and self.anticommute)

    @property
    def passed(self):
        return self.crossing_parity_ok and self.color_rule_ok and not self.deformation_failures

    def to_dict(self):
        return dict(passed=self.passed, overlap=self.overlap, anticommute=self.anticommute,
                    disjoint_colors=self.disjoint_colors, crossing_parity_ok=self.crossing_parity_ok,
                    color_rule_ok=self.color_rule_ok, deformations_checked=self.deformations_checked,
                    deformation_failures=list(self.deformation_failures))


def crossing_anticommutation_check(colex, s, m):
    """
    The crossing number of a string and a membrane is taken to be the parity
    of their site overlap. Also deforms the string by every face stabilizer
    that commutes with the membrane and checks the commutation is unchanged.
    """
    string_op = string_operator(colex, s)
    membrane_op = membrane_operator(colex, m)
    overlap = gf2.weight(string_op.z & membrane_op.x)
    anticommute = not commutes(string_op, membrane_op)
    report = CrossingReport(overlap=overlap, anticommute=anticommute,
                            disjoint_colors=s.color not in m.color_pair)
    for face_id, face in enumerate(colex.faces):
        face_op = PauliOp(colex.n_sites, z=gf2.bits_from_support(face.sites))
        if not commutes(face_op, membrane_op):
            continue
        report.deformations_checked += 1
        if commutes(multiply(string_op, face_op), membrane_op) == anticommute:
            report.deformation_failures.append(face_id)
    return report


def find_crossing_pair(colex, color, color_pair):
    """
    A single q-link leaving a pq-face, i.e. a string and membrane crossing
    once. The face label must contain q.
    """
    if color not in color_pair:
        raise ValueError('a %s-string cannot cross a %s-membrane' % (color, pair_name(color_pair)))
    for face_id, face in enumerate(colex.faces):
        if face.color_pair != color_pair:
            continue
        for site in face.sites:
            link_id = colex.link_of(site, color)
            if link_id is not None and colex.other_end(link_id, site) not in face.sites:
                return (ColorString(color, frozenset([link_id])), Membrane(color_pair, frozenset([face_id])))
    raise SearchFailureError('no %s-link leaves a %s-face' % (color, pair_name(color_pair)))


@dataclass
class ColorRuleReport:
    samples: int
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return dict(passed=self.passed, samples=self.samples, failures=list(self.failures))


def sampled_color_rule_check(colex, samples=100, seed=0):
    """
    Random q-strings against random pq'-membranes with q outside the
    membrane's colors; every such pair must commute.
    """
    rng = np.random.default_rng(seed)
    links_by_color = collections.defaultdict(list)
    for link_id, link in enumerate(colex.links):
        links_by_color[link.color].append(link_id)
    faces_by_pair = collections.defaultdict(list)
    for face_id, face in enumerate(colex.faces):
        faces_by_pair[face.color_pair].append(face_id)

    report = ColorRuleReport(samples=samples)
    for _ in range(samples):
        color = COLORS[rng.integers(len(COLORS))]
        pairs = [pair for pair in COLOR_PAIRS if color not in pair and faces_by_pair[pair]]
        color_pair = pairs[rng.integers(len(pairs))]
        link_ids = np.asarray(links_by_color[color])
        face_ids = np.asarray(faces_by_pair[color_pair])
        s = ColorString(color, frozenset(link_ids[rng.random(len(link_ids)) < 0.5].tolist()))
        m = Membrane(color_pair, frozenset(face_ids[rng.random(len(face_ids)) < 0.5].tolist()))
        if not commutes(string_operator(colex, s), membrane_operator(colex, m)):
            report.failures.append(dict(color=color.value, color_pair=pair_name(color_pair),
                                        links=sorted(s.link_ids), faces=sorted(m.face_ids)))
    return report


def _q_cell_adjacency(colex, color):
    """For each q-cell: (link id, neighbour q-cell, signed winding) triples."""
    adjacency = collections.defaultdict(list)
    zero = (0,) * len(colex.link_windings[0]) if colex.link_windings else ()
    for link_id, (a, b, link_color) in enumerate(colex.links):
        if link_color != color:
            continue
        cell_a, cell_b = colex.cell_of(a, color), colex.cell_of(b, color)
        if cell_a is None or cell_b is None:
            continue
        winding = colex.link_windings[link_id] if colex.link_windings else zero
        adjacency[cell_a].append((link_id, cell_b, winding))
        adjacency[cell_b].append((link_id, cell_a, tuple(-w for w in winding)))
    return adjacency


def find_cycle_string(colex, color, winding, max_winding=DEFAULT_MAX_WINDING):
    """
    A closed q-string whose total winding is `winding`, found by breadth-first
    search over (q-cell, accumulated winding) states starting at the first
    q-cell.
    """
    if colex.link_windings is None:
        raise SearchFailureError('colex carries no link windings')
    winding = tuple(winding)
    adjacency = _q_cell_adjacency(colex, color)
    start_cell = next((cell_id for cell_id, cell in enumerate(colex.cells) if cell.color == color), None)
    if start_cell is None:
        raise SearchFailureError('colex has no %s-cells' % color)
    start = (start_cell, (0,) * len(winding))
    target = (start_cell, winding)
    parents = {start: None}
    queue = collections.deque([start])
    while queue and target not in parents:
        cell_id, offset = queue.popleft()
        for link_id, neighbor, step in adjacency[cell_id]:
            state = (neighbor, tuple(o + w for o, w in zip(offset, step)))
            if state in parents or any(abs(c) > max_winding for c in state[1]):
                continue
            parents[state] = (link_id, (cell_id, offset))
            queue.append(state)
    if target not in parents:
        raise SearchFailureError('no %s-cycle with winding %s' % (color, winding))
    link_ids = set()
    state = target
    while parents[state] is not None:
        link_id, state = parents[state]
        # a link used twice cancels
        link_ids ^= {link_id}
    return ColorString(color, frozenset(link_ids))


def closed_membranes(code, colex, color_pair):
    """
    A basis of the pq-membranes without border, i.e. sets of pq-faces whose
    X operator commutes with every face stabilizer.
    """
    face_ids = [face_id for face_id, face in enumerate(colex.faces) if face.color_pair == color_pair]
    flux_rows = [code.hz.multiply_vector(gf2.bits_from_support(colex.faces[face_id].sites))
                 for face_id in face_ids]
    flux = gf2.BitMatrix(flux_rows, code.num_faces)
    membranes = []
    for combination in gf2.kernel_basis(flux.transpose()).rows:
        membranes.append(Membrane(color_pair, frozenset(face_ids[i] for i in gf2.support(combination))))
    return membranes


def _quotient_rank(stabilizers, vectors):
    if not vectors:
        return 0
    return gf2.rank(stabilizers.stack(gf2.BitMatrix(vectors, stabilizers.num_cols))) - gf2.rank(stabilizers)


@dataclass
class ColorCombinationReport:
    k: int
    strings: dict
    rgb_equals_y: dict
    string_quotient_rank: int
    all_colors_quotient_rank: int
    membrane_quotient_ranks: dict
    closed_strings_ok: bool

    @property
    def passed(self):
        return (self.closed_strings_ok and all(self.rgb_equals_y.values())
                and self.string_quotient_rank == self.k)

    def to_dict(self):
        return dict(passed=self.passed, k=self.k, strings=self.strings, rgb_equals_y=self.rgb_equals_y,
                    string_quotient_rank=self.string_quotient_rank,
                    all_colors_quotient_rank=self.all_colors_quotient_rank,
                    membrane_quotient_ranks=self.membrane_quotient_ranks,
                    closed_strings_ok=self.closed_strings_ok)


def color_combination_check(code, colex, max_winding=DEFAULT_MAX_WINDING):
    """
    Along every cycle direction of the torus, builds one closed string of
    each color and checks r * g * b equals y modulo face stabilizers; then
    measures how many of the strings are independent logicals.
    """
    if colex.link_windings is None:
        raise SearchFailureError('colex carries no link windings')
    num_directions = len(colex.link_windings[0])
    operators = {}
    strings = {}
    closed_ok = True
    for color in COLORS:
        for direction in range(num_directions):
            winding = tuple(int(d == direction) for d in range(num_directions))
            s = find_cycle_string(colex, color, winding, max_winding=max_winding)
            op = string_operator(colex, s)
            closed_ok = closed_ok and syndrome(code, op).is_trivial and not code.in_z_stabilizers(op.z)
            operators[color, direction] = op
            strings.setdefault(color.value, {})[direction] = sorted(s.link_ids)

    r, g, b, y = COLORS
    rgb_equals_y = {}
    for direction in range(num_directions):
        product = multiply(multiply(operators[r, direction], operators[g, direction]), operators[b, direction])
        rgb_equals_y[direction] = equivalent_mod_stabilizers(code, product, operators[y, direction])

    three_colors = [operators[color, d].z for color in (r, g, b) for d in range(num_directions)]
    all_colors = [op.z for op in operators.values()]
    membrane_ranks = {}
    for color_pair in COLOR_PAIRS:
        vectors = [membrane_operator(colex, m).x for m in closed_membranes(code, colex, color_pair)]
        membrane_ranks[pair_name(color_pair)] = _quotient_rank(code.hx, vectors)
    report = ColorCombinationReport(k=code.k, strings=strings, rgb_equals_y=rgb_equals_y,
                                    string_quotient_rank=_quotient_rank(code.hz, three_colors),
                                    all_colors_quotient_rank=_quotient_rank(code.hz, all_colors),
                                    membrane_quotient_ranks=membrane_ranks, closed_strings_ok=closed_ok)
    logger.info('color combinations: rgb=y %s, string rank %d of k=%d',
                rgb_equals_y, report.string_quotient_rank, code.k)
    return report


@dataclass
class ExcitationReport:
    sites_checked: int
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return dict(passed=self.passed, sites_checked=self.sites_checked, failures=list(self.failures))


def _site_excitation_failures(code, colex, site):
    failures = []
    z_syndrome = syndrome(code, PauliOp(colex.n_sites, z=1 << site))
    cell_colors = sorted(colex.cells[cell_id].color.index for cell_id in z_syndrome.cell_defects)
    if cell_colors != [c.index for c in COLORS] or z_syndrome.face_defects:
        failures.append('Z excites cells of colors %s' % cell_colors)

    x_syndrome = syndrome(code, PauliOp(colex.n_sites, x=1 << site))
    defect_faces = sorted(x_syndrome.face_defects)
    pairs = sorted(pair_name(colex.faces[face_id].color_pair) for face_id in defect_faces)
    if pairs != sorted(pair_name(pair) for pair in COLOR_PAIRS) or x_syndrome.cell_defects:
        failures.append('X excites faces %s' % pairs)
        return failures
    # the three fluxes carrying color q close into a loop around the site's q-cell
    for color in COLORS:
        loop = [face_id for face_id in defect_faces if color in colex.faces[face_id].color_pair]
        cell = colex.cells[colex.cell_of(site, color)]
        if len(loop) != 3 or not all(face_id in cell.faces for face_id in loop):
            failures.append('%s-fluxes %s do not lie in the %s-cell' % (color, loop, color))
        elif not all(colex.faces[f1].links & colex.faces[f2].links for f1, f2 in itertools.combinations(loop, 2)):
            failures.append('%s-fluxes %s are not linked' % (color, loop))
    return failures


def elementary_excitation_check(code, colex):
    """
    A single Z excites one cell of each color; a single X excites the six
    faces at the site, which form one closed flux loop per color.
    Sites with a missing cell (punctured boundary) are skipped.
    """
    report = ExcitationReport(sites_checked=0)
    for site in range(colex.n_sites):
        if len(colex.cells_at(site)) != len(COLORS):
            continue
        report.sites_checked += 1
        for failure in _site_excitation_failures(code, colex, site):
            report.failures.append(dict(site=site, failure=failure))
    return report


def _check_tetrahedral(code, colex):
    if colex.closed or code.k != 1:
        raise ValueError('string and membrane nets need a punctured colex with k=1 (closed=%s, k=%d)'
                         % (colex.closed, code.k))


def _path_to_boundary(colex, site, color):
    """q-links from the q-cell of `site` to a site without a q-cell."""
    start = colex.cell_of(site, color)
    if start is None:
        return []
    parents = {start: None}
    queue = collections.deque([start])
    while queue:
        cell_id = queue.popleft()
        for cell_site in sorted(colex.cells[cell_id].sites):
            link_id = colex.link_of(cell_site, color)
            if link_id is None:
                continue
            neighbor = colex.cell_of(colex.other_end(link_id, cell_site), color)
            if neighbor is None:
                path = [link_id]
                while parents[cell_id] is not None:
                    previous_link, cell_id = parents[cell_id]
                    path.append(previous_link)
                return path
            if neighbor not in parents:
                parents[neighbor] = (link_id, cell_id)
                queue.append(neighbor)
    return None


def _string_net_at(code, colex, branch):
    op = PauliOp(colex.n_sites, z=1 << branch)
    for color in COLORS:
        path = _path_to_boundary(colex, branch, color)
        if path is None:
            return None
        op = multiply(op, string_operator(colex, ColorString(color, frozenset(path))))
    if syndrome(code, op).is_trivial and not commutes(op, code.logical_x[0]):
        return op
    return None


def tetra_string_net(code, colex, threads=None):
    """
    Z-type logical made of four strings, one of each color, meeting at a
    branch site and ending on the missing cells.
    """
    _check_tetrahedral(code, colex)
    # sites inside all four cells first, so that all four strings are present
    branches = sorted(range(colex.n_sites), key=lambda site: (-len(colex.cells_at(site)), site))
    candidates = parallel.parallel_map(lambda site: _string_net_at(code, colex, site),
                                       branches, threads=threads)
    for branch, op in zip(branches, candidates):
        if op is not None:
            logger.info('string-net with branch site %d has weight %d', branch, op.weight)
            return op
    raise SearchFailureError('no branch site yields a string-net')


def tetra_membrane_net(code, colex):
    """
    X-type logical on the sites that lost their q-cell to the puncture, i.e.
    the removed q-cell without the removed site.
    """
    _check_tetrahedral(code, colex)
    for color in COLORS:
        region = [site for site in range(colex.n_sites) if colex.cell_of(site, color) is None]
        if not region:
            continue
        op = PauliOp(colex.n_sites, x=gf2.bits_from_support(region))
        if syndrome(code, op).is_trivial and not commutes(op, code.logical_z[0]):
            logger.info('membrane-net on the missing %s-cell has weight %d', color, op.weight)
            return op
    raise SearchFailureError('no missing cell yields a membrane-net')
