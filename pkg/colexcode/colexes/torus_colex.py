"""
Closed 3-colex on the 3-torus.

The colex is the dual of the tetragonal-disphenoid triangulation of the
body-centred cubic lattice: every tetrahedron is a site, every shared
triangle a link, every lattice edge a face and every lattice vertex a cell.
Coordinates are doubled so that lattice points are integer triples; "A"
points have all coordinates even and "B" points all coordinates odd. A
tetrahedron is spanned by an A-A edge along axis i and a B-B edge along an
axis j != i.
"""
import itertools
import logging

import networkx as nx

from colexcode.errors import SearchFailureError
from .base_colex import BaseColexBuilder, Colex, COLORS

logger = logging.getLogger(__name__)

NUM_AXES = 3

_AXIS_STEPS = [tuple(2 * sign if axis == d else 0 for d in range(NUM_AXES))
               for axis in range(NUM_AXES) for sign in (-1, 1)]
_DIAGONAL_STEPS = list(itertools.product((-1, 1), repeat=NUM_AXES))
_STEPS = _AXIS_STEPS + _DIAGONAL_STEPS


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _unit(axis, scale=1):
    return tuple(scale if d == axis else 0 for d in range(NUM_AXES))


def _is_a_point(v):
    return v[0] % 2 == 0


def _adjacent(u, v):
    return _sub(v, u) in _STEPS


def _reduce(v, period):
    return tuple(c % period for c in v)


def _offset(v, period):
    return tuple((c - c % period) // period for c in v)


def lattice_graph(L):
    """The vertex adjacency graph of the lattice with period L (2L in doubled coordinates)."""
    period = 2 * L
    graph = nx.Graph()
    for base in itertools.product(range(L), repeat=NUM_AXES):
        for parity in (0, 1):
            graph.add_node(tuple(2 * c + parity for c in base))
    for v in list(graph.nodes):
        for step in _STEPS:
            u = _reduce(_add(v, step), period)
            if u == v:
                raise ValueError('period %d is too small for the lattice' % L)
            graph.add_edge(v, u)
    return graph


def four_color(graph, num_colors=4):
    """
    Proper vertex coloring by backtracking in breadth-first order.

    Returns:
        dict from node to color index.
    """
    order = []
    for component in sorted(nx.connected_components(graph), key=min):
        source = min(component)
        order.append(source)
        order.extend(v for _, v in nx.bfs_edges(graph, source))
    position = {v: i for i, v in enumerate(order)}
    coloring = [None] * len(order)
    tried = [-1] * len(order)
    i = 0
    while 0 <= i < len(order):
        used = {coloring[position[u]] for u in graph[order[i]] if position[u] < i}
        color = tried[i] + 1
        while color < num_colors and color in used:
            color += 1
        if color < num_colors:
            tried[i] = color
            coloring[i] = color
            i += 1
        else:
            tried[i] = -1
            coloring[i] = None
            i -= 1
    if i < 0:
        raise SearchFailureError('graph with %d nodes has no %d-coloring' % (len(order), num_colors))
    return {v: coloring[position[v]] for v in order}


def _tetrahedron(a_point, i, j, s):
    k = NUM_AXES - i - j
    b_point = _add(_add(a_point, _unit(i)), _add(_unit(j, -1), _unit(k, s)))
    return (a_point, _add(a_point, _unit(i, 2)), b_point, _add(b_point, _unit(j, 2)))


def _canonical_key(vertices, period):
    """(reduced lower A point, i, j, s) of a tetrahedron given by infinite-lattice vertices."""
    a_points = sorted(v for v in vertices if _is_a_point(v))
    b_points = sorted(v for v in vertices if not _is_a_point(v))
    if len(a_points) != 2 or len(b_points) != 2:
        raise SearchFailureError('not a lattice tetrahedron: %s' % (vertices,))
    i = next(d for d in range(NUM_AXES) if a_points[0][d] != a_points[1][d])
    j = next(d for d in range(NUM_AXES) if b_points[0][d] != b_points[1][d])
    lower_a = min(a_points, key=lambda v: v[i])
    lower_b = min(b_points, key=lambda v: v[j])
    k = NUM_AXES - i - j
    return _reduce(lower_a, period), i, j, lower_b[k] - lower_a[k]


def _opposite_vertex(triangle, excluded):
    """The vertex other than `excluded` adjacent to all three triangle vertices."""
    candidates = [_add(triangle[0], step) for step in _STEPS]
    matches = [v for v in candidates
               if v != excluded and _adjacent(v, triangle[1]) and _adjacent(v, triangle[2])]
    if len(matches) != 1:
        raise SearchFailureError('triangle %s has %d opposite vertices' % (triangle, len(matches)))
    return matches[0]


def build_torus(L):
    """
    Args:
        L: period in lattice units; must be even so that the cells can be
            4-colored.
    """
    L = int(L)
    if L < 2 or L % 2:
        raise ValueError('torus period must be even and at least 2, got %d '
                         '(odd periods leave the cells without a 4-coloring)' % L)
    period = 2 * L
    coloring = four_color(lattice_graph(L))

    keys = []
    for base in itertools.product(range(L), repeat=NUM_AXES):
        a_point = tuple(2 * c for c in base)
        for i in range(NUM_AXES):
            for j in range(NUM_AXES):
                if j == i:
                    continue
                for s in (-1, 1):
                    keys.append((a_point, i, j, s))
    site_ids = {key: site for site, key in enumerate(keys)}

    links = []
    windings = []
    for site, key in enumerate(keys):
        vertices = _tetrahedron(*key)
        for x in vertices:
            triangle = [v for v in vertices if v != x]
            y = _opposite_vertex(triangle, x)
            neighbor = site_ids[_canonical_key(triangle + [y], period)]
            if site < neighbor:
                color = COLORS[coloring[_reduce(x, period)]]
                links.append((site, neighbor, color))
                windings.append(_sub(_offset(y, period), _offset(x, period)))

    colex = Colex(len(keys), links, closed=True, first_betti_number=NUM_AXES, link_windings=windings)
    logger.info('built torus colex with period %d: %s', L, colex.counts())
    return colex


class TorusColexBuilder(BaseColexBuilder):
    def get_default_hparams_dict(self):
        """
        Returns:
            A dict with the following hyperparameters.

            period: number of unit cells along each axis of the 3-torus.
                Must be even and at least 2 for the vertex 4-coloring to
                close up.
        """
        default_hparams = super(TorusColexBuilder, self).get_default_hparams_dict()
        hparams = dict(
            period=2,
        )
        return dict(list(default_hparams.items()) + list(hparams.items()))

    def build(self):
        return build_torus(self.hparams.period)
