import json
import logging

from colexcode.errors import ColexParseError, ColexValidationError
from .base_colex import Colex, Color, validate

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


def colex_to_dict(colex):
    colex_dict = dict(
        version=FORMAT_VERSION,
        n_sites=colex.n_sites,
        links=[[a, b, color.value] for a, b, color in colex.links],
        closed=colex.closed,
    )
    if colex.first_betti_number is not None:
        colex_dict['first_betti_number'] = colex.first_betti_number
    if colex.site_labels != tuple(range(colex.n_sites)):
        colex_dict['site_labels'] = list(colex.site_labels)
    if colex.link_windings is not None:
        colex_dict['link_windings'] = [list(winding) for winding in colex.link_windings]
    return colex_dict


def save_colex(colex, path):
    report = validate(colex)
    if not report.passed:
        raise ColexValidationError(report)
    with open(path, 'w') as f:
        json.dump(colex_to_dict(colex), f, indent=None, separators=(',', ':'))
        f.write('\n')
    logger.info('saved colex %s to %s', colex.counts(), path)


def _require(colex_dict, name, types):
    if name not in colex_dict:
        raise ColexParseError('missing field "%s"' % name)
    value = colex_dict[name]
    # bool is an int subclass
    if isinstance(value, bool) and bool not in types or not isinstance(value, types):
        raise ColexParseError('field "%s" has invalid type %s' % (name, type(value).__name__))
    return value


def _parse_link(index, entry, n_sites):
    where = 'links[%d]' % index
    if not isinstance(entry, list) or len(entry) != 3:
        raise ColexParseError('%s must be a [site, site, color] triple' % where)
    a, b, token = entry
    for site in (a, b):
        if isinstance(site, bool) or not isinstance(site, int):
            raise ColexParseError('%s has non-integer site %r' % (where, site))
        if not 0 <= site < n_sites:
            raise ColexParseError('%s has site %d out of range for %d sites' % (where, site, n_sites))
    try:
        color = Color.from_token(token)
    except ValueError:
        raise ColexParseError('%s has unknown color token %r' % (where, token))
    return a, b, color


def colex_from_dict(colex_dict):
    if not isinstance(colex_dict, dict):
        raise ColexParseError('top level must be an object')
    version = _require(colex_dict, 'version', (int,))
    if version != FORMAT_VERSION:
        raise ColexParseError('field "version" is %d, expected %d' % (version, FORMAT_VERSION))
    n_sites = _require(colex_dict, 'n_sites', (int,))
    if n_sites < 0:
        raise ColexParseError('field "n_sites" is negative')
    links = [_parse_link(i, entry, n_sites) for i, entry in enumerate(_require(colex_dict, 'links', (list,)))]
    closed = _require(colex_dict, 'closed', (bool,))
    first_betti_number = colex_dict.get('first_betti_number')
    if first_betti_number is not None and (isinstance(first_betti_number, bool)
                                           or not isinstance(first_betti_number, int)):
        raise ColexParseError('field "first_betti_number" must be an integer')
    site_labels = colex_dict.get('site_labels')
    link_windings = colex_dict.get('link_windings')
    try:
        return Colex(n_sites, links, closed=closed, first_betti_number=first_betti_number,
                     site_labels=site_labels, link_windings=link_windings)
    except (TypeError, ValueError) as e:
        raise ColexParseError(str(e))


def load_colex(path, check=True):
    """
    Reads a colex file and validates it.

    Raises:
        ColexParseError: malformed JSON or fields.
        ColexValidationError: the colex violates an axiom.
    """
    with open(path) as f:
        text = f.read()
    try:
        colex_dict = json.loads(text)
    except json.JSONDecodeError as e:
        raise ColexParseError('line %d column %d: %s' % (e.lineno, e.colno, e.msg))
    colex = colex_from_dict(colex_dict)
    if check:
        report = validate(colex)
        if not report.passed:
            raise ColexValidationError(report)
    logger.info('loaded colex %s from %s', colex.counts(), path)
    return colex
