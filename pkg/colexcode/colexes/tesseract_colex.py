import logging

from .base_colex import BaseColexBuilder, Colex, COLORS

logger = logging.getLogger(__name__)

NUM_BITS = 4


def build_tesseract():
    """
    The boundary of the 4-cube as a closed 3-colex on the 3-sphere.

    Sites are the 16 four-bit strings; a link joins strings differing in one
    bit and is colored by that bit (bit 0 r, bit 1 g, bit 2 b, bit 3 y). The
    cells are the 8 cubes obtained by fixing one bit, so a cell's color is
    the bit it fixes.
    """
    links = []
    for site in range(1 << NUM_BITS):
        for bit, color in enumerate(COLORS):
            other = site ^ (1 << bit)
            if site < other:
                links.append((site, other, color))
    colex = Colex(1 << NUM_BITS, links, closed=True, first_betti_number=0)
    logger.info('built tesseract colex: %s', colex.counts())
    return colex


class TesseractColexBuilder(BaseColexBuilder):
    def build(self):
        return build_tesseract()
