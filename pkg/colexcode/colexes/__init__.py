from .base_colex import BaseColexBuilder
from .base_colex import Color, COLORS, Colex, ValidationReport, validate, puncture
from .tesseract_colex import TesseractColexBuilder, build_tesseract
from .tetrahedral_colex import TetrahedralColexBuilder
from .torus_colex import TorusColexBuilder, build_torus
from .colex_io import save_colex, load_colex


def get_builder_class(builder):
    builder_mappings = {
        'tesseract': 'TesseractColexBuilder',
        'tetra': 'TetrahedralColexBuilder',
        'tetrahedral': 'TetrahedralColexBuilder',  # alias of tetra
        'torus': 'TorusColexBuilder',
    }
    builder_class = builder_mappings.get(builder, builder)
    builder_class = globals().get(builder_class)
    if builder_class is None or not issubclass(builder_class, BaseColexBuilder):
        raise ValueError('Invalid builder %s' % builder)
    return builder_class
