import pytest

from colexcode import colexes
from colexcode.code import code_from_colex


@pytest.fixture(scope='session')
def tesseract():
    return colexes.build_tesseract()


@pytest.fixture(scope='session')
def tetra():
    return colexes.TetrahedralColexBuilder().build_validated()


@pytest.fixture(scope='session')
def torus():
    return colexes.build_torus(2)


@pytest.fixture(scope='session')
def tesseract_code(tesseract):
    return code_from_colex(tesseract)


@pytest.fixture(scope='session')
def tetra_code(tetra):
    return code_from_colex(tetra)


@pytest.fixture(scope='session')
def torus_code(torus):
    return code_from_colex(torus)
