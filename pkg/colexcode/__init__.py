__version__ = '0.1.0'

from . import errors
from . import gf2
from . import pauli
