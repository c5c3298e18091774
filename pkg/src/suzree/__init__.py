"""Suzuki groups Sz(2^(2m+1)) and small Ree groups 2G2(3^(2m+1)) as exact matrix
groups: Bruhat decomposition and factorization of every element as a product
U U- U U- of unitriangular Sylow p-subgroup elements.

    >>> from suzree import Suzuki
    >>> G = Suzuki.from_q(8)
    >>> g = G.random_element(seed=1)
    >>> fac = G.factor(g)
    >>> fac.product() == g
    True
"""

from ._kernels import BACKEND
from .errors import NotInGroup, NotInU, ParseError, SuzReeError
from .field import FieldElement, FieldSpec
from .g2 import G2, Root
from .matrix import Matrix
from .rank1 import BigCell, SylowFactorization, TorusCell
from .ree import Ree
from .suzuki import Suzuki

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BigCell", "FieldElement", "FieldSpec", "G2", "Matrix", "NotInGroup",
    "NotInU", "ParseError", "Ree", "Root", "Suzuki", "SuzReeError", "SylowFactorization",
    "TorusCell",
]
