"""smallq: exact block and center computations for small quantum groups
at odd roots of unity.

Modules:

* cyclotomic    -- exact Q(zeta_l) arithmetic and q-combinatorics
* rootdata      -- simply-laced root systems, Weyl groups, admissibility
* affine_orbits -- shifted/natural Weyl orbits on (P/lP)_+ and Q/lQ
* blocks        -- block dimension bookkeeping from orbit data
* charring      -- the rank-1 character ring and its socle structure
* uqsl2         -- the full exact model of u_q(sl2): Hopf structure,
                   R-matrix, integrals, Fourier transform, center
* sl2_checks    -- the theorem suite as named pass/fail checks
* cli           -- the smallq command-line tool
"""

from .charring import CharElem, CharRing, SymLaurent
from .cyclotomic import CycloField, CycloNum, cyclo_field, cyclotomic_modulus
from .rootdata import RootDatum, WeylElement, build, check_l
from .uqsl2 import AlgElem, Functional, SimpleModule, TensorElem, UqSL2

__version__ = "0.1.0"

__all__ = [
    "AlgElem",
    "CharElem",
    "CharRing",
    "CycloField",
    "CycloNum",
    "Functional",
    "RootDatum",
    "SimpleModule",
    "SymLaurent",
    "TensorElem",
    "UqSL2",
    "WeylElement",
    "build",
    "check_l",
    "cyclo_field",
    "cyclotomic_modulus",
]
