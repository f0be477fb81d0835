"""coreseq: exact invariant-sequence calculus for cores of tensor powers.

The package has two independent computational routes that are played against
each other everywhere:

* a symbolic engine (``omega``) driving matrices over the Laurent ring in
  the syzygy symbol against per-orbit dimension channels, and
* a dense finite-field oracle (``modrep``) computing the same invariants
  from explicit generator matrices.

Around them: exact polynomial arithmetic (``ring``), Laurent matrices and
characteristic polynomials (``lmatrix``), recursive sequences and their
closure operations (``cfinite``), quasipolynomials (``quasipoly``),
bivariate series (``multiseq``), substitution pipelines (``convolve``),
recurrence/algebraicity guessing (``guessing``), scenario files
(``scenario``), and the pinned verification suite (``verify``).
"""

from .cfinite import CFiniteSeq, HilbertSeries
from .guessing import GuessReport
from .lmatrix import LCharPoly, LMatrix
from .modrep import FpModule, JordanDecomposition
from .multiseq import CFinite2Seq, RatBiSeries
from .omega import DimensionChannel, OrbitRep, TensorSystem
from .quasipoly import QuasiPoly
from .ring import BiPoly, LaurentPoly, UniPoly

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "CFinite2Seq", "CFiniteSeq", "DimensionChannel", "FpModule",
    "GuessReport", "HilbertSeries", "JordanDecomposition", "LCharPoly",
    "LMatrix", "LaurentPoly", "OrbitRep", "QuasiPoly", "RatBiSeries",
    "TensorSystem", "UniPoly", "__version__",
]
