"""Polynomial arithmetic kernels.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python ``_pykernels`` module is used.  Setting the environment
variable ``HOPFKIT_PURE_PYTHON=1`` forces the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("HOPFKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._ckernels import (  # noqa: F401
            padd, pcontent, pdivexact, peval, pgcd, pmul, pneg, pscale, psub,
            ptrim, pval,
        )
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import (  # noqa: F401
        padd, pcontent, pdivexact, peval, pgcd, pmul, pneg, pscale, psub,
        ptrim, pval,
    )

__all__ = [
    "BACKEND", "padd", "pcontent", "pdivexact", "peval", "pgcd", "pmul",
    "pneg", "pscale", "psub", "ptrim", "pval",
]
