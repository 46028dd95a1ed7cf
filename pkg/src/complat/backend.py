"""Kernel backend selection.

The hot loops (identity scans, free-algebra closure, lattice mask scans)
exist twice: a numba @njit version and a pure-numpy version.  The env var
COMPLAT_BACKEND picks one:

    COMPLAT_BACKEND=numba   force numba (ImportError if unavailable)
    COMPLAT_BACKEND=numpy   force the pure-numpy fallback
    unset                   numba when importable, else numpy

Both backends produce bit-identical results; benchmarks/bench_backends.py
compares their speed.
"""

import os

_VALID = ("numba", "numpy")


def _resolve() -> str:
    choice = os.environ.get("COMPLAT_BACKEND", "").strip().lower()
    if choice and choice not in _VALID:
        raise ValueError(f"COMPLAT_BACKEND must be one of {_VALID}, got {choice!r}")
    if choice == "numpy":
        return "numpy"
    try:
        import numba  # noqa: F401
        have_numba = True
    except ImportError:
        have_numba = False
    if choice == "numba":
        if not have_numba:
            raise ImportError("COMPLAT_BACKEND=numba but numba is not importable")
        return "numba"
    return "numba" if have_numba else "numpy"


BACKEND = _resolve()
USE_NUMBA = BACKEND == "numba"
