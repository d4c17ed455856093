"""Build helper: compile the scan kernel when Cython is available.

The package works without the extension (a pure-Python twin is selected at
import time), so any failure here degrades to a slower install, not a broken
one. Set BURSTCODES_PURE=1 to skip the compile step entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("BURSTCODES_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/burstcodes/_scan_cy.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
