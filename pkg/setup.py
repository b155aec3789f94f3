import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# HYPERMAP_CODES_PURE=1 skips the compiled kernel; the package then runs on
# the pure-Python fallback selected at import time.
extensions = []
if cythonize is not None and os.environ.get("HYPERMAP_CODES_PURE") != "1":
    extensions = cythonize(
        [
            Extension(
                "hypermap_codes._distance_core",
                ["src/hypermap_codes/_distance_core.pyx"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=extensions)
