"""Build hook for the optional compiled kernel.

The package works without the extension (a pure-Python fallback is selected
at import time); the build therefore never fails on a missing toolchain.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("skein._core_c", ["src/skein/_core_c.pyx"], optional=True)],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
