"""Build script.

The compiled kernel (src/lgperiod/_kernels.pyx) is optional: when Cython or a
C compiler is unavailable the package installs anyway and the pure-Python
kernel is selected at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lgperiod/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
