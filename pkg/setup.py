"""Build script: compiles the optional Cython kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a missing Cython toolchain only costs speed.

    python setup.py build_ext --inplace   # local development
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("clusterperm._kernels", ["src/clusterperm/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
