"""Build hook for the optional compiled kernels.

The Cython extension is built when Cython and a C compiler are available.
Without them the package installs as pure Python and ``hyperoct.kernels``
falls back to ``_kernels_py`` at import time.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("HYPEROCT_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("hyperoct._ckernels", ["src/hyperoct/_ckernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
