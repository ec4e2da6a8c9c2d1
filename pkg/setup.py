"""Extension build for the compiled kernels.

The extension is optional: if Cython or a C compiler is unavailable the install
still succeeds and the package falls back to the pure-Python kernels.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("INVCAYLEY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "invcayley._kernels",
                    ["src/invcayley/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
