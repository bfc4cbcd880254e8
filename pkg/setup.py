import os

from setuptools import setup

ext_modules = []
if os.environ.get("INDUCEDPATHS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "inducedpaths._ckernel",
                    ["src/inducedpaths/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # Cython unavailable: the package falls back to the pure-Python kernel.
        ext_modules = []

setup(ext_modules=ext_modules)
