import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MIXMULT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "mixmult._kernels",
                    ["src/mixmult/_kernels.pyx"],
                    language="c++",
                    extra_compile_args=["-O2"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        # Pure-Python install; mixmult.backend falls back to the
        # reference kernels.
        ext_modules = []

setup(ext_modules=ext_modules)
