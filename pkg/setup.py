import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HADALAB_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hadalab._kernels._cykernels",
                ["src/hadalab/_kernels/_cykernels.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
