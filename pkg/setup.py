import os

import numpy
from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("TWISTLAB_NO_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "twistlab._backend._kernels",
                ["src/twistlab/_backend/_kernels.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
