import os

from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package falls back to
# src/anchorroute/_kernels/pure.py when the extension is absent.
ext_modules = []
if not os.environ.get("ANCHORROUTE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "anchorroute._kernels._core",
                    ["src/anchorroute/_kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
