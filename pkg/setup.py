import sys

from setuptools import setup

# The compiled kernel is optional: triposlab._kernel falls back to the pure
# Python twin when the extension is absent or fails to build.
ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "triposlab._speedups",
                ["src/triposlab/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("triposlab: Cython not available, installing pure-Python kernels only",
          file=sys.stderr)

setup(ext_modules=ext_modules)
