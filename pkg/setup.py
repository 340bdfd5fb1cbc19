import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# twin in q16det._pykernel when the extension is absent or fails to build.
ext_modules = []
if os.environ.get("Q16DET_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "q16det._kernel",
                    ["src/q16det/_kernel.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
