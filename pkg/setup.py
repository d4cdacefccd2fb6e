"""Build script: compiles the optional search kernel.

The package works without the extension (a pure-Python kernel is selected
at import time); building it just makes the exact solver much faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "domchrom._kernel",
                ["src/domchrom/_kernel.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
