"""Build script for the optional compiled enumeration core.

The package works without the extension (a pure-Python fallback is selected
at import time), so the extension is marked optional: a failed compile
degrades to the slow path instead of breaking the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "pfgm._core",
            sources=["src/pfgm/_core.pyx"],
            # -ffp-contract=off: the pure-Python fallback must produce
            # bit-identical sums; FMA contraction would break that.
            extra_compile_args=["-O3", "-ffp-contract=off"],
            optional=True,
        )
    ]
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
