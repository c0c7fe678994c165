"""Build script: compiles the optional fast kernels when a toolchain is present.

The package is fully functional without the extension; `hubroster._kernels`
falls back to the pure-Python implementation at import time.
Set HUBROSTER_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Best-effort extension build: a failing compiler is not fatal."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, bad flags, ...
            print(f"warning: skipping fast kernels ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); pure-Python fallback will be used")


ext_modules = []
cmdclass = {}
if not os.environ.get("HUBROSTER_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("hubroster._kernels._core", ["src/hubroster/_kernels/_core.pyx"])],
            language_level=3,
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print("warning: Cython not available; pure-Python kernels will be used")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
