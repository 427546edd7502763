"""Build script for the optional compiled subset-search kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile only costs speed, never functionality.
Set TRUNCDIM_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Degrade to a pure-Python install when the C toolchain is unusable."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # toolchain missing or broken
            print(f"WARNING: compiled kernel skipped ({exc}); "
                  "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"WARNING: could not build {ext.name} ({exc}); "
                  "falling back to the pure-Python kernel")


ext_modules = []
cmdclass = {}
if not os.environ.get("TRUNCDIM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("truncdim._kernel_c", ["src/truncdim/_kernel_c.pyx"])],
            language_level="3",
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print("WARNING: Cython not available; installing pure-Python kernel only")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
