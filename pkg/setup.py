"""Build script: compiles the optional search-kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so any failure here downgrades to a warning instead of
aborting the install.  Set WEFT_NO_EXTENSION=1 to skip the build outright.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    if os.environ.get("WEFT_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("weft: Cython not available, skipping compiled kernel", file=sys.stderr)
        return []
    return cythonize(
        ["src/weft/_engine.pyx"],
        language_level=3,
    )


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print("weft: compiled kernel build failed (%s); "
                  "falling back to pure Python" % exc, file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("weft: could not compile %s (%s); "
                  "falling back to pure Python" % (ext.name, exc), file=sys.stderr)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
