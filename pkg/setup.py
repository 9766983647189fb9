"""Build script: compiles the optional C extension kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so a missing compiler or missing
Cython downgrades the build to pure Python instead of failing.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; warn and continue if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"C extension build failed ({exc}); "
                          "installing with the pure-Python kernel only")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"building {ext.name} failed ({exc}); "
                          "the pure-Python kernel will be used")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pracnum._core", ["src/pracnum/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
