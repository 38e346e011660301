"""Build script: compiles the optional speed extension when Cython and a C
compiler are available, and degrades to the pure-Python kernels otherwise.

Set STARBENCH_NO_EXT=1 to skip the extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """A build_ext that treats compiler failure as a soft condition.

    The package works without the extension (kernels/__init__.py falls back
    to the numpy implementations), so a missing toolchain should not break
    installation.
    """

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any toolchain failure
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: speed extension build failed (%s); "
            "falling back to pure-Python kernels" % (exc,),
            file=sys.stderr,
        )


def _extensions():
    if os.environ.get("STARBENCH_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not available; building without the speed extension",
            file=sys.stderr,
        )
        return []
    ext = Extension(
        "starbench.kernels._speed",
        sources=["src/starbench/kernels/_speed.pyx"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": _OptionalBuildExt},
)
