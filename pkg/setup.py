"""Build hook for the optional compiled kernel.

If Cython or a C++ compiler is missing the package installs without the
extension and runs on the pure-Python reference code.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure means fallback
            print(f"skipping compiled kernel: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"skipping compiled kernel {ext.name}: {exc}")


def extensions():
    if os.environ.get("TRSK_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    try:
        return cythonize(["src/troprsk/_kernels.pyx"], language_level=3, quiet=True)
    except Exception as exc:  # noqa: BLE001
        print(f"skipping compiled kernel: {exc}")
        return []


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
