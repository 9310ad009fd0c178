"""Build script: compiles the optional C accelerator when a toolchain exists.

The package is fully functional without the extension; unimark.stego falls
back to its pure-Python implementations if `unimark._kernels` fails to
build or import.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Best-effort build_ext: a failed compile must not fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain-dependent
            print(f"warning: skipping optional C accelerator ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain-dependent
            print(f"warning: skipping optional extension {ext.name} ({exc})")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - cython not installed
        return []
    return cythonize(
        [Extension("unimark._kernels", ["src/unimark/_kernels.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
