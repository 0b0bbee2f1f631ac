import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the kernel extension if possible; the package falls back to the
    pure-Python kernel at import time when it is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernel ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(
                f"warning: could not build {ext.name} ({exc}); "
                "using the pure-Python kernel",
                file=sys.stderr,
            )


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("secdom._kernel", ["src/secdom/_kernel.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": OptionalBuildExt},
)
