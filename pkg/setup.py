"""Builds the optional compiled elimination kernel.

If Cython or a C compiler is missing the package still installs and runs on
the pure-Python backend.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print("warning: compiled kernel not built (%s); using pure Python" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print("warning: failed to build %s (%s); using pure Python" % (ext.name, exc))


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("superheis._elim_c", ["src/superheis/_elim_c.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
