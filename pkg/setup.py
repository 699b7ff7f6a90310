import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("wadgetree._speedups", ["src/wadgetree/_speedups.pyx"])],
        compiler_directives={"language_level": 3, "boundscheck": False},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    warnings.warn(
        f"Cython kernel not built ({exc}); the pure-Python solver will be used"
    )

setup(ext_modules=ext_modules)
