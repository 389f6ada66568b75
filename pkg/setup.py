from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("symfusion._kernels_cy", ["src/symfusion/_kernels_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    # The package runs on the pure-Python kernels when Cython is absent.
    pass

setup(ext_modules=ext_modules)
