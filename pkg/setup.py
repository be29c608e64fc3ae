from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "yangbaxter._kernel_cy",
        ["src/yangbaxter/_kernel_cy.pyx"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except ImportError:
    # no Cython: install runs with the pure-Python kernel
    pass

setup(ext_modules=ext_modules)
