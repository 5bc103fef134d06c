from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled sweep kernel is optional: the package falls back to the
# pure-Python implementation in circenergy._jacobi_py when it is absent.
extensions = [
    Extension(
        "circenergy._jacobi_cy",
        ["src/circenergy/_jacobi_cy.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
    if cythonize is not None
    else [],
)
