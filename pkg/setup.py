"""
A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

from setuptools import setup, find_packages

# pylint: disable=redefined-builtin

setup(
    name="girale-workbench",
    # Don't forget to update the version in __init__.py and CHANGELOG.rst!
    version="0.0.1",
    description="Check finite models of Linear Logic algebras.",
    url="https://github.com/mristin/girale-workbench",
    author="Marko Ristin",
    author_email="marko@ristin.ch",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    license="License :: OSI Approved :: MIT License",
    keywords="linear logic girale girard algebra residuated lattice model checking",
    install_requires=[
        "icontract>=2.6.1,<3",
    ],
    extras_require={
        "dev": [
            "black==23.1.0",
            "mypy==1.1.1",
            "pylint==2.17.1",
            "coverage>=6.5.0,<7",
            "hypothesis>=6.70,<7",
            "twine",
        ],
    },
    py_modules=["giralebench"],
    packages=find_packages(exclude=["tests", "continuous_integration"]),
    entry_points={
        "console_scripts": [
            "girale-workbench=giralebench.main:entry_point",
        ]
    },
)
