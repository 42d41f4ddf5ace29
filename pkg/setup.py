#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages
import pathlib

here = pathlib.Path(__file__).parent.resolve()

long_description = (here / "README.rst").read_text(encoding="utf-8")

requirements = ["networkx>=2.0", "lark>=1.0"]

test_requirements = []

setup(
    name="mfrag",
    version="0.1.0",
    description="Exact structure analysis of small matroids, partial-field "
    "matrices and excluded-minor setups",
    long_description=long_description,
    author="The mfrag developers",
    author_email="mfrag@users.noreply.github.com",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    package_data={"mfrag.tests": ["files/*"]},
    python_requires=">=3.6, <4",
    scripts=["scripts/mfrag"],
    include_package_data=True,
    install_requires=requirements,
    license="MIT",
    zip_safe=False,
    keywords=[
        "matroid",
        "partial field",
        "excluded minor",
        "fragile",
        "3-connectivity",
        "representation",
    ],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    test_suite="mfrag.tests",
    tests_require=test_requirements,
)
