#!/usr/bin/env python
# -*- coding:utf8 -*-
from setuptools import find_packages, setup

setup(
    name='confsel',
    version='0.1.0',
    description="Stability-targeting confounder selection with full matching and randomization tests",
    long_description="please go to [doc](doc/README.rst) page for more information",
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    package_data={"confsel": ["backend/templates/*"]},
    entry_points={
        "console_scripts": [
            "confsel-cli=confsel.cli:cli"
        ]},
    install_requires=[
        'Jinja2',
        'attrs',
        'click',
        'numpy',
        'scipy',
        'pandas',
        'networkx',
        'joblib',
        'toml',
    ],
    extras_require={
        'dev': ['pytest']
    },
    zip_safe=False,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "Operating System :: Unix",
        "Programming Language :: Python",
        "Topic :: Scientific/Engineering",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Utilities"
    ]
)
