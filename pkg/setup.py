#!/usr/bin/env python
"""
<Program Name>
  setup.py

<Copyright>
  See LICENSE for licensing information.

<Purpose>
  Installs the groupscope package and the `groupscope` command line tool.

"""
from setuptools import setup, find_packages

setup(
  name="groupscope",
  version="0.0.1",
  description=("Finite group computations and checks of structural theorems"
               " on central and class preserving automorphisms of small"
               " p-groups"),
  license="MIT",
  packages=find_packages(exclude=["*.tests", "*.tests.*", "tests.*", "tests",
                                  "test", "test.*", "examples", "examples.*"]),
  install_requires=["securesystemslib>=0.10.4,<1.0", "attrs", "canonicaljson",
                    "python-dateutil", "iso8601", "numpy"],
  test_suite="test.runtests",
  entry_points={
    "console_scripts": ["groupscope = groupscope.groupscope_cli:main"]
  },
)
