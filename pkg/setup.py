# (C) Copyright 2026 The fractional-pinn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with
# the License. You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on
# an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the License for the
# specific language governing permissions and limitations under the License.

from setuptools import setup, find_packages

NAME = "fractional-pinn-benchmarks"
VERSION = "0.1.0"
# To install the library, run the following
#
# python setup.py install
#
# prerequisite: setuptools
# http://pypi.python.org/pypi/setuptools

REQUIRES = [
    "numpy>=1.22",
    "python-dateutil>=2.8,<3.0.0",
    "python-dotenv>=0.17.1"
]
with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name=NAME,
    version=VERSION,
    author="The fractional-pinn Authors",
    license='Apache 2.0',
    description="Physics-informed neural network solvers and benchmarks for time-fractional differential equations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["unit_tests*", "integration_tests*"]),
    install_requires=REQUIRES,
    include_package_data=True,
    entry_points={
        "console_scripts": ["fpinn-bench=fractional_pinn.bench.cli:main"]
    },
    keywords=['python', 'pinn', 'fractional calculus', 'caputo derivative', 'scientific machine learning'],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3"
    ],
    python_requires='>=3.8'
)
