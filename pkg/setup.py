#!/usr/bin/env python3
import os
from setuptools import setup, find_packages

main_ns = {}
with open(os.path.join(os.getcwd(), 'fixauth/version.py')) as ver_file:
    exec(ver_file.read(), main_ns)
    version = main_ns['__version__']

long_description = open('README.rst', encoding='utf-8').read()

requirements_path = os.path.join(os.getcwd(), 'requirements.txt')
if os.path.exists(requirements_path):
    with open(requirements_path) as f:
        requirements = [line for line in f.read().splitlines() if line and not line.startswith('#')]
else:
    requirements = []

setup(
    name='fixauth',
    version=version,
    description='Lifetime simulator for fixed-key hash plus one-time-pad authentication under partial pad knowledge.',
    long_description=long_description,
    packages=find_packages(exclude=('tests', 'tests.*')),
    install_requires=requirements,
    extras_require={'test': ['pytest>=6']},
    entry_points={'console_scripts': ['fixauth = fixauth.cli:main']},
    zip_safe=False,
    classifiers=[
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Security :: Cryptography",
    ],
    python_requires='>=3.8',
)
