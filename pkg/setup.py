try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup
import sys, os

VERSION  = '0.3'
PACKAGE_NAME = 'starspecial'
PACKAGES = ['starspecial']
PACKAGE_DATA = {}
PACKAGE_DIRS = {}

# CONFIG DEFAULTS

FORCED_PACKAGE_NAME=None

# CONFIGURE PACKAGE

root_dir = os.path.dirname(os.path.abspath(__file__))
src_dir  = os.path.join(root_dir, 'starspecial')

try:
    os.stat(os.path.join(src_dir, 'lowindex.py'))
except OSError:
    raise RuntimeError("Package must contain the starspecial.lowindex module!")

# CMD LINE OVERRIDE

options = sys.argv[1:]
distutils_options = []
for option in options:
    if option.startswith('--name='):
        FORCED_PACKAGE_NAME=option[7:]
    else:
        distutils_options.append(option)

sys.argv[1:] = distutils_options

# BUILD MANIFEST.in

manifest = open(os.path.join(root_dir, 'MANIFEST.in'), 'w')
manifest.write("""
include setup.py MANIFEST.in README.rst DESIGN.md SPEC_FULL.md
recursive-include test *.py
include starspecial/*.py
""")
manifest.close()

# RUN SETUP

setup(
    name=FORCED_PACKAGE_NAME or PACKAGE_NAME,
    version=VERSION,
    packages=PACKAGES,
    package_data=PACKAGE_DATA,
    package_dir=PACKAGE_DIRS,

    install_requires=[
        'pyparsing>=3.0',
        'lxml',
        'networkx>=3.1',
        'numpy',
        ],

    entry_points={
        'console_scripts': [ 'starspecial = starspecial.cli:main' ],
        },

    description='starspecial - star-graphs, special relators and low-index invariants',
    long_description="""starspecial - star-graphs, special relators and low-index invariants

**starspecial** is a set of Python modules (using pyparsing_, networkx_,
numpy_ and lxml_) that work on finite presentations of groups. It builds
the star-graph of a presentation and decides whether it is
(m,k,nu)-special, enumerates and classifies the one-relator
presentations on three generators whose star-graph is K_{3,3}, builds a
recursive family of relators with star-graph K_{n,n}, and tells groups
apart by the abelianizations of their subgroups of small index.

.. _pyparsing:             https://github.com/pyparsing/pyparsing
.. _networkx:              https://networkx.org/
.. _numpy:                 https://numpy.org/
.. _lxml:                  https://lxml.de/

Every computation is available from the ``starspecial`` command, which
writes plain text or XML reports and an optional JSON run manifest with
the SHA-256 digest of the report.

New in version 0.3:

- low-index subgroup search with conjugacy class reduction
- separation matrix of the twelve builtin groups
- parallel invariant computation (``--jobs``)

New in version 0.2:

- composition table replay and witness generation
- the K_{n,n} family with pair count table

New in version 0.1:

- word parsers and formatters, star-graphs and the special property
- enumeration of the admissible relators of length 9
""",

    classifiers = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Topic :: Software Development :: Libraries :: Python Modules'
    ],

    keywords = "group theory presentation star-graph coset table abelianization"
)
