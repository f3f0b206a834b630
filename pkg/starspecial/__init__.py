# -*- coding: utf-8 -*-
__doc__ = """
starspecial - star-graphs of group presentations, special relators and
low-index invariants.

The package works on finite presentations < X | R > of groups.  It builds
the star-graph (Whitehead graph) of a presentation, tests whether the
presentation is (m,k,nu)-special, enumerates and classifies the
(2,9)-special relators whose star-graph is K_{3,3}, builds the recursive
family of relators with star-graph K_{n,n}, and separates groups by the
abelianizations of their low-index subgroups.

>>> from starspecial.words import parse_compact
>>> from starspecial.stargraph import Presentation, check_special
>>> check_special(Presentation([parse_compact('xxyyzzxzy', 3)], 3))
SpecialCertificate(m=2, k=9, nu=1)
"""

__all__ = (
    'VERSION', 'ResourceLimitError',
    'MAX_INDEX_BOUND', 'DEFAULT_MAX_INDEX', 'FAMILY_MAX_N',
    'WITNESS_MAX_STEPS', 'DEFAULT_JOBS',
    )

VERSION = '0.3'
__version__ = VERSION

# CONFIG DEFAULTS (each one can be overridden on the command line)

MAX_INDEX_BOUND   = 6    # largest index accepted by the low-index search
DEFAULT_MAX_INDEX = 5    # index used by 'invariants' and 'separate'
FAMILY_MAX_N      = 64   # largest n accepted by 'family'
WITNESS_MAX_STEPS = 6    # depth of the equivalence witness search
DEFAULT_JOBS      = 1    # worker processes for per-group computations


class ResourceLimitError(RuntimeError):
    "Raised when a computation would exceed a configured bound."
    def __init__(self, what, requested, bound):
        RuntimeError.__init__(self, '%s %s exceeds the configured bound %s'
                              % (what, requested, bound))
        self.what      = what
        self.requested = requested
        self.bound     = bound

    def __reduce__(self):
        return (self.__class__, (self.what, self.requested, self.bound))
