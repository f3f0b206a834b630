# -*- coding: utf-8 -*-
__doc__ = """
Builtin data: the admissible (2,9)-special relators, their twelve
equivalence classes, the groups G1..G12 and the composition table that
identifies every class member with the class word w0.

>>> from starspecial.catalog import *
>>> len(admissible_words()), [ len(c) for c in relator_classes() ]
(32, [6, 6, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2])
>>> print(builtin_groups()['G3'])
< x, y, z | xxyXzyZyz >
"""

__all__ = (
    'ADMISSIBLE_WORDS', 'RELATOR_CLASSES', 'COMPOSITION_TABLE',
    'admissible_words', 'relator_classes', 'builtin_groups',
    'group_names', 'composition_rows',
    )

from starspecial.words import parse_compact, parse_exponent
from starspecial.stargraph import Presentation


# compact format, as printed by the enumeration code
ADMISSIBLE_WORDS = '''
    xxyxzyyzz xxyxzzyyz xxyyxzyzz xxyyxzzyz xxyyzxzzy xxyyzyxzz xxyyzzxzy xxyyzzyxz
    xxyzxzzyy xxyzxYzyZ xxyzyyxzz xxyzyXzYz xxyzyZxYz xxyzyZyXz xxyzzxzyy xxyzzyyxz
    xxyzYzyXz xxyzYzyXZ xxyzYZyXz xxyXzyzYz xxyXzyZyz xxyXzyZYz xxyXzYzyz xxyXzYZyz
    xxyZxYzyz xxyZyzyXz xxyZyXzyz xxyZYzyXz xxYzxyzyZ xxYzyzxyZ xxYzyZxyz xxYXzyZyz
'''

# exponent format, one class per entry, first-listed member first
RELATOR_CLASSES = (
    ('x^2 y x z y^2 z^2', 'x^2 y z x z^2 y^2', 'x^2 y^2 x z y z^2',
     'x^2 y^2 z y x z^2', 'x^2 y^2 z^2 y x z', 'x^2 y^2 z^2 x z y'),
    ('x^2 y z y^2 x z^2', 'x^2 y z^2 x z y^2', 'x^2 y z^2 y^2 x z',
     'x^2 y^2 x z^2 y z', 'x^2 y^2 z x z^2 y', 'x^2 y x z^2 y^2 z'),
    ('x^2 y x^-1 z y z^-1 y z',       'x^2 y z y^-1 z y x^-1 z'),
    ('x^2 y x^-1 z y z^-1 y^-1 z',    'x^2 y z^-1 y^-1 z y x^-1 z'),
    ('x^2 y x^-1 z y^-1 z y z',       'x^2 y z y z^-1 y x^-1 z'),
    ('x^2 y x^-1 z y^-1 z^-1 y z',    'x^2 y z y^-1 z^-1 y x^-1 z'),
    ('x^2 y z^-1 x y^-1 z y z',       'x^2 y z y z^-1 x y^-1 z'),
    ('x^2 y z^-1 y z y x^-1 z',       'x^2 y x^-1 z y z y^-1 z'),
    ('x^2 y z^-1 y x^-1 z y z',       'x^2 y z y x^-1 z y^-1 z'),
    ('x^2 y^-1 z x y z y z^-1',       'x^2 y^-1 z y z x y z^-1'),
    ('x^2 y^-1 z y z^-1 x y z',       'x^2 y z x y^-1 z y z^-1'),
    ('x^2 y^-1 x^-1 z y z^-1 y z',    'x^2 y z y^-1 z y x^-1 z^-1'),
    )

_INVERT_ALL_TO_W0 = 'phi_x.rho_z.rho_y.rho_x;invert;rot'

# class number, w0, rows of (member, composition to w0)
COMPOSITION_TABLE = (
    (1, 'x^2 y^2 z^2 x z y', (
        ('x^2 y x z y^2 z^2', 'phi_x.phi_y;rot'),
        ('x^2 y^2 x z y z^2', 'rho_x.rho_y.rho_z;invert;phi_z;rot'),
        ('x^2 y^2 z y x z^2', 'phi_x.phi_z;rot'),
        ('x^2 y^2 z^2 y x z', 'phi_y.rho_x.rho_y.rho_z;rot'),
        )),
    (2, 'x^2 y x z^2 y^2 z', (
        ('x^2 y z y^2 x z^2', 'phi_x.phi_y.rho_x.rho_y.rho_z;rot'),
        ('x^2 y z^2 x z y^2', 'phi_x.phi_z;rot'),
        ('x^2 y z^2 y^2 x z', 'rho_x.rho_y.rho_z;invert;phi_x;rot'),
        ('x^2 y^2 x z^2 y z', 'phi_y;rot'),
        ('x^2 y^2 z x z^2 y', 'phi_x.phi_z.rho_x.rho_y.rho_z;rot'),
        )),
    ) + tuple( (number, members[0], ((members[1], _INVERT_ALL_TO_W0),))
               for number, members in enumerate(RELATOR_CLASSES[2:], 3) )


def admissible_words():
    return [ parse_compact(text, 3) for text in ADMISSIBLE_WORDS.split() ]

def relator_classes():
    "The twelve classes as lists of words, first-listed member first."
    return [ [ parse_exponent(text, 3) for text in members ]
             for members in RELATOR_CLASSES ]

def group_names():
    return [ 'G%d' % number for number in range(1, len(RELATOR_CLASSES)+1) ]

def builtin_groups():
    "G1..G12, each presented by the first-listed member of its class."
    return dict( (name, Presentation([parse_exponent(members[0], 3)], 3))
                 for name, members in zip(group_names(), RELATOR_CLASSES) )

def composition_rows():
    "Yield (class number, member, composition, w0) for every non-identity row."
    for number, w0, rows in COMPOSITION_TABLE:
        target = parse_exponent(w0, 3)
        for member, composition in rows:
            yield number, parse_exponent(member, 3), composition, target
