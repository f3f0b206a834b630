# -*- coding: utf-8 -*-
__doc__ = """
Star-graphs of presentations and the (m,k,nu)-special property.

The star-graph of < X | R > has the signed generators as vertices.  Each
length-2 cyclic subword ab of a relator contributes one edge {a, b^-1}.
Edges are kept as a multiplicity map; the special property is decided on
the underlying simple graph.

>>> from starspecial.stargraph import *
>>> p = Presentation.parse(['xxyyzzxzy'], 3)
>>> g = build(p)
>>> len(g.multiplicity), g.total_multiplicity
(9, 9)
>>> is_knn(g, 3)
True
>>> analyze(g.simple_graph())
GraphAnalysis(girth=4, diameters=(2,), bipartite=True, min_degree=3, components=1, isomorphic=True)
>>> check_special(p.power(2))
SpecialCertificate(m=2, k=18, nu=1)
>>> hyperbolic_flag(2, 9), hyperbolic_flag(2, 4)
(True, False)
"""

__all__ = (
    'Presentation', 'StarGraph', 'SpecialCertificate', 'GraphAnalysis',
    'build', 'literal_stargraph', 'simple_graph', 'analyze', 'is_knn',
    'is_complete_bipartite', 'check_special', 'hyperbolic_flag',
    'concise_refine', 'k33_factorisation', 'letter_name',
    )

import logging
from collections import namedtuple
from fractions import Fraction

import networkx as nx
from networkx.algorithms import bipartite

from starspecial.words import (Letter, Word, canonical_cyclic, cyclic_reduce,
                               is_cyclically_reduced, power)
from starspecial.wordbuilder import word_formatters
from starspecial.wordparser import word_parsers

logger = logging.getLogger(__name__)


SpecialCertificate = namedtuple('SpecialCertificate', 'm k nu')

GraphAnalysis = namedtuple('GraphAnalysis',
                           'girth diameters bipartite min_degree components isomorphic')


def letter_name(letter, rank):
    return word_formatters['compact'].build(Word([letter], rank))


class Presentation(object):
    """A finite presentation < x_1..x_rank | relators >.

    Relators must be nonempty and cyclically reduced; pass reduced=False
    for raw relator lists, which only concise_refine() accepts.
    """
    def __init__(self, relators, rank, reduced=True):
        self.rank = rank
        self.relators = tuple(relators)
        for relator in self.relators:
            if relator.rank != rank:
                raise ValueError("Relator %s has rank %d, presentation has rank %d"
                                 % (relator, relator.rank, rank))
            if reduced and not relator:
                raise ValueError("Empty relator in a presentation of rank %d" % rank)
            if reduced and not is_cyclically_reduced(relator):
                raise ValueError("Relator %s is not cyclically reduced" % (relator,))

    @classmethod
    def parse(cls, texts, rank, input_type='compact'):
        if input_type == 'compact' and rank > 3:
            input_type = 'indexed'
        return cls([ word_parsers.parse(text, rank, input_type) for text in texts ], rank)

    def power(self, n):
        return Presentation([ power(relator, n) for relator in self.relators ], self.rank)

    def generator_names(self):
        return [ letter_name(Letter(g), self.rank) for g in range(self.rank) ]

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return self.rank == other.rank and self.relators == other.relators

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.rank, self.relators))

    def __str__(self):
        return '< %s | %s >' % (', '.join(self.generator_names()),
                                ', '.join(str(relator) for relator in self.relators))

    def __repr__(self):
        return 'Presentation(%r, rank=%d)' % ([ str(r) for r in self.relators ], self.rank)


class StarGraph(object):
    """Multiplicity map over unordered pairs of signed generators.
    Keys are sorted letter pairs, loops are pairs (a, a).
    """
    def __init__(self, rank, multiplicity):
        self.rank = rank
        self.multiplicity = dict(multiplicity)

    @property
    def total_multiplicity(self):
        return sum(self.multiplicity.values())

    def vertices(self):
        return [ Letter.from_column(column) for column in range(2*self.rank) ]

    def simple_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        graph.add_edges_from(sorted(self.multiplicity))
        return graph

    def multiplicity_profile(self):
        "Map multiplicity -> number of edges carrying it."
        profile = {}
        for count in self.multiplicity.values():
            profile[count] = profile.get(count, 0) + 1
        return dict(sorted(profile.items()))

    def named_edges(self):
        "Sorted (name, name, multiplicity) triples."
        rank = self.rank
        return [ (letter_name(a, rank), letter_name(b, rank), count)
                 for (a, b), count in sorted(self.multiplicity.items()) ]

    def to_adjlist(self):
        "Adjacency list lines, each edge listed once."
        rank = self.rank
        graph = nx.relabel_nodes(self.simple_graph(),
                                 dict((v, letter_name(v, rank)) for v in self.vertices()))
        return list(nx.generate_adjlist(graph))

    def __eq__(self, other):
        if not isinstance(other, StarGraph):
            return NotImplemented
        return self.rank == other.rank and self.multiplicity == other.multiplicity

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return '<StarGraph rank=%d edges=%d total=%d>' % (
            self.rank, len(self.multiplicity), self.total_multiplicity)


def _add_edge(multiplicity, a, b):
    key = (a, b) if a <= b else (b, a)
    multiplicity[key] = multiplicity.get(key, 0) + 1

def build(p):
    multiplicity = {}
    for relator in p.relators:
        if not relator:
            raise ValueError("Empty relator in %s" % p)
        length = len(relator)
        for i, a in enumerate(relator):
            _add_edge(multiplicity, a, relator[(i+1) % length].inverse())
    return StarGraph(p.rank, multiplicity)

def literal_stargraph(w):
    """Edge (previous, inverse of current) for every position, the previous
    letter of position 0 being the last one.  No reduction is assumed.
    """
    multiplicity = {}
    for i, current in enumerate(w):
        _add_edge(multiplicity, w[i-1], current.inverse())
    return StarGraph(w.rank, multiplicity)

def simple_graph(g):
    return g.simple_graph()


def _components(graph):
    return [ graph.subgraph(nodes).copy()
             for nodes in sorted(nx.connected_components(graph), key=min) ]

def analyze(graph):
    if isinstance(graph, StarGraph):
        graph = graph.simple_graph()
    # a loop is a cycle of length one, forests have infinite girth
    girth = 1 if nx.number_of_selfloops(graph) else nx.girth(graph)
    components = _components(graph)
    diameters = tuple(nx.diameter(component) for component in components)
    min_degree = min((len(graph[v]) for v in graph), default=0)
    isomorphic = all(nx.is_isomorphic(components[0], component)
                     for component in components[1:])
    return GraphAnalysis(girth, diameters, nx.is_bipartite(graph), min_degree,
                         len(components), isomorphic)


def is_complete_bipartite(graph, n):
    "Recognise K_{n,n} through its bipartition."
    if graph.number_of_nodes() != 2*n or graph.number_of_edges() != n*n:
        return False
    if nx.number_of_selfloops(graph) or not nx.is_connected(graph):
        return False
    if not nx.is_bipartite(graph):
        return False
    left, right = bipartite.sets(graph)
    return len(left) == len(right) == n

def is_knn(g, n):
    if g.rank != n or len(g.multiplicity) != n*n:
        return False
    if any(count != 1 for count in g.multiplicity.values()):
        return False
    return is_complete_bipartite(g.simple_graph(), n)


def check_special(p):
    "Return the (m,k,nu) certificate of p, or None if p is not special."
    if not p.relators:
        return None
    lengths = set(len(relator) for relator in p.relators)
    if len(lengths) != 1 or 0 in lengths:
        return None
    k = lengths.pop()

    graph = build(p).simple_graph()
    if min(len(graph[v]) for v in graph) < 3:
        return None
    analysis = analyze(graph)
    if not (analysis.bipartite and analysis.isomorphic):
        return None
    diameters = set(analysis.diameters)
    if len(diameters) != 1:
        return None
    m = diameters.pop()
    if m < 2 or analysis.girth != 2*m:
        return None
    if k < 3 or (m == 2 and k < 4):
        return None
    return SpecialCertificate(m, k, analysis.components)

def hyperbolic_flag(m, k):
    "1/m + 2/k < 1, exactly."
    if m < 2 or k < 3:
        raise ValueError("Need m >= 2 and k >= 3, got m=%r, k=%r" % (m, k))
    return Fraction(1, m) + Fraction(2, k) < 1


def concise_refine(p):
    """Drop freely trivial relators and relators freely conjugate to an
    earlier relator or its inverse.
    """
    seen = set()
    kept = []
    for relator in p.relators:
        reduced = cyclic_reduce(relator)
        if not reduced:
            logger.debug("dropping freely trivial relator %s", relator)
            continue
        key = canonical_cyclic(reduced)
        if key in seen:
            logger.debug("dropping redundant relator %s", relator)
            continue
        seen.add(key)
        kept.append(reduced)
    return Presentation(kept, p.rank)

def k33_factorisation(p):
    """Edge count of a concise special presentation with star-graph K_{3,3}.

    Returns (number of relators, relator length).  When every edge has
    multiplicity 1 the nine edges force relators * length = 9, so the only
    factorisation with length >= 4 is one relator of length 9.
    """
    q = concise_refine(p)
    certificate = check_special(q)
    g = build(q)
    if certificate is None or not is_complete_bipartite(g.simple_graph(), 3):
        raise ValueError("%s is not special with star-graph K_{3,3}" % p)
    count, length = len(q.relators), certificate.k
    assert g.total_multiplicity == count * length
    if set(g.multiplicity.values()) == set([1]):
        assert count * length == 9
    return (count, length)
