# -*- coding: utf-8 -*-
__doc__ = """
Report writers.  Every command result is a report record; the writers
registered in 'report_writers' serialize it to UTF-8 bytes, either as
plain text or as an XML document built with lxml.

>>> from starspecial.family import FamilyParams, family_report
>>> from starspecial.report import report_writers
>>> report_writers.known_types()
['text', 'xml']
>>> text = report_writers.write('family', family_report(FamilyParams(2)), 'text')
>>> print(text.decode('UTF-8').splitlines()[0])
presentation: < x, y | xyyx >
"""

__all__ = (
    'ClassificationReport', 'InvariantReport', 'SeparationReport',
    'StarGraphReport', 'ReportWriter', 'TextReportWriter', 'XmlReportWriter',
    'report_writers', 'REPORT_KINDS',
    )

from collections import namedtuple

from lxml import etree

from starspecial.wordparser import ConverterRegistry

REPORT_KINDS = ' enumeration classification family invariants separation stargraph '

ClassificationReport = namedtuple('ClassificationReport', 'classes checks')
InvariantReport      = namedtuple('InvariantReport',
                                  'names presentations profiles max_index mode counting')
SeparationReport     = namedtuple('SeparationReport', 'names presentations matrix')
StarGraphReport      = namedtuple('StarGraphReport',
                                  'presentation graph analysis certificate hyperbolic')


def _witness_text(witness):
    if witness is None:
        return 'none'
    return str(witness) or 'id'

def _flag(value):
    if value is None:
        return 'n/a'
    return 'true' if value else 'false'


class ReportWriter(object):
    "Abstract superclass, serialize() dispatches on the report kind."
    def serialize(self, kind, report):
        if kind not in REPORT_KINDS.split():
            raise ValueError("Unknown report kind %r" % (kind,))
        return getattr(self, '_write_' + kind)(report)


class TextReportWriter(ReportWriter):
    def serialize(self, kind, report):
        lines = super(TextReportWriter, self).serialize(kind, report)
        return ('\n'.join(lines) + '\n').encode('UTF-8')

    def _write_enumeration(self, report):
        return [ str(w) for w in report.words ]

    def _write_classification(self, report):
        lines = []
        for number, cls in enumerate(report.classes, 1):
            lines.append('class %d (%d members): %s' % (number, cls.size, cls.representative))
            for member in cls.members:
                lines.append('  %s  %s' % (member, _witness_text(cls.witnesses[member])))
        if report.checks is not None:
            lines.append('')
            for check in report.checks:
                status = 'ok' if check.ok else 'FAILED'
                if check.needs_inversion:
                    status += ' (inverse)'
                if check.generated:
                    status += ' (generated)'
                lines.append('R%d %s  %s  %s' % (check.number, check.member,
                                                 _witness_text(check.witness), status))
        return lines

    def _write_family(self, report):
        p = report.presentation
        lines = [ 'presentation: %s' % p,
                  'relator length: %d' % len(p.relators[0]),
                  'certificate: %s' % (tuple(report.certificate) if report.certificate else 'none',),
                  'K_{n,n}: %s' % _flag(report.knn and report.knn.ok),
                  'distinct pairs: %s' % (report.knn.distinct_pairs if report.knn else 'n/a'),
                  'multiplicities: %s' % ', '.join('%d x %d' % (count, edges)
                                                   for count, edges in report.profile.items()),
                  'hyperbolic: %s' % _flag(report.hyperbolic),
                  '',
                  'n  pairs  increment  2n-1' ]
        lines.extend('%-2d %-6d %-10d %d' % tuple(row) for row in report.pairs)
        return lines

    def _write_invariants(self, report):
        lines = []
        for name, p, profile in zip(report.names, report.presentations, report.profiles):
            if lines:
                lines.append('')
            lines.append('%s: %s' % (name, p))
            for k in sorted(profile):
                multiset = profile[k]
                lines.append('index %d (%d %s):' % (k, sum(multiset.values()), report.counting))
                lines.extend('  %3d  %s' % (multiset[a], a) for a in sorted(multiset))
        return lines

    def _write_separation(self, report):
        names, matrix = report.names, report.matrix
        lines = [ '%s: %s' % (name, p) for name, p in zip(names, report.presentations) ]
        lines.append('')
        for (i, j), witness in sorted(matrix.cells.items()):
            lines.append('%s %s  %s' % (names[i], names[j], witness or 'unseparated'))
        pairs = len(matrix.cells)
        lines.append('%d of %d pairs separated up to index %d'
                     % (pairs - len(matrix.unseparated()), pairs, matrix.max_index))
        return lines

    def _write_stargraph(self, report):
        analysis = report.analysis
        lines = [ 'presentation: %s' % report.presentation,
                  'edges: %d, total multiplicity %d' % (len(report.graph.multiplicity),
                                                       report.graph.total_multiplicity) ]
        lines.extend('  %s %s  %d' % edge for edge in report.graph.named_edges())
        lines.extend([
            'girth: %s' % analysis.girth,
            'diameters: %s' % ' '.join(str(d) for d in analysis.diameters),
            'bipartite: %s' % _flag(analysis.bipartite),
            'minimum degree: %d' % analysis.min_degree,
            'components: %d' % analysis.components,
            'certificate: %s' % (tuple(report.certificate) if report.certificate else 'none',),
            'hyperbolic: %s' % _flag(report.hyperbolic),
            'adjacency:' ])
        lines.extend('  ' + line for line in report.graph.to_adjlist())
        return lines


class XmlReportWriter(ReportWriter):
    def serialize(self, kind, report):
        root = etree.Element('report', kind=kind)
        super(XmlReportWriter, self).serialize(kind, (root, report))
        return etree.tostring(root, pretty_print=True, encoding='UTF-8', xml_declaration=True)

    def _presentation(self, parent, p, **attributes):
        element = etree.SubElement(parent, 'presentation', rank=str(p.rank), **attributes)
        for relator in p.relators:
            etree.SubElement(element, 'relator').text = str(relator)
        return element

    def _certificate(self, parent, certificate):
        if certificate is not None:
            etree.SubElement(parent, 'certificate', m=str(certificate.m),
                             k=str(certificate.k), nu=str(certificate.nu))

    def _write_enumeration(self, arguments):
        root, report = arguments
        constraints = report.constraints
        counts = etree.SubElement(root, 'counts', length=str(constraints.length),
                                  rank=str(constraints.rank))
        for name in ('search_space', 'candidates', 'brute_force', 'proxy', 'exact'):
            value = getattr(report, name)
            if value is not None:
                counts.set(name.replace('_', '-'), str(value))
        words = etree.SubElement(root, 'words')
        for w in report.words:
            etree.SubElement(words, 'word').text = str(w)

    def _write_classification(self, arguments):
        root, report = arguments
        for number, cls in enumerate(report.classes, 1):
            element = etree.SubElement(root, 'class', number=str(number),
                                       representative=str(cls.representative))
            for member in cls.members:
                etree.SubElement(element, 'member',
                                 witness=_witness_text(cls.witnesses[member])).text = str(member)
        if report.checks is not None:
            table = etree.SubElement(root, 'replay')
            for check in report.checks:
                etree.SubElement(table, 'row', number=str(check.number),
                                 witness=_witness_text(check.witness),
                                 ok=_flag(check.ok),
                                 inverse=_flag(check.needs_inversion),
                                 generated=_flag(check.generated)).text = str(check.member)

    def _write_family(self, arguments):
        root, report = arguments
        self._presentation(root, report.presentation,
                           n=str(report.params.n), alpha=str(report.params.alpha))
        self._certificate(root, report.certificate)
        if report.knn is not None:
            etree.SubElement(root, 'knn', ok=_flag(report.knn.ok),
                             pairs=str(report.knn.distinct_pairs))
        for count, edges in report.profile.items():
            etree.SubElement(root, 'multiplicity', value=str(count), edges=str(edges))
        etree.SubElement(root, 'hyperbolic').text = _flag(report.hyperbolic)
        pairs = etree.SubElement(root, 'pairs')
        for row in report.pairs:
            etree.SubElement(pairs, 'row', n=str(row.n), pairs=str(row.pairs),
                             increment=str(row.increment), expected=str(row.expected))

    def _multisets(self, parent, profile):
        for k in sorted(profile):
            element = etree.SubElement(parent, 'index', k=str(k))
            for a in sorted(profile[k]):
                etree.SubElement(element, 'invariant', count=str(profile[k][a])).text = str(a)

    def _write_invariants(self, arguments):
        root, report = arguments
        root.set('mode', report.mode)
        root.set('counting', report.counting)
        root.set('max-index', str(report.max_index))
        for name, p, profile in zip(report.names, report.presentations, report.profiles):
            group = etree.SubElement(root, 'group', name=name)
            self._presentation(group, p)
            self._multisets(group, profile)

    def _write_separation(self, arguments):
        root, report = arguments
        matrix = report.matrix
        root.set('max-index', str(matrix.max_index))
        root.set('counting', matrix.counting)
        for name, p in zip(report.names, report.presentations):
            self._presentation(root, p, name=name)
        cells = etree.SubElement(root, 'matrix')
        for (i, j), witness in sorted(matrix.cells.items()):
            cell = etree.SubElement(cells, 'cell', i=report.names[i], j=report.names[j])
            if witness is not None:
                cell.set('index', str(witness.index))
                cell.set('count-i', str(witness.count_p))
                cell.set('count-j', str(witness.count_q))
                cell.text = str(witness.invariant)

    def _write_stargraph(self, arguments):
        root, report = arguments
        self._presentation(root, report.presentation)
        graph = etree.SubElement(root, 'stargraph')
        for a, b, count in report.graph.named_edges():
            etree.SubElement(graph, 'edge', a=a, b=b, multiplicity=str(count))
        analysis = report.analysis
        etree.SubElement(root, 'analysis', girth=str(analysis.girth),
                         diameters=' '.join(str(d) for d in analysis.diameters),
                         bipartite=_flag(analysis.bipartite),
                         degree=str(analysis.min_degree),
                         components=str(analysis.components))
        self._certificate(root, report.certificate)
        etree.SubElement(root, 'hyperbolic').text = _flag(report.hyperbolic)


class ReportWriting(ConverterRegistry):
    _METHOD_NAME = 'serialize'

    def write(self, kind, report, output_type):
        "Serialize a report of the given kind, returns UTF-8 bytes."
        return self.converter(output_type).serialize(kind, report)


report_writers = ReportWriting()

report_writers.register_converter('text', TextReportWriter())
report_writers.register_converter('xml',  XmlReportWriter())
