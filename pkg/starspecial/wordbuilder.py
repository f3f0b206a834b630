# -*- coding: utf-8 -*-
__doc__ = """
Implementation of the standard word output formatters.

>>> from starspecial.words import parse_compact
>>> from starspecial.wordbuilder import word_formatters
>>> w = parse_compact('xxyXzyZyz', 3)
>>> word_formatters['exponent'].build(w)
'x^2 y x^-1 z y z^-1 y z'
>>> word_formatters['latex'].build(w)
'x^{2} y x^{-1} z y z^{-1} y z'
>>> word_formatters['indexed'].build(w)
"x1 x1 x2 x1' x3 x2 x3' x2 x3"
"""

__all__ = (
    'WordBuilder', 'CompactWordBuilder', 'IndexedWordBuilder',
    'ExponentWordBuilder', 'LatexWordBuilder',
    'word_formatters'
    )

from itertools import groupby

from starspecial.wordparser import ConverterRegistry, WordTokenizer


class WordBuilder(object):
    "Abstract superclass for word builders."
    SEPARATOR = ' '

    def build(self, word):
        "Call this method to build the word representation."
        names = self._generator_names(word.rank)
        return self.SEPARATOR.join(
            self._build_run(names[letter >> 1], letter & 1, len(list(run)))
            for letter, run in groupby(word) )

    def _generator_names(self, rank):
        return [ 'x%d' % (g+1) for g in range(rank) ]

    def _build_run(self, name, inverted, count):
        "To be overwritten by subclasses."
        raise NotImplementedError("_build_run(%s)" % name)


class ShortNameWordBuilder(WordBuilder):
    "Uses the names x, y, z up to rank three."
    def _generator_names(self, rank):
        if rank <= len(WordTokenizer.COMPACT_NAMES):
            return list(WordTokenizer.COMPACT_NAMES[:rank])
        return super(ShortNameWordBuilder, self)._generator_names(rank)


class IndexedWordBuilder(WordBuilder):
    def _build_run(self, name, inverted, count):
        return ' '.join( [name + ("'" if inverted else '')] * count )


class CompactWordBuilder(ShortNameWordBuilder):
    SEPARATOR = ''
    _indexed = IndexedWordBuilder()

    def build(self, word):
        if word.rank > len(WordTokenizer.COMPACT_NAMES):
            return self._indexed.build(word)
        return super(CompactWordBuilder, self).build(word)

    def _build_run(self, name, inverted, count):
        return (name.upper() if inverted else name) * count


class ExponentWordBuilder(ShortNameWordBuilder):
    def _build_run(self, name, inverted, count):
        exponent = -count if inverted else count
        return name if exponent == 1 else '%s^%d' % (name, exponent)


class LatexWordBuilder(ShortNameWordBuilder):
    def _generator_names(self, rank):
        names = super(LatexWordBuilder, self)._generator_names(rank)
        return [ name if len(name) == 1 else 'x_{%s}' % name[1:] for name in names ]

    def _build_run(self, name, inverted, count):
        exponent = -count if inverted else count
        return name if exponent == 1 else '%s^{%d}' % (name, exponent)


class WordFormatting(ConverterRegistry):
    _METHOD_NAME = 'build'

    def build(self, word, output_type):
        "Format a word in the given output type."
        return self.converter(output_type).build(word)


word_formatters = WordFormatting()

word_formatters.register_converter('compact',  CompactWordBuilder())
word_formatters.register_converter('indexed',  IndexedWordBuilder())
word_formatters.register_converter('exponent', ExponentWordBuilder())
word_formatters.register_converter('latex',    LatexWordBuilder())
