"""Docstring examples must run."""

import doctest

import spincalc.curves
import spincalc.linecomplex
import spincalc.picard
import spincalc.schubert


def test_docstring_examples():
    for module in (spincalc.picard, spincalc.curves, spincalc.schubert,
                   spincalc.linecomplex):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
        assert result.attempted > 0, module.__name__
