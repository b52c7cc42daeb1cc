"""
Test-environment compatibility shim.

pycontracts 1.8.12 (pinned in requirements/base.txt) predates Python 3.10
and numpy 1.24: it references ``collections.Container`` & co. and numpy
aliases such as ``np.int`` that have since been removed. Restore them
before pycontracts is imported so the test suite can be collected.
"""
import collections
import collections.abc

for _name in collections.abc.__all__:
    if not hasattr(collections, _name):
        setattr(collections, _name, getattr(collections.abc, _name))

try:
    import numpy as _np
except ImportError:  # pragma: no cover
    _np = None

if _np is not None:
    for _name, _alias in (('int', int), ('float', float), ('bool', bool),
                          ('complex', complex), ('object', object), ('str', str)):
        if _name not in _np.__dict__:
            setattr(_np, _name, _alias)
