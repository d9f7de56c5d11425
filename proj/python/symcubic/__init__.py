"""Cubic surfaces over finite fields: lines, automorphism groups, isomorphisms.

Every function returns the same structure the command-line tool prints.
"""

import json as _json

from . import _symcubic
from ._symcubic import SymcubicError, __version__


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


field_info = _wrap(_symcubic.field_info)
singular = _wrap(_symcubic.singular)
lines = _wrap(_symcubic.lines)
galois = _wrap(_symcubic.galois)
aut = _wrap(_symcubic.aut)
isom = _wrap(_symcubic.isom)
weyl_table = _wrap(_symcubic.weyl_table)
verify = _wrap(_symcubic.verify)

__all__ = ["SymcubicError", "__version__", "field_info", "singular", "lines", "galois", "aut", "isom", "weyl_table", "verify"]
