# Copyright (C) 2026
#
# This file is part of Wpstack.
#
# Wpstack is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Wpstack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""JSON documents for rings, modules, maps, sheaves and sessions.

Every standalone document carries "schema_version"; nested documents do not. Unknown and missing fields are
rejected. Polynomials are strings in the ring grammar of parser.py.
"""

import json

from .exceptions import MalformedInputError, SchemaError, SchemaVersionError
from .gmodule import FreeModule, GradedMap, present
from .parser import PolynomialParser
from .quotient import DegreeWindow, SheafRep
from .ring import FieldSpec, WeightedRing

SCHEMA_VERSION = 1


def check_fields(document, required, optional=(), what="document"):
    """Raise SchemaError unless 'document' is a dict with all 'required' fields and no field outside
    'required' and 'optional'"""
    if not isinstance(document, dict):
        raise SchemaError("%s should be a JSON object, got %s instead" % (what, type(document).__name__))
    missing = [name for name in required if name not in document]
    if missing:
        raise SchemaError("%s misses the fields %s" % (what, ", ".join(sorted(missing))))
    unknown = [name for name in document if name not in required and name not in optional]
    if unknown:
        raise SchemaError("%s has unknown fields %s" % (what, ", ".join(sorted(unknown))))


def _expect(value, kind, what):
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise SchemaError("%s should be an integer, got %r instead" % (what, value))
    if not isinstance(value, kind):
        raise SchemaError("%s should be a %s, got %r instead" % (what, kind.__name__, value))
    return value


def versioned(document):
    """Returns a standalone copy of 'document' with the schema version"""
    document = dict(document)
    document["schema_version"] = SCHEMA_VERSION
    return document


def unversioned(document, what="document"):
    """Checks and strips the schema version of a standalone document"""
    if not isinstance(document, dict):
        raise SchemaError("%s should be a JSON object" % what)
    document = dict(document)
    version = document.pop("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaVersionError("%s has schema version %r, expected %d" % (what, version, SCHEMA_VERSION))
    return document


def dumps(document):
    """Canonical text of a document: sorted keys, two-space indentation"""
    return json.dumps(document, sort_keys=True, indent=2)


def loads(text, what="document"):
    try:
        return json.loads(text)
    except ValueError as e:
        raise MalformedInputError("%s is not valid JSON: %s" % (what, e))


def encode_field(field):
    return "Q" if field.is_rational else {"Fp": field.modulus}


def decode_field(document):
    if document == "Q":
        return FieldSpec()
    if isinstance(document, dict):
        check_fields(document, ("Fp",), what="field")
        return FieldSpec(_expect(document["Fp"], int, "field modulus"))
    raise SchemaError('field should be "Q" or {"Fp": p}, got %r instead' % (document,))


def encode_ring(ring):
    return {"field": encode_field(ring.field), "weights": list(ring.weights)}


def decode_ring(document):
    check_fields(document, ("field", "weights"), what="ring")
    weights = _expect(document["weights"], list, "weights")
    return WeightedRing([_expect(w, int, "weight") for w in weights], decode_field(document["field"]))


def encode_module(module):
    parser = PolynomialParser(module.ring)
    return {
        "ring": encode_ring(module.ring),
        "generators": [{"degree": g} for g in module.generator_degrees],
        "relations": [[parser.format(entry) for entry in column] for column in module.relations],
    }


def decode_module(document, ring=None):
    """
    :param dict document:
    :param ring.WeightedRing ring:
        ring the module must live on, RingMismatchError otherwise
    :rtype: gmodule.Presentation
    """
    check_fields(document, ("ring", "generators", "relations"), what="module")
    module_ring = decode_ring(document["ring"])
    if ring is not None:
        ring.check_same(module_ring)
    degrees = []
    for generator in _expect(document["generators"], list, "generators"):
        check_fields(generator, ("degree",), what="generator")
        degrees.append(_expect(generator["degree"], int, "generator degree"))
    parser = PolynomialParser(module_ring)
    relations = [[parser.parse(_expect(entry, str, "relation entry")) for entry in _expect(column, list, "relation")]
                 for column in _expect(document["relations"], list, "relations")]
    return present(FreeModule(module_ring, degrees), relations)


def encode_map(graded_map):
    """Matrix rows are indexed by target generators, columns by source generators"""
    parser = PolynomialParser(graded_map.ring)
    return {
        "source": encode_module(graded_map.source),
        "target": encode_module(graded_map.target),
        "matrix": [[parser.format(graded_map.entry(i, j)) for j in range(graded_map.source.rank)]
                   for i in range(graded_map.target.rank)],
    }


def decode_map(document, ring=None):
    check_fields(document, ("source", "target", "matrix"), what="map")
    source = decode_module(document["source"], ring)
    target = decode_module(document["target"], ring)
    parser = PolynomialParser(source.ring)
    rows = [[parser.parse(_expect(entry, str, "matrix entry")) for entry in _expect(row, list, "matrix row")]
            for row in _expect(document["matrix"], list, "matrix")]
    if len(rows) != target.rank or any(len(row) != source.rank for row in rows):
        raise SchemaError("matrix should have %d rows of %d entries" % (target.rank, source.rank))
    columns = [[rows[i][j] for i in range(target.rank)] for j in range(source.rank)]
    return GradedMap(source, target, columns)


def encode_window(window):
    return [window.lo, window.hi]


def decode_window(document):
    if not isinstance(document, list) or len(document) != 2:
        raise SchemaError("window should be a pair [lo, hi], got %r instead" % (document,))
    lo, hi = (_expect(d, int, "window end") for d in document)
    if lo > hi:
        raise SchemaError("window [%d, %d] is empty" % (lo, hi))
    return DegreeWindow(lo, hi)


def encode_sheaf(sheaf):
    return {
        "module": encode_module(sheaf.module),
        "window": encode_window(sheaf.window),
        "saturated_dims": [[d, sheaf.saturated_dims[d]] for d in sorted(sheaf.saturated_dims)],
        "torsion_free": sheaf.torsion_free,
        "unit": encode_map(sheaf.unit),
        "stages": sheaf.stages,
    }


def decode_sheaf(document, ring=None):
    check_fields(document, ("module", "window", "saturated_dims", "torsion_free", "unit", "stages"), what="sheaf")
    module = decode_module(document["module"], ring)
    dims = {}
    for pair in _expect(document["saturated_dims"], list, "saturated_dims"):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError("saturated_dims entries should be pairs [degree, dimension]")
        dims[_expect(pair[0], int, "degree")] = _expect(pair[1], int, "dimension")
    return SheafRep(module, decode_window(document["window"]), dims,
                    torsion_free=_expect(document["torsion_free"], bool, "torsion_free"),
                    unit=decode_map(document["unit"], ring), stages=_expect(document["stages"], int, "stages"))


# binding kind -> (encoder, decoder)
CODECS = {
    "module": (encode_module, decode_module),
    "map": (encode_map, decode_map),
    "sheaf": (encode_sheaf, decode_sheaf),
    "report": (lambda report: report, lambda document, ring=None: _expect(document, dict, "report")),
}


def encode_binding(kind, value):
    if kind not in CODECS:
        raise SchemaError('unknown binding kind "%s"' % kind)
    return {"kind": kind, "document": CODECS[kind][0](value)}


def decode_binding(document, ring=None):
    check_fields(document, ("kind", "document"), what="binding")
    kind = document["kind"]
    if kind not in CODECS:
        raise SchemaError('unknown binding kind "%s"' % kind)
    return kind, CODECS[kind][1](document["document"], ring)
