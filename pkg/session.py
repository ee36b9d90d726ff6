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

import os

from . import documents
from .exceptions import MalformedInputError, PreconditionError, SchemaError, UnknownBindingError


class Session:
    """Named bindings of modules, maps, sheaves and reports over a single ring, persisted between commands"""

    def __init__(self, ring=None, config=None):
        """
        :param ring.WeightedRing ring:
            session ring, set by the first "ring new" if None
        :param dict config:
            configuration echoed in result documents (field, caps, margins)
        """
        self.ring = ring
        self.config = dict(config or {})
        self.bindings = {}

    def require_ring(self):
        if self.ring is None:
            raise PreconditionError('the session has no ring, run "ring new" first')
        return self.ring

    def bind(self, name, kind, value):
        """Binds 'value' to 'name', replacing any previous binding with that name

        :param str name:
        :param str kind:
            one of "module", "map", "sheaf", "report"
        :param value:
        """
        if not name or not isinstance(name, str):
            raise MalformedInputError("binding names should be non-empty strings, got %r" % (name,))
        if kind not in documents.CODECS:
            raise SchemaError('unknown binding kind "%s"' % kind)
        ring = getattr(value, "ring", None)
        if ring is not None:
            self.require_ring().check_same(ring)
        self.bindings[name] = (kind, value)

    def get(self, name, kind=None):
        """Returns the value bound to 'name', checking its kind if given"""
        if name not in self.bindings:
            raise UnknownBindingError('no binding named "%s"' % name)
        bound_kind, value = self.bindings[name]
        if kind is not None and bound_kind != kind:
            raise UnknownBindingError('binding "%s" is a %s, not a %s' % (name, bound_kind, kind))
        return value

    def kind(self, name):
        self.get(name)
        return self.bindings[name][0]

    def to_document(self):
        return documents.versioned({
            "ring": documents.encode_ring(self.ring) if self.ring is not None else None,
            "config": self.config,
            "bindings": {name: documents.encode_binding(kind, value)
                         for name, (kind, value) in sorted(self.bindings.items())},
        })

    @classmethod
    def from_document(cls, document):
        document = documents.unversioned(document, "session")
        documents.check_fields(document, ("ring", "config", "bindings"), what="session")
        ring = documents.decode_ring(document["ring"]) if document["ring"] is not None else None
        session = cls(ring, document["config"])
        bindings = document["bindings"]
        if not isinstance(bindings, dict):
            raise SchemaError("session bindings should be a JSON object")
        for name in sorted(bindings):
            kind, value = documents.decode_binding(bindings[name], ring)
            session.bindings[name] = (kind, value)
        return session

    def dumps(self):
        return documents.dumps(self.to_document())


def save_session(session, path):
    """Writes the canonical serialization of a session"""
    with open(path, "w") as f:
        f.write(session.dumps())
        f.write("\n")


def load_session(path):
    """Reads a session saved by save_session(), an empty session if the file does not exist

    :rtype: Session
    """
    if not os.path.exists(path):
        return Session()
    with open(path) as f:
        return Session.from_document(documents.loads(f.read(), "session %s" % path))
