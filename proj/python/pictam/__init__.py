"""Python access to the pictam library.

Documents are plain dicts with the same schema the CLI reads and writes.
"""

import json

from . import _core
from ._core import BoundExceeded, InputError

__all__ = [
    "BoundExceeded",
    "InputError",
    "corpus_names",
    "corpus",
    "suite_groups",
    "canonical_text",
    "validate",
    "invariants",
    "k_theory",
    "run_suite",
    "corruption_sweep",
    "phi",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def corpus_names():
    return list(_core.corpus_names())


def corpus(name):
    return json.loads(_core.corpus_document(name))


def suite_groups():
    return list(_core.suite_groups())


def canonical_text(doc):
    return _core.canonicalize(_text(doc))


def validate(doc):
    return json.loads(_core.validate(_text(doc)))


def invariants(doc):
    return json.loads(_core.invariants(_text(doc)))


def k_theory(doc, level, bound=1e6, samples=0, seed=0):
    return json.loads(_core.k_theory(_text(doc), level, bound, samples, seed))


def run_suite(config=None, base_dir="."):
    """Returns (verdict document, exit code)."""
    text, code = _core.run_suite(json.dumps(config or {}), base_dir)
    return json.loads(text), code


def corruption_sweep(doc):
    return json.loads(_core.corruption_sweep(_text(doc)))


def phi(values, n):
    return list(_core.phi(list(values), n))
