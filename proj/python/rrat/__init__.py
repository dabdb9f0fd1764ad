"""Retract rationality computations with G-lattices.

Groups, lattices, fields and monomial actions are JSON-style documents:
plain dicts, or catalog names such as "S3" for groups and "Q" / "C" for fields.
"""

import json as _json

from . import _core
from ._core import InputError, InternalError, ResourceError, catalog_names

__all__ = [
    "InputError", "InternalError", "ResourceError", "catalog_names", "group_info",
    "regular_lattice", "lenstra_lattice", "cohomology", "resolve", "invertible",
    "fingerprint", "verdict_noether", "verdict_torus", "verdict_multiplicative",
    "verdict_monomial_universal", "verdict_monomial", "extension_class", "replay_noether",
    "smith_normal_form", "reproduce_voskresenskii", "reproduce_endo_miyata",
]


def _d(x):
    return _json.dumps(x)


def _l(s):
    return _json.loads(s)


def group_info(group):
    return _l(_core.group_info(_d(group)))


def regular_lattice(group):
    return _l(_core.regular_lattice(_d(group)))


def lenstra_lattice(n):
    """The kernel I_q of Z[(Z/q)^x-indexed] -> Z/q for q = 2**n."""
    return _l(_core.lenstra_lattice(n))


def cohomology(lattice, subgroups="prime-power"):
    return _l(_core.cohomology(_d(lattice), subgroups))


def resolve(lattice):
    return _l(_core.resolve(_d(lattice)))


def invertible(lattice):
    return _l(_core.invertible(_d(lattice)))


def fingerprint(lattice):
    return _l(_core.fingerprint(_d(lattice)))


def verdict_noether(group, field="Q"):
    return _l(_core.verdict_noether(_d(group), _d(field)))


def verdict_torus(lattice):
    return _l(_core.verdict_torus(_d(lattice)))


def verdict_multiplicative(lattice, field="Q"):
    return _l(_core.verdict_multiplicative(_d(lattice), _d(field)))


def verdict_monomial_universal(group):
    return _l(_core.verdict_monomial_universal(_d(group)))


def verdict_monomial(action, field="C"):
    return _l(_core.verdict_monomial(_d(action), _d(field)))


def extension_class(action):
    return _l(_core.extension_class(_d(action)))


def replay_noether(verdict, group, field="Q"):
    return _core.replay_noether(_d(verdict), _d(group), _d(field))


def smith_normal_form(matrix):
    return _l(_core.smith_normal_form(_d(matrix)))


def reproduce_voskresenskii(n):
    return _l(_core.reproduce_voskresenskii(n))


def reproduce_endo_miyata(max_order, trials, seed):
    return _l(_core.reproduce_endo_miyata(max_order, trials, seed))
