"""Finite commutative semirings: ideals, closures, quotients, spaces, and a claim auditor."""

from . import (claims, congruence, enumerator, ideals, irreducible, kernel, local, order, quotients,
               topology)
from .claims import REGISTRY, AuditContext, evaluate
from .kernel import FiniteSemiring, fixture, validate

__all__ = ["FiniteSemiring", "validate", "fixture", "REGISTRY", "AuditContext", "evaluate",
           "claims", "congruence", "enumerator", "ideals", "irreducible", "kernel", "local", "order",
           "quotients", "topology"]
__version__ = "0.1.0"
