"""Registry of checkable propositions.

A claim is a pair of functions: ``instances(S, ctx)`` yields JSON-able
witness dicts in a deterministic order, and ``check(S, witness)`` returns
True (holds), False (refuted) or None (hypothesis not met).  The first
refuting witness becomes the counterexample; replaying a certificate is a
single call to ``check``.

This module has no package imports so every algebra module can register
its own claims.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

PROVEN = "PROVEN"
AUDIT = "AUDIT"

PASS = "PASS"
FAIL = "FAIL"
VACUOUS = "VACUOUS"

# witness field kinds, used when relabelling certificates
ELEMENT = "element"
SET = "set"
SETS = "sets"
HOM = "hom"
RAW = "raw"


@dataclass(frozen=True)
class Claim:
    id: str
    title: str
    module: str
    status: str
    instances: Callable[[Any, Any], Iterable[dict]]
    check: Callable[[Any, dict], bool | None]
    kinds: dict[str, str] = field(default_factory=dict)
    notes: Callable[[Any, Any], dict] | None = None


REGISTRY: dict[str, Claim] = {}


def claim(id: str, title: str, *, status: str, instances, kinds: dict[str, str] | None = None,
          notes=None, module: str | None = None):
    """Decorator registering ``check`` as the evaluator of claim ``id``."""
    if status not in (PROVEN, AUDIT):
        raise ValueError(status)

    def deco(check):
        if id in REGISTRY:
            raise ValueError(f"duplicate claim id {id!r}")
        mod = module or check.__module__.rsplit(".", 1)[-1]
        REGISTRY[id] = Claim(id, title, mod, status, instances, check, dict(kinds or {}), notes)
        return check

    return deco


@dataclass(frozen=True)
class AuditContext:
    """Shared evaluation settings.

    ``hom_targets`` are the codomains used by claims quantified over
    homomorphisms (the source semiring itself is always added first).
    """

    hom_targets: tuple = ()
    all_q_witnesses: bool = False


def single(S, ctx):
    yield {}


@dataclass
class Finding:
    claim: str
    status: str
    checked: int = 0
    vacuous: int = 0
    witness: dict | None = None
    notes: dict | None = None

    def to_json(self) -> dict:
        out = {"claim": self.claim, "verdict": self.status, "instances": self.checked,
               "vacuous_instances": self.vacuous}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = self.notes
        return out


def evaluate(c: Claim, S, ctx=None) -> Finding:
    checked = vacuous = 0
    notes = c.notes(S, ctx) if c.notes else None
    for w in c.instances(S, ctx):
        checked += 1
        r = c.check(S, w)
        if r is None:
            vacuous += 1
        elif r is False:
            return Finding(c.id, FAIL, checked, vacuous, w, notes)
        elif r is not True:
            raise TypeError(f"claim {c.id} check returned {r!r}")
    status = PASS if checked > vacuous else VACUOUS
    return Finding(c.id, status, checked, vacuous, None, notes)


def relabel_witness(c: Claim, witness: dict, perm) -> dict:
    """Transport a witness along the element bijection ``x -> perm[x]``."""
    out = {}
    for k, v in witness.items():
        kind = c.kinds.get(k, RAW)
        if v is None or kind == RAW:
            out[k] = v
        elif kind == ELEMENT:
            out[k] = perm[v]
        elif kind == SET:
            out[k] = sorted(perm[x] for x in v)
        elif kind == SETS:
            out[k] = [sorted(perm[x] for x in s) for s in v]
        elif kind == HOM:
            m = [0] * len(v["map"])
            for x, fx in enumerate(v["map"]):
                m[perm[x]] = fx
            out[k] = {"target": v["target"], "map": m}
        else:
            raise ValueError(f"unknown witness kind {kind!r}")
    return out
