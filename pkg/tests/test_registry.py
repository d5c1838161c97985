import functools
import sys

import pytest

import semiring_lab  # noqa: F401  (registers every claim)
from semiring_lab.auditor import all_claim_ids, default_context
from semiring_lab.claims import AUDIT, PROVEN, REGISTRY, evaluate
from semiring_lab.kernel import bool2, prod, trunc, zmod

MODULES = {"kernel", "ideals", "order", "quotients", "local", "irreducible", "topology", "congruence"}

PROVEN_IDS = ({f"bpss.{k}" for k in range(1, 11)} | {f"epvs.{k}" for k in range(1, 5)}
              | {f"cep.{k}" for k in range(1, 5)} | {f"lclk.{k}" for k in (1, 2, 3, 4, 5, 6, 8, 9, 10)}
              | {"psl", "t0", "scir", "congruence"})
AUDIT_IDS = {"modular", "lclk.7", "sus", "sums", "nsu", "qai", "iqs", "iqss", "qiji", "pqss", "slocal", "eqsi",
             "abi", "decomp", "decomp.finite", "minssi", "arith", "arith.cor", "sober", "connected", "qcompact",
             "conmap.1", "conmap.2", "conmap.3", "bijection"}


def _clear_caches():
    for mod in list(sys.modules.values()):
        if getattr(mod, "__name__", "").startswith("semiring_lab."):
            for obj in vars(mod).values():
                if isinstance(obj, functools._lru_cache_wrapper):
                    obj.cache_clear()


def test_ids_and_status():
    ids = set(REGISTRY)
    assert PROVEN_IDS <= ids and AUDIT_IDS <= ids
    for i in PROVEN_IDS:
        assert REGISTRY[i].status == PROVEN, i
    for i in AUDIT_IDS:
        assert REGISTRY[i].status == AUDIT, i
    assert len(all_claim_ids()) == len(ids)
    assert {c.module for c in REGISTRY.values()} <= MODULES


@pytest.mark.parametrize("cid", sorted(REGISTRY))
def test_claim_touches_owning_module(cid):
    c = REGISTRY[cid]
    own = sys.modules[f"semiring_lab.{c.module}"].__file__
    skip = {c.check.__code__, getattr(c.instances, "__code__", None)}
    hits = set()

    def prof(frame, event, arg):
        if event == "call" and frame.f_code.co_filename == own and frame.f_code not in skip:
            hits.add(frame.f_code.co_name)

    ctx = default_context()
    _clear_caches()
    sys.setprofile(prof)
    try:
        for S in (zmod(4), bool2(), trunc(2), prod(zmod(2), bool2())):
            evaluate(c, S, ctx)
    finally:
        sys.setprofile(None)
    assert hits, f"{cid} never calls into {c.module}"
