"""Corpus-wide claim audits, counterexample certificates and replay.

A report is plain JSON.  Everything except the ``timestamp`` entry is a
function of the corpus, the selected claims and the context, so two runs
over the same input serialize byte-identically once that entry is dropped.
"""

from __future__ import annotations

import csv
import fnmatch
import hashlib
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Sequence

from . import claims as _claims
from . import congruence, ideals, irreducible, kernel, local, order, quotients, topology  # noqa: F401  (register claims)
from .claims import FAIL, PASS, PROVEN, REGISTRY, VACUOUS, AuditContext, Claim, evaluate
from .enumerator import GENERATOR_VERSION, enumerate_upto
from .errors import BadParams, BadTables, CorpusEmpty, MalformedCertificate, ProvenFailure, SemiringError
from .kernel import FiniteSemiring, from_json, relabel

log = logging.getLogger(__name__)

REPORT_FORMAT = "semiring-lab-audit/1"
CERT_FORMAT = "semiring-lab-certificate/1"
HOM_POOL_ORDER = 3


def _id_key(cid: str) -> tuple:
    # "lclk.10" sorts after "lclk.9"
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in cid.split("."))


def all_claim_ids() -> list[str]:
    return sorted(REGISTRY, key=_id_key)


def select_claims(patterns: Iterable[str] | None = None) -> list[Claim]:
    """Claims matching any id or glob pattern (all claims when ``patterns`` is empty)."""
    ids = all_claim_ids()
    pats = [p.strip() for p in (patterns or ()) if p.strip()]
    if not pats:
        return [REGISTRY[i] for i in ids]
    chosen = set()
    for p in pats:
        hit = [i for i in ids if fnmatch.fnmatchcase(i, p)]
        if not hit:
            raise BadParams(f"no claim matches {p!r}")
        chosen.update(hit)
    return [REGISTRY[i] for i in ids if i in chosen]


def default_context(all_q_witnesses: bool = False) -> AuditContext:
    """Homomorphism codomains: every class of order 2..3 (plus the source itself)."""
    return AuditContext(hom_targets=tuple(enumerate_upto(HOM_POOL_ORDER)), all_q_witnesses=all_q_witnesses)


def certificate(c: Claim, S: FiniteSemiring, witness: dict, verdict: str = FAIL) -> dict:
    return {"format": CERT_FORMAT, "claim": c.id, "title": c.title, "status": c.status,
            "semiring": S.to_json(), "witness": witness, "verdict": verdict}


def _corpus_digest(corpus: Sequence[FiniteSemiring]) -> str:
    h = hashlib.sha256()
    for S in corpus:
        h.update(json.dumps(S.encoding()).encode())
    return h.hexdigest()


def _audit_one(S: FiniteSemiring, ids: tuple[str, ...], ctx: AuditContext) -> list[dict]:
    return [evaluate(REGISTRY[i], S, ctx).to_json() for i in ids]


def _audit_star(args):
    return _audit_one(*args)


def run_audit(corpus: Sequence[FiniteSemiring], claims: Sequence[Claim] | None = None,
              ctx: AuditContext | None = None, jobs: int = 1, descriptor: dict | None = None) -> dict:
    """Evaluate every selected claim on every semiring.

    Raises ProvenFailure (carrying the partial report and the first
    certificate) once the semiring on which a PROVEN claim failed has been
    fully evaluated.
    """
    corpus = list(corpus)
    if not corpus:
        raise CorpusEmpty("nothing to audit")
    claims = list(claims) if claims is not None else select_claims()
    ctx = ctx if ctx is not None else default_context()
    ids = tuple(c.id for c in claims)
    started = datetime.now(timezone.utc).isoformat(timespec="seconds")
    t0 = time.perf_counter()

    tasks = [(S, ids, ctx) for S in corpus]
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(_audit_star, tasks, chunksize=8)
    else:
        pool = None
        results = map(_audit_star, tasks)

    entries, certs, proven_fail = [], [], None
    tally = {i: {PASS: 0, FAIL: 0, VACUOUS: 0} for i in ids}
    try:
        for S, findings in zip(corpus, results):
            for f in findings:
                tally[f["claim"]][f["verdict"]] += 1
                if f["verdict"] == FAIL:
                    cert = certificate(REGISTRY[f["claim"]], S, f["witness"])
                    f["certificate"] = cert
                    certs.append(cert)
                    if REGISTRY[f["claim"]].status == PROVEN and proven_fail is None:
                        proven_fail = cert
            entries.append({"name": S.name, "semiring": S.to_json(), "findings": findings})
            if proven_fail is not None:
                break
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)

    report = {
        "format": REPORT_FORMAT,
        "corpus": {"size": len(corpus), "digest": _corpus_digest(corpus),
                   "generator_version": GENERATOR_VERSION, **(descriptor or {})},
        "context": {"hom_targets": [T.name or T.encoding() for T in ctx.hom_targets],
                    "all_q_witnesses": ctx.all_q_witnesses},
        "claims": [{"id": c.id, "title": c.title, "module": c.module, "status": c.status} for c in claims],
        "summary": {i: {"status": REGISTRY[i].status, **tally[i]} for i in ids},
        "semirings": entries,
        "counterexamples": certs,
        "complete": proven_fail is None,
        "timestamp": {"started": started, "elapsed_seconds": round(time.perf_counter() - t0, 3)},
    }
    if proven_fail is not None:
        raise ProvenFailure(f"PROVEN claim {proven_fail['claim']} failed on "
                            f"{proven_fail['semiring'].get('name', 'a corpus semiring')}: "
                            f"witness {json.dumps(proven_fail['witness'])}", report, proven_fail)
    return report


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=1, sort_keys=True) + "\n"


def strip_timestamp(text: str) -> str:
    """Canonical report text without the timing entry (for determinism checks)."""
    obj = json.loads(text)
    obj.pop("timestamp", None)
    return json.dumps(obj, indent=1, sort_keys=True)


def markdown_summary(report: dict) -> str:
    out = ["# Audit summary", "",
           f"Corpus: {report['corpus']['size']} semirings "
           f"(sha256 {report['corpus']['digest'][:12]}).", ""]
    if not report.get("complete", True):
        out += ["**Aborted: a PROVEN claim failed.**", ""]
    out += ["| claim | status | pass | fail | vacuous | title |", "|---|---|---|---|---|---|"]
    titles = {c["id"]: c["title"] for c in report["claims"]}
    for cid, row in report["summary"].items():
        out.append(f"| {cid} | {row['status']} | {row[PASS]} | {row[FAIL]} | {row[VACUOUS]} | {titles[cid]} |")
    first = {}
    for cert in report["counterexamples"]:
        first.setdefault(cert["claim"], cert)
    if first:
        out += ["", "## First counterexample per claim", ""]
        for cid, cert in first.items():
            sem = cert["semiring"]
            out += [f"### {cid}", "",
                    f"Semiring `{sem.get('name', '?')}` (order {sem['order']})", "",
                    "```json", json.dumps({"add": sem["add"], "mul": sem["mul"]}),
                    json.dumps(cert["witness"]), "```", ""]
    return "\n".join(out).rstrip() + "\n"


def summary_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim", "status", "module", "pass", "fail", "vacuous", "title"])
    mods = {c["id"]: c for c in report["claims"]}
    for cid, row in report["summary"].items():
        w.writerow([cid, row["status"], mods[cid]["module"], row[PASS], row[FAIL], row[VACUOUS], mods[cid]["title"]])
    return buf.getvalue()


def verdict_matrix(report: dict) -> tuple[list[str], list[str], list[list[str]]]:
    """(semiring names, claim ids, verdict grid) for plotting."""
    ids = list(report["summary"])
    names, grid = [], []
    for k, e in enumerate(report["semirings"]):
        names.append(e["name"] or f"#{k}")
        by = {f["claim"]: f["verdict"] for f in e["findings"]}
        grid.append([by.get(i, "") for i in ids])
    return names, ids, grid


# -- replay -------------------------------------------------------------------------

@dataclass(frozen=True)
class ReplayResult:
    claim: str
    recorded: str
    verdict: str

    @property
    def matches(self) -> bool:
        return self.recorded == self.verdict


def _verdict(r) -> str:
    return {True: PASS, False: FAIL, None: VACUOUS}[r]


def replay(cert: dict) -> ReplayResult:
    """Re-run exactly the cited claim on the embedded semiring and witness."""
    if not isinstance(cert, dict):
        raise MalformedCertificate("certificate must be a JSON object")
    missing = [k for k in ("claim", "semiring", "witness", "verdict") if k not in cert]
    if missing:
        raise MalformedCertificate(f"certificate lacks {', '.join(missing)}")
    if cert.get("format", CERT_FORMAT) != CERT_FORMAT:
        raise MalformedCertificate(f"unknown certificate format {cert['format']!r}")
    c = REGISTRY.get(cert["claim"])
    if c is None:
        raise MalformedCertificate(f"unknown claim {cert['claim']!r}")
    if cert["verdict"] not in (PASS, FAIL, VACUOUS) or not isinstance(cert["witness"], dict):
        raise MalformedCertificate("bad verdict or witness")
    try:
        S = from_json(cert["semiring"])
    except SemiringError as exc:
        raise MalformedCertificate(f"embedded semiring is invalid: {exc}") from exc
    try:
        r = c.check(S, cert["witness"])
    except (KeyError, TypeError, ValueError, IndexError, BadTables) as exc:
        raise MalformedCertificate(f"witness does not fit claim {c.id}: {exc!r}") from exc
    return ReplayResult(c.id, cert["verdict"], _verdict(r))


def relabel_certificate(cert: dict, perm: Sequence[int]) -> dict:
    """The same certificate transported along ``x -> perm[x]`` (0 and 1 fixed)."""
    S = from_json(cert["semiring"])
    T = relabel(S, perm)
    c = REGISTRY[cert["claim"]]
    return {**cert, "semiring": T.to_json(), "witness": _claims.relabel_witness(c, cert["witness"], perm)}
