"""Verification suites: every closed form against its rewriting oracle.

Each suite expands into independent checks; checks may run on a thread pool
(``BURAU_LAB_THREADS`` caps it) and the report is sorted by check name and
parameters, so output is stable for a fixed seed.
"""

from __future__ import annotations

import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .burau import (
    burau_generator,
    burau_of_braid,
    burau_oracle,
    charpoly_factorization,
    eigen_specialize,
    genus,
    invariant_span_action,
    laurent_at_companion,
    reduced_burau,
    reduced_oracle,
)
from .freegroup import BraidWord, Word
from .groupring import ZZ, TruncatedRing, gamma
from .matrix import RingMatrix
from .proell import (
    GaloisElemData,
    assemble_matburau,
    direct_oracle,
    pass_over_check,
    split_oracle,
    write_inv_check,
)
from .schreier import FiniteCyclic, schreier_generators

__all__ = ["CheckResult", "VerifyReport", "SUITES", "run_verify", "relation_pairs"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: dict
    passed: bool
    witness: dict | None = None

    def sort_key(self):
        return (self.name, json.dumps(self.params, sort_keys=True))

    def to_json(self) -> dict:
        d = {"name": self.name, "params": self.params, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class VerifyReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)} passed"]
        for c in self.failures:
            lines.append(f"FAIL {c.name} {json.dumps(c.params, sort_keys=True)}")
            lines.append(f"  witness: {json.dumps(c.witness, sort_keys=True)}")
        return "\n".join(lines)


# a check: (name, params, thunk returning (ok, witness-or-None))
Check = tuple[str, dict, Callable[[], tuple[bool, dict | None]]]


def _compare(lhs, rhs, **inputs) -> tuple[bool, dict | None]:
    if lhs == rhs:
        return True, None
    return False, {**inputs, "lhs": str(lhs), "rhs": str(rhs)}


def relation_pairs(s: int, top: int | None = None):
    """Braid relations among s_1..s_top as pairs of equal braid words."""
    top = s - 2 if top is None else top
    g = lambda i: BraidWord.gen(i, s)  # noqa: E731
    for i in range(1, top):
        yield f"s{i}s{i + 1}s{i}", g(i) * g(i + 1) * g(i), g(i + 1) * g(i) * g(i + 1)
    for i in range(1, top + 1):
        for j in range(i + 2, top + 1):
            yield f"s{i}s{j}", g(i) * g(j), g(j) * g(i)


def _schreier_index(s_max, n_max, **_) -> list[Check]:
    out = []
    for n in range(2, n_max + 1):
        for s in range(3, s_max + 1):
            def run(n=n, s=s):
                r = len(schreier_generators(FiniteCyclic(n), s))
                return _compare(r - 1, n * (s - 2), n=n, s=s)
            out.append(("schreier-index", {"n": n, "s": s}, run))
    return out


def _burau_oracle(s_max, **_) -> list[Check]:
    out = []
    for s in range(3, s_max + 1):
        for i in range(1, s - 1):
            out.append(("burau-oracle", {"i": i, "s": s},
                        lambda i=i, s=s: _compare(burau_generator(i, s), burau_oracle(i, s), i=i, s=s)))
    return out


def _braid_relations(s_max, n_max, **_) -> list[Check]:
    out = []
    for s in range(3, s_max + 1):
        for label, u, v in relation_pairs(s):
            out.append(("braid-relations/laurent", {"relation": label, "s": s},
                        lambda u=u, v=v, label=label: _compare(burau_of_braid(u), burau_of_braid(v), relation=label)))
            for n in range(2, n_max + 1):
                out.append(("braid-relations/reduced", {"n": n, "relation": label, "s": s},
                            lambda u=u, v=v, n=n, label=label: _compare(
                                reduced_burau(u, n), reduced_burau(v, n), relation=label, n=n)))
                for nu in range(1, n):
                    out.append(("braid-relations/eigen", {"n": n, "nu": nu, "relation": label, "s": s},
                                lambda u=u, v=v, n=n, nu=nu, label=label: _compare(
                                    eigen_specialize(u, n, nu), eigen_specialize(v, n, nu), relation=label, n=n, nu=nu)))
    return out


def _random_braid(rng: random.Random, s: int, length: int) -> BraidWord:
    return BraidWord([(rng.randrange(1, s - 1), rng.choice((1, -1))) for _ in range(length)], s)


def _reduced(s_max, n_max, seed, **_) -> list[Check]:
    rng = random.Random(seed)
    out = []
    for s in range(3, s_max + 1):
        for n in range(2, n_max + 1):
            b = _random_braid(rng, s, rng.randrange(0, 5))
            params = {"braid": str(b), "n": n, "s": s}

            def naturality(b=b, n=n):
                m = burau_of_braid(b).expand_blocks(lambda p: laurent_at_companion(p, n), ZZ, n - 1)
                return _compare(m, reduced_oracle(b, n), braid=str(b), n=n)

            def rank(b=b, n=n, s=s):
                m = reduced_burau(b, n)
                ok = (s - 2) * (n - 1) % 2 or m.dim == 2 * genus(n, s)
                ok = ok and m.dim == (n - 1) * (s - 2) and m.det() in (1, -1)
                return (True, None) if ok else (False, {"braid": str(b), "n": n, "dim": m.dim, "det": m.det()})

            def charpoly(b=b, n=n):
                lhs, rhs = charpoly_factorization(b, n)
                return _compare([str(c) for c in lhs], [str(c) for c in rhs], braid=str(b), n=n)

            out.append(("reduced/naturality", params, naturality))
            out.append(("reduced/rank", params, rank))
            out.append(("reduced/charpoly", params, charpoly))
    return out


def _gamma(l, K, M, seed, **_) -> list[Check]:  # noqa: E741
    rng = random.Random(seed)
    ring = TruncatedRing(l, K, M)
    out = []
    for _ in range(300):
        a = rng.randrange(ring.exponent_mod)
        out.append(("gamma", {"K": K, "M": M, "a": a, "l": l},
                    lambda a=a: _compare((ring.t(1) - 1) * gamma(a, ring), ring.t(a) - 1, a=a)))
    return out


def _lemmas(s_max, **_) -> list[Check]:
    out = []
    for s in range(3, s_max + 1):
        for i in range(2, s):
            for a in range(7):
                out.append(("lemmas/write-inv", {"a": a, "k": i, "s": s},
                            lambda i=i, a=a, s=s: (write_inv_check(i, a, s), {"k": i, "a": a, "s": s})))
                for N in range(7):
                    out.append(("lemmas/pass-over", {"N": N, "a": a, "i": i, "s": s},
                                lambda i=i, a=a, N=N, s=s: (pass_over_check(i, a, N, s), {"i": i, "a": a, "N": N, "s": s})))
    return out


def random_galois_data(rng: random.Random, s: int, l: int, K: int, M: int, max_len: int = 6) -> GaloisElemData:  # noqa: E741
    units = [N for N in range(1, 6) if N % l]
    words = {}
    for i in range(2, s):
        words[i] = Word([(rng.randrange(1, s), rng.choice((1, -1))) for _ in range(rng.randrange(0, max_len + 1))], s)
    return GaloisElemData(s, l, K, M, rng.choice(units), words)


def _matburau(s_max, l, K, M, seed, **_) -> list[Check]:  # noqa: E741
    rng = random.Random(seed)
    out = []
    for s in range(3, min(s_max, 5) + 1):
        for k in range(12):
            d = random_galois_data(rng, s, l, K, M)
            params = {"K": K, "M": M, "N": d.N, "case": k, "l": l, "s": s,
                      "words": {str(i): str(w) for i, w in d.words.items()}}

            def run(d=d, params=params):
                A, B = assemble_matburau(d), direct_oracle(d)
                if A != B:
                    return False, {**params, "lhs": A.to_json(), "rhs": B.to_json()}
                L, Mm, Kk = split_oracle(d)
                return _compare(A, L + Mm + Kk, **params)

            out.append(("matburau-oracle", params, run))
    return out


def _invariant_span(s_max, n_max, **_) -> list[Check]:
    out = []
    for n in range(2, min(n_max, 4) + 1):
        for s in range(3, s_max + 1):
            for i in range(1, s - 1):
                def run(i=i, n=n, s=s):
                    got = invariant_span_action(BraidWord.gen(i, s), n)
                    # x_i^n <-> x_{i+1}^n, every other x_k^n fixed
                    perm = list(range(s - 1))
                    perm[i - 1], perm[i] = perm[i], perm[i - 1]
                    want = RingMatrix.from_columns(ZZ, [[int(r == perm[c]) for r in range(s - 1)] for c in range(s - 1)])
                    return _compare(got, want, i=i, n=n, s=s)
                out.append(("invariant-span", {"i": i, "n": n, "s": s}, run))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "schreier-index": _schreier_index,
    "burau-oracle": _burau_oracle,
    "braid-relations": _braid_relations,
    "reduced": _reduced,
    "gamma": _gamma,
    "lemmas": _lemmas,
    "matburau-oracle": _matburau,
    "invariant-span": _invariant_span,
}


def _threads() -> int:
    raw = os.environ.get("BURAU_LAB_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"BURAU_LAB_THREADS must be an integer, got {raw!r}") from None
    return min(8, os.cpu_count() or 1)


def _run_one(check: Check) -> CheckResult:
    name, params, thunk = check
    try:
        ok, witness = thunk()
    except Exception as exc:  # a crash inside a check is a failure with its message as witness
        return CheckResult(name, params, False, {"error": f"{type(exc).__name__}: {exc}"})
    return CheckResult(name, params, ok, None if ok else witness)


def run_verify(suite: str = "all", s_max: int = 6, n_max: int = 5, l: int = 3, K: int = 2, M: int = 2,  # noqa: E741
               seed: int = 0) -> VerifyReport:
    if s_max < 3 or n_max < 2:
        raise ValueError(f"need s_max >= 3 and n_max >= 2, got s_max={s_max}, n_max={n_max}")
    TruncatedRing(l, K, M)  # validates l, K, M
    names = sorted(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))} or all")
    # fill the generator caches before threads touch them
    for s in range(3, s_max + 1):
        for i in range(1, s - 1):
            burau_of_braid(BraidWord.gen(i, s, -1))
    checks: list[Check] = []
    for name in names:
        checks.extend(SUITES[name](s_max=s_max, n_max=n_max, l=l, K=K, M=M, seed=seed))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        results = list(pool.map(_run_one, checks))
    results.sort(key=CheckResult.sort_key)
    return VerifyReport(suite, results)
