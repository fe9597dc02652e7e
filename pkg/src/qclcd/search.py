"""Seeded search for good quasi-cyclic LCD codes.

Candidates are generated from self-reciprocal divisors g of x^n - 1 and
random or exhaustively enumerated f-polynomial tuples, filtered by the
polynomial LCD conditions (theorem route only, for speed), scored by minimum
distance, and kept in a best-distance-per-dimension table.  Identical config
and seed give an identical record list.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dfield

from .code import QcDescriptor, QcGenerator, assemble_qc
from .gf import field as make_field
from .lcd import check_hgen
from .metrics import (DEFAULT_ENUM_BUDGET, BudgetExceededError,
                      min_distance_bz, min_distance_exhaustive)
from .polyring import Poly, RingCtx, self_reciprocal_divisors


class SearchConfigError(ValueError):
    pass


@dataclass
class SearchConfig:
    q: int
    n: int
    ell: int
    kind: str
    h: int = 1
    modulus: tuple | None = None
    g: list | None = None          # coefficient list; None = all admissible g
    trials: int = 1000             # random sampling mode
    seed: int = 0
    exhaustive_degree: int | None = None  # exhaustive f-tuples up to this degree
    fix_f0: bool = False
    distance_budget: int = DEFAULT_ENUM_BUDGET
    time_budget: float | None = None      # seconds

    def __post_init__(self):
        if self.kind not in ("euclidean", "hermitian", "symplectic"):
            raise SearchConfigError(f"unknown inner product kind {self.kind!r}")
        if self.kind == "symplectic" and self.ell % 2:
            raise SearchConfigError("symplectic search needs an even index ell")
        if self.ell < 1 or self.h < 1:
            raise SearchConfigError("ell and h must be >= 1")
        fld = make_field(self.q, self.modulus)
        if self.n % fld.p == 0:
            raise SearchConfigError(
                f"search requires gcd(n, p) = 1, got n = {self.n} over GF({self.q})")
        if self.kind == "hermitian" and fld.sqrt_order is None:
            raise SearchConfigError("hermitian search needs a square field order")

    @staticmethod
    def from_json_dict(doc):
        try:
            return SearchConfig(**doc)
        except TypeError as exc:
            raise SearchConfigError(f"bad search config: {exc}") from exc


@dataclass
class SearchRecord:
    descriptor: QcDescriptor
    length: int
    k: int
    d: int | None
    d_exact: bool
    trial: int

    def to_json_dict(self):
        return {
            "descriptor": self.descriptor.to_json_dict(),
            "length": self.length,
            "k": self.k,
            "d": self.d,
            "d_exact": self.d_exact,
            "trial": self.trial,
        }


@dataclass
class SearchResult:
    records: list
    trials_run: int
    completed: bool


def enumerate_g(ring, kind):
    """Admissible generator polynomials: (conjugate-)self-reciprocal divisors
    of x^n - 1, excluding x^n - 1 itself (the zero code)."""
    rec_kind = "hermitian" if kind == "hermitian" else "euclidean"
    n = ring.n
    return [d for d in self_reciprocal_divisors(ring, rec_kind) if d.degree < n]


def _weight_kind(kind):
    return "symplectic" if kind == "symplectic" else "hamming"


def _random_poly(fld, n, rng):
    return Poly(fld, [rng.randrange(fld.q) for _ in range(n)])


def _f_tuples_exhaustive(fld, ell, max_degree, fix_f0):
    ncoef = max_degree + 1
    singles = [Poly(fld, cs)
               for cs in itertools.product(range(fld.q), repeat=ncoef)]
    free = ell - 1 if fix_f0 else ell
    one = Poly.one(fld)
    for combo in itertools.product(singles, repeat=free):
        yield ((one,) + combo) if fix_f0 else combo


def _score(code, kind, budget):
    wk = _weight_kind(kind)
    if code.field.q ** code.dim <= budget:
        d, _ = min_distance_exhaustive(code, wk, budget=budget)
        return d, True
    if wk == "hamming":
        return min_distance_bz(code), True
    return None, False


def _insert(table, rec):
    cur = table.get(rec.k)
    if cur is None:
        table[rec.k] = rec
        return
    if rec.d is None:
        return
    if cur.d is None or rec.d > cur.d:
        table[rec.k] = rec


def run_search(cfg):
    """Filter candidates by the polynomial conditions, score survivors by
    distance, and keep the best record per dimension (earliest wins ties)."""
    fld = make_field(cfg.q, cfg.modulus)
    ring = RingCtx(fld, cfg.n)
    if cfg.g is not None:
        gs = [Poly(fld, cfg.g)]
        if not (ring.modulus % gs[0]).is_zero:
            raise SearchConfigError("configured g does not divide x^n - 1")
    else:
        gs = enumerate_g(ring, cfg.kind)
    rng = random.Random(cfg.seed)
    start = time.monotonic()
    table = {}
    trials_run = 0
    completed = True

    def out_of_time():
        return cfg.time_budget is not None and time.monotonic() - start > cfg.time_budget

    def consider(g, ftuples, trial):
        desc = QcDescriptor(ring, cfg.ell, cfg.kind,
                            tuple(QcGenerator(g, ft) for ft in ftuples))
        verdict = check_hgen(desc, oracle=False)
        if not verdict.theorem:
            return
        code = assemble_qc(desc)
        k = code.dim
        if k == 0:
            return
        d, exact = _score(code, cfg.kind, cfg.distance_budget)
        _insert(table, SearchRecord(descriptor=desc, length=desc.length,
                                    k=k, d=d, d_exact=exact, trial=trial))

    if cfg.exhaustive_degree is not None:
        if cfg.exhaustive_degree >= cfg.n:
            raise SearchConfigError("exhaustive degree bound must be < n")
        if cfg.h != 1:
            raise SearchConfigError("exhaustive f-sampling supports h = 1 only")
        for g in gs:
            for ftuple in _f_tuples_exhaustive(fld, cfg.ell,
                                               cfg.exhaustive_degree, cfg.fix_f0):
                if out_of_time():
                    completed = False
                    break
                consider(g, [ftuple], trials_run)
                trials_run += 1
            if not completed:
                break
    else:
        for trial in range(cfg.trials):
            if out_of_time():
                completed = False
                break
            g = gs[rng.randrange(len(gs))] if len(gs) > 1 else gs[0]
            ftuples = []
            for _ in range(cfg.h):
                fs = []
                for j in range(cfg.ell):
                    if cfg.fix_f0 and j == 0:
                        fs.append(Poly.one(fld))
                    else:
                        fs.append(_random_poly(fld, cfg.n, rng))
                ftuples.append(tuple(fs))
            consider(g, ftuples, trial)
            trials_run += 1

    records = [table[k] for k in sorted(table)]
    return SearchResult(records=records, trials_run=trials_run, completed=completed)
