"""Weight and distance computation.

Exhaustive enumeration walks the message space in mixed-radix Gray order, so
each codeword is one generator-row update away from the previous one.  Over
characteristic-2 fields codewords are bit-packed into a single int (r bits
per symbol, addition = XOR, weights via popcount); other fields use a plain
per-coordinate representation.

Minimum distance beyond the enumeration budget uses the Brouwer-Zimmermann
algorithm: low-weight messages are pushed through a greedy chain of
information sets while a certified lower bound grows round by round.
"""

from __future__ import annotations

from dataclasses import dataclass

WEIGHT_KINDS = ("hamming", "symplectic")

DEFAULT_ENUM_BUDGET = 1 << 26


class MetricsError(ValueError):
    pass


class BudgetExceededError(MetricsError):
    pass


def weight(vec, kind="hamming"):
    """Hamming weight, or symplectic weight (# pairs (i, N+i) not both zero)."""
    if kind == "hamming":
        return sum(1 for v in vec if v)
    if kind == "symplectic":
        if len(vec) % 2:
            raise MetricsError("symplectic weight needs even length")
        N = len(vec) // 2
        return sum(1 for i in range(N) if vec[i] or vec[N + i])
    raise MetricsError(f"unknown weight kind {kind!r}")


@dataclass
class WeightDistribution:
    counts: dict
    kind: str
    complete: bool

    def min_nonzero(self):
        ws = [w for w, c in self.counts.items() if w > 0 and c > 0]
        return min(ws) if ws else None

    def prefix(self, wmax):
        return {w: c for w, c in sorted(self.counts.items()) if w <= wmax and c > 0}


# -- packed codeword backend (characteristic 2) --------------------------------

class _PackedSpace:
    """Length-L vectors over GF(2^r) packed r bits per symbol into one int."""

    def __init__(self, fld, length, kind):
        self.field = fld
        self.length = length
        self.kind = kind
        r = fld.r
        self.r = r
        self.group_mask = sum(1 << (i * r) for i in range(length))
        if kind == "symplectic":
            if length % 2:
                raise MetricsError("symplectic weight needs even length")
            N = length // 2
            self.half_bits = N * r
            self.low_mask = (1 << self.half_bits) - 1
        self.zero = 0

    def pack(self, vec):
        acc = 0
        for i, v in enumerate(vec):
            acc |= v << (i * self.r)
        return acc

    def scaled_rows(self, rows):
        """srow[j][v] = packed v * row_j for every field scalar v."""
        f = self.field
        out = []
        for row in rows:
            out.append([self.pack([f.mul(v, c) for c in row]) for v in range(f.q)])
        return out

    def _fold(self, x):
        t = x
        for s in range(1, self.r):
            t |= x >> s
        return t & self.group_mask

    def weight_fn(self):
        r = self.r
        if self.kind == "hamming":
            if r == 1:
                return int.bit_count
            fold = self._fold
            return lambda x: fold(x).bit_count()
        fold = self._fold if r > 1 else (lambda x: x)
        hb, lm = self.half_bits, self.low_mask
        return lambda x: (((b := fold(x)) & lm) | (b >> hb)).bit_count()

    def column_mask(self, cols):
        m = (1 << self.r) - 1
        return sum(m << (c * self.r) for c in cols)

    def masked_hamming(self, x, mask):
        return self._fold(x & mask).bit_count() if self.r > 1 else (x & mask).bit_count()

    @staticmethod
    def add(a, b):
        return a ^ b

    def delta_scalar(self, old, new):
        return old ^ new


class _GenericSpace:
    """Fallback per-coordinate vectors (tuples) for odd characteristic."""

    def __init__(self, fld, length, kind):
        self.field = fld
        self.length = length
        self.kind = kind
        if kind == "symplectic" and length % 2:
            raise MetricsError("symplectic weight needs even length")
        self.zero = (0,) * length

    def pack(self, vec):
        return tuple(vec)

    def scaled_rows(self, rows):
        f = self.field
        return [[tuple(f.mul(v, c) for c in row) for v in range(f.q)] for row in rows]

    def weight_fn(self):
        k = self.kind
        return lambda x: weight(x, k)

    def column_mask(self, cols):
        return tuple(cols)

    def masked_hamming(self, x, cols):
        return sum(1 for c in cols if x[c])

    def add(self, a, b):
        f = self.field
        return tuple(f.add(u, v) for u, v in zip(a, b))

    def delta_scalar(self, old, new):
        return self.field.sub(new, old)


def _space_for(fld, length, kind):
    if fld.p == 2:
        return _PackedSpace(fld, length, kind)
    return _GenericSpace(fld, length, kind)


# -- exhaustive enumeration ----------------------------------------------------

def weight_distribution(code, kind="hamming", budget=DEFAULT_ENUM_BUDGET):
    """Complete weight distribution by Gray-order message enumeration."""
    if kind not in WEIGHT_KINDS:
        raise MetricsError(f"unknown weight kind {kind!r}")
    fld = code.field
    basis = code.basis()
    k = basis.nrows
    total = fld.q ** k
    if total > budget:
        raise BudgetExceededError(
            f"{fld.q}^{k} codewords exceed the enumeration budget {budget}; "
            "use the Brouwer-Zimmermann distance instead")
    space = _space_for(fld, code.length, kind)
    wt = space.weight_fn()
    counts = [0] * (code.length + 1)
    counts[0] = 1
    if k:
        srows = space.scaled_rows(basis.rows)
        q = fld.q
        cur = space.zero
        add = space.add
        delta = space.delta_scalar
        # loopless mixed-radix reflected Gray traversal
        a = [0] * k
        foc = list(range(k + 1))
        o = [1] * k
        while True:
            j = foc[0]
            foc[0] = 0
            if j >= k:
                break
            old = a[j]
            new = old + o[j]
            a[j] = new
            if new == 0 or new == q - 1:
                o[j] = -o[j]
                foc[j] = foc[j + 1]
                foc[j + 1] = j + 1
            cur = add(cur, srows[j][delta(old, new)])
            counts[wt(cur)] += 1
    return WeightDistribution(
        counts={w: c for w, c in enumerate(counts) if c},
        kind=kind, complete=True)


def min_distance_exhaustive(code, kind="hamming", budget=DEFAULT_ENUM_BUDGET):
    """(exact minimum nonzero weight, complete distribution)."""
    dist = weight_distribution(code, kind, budget=budget)
    d = dist.min_nonzero()
    if d is None:
        raise MetricsError("zero code has no minimum distance")
    return d, dist


# -- information sets ----------------------------------------------------------

@dataclass
class InformationSet:
    columns: list          # k pivot columns (fresh + reused)
    fresh: list            # columns not used by earlier sets
    rows: list             # systematic basis rows: identity on ``columns``
    gap: int               # k - len(fresh)


def information_sets(code):
    """Greedy chain of information sets with disjoint fresh-column groups."""
    basis = code.basis()
    k = basis.nrows
    if k == 0:
        raise MetricsError("zero code has no information set")
    remaining = list(range(code.length))
    used = []
    sets = []
    while remaining:
        order = remaining + used
        red, rank, pivots = basis.rref(column_order=order)
        if rank != k:  # pragma: no cover - basis has full row rank
            raise MetricsError("basis lost rank")
        remset = set(remaining)
        fresh = [p for p in pivots if p in remset]
        if not fresh:
            break
        sets.append(InformationSet(columns=list(pivots), fresh=fresh,
                                   rows=red.rows, gap=k - len(fresh)))
        for p in fresh:
            remaining.remove(p)
        used.extend(fresh)
        if k - len(fresh) > 0:
            break
    return sets


def _systematic_scaled_rows(space, iset):
    """Rows keyed by their pivot position order (message digit j -> row j)."""
    return space.scaled_rows(iset.rows)


def _min_weight_exact_message_weight(space, srows, k, w, wt, ub):
    """Minimum codeword weight over messages of support weight exactly w."""
    q = space.field.q
    add = space.add
    best = ub

    def rec(start, left, acc):
        nonlocal best
        if left == 1:
            for j in range(start, k):
                srj = srows[j]
                for v in range(1, q):
                    x = wt(add(acc, srj[v]))
                    if x and x < best:
                        best = x
            return
        for j in range(start, k - left + 1):
            srj = srows[j]
            for v in range(1, q):
                rec(j + 1, left - 1, add(acc, srj[v]))

    rec(0, w, space.zero)
    return best


def min_distance_bz(code, kind="hamming"):
    """Exact minimum Hamming distance via Brouwer-Zimmermann."""
    if kind != "hamming":
        raise MetricsError("Brouwer-Zimmermann is implemented for Hamming weight only")
    basis = code.basis()
    k = basis.nrows
    if k == 0:
        raise MetricsError("zero code has no minimum distance")
    space = _space_for(code.field, code.length, "hamming")
    wt = space.weight_fn()
    sets = information_sets(code)
    srows_per_set = [_systematic_scaled_rows(space, s) for s in sets]
    ub = min(wt(space.pack(r)) for r in basis.rows)
    done_w = [0] * len(sets)
    w = 0
    lb = 0
    while lb < ub:
        w += 1
        for i, s in enumerate(sets):
            if w + 1 - s.gap <= 0:
                continue
            while done_w[i] < min(w, k):
                done_w[i] += 1
                ub = _min_weight_exact_message_weight(
                    space, srows_per_set[i], k, done_w[i], wt, ub)
        new_lb = sum(max(0, w + 1 - s.gap)
                     for i, s in enumerate(sets) if done_w[i] >= min(w, k))
        assert new_lb >= lb, "BZ lower bound must be monotone"
        lb = new_lb
    return ub


# -- partial (low-weight) distributions ---------------------------------------

def _prefix_by_low_weight(code, wstar, kind):
    """Exact counts of codewords of weight <= wstar without full enumeration.

    Every codeword of weight <= wstar restricted to some disjoint full-rank
    information set has weight <= that set's message-weight cap, provided the
    caps w_i satisfy sum(w_i + 1) > wstar.  A codeword is counted in the
    first set that can see it.
    """
    fld = code.field
    basis = code.basis()
    k = basis.nrows
    sets = [s for s in information_sets(code) if s.gap == 0]
    t = len(sets)
    if t * k < wstar + 1:
        raise BudgetExceededError(
            f"cannot certify weight <= {wstar} with {t} disjoint information sets")
    # per-set message-weight caps: front-loaded, sum(cap_i + 1) = wstar + 1
    caps = []
    need = wstar + 1
    for i in range(t):
        c = min(k, -(-need // (t - i)))  # ceil division
        caps.append(c - 1)
        need -= c
        if need <= 0:
            caps.extend([-1] * (t - i - 1))
            break
    space = _space_for(fld, code.length, kind)
    wt = space.weight_fn()
    counts = [0] * (code.length + 1)
    counts[0] = 1
    q = fld.q
    add = space.add
    earlier = []
    for i, s in enumerate(sets):
        cap = caps[i]
        if cap < 0:
            break
        srows = _systematic_scaled_rows(space, s)
        seen_before = list(earlier)

        def visit(acc):
            x = wt(acc)
            if x <= wstar:
                for mask, ecap in seen_before:
                    if space.masked_hamming(acc, mask) <= ecap:
                        return
                counts[x] += 1

        def rec(start, left, acc):
            if left == 1:
                for j in range(start, k):
                    srj = srows[j]
                    for v in range(1, q):
                        visit(add(acc, srj[v]))
                return
            for j in range(start, k - left + 1):
                srj = srows[j]
                for v in range(1, q):
                    rec(j + 1, left - 1, add(acc, srj[v]))

        for wmsg in range(1, cap + 1):
            rec(0, wmsg, space.zero)
        earlier.append((space.column_mask(s.columns), cap))
    return WeightDistribution(
        counts={w: c for w, c in enumerate(counts) if c},
        kind=kind, complete=False)


def distribution_prefix(code, kind="hamming", wstar=None,
                        budget=DEFAULT_ENUM_BUDGET):
    """Exact counts for all weights <= wstar (complete = False)."""
    if wstar is None:
        raise MetricsError("wstar required")
    if kind not in WEIGHT_KINDS:
        raise MetricsError(f"unknown weight kind {kind!r}")
    k = code.dim
    if code.field.q ** k <= budget:
        full = weight_distribution(code, kind, budget=budget)
        return WeightDistribution(counts=full.prefix(wstar), kind=kind, complete=False)
    if kind != "hamming":
        raise BudgetExceededError(
            "symplectic distributions beyond the enumeration budget are unsupported")
    return _prefix_by_low_weight(code, wstar, kind)
