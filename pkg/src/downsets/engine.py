"""Counting and enumerating down-sets.

Counting uses the pivot recurrence d(P) = d(P - x) + d(P - (down(x) | up(x)))
with the pivot chosen to destroy as much of the carrier as possible, connected
components counted independently, and an optional bitmask-keyed memo.

Enumeration splits on a pivot x the other way round: the down-sets avoiding x
are exactly the down-sets of P - up(x), and those containing x are down(x)
joined with a down-set of P - down(x).  Both branches are disjoint and
exhaustive, so every down-set is produced exactly once.
"""

from dataclasses import dataclass, field

from .errors import CapacityError, NotADownSet, TraceMismatch
from .poset import Poset, _bits, _popcount

DEFAULT_ENUM_LIMIT = 1 << 24


@dataclass
class DownSetFamily:
    'all down-sets of owner, as masks sorted ascending by bit pattern'
    owner: Poset
    members: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def index_of(self, mask):
        lo, hi = 0, len(self.members)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.members[mid] < mask:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.members) or self.members[lo] != mask:
            raise KeyError("0x%x is not a member" % mask)
        return lo


@dataclass
class DecompositionTerm:
    """One summand of the trace decomposition: trace N and residual poset.

    residual_count is computed on first access.
    """
    N: int
    residual: Poset
    _count: int = field(default=None, repr=False)

    @property
    def residual_count(self):
        if self._count is None:
            self._count = count_downsets(self.residual)
        return self._count


def _pivot(p, mask):
    'point of mask whose removal with its closures destroys the most'
    best, best_key = -1, (-1, 0)
    for i in _bits(mask):
        size = _popcount((p.up[i] | p.down[i]) & mask)
        key = (size, -i)
        if key > best_key:
            best, best_key = i, key
    return best


def count_downsets(p, use_memo=True):
    'number of down-sets of p'
    memo = {} if use_memo else None

    def count(mask):
        if mask == 0:
            return 1
        if memo is not None:
            hit = memo.get(mask)
            if hit is not None:
                return hit
        total = 1
        for comp in p.components(mask):
            if comp & (comp - 1) == 0:
                total *= 2
                continue
            if memo is not None:
                hit = memo.get(comp)
                if hit is not None:
                    total *= hit
                    continue
            x = _pivot(p, comp)
            gone = (p.up[x] | p.down[x]) & comp
            sub = count(comp & ~(1 << x)) + count(comp & ~gone)
            if memo is not None:
                memo[comp] = sub
            total *= sub
        if memo is not None:
            memo[mask] = total
        return total

    return count(p.carrier)


def _enum(p, mask):
    if mask == 0:
        yield 0
        return
    x = _pivot(p, mask)
    bit = 1 << x
    strict_up = p.up[x] & mask & ~bit
    down_in = p.down[x] & mask & ~bit
    for d in _enum(p, mask & ~bit):
        if not d & strict_up:
            yield d
        if d & down_in == down_in:
            yield d | bit
    # every down-set D of the sub-poset on mask maps to D - {x}, a down-set of
    # the sub-poset on mask - {x}; the two lifts above are its full fiber


def enumerate_downsets(p, limit=DEFAULT_ENUM_LIMIT):
    'all down-sets of p, sorted by bit pattern; CapacityError past limit'
    out = []
    for d in _enum(p, p.carrier):
        out.append(d)
        if len(out) > limit:
            raise CapacityError("more than %d down-sets" % limit)
    out.sort()
    return DownSetFamily(owner=p, members=tuple(out))


def decompose(p, m_mask):
    """Stream the trace decomposition of p over the pivot set M.

    One term per down-set N of the sub-poset on M; the residual is p minus
    up(M - N) | down(N), carrying a back-map to p's indexing.
    """
    p._check(m_mask)
    sub = p.induced(m_mask)
    for local in _enum(sub, sub.carrier):
        n_mask = sub.to_parent_mask(local)
        removed = p.updown(m_mask, n_mask)
        yield DecompositionTerm(N=n_mask, residual=p.remove(removed))


def count_via_decomposition(p, m_mask):
    'd(p) as the sum of residual counts over the trace decomposition'
    return sum(term.residual_count for term in decompose(p, m_mask))


def phi_forward(p, m_mask, n_mask, d_mask):
    """Map a down-set D with trace N on M to a down-set of the residual.

    Requires D down-closed and D & M == N; returns D - down(N).
    """
    if not p.is_downset(d_mask):
        raise NotADownSet("D is not a down-set")
    if d_mask & m_mask != n_mask:
        raise TraceMismatch("D & M is 0x%x, expected 0x%x" % (d_mask & m_mask, n_mask))
    return d_mask & ~p.down_closure(n_mask)


def phi_inverse(p, m_mask, n_mask, d_residual):
    """Inverse map: residual down-set back to a down-set of p with trace N."""
    removed = p.updown(m_mask, n_mask)
    if d_residual & removed:
        raise NotADownSet("residual down-set meets the removed region")
    rest = p.carrier & ~removed
    for i in _bits(d_residual):
        if p.down[i] & rest & ~d_residual:
            raise NotADownSet("not a down-set of the residual")
    return d_residual | p.down_closure(n_mask)


def chain_product_count(n, q, limit=DEFAULT_ENUM_LIMIT):
    """d(chain(n) x q) through the down-set lattice of q.

    A down-set of chain(n) x q is a weakly increasing n-tuple of down-sets of
    q, so the count is the n-th containment-power of D(q): start from all-ones
    and repeatedly replace f(N) with the sum of f over down-sets below N.
    """
    assert n >= 0
    if n == 0:
        return 1
    fam = enumerate_downsets(q, limit=limit)
    if n == 1:
        return len(fam)
    if n == 2:
        # second containment power needs only the below counts
        below_counts, _ = containment_counts(fam)
        return sum(below_counts)
    below = _below_index_masks(fam.members)
    f = [1] * len(fam)
    for _ in range(n - 1):
        f = [sum(f[j] for j in _bits(bm)) for bm in below]
    return sum(f)


def _below_index_masks(members):
    'for each member, the mask of member indices contained in it'
    out = []
    for mi in members:
        bm = 0
        for j, mj in enumerate(members):
            if mj & ~mi == 0:
                bm |= 1 << j
        out.append(bm)
    return out


def containment_counts(fam):
    """Per member: how many members it contains and how many contain it."""
    members = fam.members
    k = len(members)
    if k > 256:
        return _containment_counts_bulk(members)
    below = [0] * k
    above = [0] * k
    for i, mi in enumerate(members):
        for j, mj in enumerate(members):
            if mj & ~mi == 0:
                below[i] += 1
                above[j] += 1
    return below, above


def _containment_counts_bulk(members):
    'numpy-backed pair scan for big families (members must fit in 64 bits)'
    import numpy as np

    assert members[-1] < 1 << 63
    arr = np.asarray(members, dtype=np.int64)
    below = np.zeros(len(arr), dtype=np.int64)
    above = np.zeros(len(arr), dtype=np.int64)
    step = max(1, (1 << 22) // max(len(arr), 1))
    for start in range(0, len(arr), step):
        block = arr[start : start + step, None]
        sub = (arr[None, :] & ~block) == 0
        below[start : start + step] = sub.sum(axis=1)
        above += sub.sum(axis=0)
    return below.tolist(), above.tolist()
