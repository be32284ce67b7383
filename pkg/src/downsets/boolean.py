"""The lattice of subsets of an n-set and its trimmed level ranges.

Point index equals the integer value of the n-digit binary word; x <= y is
bitwise containment.  The designated first digit of a word is the most
significant of the n bits, which makes the digit-based splits used by the
counting methods cheap bit tests.

Region selectors for sub_poset name the retained level range:

    full    all levels
    upper   levels 2..n      (bottom and atoms dropped)
    lower   levels 0..n-2    (top and co-atoms dropped)
    middle  levels 2..n-2    (both trims)
"""

import math
import time
from dataclasses import dataclass

from .engine import enumerate_downsets, containment_counts
from .errors import CapacityError, DomainError, MissingInput
from .poset import MAX_POINTS, Poset, _bits, _popcount

REGIONS = ("full", "upper", "lower", "middle")


@dataclass(frozen=True)
class BooleanContext:
    'subset lattice of an n-set plus its level masks'
    n: int
    lattice: Poset
    levels: tuple  # levels[l] = mask of points with l ones


def boolean(n):
    if n < 0:
        raise DomainError("negative atom count")
    if 1 << n > MAX_POINTS:
        raise CapacityError("lattice on %d atoms has %d points, cap is %d" % (n, 1 << n, MAX_POINTS))
    size = 1 << n
    rows = []
    for x in range(size):
        row = 0
        for y in range(size):
            if y & x == x:
                row |= 1 << y
        rows.append(row)
    labels = tuple(format(x, "0%db" % n) if n else "" for x in range(size))
    levels = [0] * (n + 1)
    for x in range(size):
        levels[_popcount(x)] |= 1 << x
    return BooleanContext(n=n, lattice=Poset(rows, labels=labels), levels=tuple(levels))


def level_mask(ctx, lo, hi):
    'mask of all points with lo <= ones <= hi'
    out = 0
    for l in range(max(lo, 0), min(hi, ctx.n) + 1):
        out |= ctx.levels[l]
    return out


def sub_poset(ctx, which):
    'induced poset on one of the REGIONS level ranges'
    n = ctx.n
    if which == "full":
        return ctx.lattice
    if which == "upper":
        return ctx.lattice.induced(level_mask(ctx, 2, n))
    if which == "lower":
        return ctx.lattice.induced(level_mask(ctx, 0, n - 2))
    if which == "middle":
        if n < 3:
            raise DomainError("middle region needs at least 3 atoms, got %d" % n)
        return ctx.lattice.induced(level_mask(ctx, 2, n - 2))
    raise DomainError("unknown region %r, expected one of %s" % (which, ", ".join(REGIONS)))


@dataclass
class DedekindLadder:
    """Down-set counts of the lattice and its trims, per atom count.

    bmm holds the supplied middle-region counts, bm the derived upper-region
    counts, b the full lattice counts.
    """
    n: int
    bmm: dict
    bm: dict
    b: dict

    @property
    def value(self):
        return self.b[self.n]


def dedekind_via_theorem2(n, bmm):
    """Down-set count of the n-atom lattice from middle-region counts.

    The upper-region counts satisfy bm(2) = 2 and, for k >= 3,
    bm(k) = bmm(k) + 2 + sum_{i=2}^{k-1} C(k,i) * bm(i); the full count is
    b(m) = 2 + m + sum_{k=2}^{m} C(m,k) * bm(k).  Only bmm(3..n) is needed.
    """
    if n < 0:
        raise DomainError("negative atom count")
    bm = {}
    if n >= 2:
        bm[2] = 2
    for k in range(3, n + 1):
        if k not in bmm:
            raise MissingInput("missing middle-region count for %d atoms" % k)
        bm[k] = bmm[k] + 2 + sum(math.comb(k, i) * bm[i] for i in range(2, k))
    b = {}
    for m in range(n + 1):
        b[m] = 2 + m + sum(math.comb(m, k) * bm[k] for k in range(2, m + 1))
    return DedekindLadder(n=n, bmm={k: bmm[k] for k in sorted(bmm) if 3 <= k <= n}, bm=bm, b=b)


@dataclass
class StandardRun:
    'result of the pairwise intersection-union summation'
    n: int
    value: int
    summands: int
    wall_time: float


def dedekind_standard(n):
    """Down-set count of the n-atom lattice by the pairwise summation.

    Enumerates D of the (n-2)-atom lattice once, pre-tabulates containment
    counts, and sums below(D & E) * above(D | E) over unordered pairs, using
    the (D, E) / (E, D) symmetry.  Capped at n = 7 by design.
    """
    if n < 2:
        raise DomainError("pairwise summation needs at least 2 atoms")
    if n > 7:
        raise CapacityError("pairwise summation is capped at 7 atoms")
    t0 = time.perf_counter()
    ctx = boolean(n - 2)
    fam = enumerate_downsets(ctx.lattice)
    below, above = containment_counts(fam)
    k = len(fam.members)
    if k > 512:
        value = _standard_sum_bulk(fam.members, below, above)
    else:
        members = fam.members
        value = 0
        for i in range(k):
            mi = members[i]
            for j in range(i, k):
                term = below[fam.index_of(mi & members[j])] * above[fam.index_of(mi | members[j])]
                value += term if i == j else 2 * term
    return StandardRun(n=n, value=value, summands=k * (k + 1) // 2, wall_time=time.perf_counter() - t0)


def _standard_sum_bulk(members, below, above):
    import numpy as np

    arr = np.asarray(members, dtype=np.int64)
    blw = np.asarray(below, dtype=np.int64)
    abv = np.asarray(above, dtype=np.int64)
    total = 0
    for i in range(len(arr)):
        tail = arr[i:]
        ia = np.searchsorted(arr, arr[i] & tail)
        io = np.searchsorted(arr, arr[i] | tail)
        row = blw[ia] * abv[io]
        total += 2 * int(row.sum()) - int(row[0])
    return total


def theorem2_residual_shape(n, n_mask):
    """Classify the residual of the atom-level trace decomposition.

    For N a subset of the atom level of the n-atom lattice, removing
    up(atoms - N) | down(N) leaves: the bottom point alone when N is empty,
    nothing when |N| = 1, and a copy of the upper region of the |N|-atom
    lattice otherwise.  The k >= 2 case is verified by compressing the
    surviving words onto the chosen atoms and comparing relation matrices
    with a freshly built upper region; the tags are returned only after that
    check passes.
    """
    ctx = boolean(n)
    atoms = ctx.levels[1] if n >= 1 else 0
    if n_mask & ~atoms:
        raise DomainError("N must be a subset of the atom level")
    k = _popcount(n_mask)
    residual = ctx.lattice.remove(ctx.lattice.updown(atoms, n_mask))
    if k == 0:
        assert residual.n == 1 and residual.parent_map == (0,)
        return "singleton-bottom"
    if k == 1:
        assert residual.n == 0
        return "empty"
    # positions of the chosen atoms, ascending; each surviving word is
    # supported on them and has at least 2 ones
    digits = [a.bit_length() - 1 for a in _bits(n_mask)]
    support = sum(1 << d for d in digits)
    compress = {}
    for local, word in enumerate(residual.parent_map):
        assert word & ~support == 0, "survivor outside chosen atoms"
        compress[local] = sum(1 << pos for pos, d in enumerate(digits) if (word >> d) & 1)
    reference = sub_poset(boolean(k), "upper")
    ref_pos = {word: i for i, word in enumerate(reference.parent_map)}
    perm = [ref_pos[compress[i]] for i in range(residual.n)]
    assert sorted(perm) == list(range(reference.n))
    for i in range(residual.n):
        mapped = 0
        for j in _bits(residual.up[i]):
            mapped |= 1 << perm[j]
        assert mapped == reference.up[perm[i]], "residual is not the expected upper region"
    return "upper(%d)" % k
