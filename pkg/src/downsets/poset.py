"""Immutable finite posets over integer-indexed points.

Point sets are plain python ints used as bit vectors: bit i set means point i
is in the set.  A poset stores, per point, the bitmask of everything above it
and everything below it, so closures and comparability tests are single OR /
AND operations.  The carrier is capped at MAX_POINTS so masks stay a couple of
machine words wide.
"""

from .errors import CapacityError, CycleError, NotADownSet, ParseError

MAX_POINTS = 128


def _popcount(mask):
    return bin(mask).count("1")


def _bits(mask):
    'iterate over set bit positions, ascending'
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Poset:
    """Finite partial order. Immutable after construction.

    up[i] is the mask of all j with i <= j (including i itself); down[i] the
    dual. labels is an optional tuple of per-point strings. parent_map, when
    present, maps local indices back to the indices of the poset this one was
    induced from.
    """

    __slots__ = ("n", "up", "down", "labels", "parent_map", "_parent_pos")

    def __init__(self, up_rows, labels=None, parent_map=None):
        n = len(up_rows)
        if n > MAX_POINTS:
            raise CapacityError("poset has %d points, cap is %d" % (n, MAX_POINTS))
        up = tuple(up_rows)
        full = (1 << n) - 1
        down = [0] * n
        for i in range(n):
            row = up[i]
            if not (row >> i) & 1:
                raise ValueError("relation not reflexive at %d" % i)
            if row & ~full:
                raise ValueError("relation row %d has bits outside the carrier" % i)
            for j in _bits(row):
                down[j] |= 1 << i
        for i in range(n):
            if up[i] & down[i] != 1 << i:
                raise ValueError("relation not antisymmetric at %d" % i)
            for j in _bits(up[i]):
                if up[j] & ~up[i]:
                    raise ValueError("relation not transitive at %d <= %d" % (i, j))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "parent_map", tuple(parent_map) if parent_map is not None else None)
        object.__setattr__(self, "_parent_pos", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    def __eq__(self, other):
        'equality is by relation matrix, labels and origin do not matter'
        return isinstance(other, Poset) and self.n == other.n and self.up == other.up

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        return "Poset(n=%d, covers=%r)" % (self.n, self.covers())

    # -- carrier helpers ---------------------------------------------------

    @property
    def carrier(self):
        'mask with every point set'
        return (1 << self.n) - 1

    def _check(self, mask):
        if mask < 0 or mask & ~self.carrier:
            raise IndexError("point set 0x%x is not within the %d-point carrier" % (mask, self.n))

    def leq(self, i, j):
        return (self.up[i] >> j) & 1 == 1

    def down_closure(self, mask):
        'least down-set containing mask'
        self._check(mask)
        out = 0
        for i in _bits(mask):
            out |= self.down[i]
        return out

    def up_closure(self, mask):
        'least up-set containing mask'
        self._check(mask)
        out = 0
        for i in _bits(mask):
            out |= self.up[i]
        return out

    def is_downset(self, mask):
        self._check(mask)
        return self.down_closure(mask) == mask

    def is_upset(self, mask):
        self._check(mask)
        return self.up_closure(mask) == mask

    def updown(self, m_mask, n_mask):
        """The removal set of the trace decomposition: up(M minus N) | down(N).

        N must be a down-set of the sub-poset induced on M.
        """
        self._check(m_mask)
        if n_mask & ~m_mask:
            raise NotADownSet("N is not contained in M")
        for i in _bits(n_mask):
            if self.down[i] & m_mask & ~n_mask:
                raise NotADownSet("N is not a down-set of the sub-poset on M")
        return self.up_closure(m_mask & ~n_mask) | self.down_closure(n_mask)

    def minimal_points(self, mask=None):
        if mask is None:
            mask = self.carrier
        return sum(1 << i for i in _bits(mask) if not (self.down[i] & mask & ~(1 << i)))

    def maximal_points(self, mask=None):
        if mask is None:
            mask = self.carrier
        return sum(1 << i for i in _bits(mask) if not (self.up[i] & mask & ~(1 << i)))

    def covers(self):
        'transitive reduction as a sorted list of (low, high) pairs'
        out = []
        for i in range(self.n):
            above = self.up[i] & ~(1 << i)
            for j in _bits(above):
                # j covers i iff nothing sits strictly between them
                between = above & self.down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        out.sort()
        return out

    # -- derived posets ----------------------------------------------------

    def induced(self, mask):
        'sub-poset on the points of mask, with a back-map to this poset'
        self._check(mask)
        points = list(_bits(mask))
        pos = {p: k for k, p in enumerate(points)}
        rows = []
        for p in points:
            row = 0
            for q in _bits(self.up[p] & mask):
                row |= 1 << pos[q]
            rows.append(row)
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[p] for p in points)
        return Poset(rows, labels=labels, parent_map=points)

    def remove(self, mask):
        self._check(mask)
        return self.induced(self.carrier & ~mask)

    def dual(self):
        'same carrier with the relation reversed'
        return Poset(self.down, labels=self.labels)

    def to_parent_mask(self, mask):
        'translate a local point set into the indexing of the parent poset'
        self._check(mask)
        assert self.parent_map is not None, "poset has no parent"
        out = 0
        for i in _bits(mask):
            out |= 1 << self.parent_map[i]
        return out

    def from_parent_mask(self, mask):
        """Translate a parent point set into local indexing.

        Parent points outside this carrier are silently dropped, so the call
        doubles as restriction onto the carrier.
        """
        assert self.parent_map is not None, "poset has no parent"
        pos = self._positions()
        out = 0
        for p in _bits(mask):
            k = pos.get(p)
            if k is not None:
                out |= 1 << k
        return out

    def _positions(self):
        pos = self._parent_pos
        if pos is None:
            pos = {p: k for k, p in enumerate(self.parent_map)}
            object.__setattr__(self, "_parent_pos", pos)
        return pos

    def components(self, mask=None):
        'connected components of the comparability graph, as masks'
        if mask is None:
            mask = self.carrier
        self._check(mask)
        rest = mask
        out = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grown = 0
                for i in _bits(frontier):
                    grown |= (self.up[i] | self.down[i]) & mask
                frontier = grown & ~comp
                comp |= grown
            out.append(comp)
            rest &= ~comp
        return out


# -- constructors ----------------------------------------------------------


def from_covers(n, covers, labels=None):
    """Smallest partial order on 0..n-1 containing every (low, high) pair.

    Raises CycleError when the cover digraph has a directed cycle and
    IndexError on out-of-range indices.
    """
    if n < 0 or n > MAX_POINTS:
        raise CapacityError("point count %d outside 0..%d" % (n, MAX_POINTS))
    above = [0] * n
    indeg = [0] * n
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            raise IndexError("cover (%d, %d) outside 0..%d" % (lo, hi, n - 1))
        if lo == hi:
            raise CycleError("cover (%d, %d) is a self-loop" % (lo, hi))
        if not (above[lo] >> hi) & 1:
            above[lo] |= 1 << hi
            indeg[hi] += 1
    # Kahn topological order; up rows are accumulated in reverse order
    order = [i for i in range(n) if indeg[i] == 0]
    head = 0
    while head < len(order):
        for j in _bits(above[order[head]]):
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
        head += 1
    if len(order) < n:
        raise CycleError("cover digraph has a directed cycle")
    up = [0] * n
    for i in reversed(order):
        row = 1 << i
        for j in _bits(above[i]):
            row |= up[j]
        up[i] = row
    return Poset(up, labels=labels)


def chain(c):
    'total order 0 < 1 < ... < c-1'
    assert c >= 0
    return from_covers(c, [(i, i + 1) for i in range(c - 1)])


def antichain(a):
    'a pairwise-incomparable points'
    assert a >= 0
    return from_covers(a, [])


def product(p, q):
    """Componentwise order on pairs; index of (i, j) is i * q.n + j."""
    n = p.n * q.n
    if n > MAX_POINTS:
        raise CapacityError("product has %d points, cap is %d" % (n, MAX_POINTS))
    rows = []
    for i in range(p.n):
        for j in range(q.n):
            row = 0
            for i2 in _bits(p.up[i]):
                base = i2 * q.n
                for j2 in _bits(q.up[j]):
                    row |= 1 << (base + j2)
            rows.append(row)
    return Poset(rows)


def direct_sum(p, q):
    "disjoint union: p's points first, then q's, no cross relations"
    n = p.n + q.n
    if n > MAX_POINTS:
        raise CapacityError("direct sum has %d points, cap is %d" % (n, MAX_POINTS))
    rows = list(p.up) + [row << p.n for row in q.up]
    labels = None
    if p.labels is not None or q.labels is not None:
        left = p.labels if p.labels is not None else (None,) * p.n
        right = q.labels if q.labels is not None else (None,) * q.n
        labels = left + right
    return Poset(rows, labels=labels)


# -- text format -----------------------------------------------------------
#
#   poset v1
#   points <n>
#   label <i> <string>
#   cover <i> <j>
#
# '#' starts a comment, blank lines are skipped.


def poset_from_text(text):
    'parse the poset text format'
    n = None
    covers = []
    labels = {}
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != "poset v1":
                raise ParseError("line %d: expected 'poset v1' header" % lineno)
            saw_header = True
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "points":
            if n is not None:
                raise ParseError("line %d: duplicate points line" % lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("line %d: malformed points line" % lineno)
            n = int(parts[1])
        elif kind == "label":
            if n is None:
                raise ParseError("line %d: label before points" % lineno)
            if len(parts) < 3 or not parts[1].isdigit():
                raise ParseError("line %d: malformed label line" % lineno)
            i = int(parts[1])
            if i >= n:
                raise ParseError("line %d: label index %d out of range" % (lineno, i))
            labels[i] = line.split(None, 2)[2]
        elif kind == "cover":
            if n is None:
                raise ParseError("line %d: cover before points" % lineno)
            if len(parts) != 3 or not parts[1].isdigit() or not parts[2].isdigit():
                raise ParseError("line %d: malformed cover line" % lineno)
            i, j = int(parts[1]), int(parts[2])
            if i >= n or j >= n:
                raise ParseError("line %d: cover (%d, %d) out of range" % (lineno, i, j))
            covers.append((i, j))
        else:
            raise ParseError("line %d: unknown construct %r" % (lineno, kind))
    if not saw_header:
        raise ParseError("empty input, expected 'poset v1' header")
    if n is None:
        raise ParseError("missing points line")
    lab = None
    if labels:
        lab = tuple(labels.get(i) for i in range(n))
    return from_covers(n, covers, labels=lab)


def poset_to_text(p):
    'serialize: header, points, labels, covers of the transitive reduction'
    lines = ["poset v1", "points %d" % p.n]
    if p.labels is not None:
        for i, lab in enumerate(p.labels):
            if lab is not None:
                lines.append("label %d %s" % (i, lab))
    for i, j in p.covers():
        lines.append("cover %d %d" % (i, j))
    return "\n".join(lines) + "\n"


def popcount(mask):
    'number of set bits'
    return _popcount(mask)


def bits(mask):
    'ascending set bit positions'
    return _bits(mask)
