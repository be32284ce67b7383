"""The concrete middle-region computations on 5 and 6 atoms.

Five independent routes to the same two constants (6212 down-sets of the
20-point middle region on 5 atoms, 7741776 on 6 atoms of the 50-point one):

  nu      sweep the 1024 subsets of the top level of the 5-atom middle
          region; each residual is an antichain, tally by its size.
  gamma   sweep an 8-point antichain pivot chosen by the designated first
          digit; residuals are unions of 2-chains and isolated points.
  mu      sweep the 2^20 subsets of the mid level of the 6-atom middle
          region; residuals are antichains split into a lower and an upper
          part, tally by the two sizes.
  lemma2  split the 6-atom middle region into two 20-point blocks joined by
          a flip of the first digit plus two 5-point fringes, and sum
          2^t(N) * sigma(N) over the 6212 down-sets N of the bottom block,
          sigma by its defining inner sum (the slow reference).
  iso     same summation collapsed onto the 34 isomorphism classes of
          isolated-free down-sets, with sigma evaluated by closed formula
          from precomputed structural data and a subset-sum table.
"""

import time
from dataclasses import dataclass
from itertools import combinations

from .boolean import boolean, sub_poset
from .engine import count_downsets, enumerate_downsets
from .errors import DomainError, NotADownSet, ShapeError, StructureError
from .isoclasses import _upper_lower, representation_system, type_code
from .poset import Poset, chain, product, _bits, _popcount


@dataclass
class MethodReport:
    'outcome of one counting method'
    method: str
    value: int
    table: object
    evaluations: int
    wall_time: float


# -- the four-block split of the 6-atom middle region -----------------------


@dataclass(frozen=True)
class QSplit:
    """The 50-point middle region on 6 atoms split by level and first digit.

    m23: first digit 0, levels 2..3 (the bottom block, 20 points)
    m34: first digit 1, levels 3..4 (the top block, 20 points)
    e2:  first digit 1, level 2 (5 points);  e4: first digit 0, level 4

    q is the sub-poset on the two blocks, q23 and q34 the blocks themselves,
    s the sub-poset on e2 + m34, t the one on e4 + m23.  beta maps each
    bottom-block point to its first-digit-flipped image in the top block.
    All masks use base indexing; the induced posets carry back-maps.
    """
    base: Poset
    m23: int
    m34: int
    e2: int
    e4: int
    q: Poset
    q23: Poset
    q34: Poset
    s: Poset
    t: Poset
    beta: dict
    q23_lowers: tuple  # q23-local indices of the 10 bottom-level points


def build_qsplit():
    ctx = boolean(6)
    base = sub_poset(ctx, "middle")
    msb = 1 << 5
    m23 = m34 = e2 = e4 = 0
    for i, word in enumerate(base.parent_map):
        lev = _popcount(word)
        if word & msb:
            if lev in (3, 4):
                m34 |= 1 << i
            else:
                e2 |= 1 << i
        else:
            if lev in (2, 3):
                m23 |= 1 << i
            else:
                e4 |= 1 << i
    assert _popcount(m23) == _popcount(m34) == 20 and _popcount(e2) == _popcount(e4) == 5
    assert m23 | m34 | e2 | e4 == base.carrier
    word_pos = {w: i for i, w in enumerate(base.parent_map)}
    beta = {i: word_pos[base.parent_map[i] | msb] for i in _bits(m23)}
    # the flip is strictly increasing and carries the block order faithfully:
    # x < y in q iff beta(x) <= y, for x in the bottom and y in the top block
    for x, bx in beta.items():
        assert base.leq(x, bx) and x != bx
        for y in _bits(m34):
            left = base.leq(x, y) and x != y
            right = base.leq(bx, y)
            assert left == right
    q23 = base.induced(m23)
    return QSplit(
        base=base,
        m23=m23,
        m34=m34,
        e2=e2,
        e4=e4,
        q=base.induced(m23 | m34),
        q23=q23,
        q34=base.induced(m34),
        s=base.induced(e2 | m34),
        t=base.induced(e4 | m23),
        beta=beta,
        q23_lowers=tuple(_bits(q23.minimal_points())),
    )


def s_of(split, n_mask):
    'fringe points of e2 not under the top-block part of N (base mask)'
    if n_mask & ~(split.m23 | split.m34):
        raise DomainError("N must live on the two blocks")
    local = split.s.from_parent_mask(n_mask & split.m34)
    cov = split.s.to_parent_mask(split.s.down_closure(local))
    return _popcount(split.e2 & ~cov)


def t_of(split, n_mask):
    'fringe points of e4 not over the bottom-block complement of N'
    local = split.t.from_parent_mask(split.m23 & ~n_mask)
    cov = split.t.to_parent_mask(split.t.up_closure(local))
    return _popcount(split.e4 & ~cov)


def e_of(split, y_mask):
    'fringe points of e2 not under the flipped image of Y (Y inside m23)'
    if y_mask & ~split.m23:
        raise DomainError("Y must live on the bottom block")
    img = 0
    for i in _bits(y_mask):
        img |= 1 << split.beta[i]
    local = split.s.from_parent_mask(img)
    cov = split.s.to_parent_mask(split.s.down_closure(local))
    return _popcount(split.e2 & ~cov)


def _lower_index(split, local_mask):
    '10-bit index of a subset of the bottom-level points of q23'
    idx = 0
    for b, i in enumerate(split.q23_lowers):
        if (local_mask >> i) & 1:
            idx |= 1 << b
    return idx


def build_T0_T1(split):
    """1024-entry tables over subsets Y of the bottom-level points:
    T0[Y] = 2^e(Y), T1[Y] = sum of T0 over subsets of Y (zeta transform)."""
    lows = split.q23_lowers
    t0 = []
    for m in range(1 << len(lows)):
        local = 0
        for b in range(len(lows)):
            if (m >> b) & 1:
                local |= 1 << lows[b]
        t0.append(1 << e_of(split, split.q23.to_parent_mask(local)))
    t1 = list(t0)
    for d in range(len(lows)):
        bit = 1 << d
        for m in range(len(t1)):
            if m & bit:
                t1[m] += t1[m ^ bit]
    return t0, t1


# -- the 5-atom middle region ------------------------------------------------


def bmm5_nu():
    """Top-level sweep: one term per subset N of the 10 upper points, the
    residual being the antichain of lower points not under N.  Returns the
    tally vector nu over residual sizes; the count is sum nu_i * 2^i."""
    t0 = time.perf_counter()
    mid = sub_poset(boolean(5), "middle")
    uppers = [i for i in range(mid.n) if mid.down[i] & ~(1 << i)]
    assert len(uppers) == 10
    low_of = [mid.down[u] & ~(1 << u) for u in uppers]
    n_lowers = mid.n - len(uppers)
    nu = [0] * (n_lowers + 1)
    for m in range(1 << len(uppers)):
        cov = 0
        mm = m
        while mm:
            cov |= low_of[(mm & -mm).bit_length() - 1]
            mm &= mm - 1
        nu[n_lowers - _popcount(cov)] += 1
    value = sum(nu[i] << i for i in range(len(nu)))
    return MethodReport(
        method="nu", value=value, table=nu,
        evaluations=1 << len(uppers), wall_time=time.perf_counter() - t0,
    )


def _gamma_pivot():
    'the 8-point antichain pivot: level-2 words with the first digit set, level-3 words without'
    mid = sub_poset(boolean(5), "middle")
    msb = 1 << 4
    m2 = m3 = 0
    for i, word in enumerate(mid.parent_map):
        if _popcount(word) == 2 and word & msb:
            m2 |= 1 << i
        elif _popcount(word) == 3 and not word & msb:
            m3 |= 1 << i
    assert _popcount(m2) == _popcount(m3) == 4
    return mid, m2, m3


def _gamma_residual_class(mid, m_mask, n_mask):
    'residual shape as (number of 2-chains, number of isolated points)'
    res = mid.remove(mid.updown(m_mask, n_mask))
    c = a = 0
    for comp in res.components():
        size = _popcount(comp)
        if size == 1:
            a += 1
        elif size == 2:
            c += 1
        else:
            raise ShapeError("residual has a %d-point component, expected 2-chains and isolated points" % size)
    return c, a


def _subsets(mask):
    'all submasks, descending; includes mask itself and 0'
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def bmm5_gamma():
    """Digit-split sweep: pivot on the 8-point antichain from _gamma_pivot.
    Residual classes depend on the level-2 part N2 only through its size, so
    one representative N2 per size j is evaluated against all 16 level-3
    parts: 80 residuals.  Cell (j, (c, a)) counts residuals that are c
    2-chains plus a isolated points; the count is
    sum_j C(4,j) sum_{c,a} gamma_j(c,a) * 3^c * 2^a."""
    import math

    t0 = time.perf_counter()
    mid, m2, m3 = _gamma_pivot()
    m_mask = m2 | m3
    bits2 = list(_bits(m2))
    grid = {}
    evaluations = 0
    for j in range(5):
        n2 = sum(1 << b for b in bits2[:j])
        for n3 in _subsets(m3):
            c, a = _gamma_residual_class(mid, m_mask, n2 | n3)
            evaluations += 1
            grid.setdefault((c, a), [0] * 5)[j] += 1
    value = 0
    for (c, a), counts in grid.items():
        weight = 3**c * 2**a
        value += weight * sum(math.comb(4, j) * counts[j] for j in range(5))
    columns = sorted(grid)
    table = {"columns": columns, "rows": [[grid[col][j] for col in columns] for j in range(5)]}
    return MethodReport(
        method="gamma", value=value, table=table,
        evaluations=evaluations, wall_time=time.perf_counter() - t0,
    )


def gamma_residual_multiset(n2_mask):
    'sorted residual classes over all 16 level-3 parts, for a fixed level-2 part'
    mid, m2, m3 = _gamma_pivot()
    if n2_mask & ~m2:
        raise DomainError("N2 must be a subset of the level-2 pivot half")
    return sorted(_gamma_residual_class(mid, m2 | m3, n2_mask | n3) for n3 in _subsets(m3))


def bmm5_iso(records):
    'count from the class catalogue: sum of iota * 2^delta over the 34 classes'
    t0 = time.perf_counter()
    value = sum(rec.iota << rec.delta for rec in records)
    table = [(rec.type_code, rec.iota, rec.delta) for rec in records]
    return MethodReport(
        method="iso5", value=value, table=table,
        evaluations=len(records), wall_time=time.perf_counter() - t0,
    )


# -- the 6-atom middle region ------------------------------------------------


def bmm6_mu():
    """Mid-level sweep: one term per subset N of the 20 level-3 points.  The
    residual is an antichain made of the level-2 points not under N and the
    level-4 points not over the complement of N; mu[i][j] tallies subsets by
    the two sizes, and the count is sum mu[i][j] * 2^(i+j)."""
    import numpy as np

    t0 = time.perf_counter()
    mid = sub_poset(boolean(6), "middle")
    l2 = [i for i in range(mid.n) if _popcount(mid.parent_map[i]) == 2]
    l3 = [i for i in range(mid.n) if _popcount(mid.parent_map[i]) == 3]
    l4 = [i for i in range(mid.n) if _popcount(mid.parent_map[i]) == 4]
    assert len(l2) == len(l4) == 15 and len(l3) == 20
    pos2 = {p: b for b, p in enumerate(l2)}
    pos4 = {p: b for b, p in enumerate(l4)}
    dn2 = []
    up4 = []
    for u in l3:
        dn2.append(sum(1 << pos2[p] for p in _bits(mid.down[u]) if p in pos2))
        up4.append(sum(1 << pos4[p] for p in _bits(mid.up[u]) if p in pos4))
    size = 1 << 20
    sel = np.arange(size, dtype=np.uint32)
    covered2 = np.zeros(size, dtype=np.uint16)
    covered4 = np.zeros(size, dtype=np.uint16)
    for b in range(20):
        hit = (sel >> np.uint32(b)) & np.uint32(1) == 1
        covered2[hit] |= np.uint16(dn2[b])
        covered4[hit] |= np.uint16(up4[b])
    i_arr = 15 - np.bitwise_count(covered2).astype(np.int32)
    # the complement of mask x is (size-1) - x, so index reversal flips N
    j_arr = 15 - np.bitwise_count(covered4[::-1]).astype(np.int32)
    grid = np.bincount(i_arr * 16 + j_arr, minlength=256).reshape(16, 16)
    table = [[int(x) for x in row] for row in grid]
    value = sum(table[i][j] << (i + j) for i in range(16) for j in range(16))
    return MethodReport(
        method="mu", value=value, table=table,
        evaluations=size, wall_time=time.perf_counter() - t0,
    )


def sigma_reference(split, n_local, members=None):
    'defining inner sum: 2^e over every down-set of q23 contained in the given one'
    if members is None:
        members = enumerate_downsets(split.q23).members
    total = 0
    for m in members:
        if m & ~n_local == 0:
            total += 1 << e_of(split, split.q23.to_parent_mask(m))
    return total


def bmm6_lemma2_reference(split):
    """Reference summation over all 6212 down-sets N of the bottom block:
    sum of 2^t(N) * sigma(N) with sigma by its defining inner sum.  The
    evaluation counter is the number of inner terms (contained pairs)."""
    import numpy as np

    t0 = time.perf_counter()
    fam = enumerate_downsets(split.q23)
    members = np.asarray(fam.members, dtype=np.uint32)
    base_masks = [split.q23.to_parent_mask(m) for m in fam.members]
    weights = np.asarray([1 << e_of(split, bm) for bm in base_masks], dtype=np.int64)
    t_vec = [t_of(split, bm) for bm in base_masks]
    k = len(members)
    sigma = np.zeros(k, dtype=np.int64)
    pairs = 0
    step = max(1, (1 << 22) // k)
    for start in range(0, k, step):
        block = members[start : start + step, None]
        inside = (members[None, :] & ~block) == 0
        sigma[start : start + step] = inside @ weights
        pairs += int(inside.sum())
    value = sum(int(s) << t for s, t in zip(sigma.tolist(), t_vec))
    return MethodReport(
        method="lemma2", value=value, table={"inner_terms": pairs},
        evaluations=pairs, wall_time=time.perf_counter() - t0,
    )


def classify_inner_type(split, d_local):
    """Type code of the isolated-free core of a down-set of the bottom
    block, when it matters for the fringe count: "other" when the down-set
    has no upper points or its e-value is zero."""
    uppers, _ = _upper_lower(split.q23, d_local)
    if not uppers:
        return "other"
    if e_of(split, split.q23.to_parent_mask(d_local)) == 0:
        return "other"
    return type_code(split.q23, split.q23.down_closure(uppers))


# -- closed-form sigma -------------------------------------------------------


@dataclass
class SigmaPrecomp:
    """Per-class structural data for the closed-form sigma.

    For each upper point u of the core, g1[u] and g2[u] are the two disjoint
    3-point groups of outside lower points that each leave one of u's two
    free fringe digits alive.  pair_g lists, per qualifying upper pair, the
    single outside lower point compatible with the pair's free digit.  n34
    counts qualifying upper triples and quadruples, each contributing one.
    All such data is derived empirically from e-evaluations and validated;
    a violated shape raises StructureError.
    """
    rep: int
    uppers: tuple
    covered: int      # lower points of the core
    free: int         # the other lower points
    down_count: int
    g1: dict
    g2: dict
    pair_g: tuple
    n34: int
    t1: list


def build_sigma_precomp(split, rep, t1=None):
    q23 = split.q23
    if not q23.is_downset(rep):
        raise NotADownSet("representative is not a down-set of the bottom block")
    if t1 is None:
        t1 = build_T0_T1(split)[1]
    lowers_all = q23.minimal_points()
    uppers, low_in = _upper_lower(q23, rep)
    if q23.down_closure(uppers) != rep:
        raise StructureError("representative has isolated lower points")
    covered = rep & lowers_all

    def e_loc(mask):
        return e_of(split, q23.to_parent_mask(mask))

    g1 = {}
    g2 = {}
    for u in _bits(uppers):
        du = q23.down[u]
        if e_loc(du) != 2:
            raise StructureError("single-upper core has e = %d, expected 2" % e_loc(du))
        outside = lowers_all & ~du
        groups = []
        dead = 0
        for z in _bits(outside):
            ez = e_loc(du | 1 << z)
            if ez == 0:
                dead += 1
                continue
            if ez != 1:
                raise StructureError("outside lower keeps e at %d" % ez)
            for g in groups:
                if e_loc(du | 1 << z | (g & -g)) == 1:
                    break
            else:
                g = None
            if g is None:
                groups.append(1 << z)
            else:
                groups[groups.index(g)] |= 1 << z
        if len(groups) != 2 or sorted(_popcount(g) for g in groups) != [3, 3]:
            raise StructureError("expected two disjoint 3-point groups per upper point")
        if groups[0] & groups[1] or dead != _popcount(outside) - 6:
            raise StructureError("inconsistent group split")
        g1[u], g2[u] = groups

    pair_g = []
    n34 = 0
    ups = list(_bits(uppers))
    for size in range(2, len(ups) + 1):
        for vs in combinations(ups, size):
            dv = 0
            for u in vs:
                dv |= q23.down[u]
            if e_loc(dv) == 0:
                continue
            if size == 2:
                if _popcount(dv & lowers_all) != 5:
                    raise StructureError("qualifying pair covers %d lowers, expected 5" % _popcount(dv & lowers_all))
                cands = [z for z in _bits(lowers_all & ~dv) if e_loc(dv | 1 << z) > 0]
                if len(cands) != 1:
                    raise StructureError("expected a single compatible lower for a qualifying pair")
                pair_g.append(1 << cands[0])
            elif size in (3, 4):
                if _popcount(dv & lowers_all) != 6:
                    raise StructureError("qualifying %d-set covers %d lowers, expected 6" % (size, _popcount(dv & lowers_all)))
                if any(e_loc(dv | 1 << z) > 0 for z in _bits(lowers_all & ~dv)):
                    raise StructureError("qualifying %d-set admits a compatible lower" % size)
                n34 += 1
            else:
                raise StructureError("an upper %d-set keeps a positive e-value" % size)

    return SigmaPrecomp(
        rep=rep,
        uppers=tuple(ups),
        covered=covered,
        free=lowers_all & ~covered,
        down_count=count_downsets(q23.induced(rep)),
        g1=g1,
        g2=g2,
        pair_g=tuple(pair_g),
        n34=n34,
        t1=t1,
    )


def sigma_fast(split, rep, a_mask, precomp):
    """sigma(A + R) by closed formula: the subset-sum table covers the
    upper-free inner terms, the containment count covers every term's +1,
    and the per-upper groups, qualifying pairs, triples and quadruples
    supply the only inner terms with positive e and upper points."""
    assert rep == precomp.rep
    assert a_mask & ~precomp.free == 0, "A must consist of free lower points"
    ap = precomp.covered | a_mask
    total = precomp.t1[_lower_index(split, ap)]
    total += (1 << _popcount(a_mask)) * precomp.down_count - (1 << _popcount(ap))
    for u in precomp.uppers:
        total += 1 + (1 << _popcount(precomp.g1[u] & ap)) + (1 << _popcount(precomp.g2[u] & ap))
    for gbit in precomp.pair_g:
        total += 2 if gbit & ap else 1
    total += precomp.n34
    return total


def class_parameters(split, rec, tables=None):
    'the t, sigma, containment count and inner-sum entries of one catalogue row'
    t1 = (tables[1] if tables else build_T0_T1(split)[1])
    pre = build_sigma_precomp(split, rec.representative, t1)
    assert pre.free == rec.delta_mask
    inner = 0
    for a_mask in _subsets(rec.delta_mask):
        inner += sigma_fast(split, rec.representative, a_mask, pre)
    return {
        "t_val": t_of(split, split.q23.to_parent_mask(rec.representative)),
        "sigma_val": sigma_fast(split, rec.representative, 0, pre),
        "downclosure_count": pre.down_count,
        "inner_sum": inner,
    }


def bmm6_iso(split, records=None):
    """Class-collapsed summation: sum over the catalogue of
    iota(R) * 2^t(R) * sum_{A subset of the free lowers} sigma(A + R).
    Upper-free terms come straight out of the subset-sum table; the
    evaluation counter counts closed-form sigma calls on upper-bearing
    down-sets only."""
    t0 = time.perf_counter()
    if records is None:
        _, records = representation_system(split.q23)
    tables = build_T0_T1(split)
    value = 0
    evaluations = 0
    rows = []
    for rec in records:
        pre = build_sigma_precomp(split, rec.representative, tables[1])
        t_val = t_of(split, split.q23.to_parent_mask(rec.representative))
        inner = 0
        for a_mask in _subsets(rec.delta_mask):
            inner += sigma_fast(split, rec.representative, a_mask, pre)
            if pre.uppers:
                evaluations += 1
        value += rec.iota * (inner << t_val)
        rows.append({
            "code": rec.type_code,
            "iota": rec.iota,
            "delta": rec.delta,
            "t": t_val,
            "sigma": sigma_fast(split, rec.representative, 0, pre),
            "downsets_below": pre.down_count,
            "inner_sum": inner,
        })
    return MethodReport(
        method="iso", value=value, table=rows,
        evaluations=evaluations, wall_time=time.perf_counter() - t0,
    )


# -- small checks and suppliers ----------------------------------------------


def lemma1_check(n, q, n_mask):
    """Residual law of the bottom-copy decomposition of chain(n) x q: for a
    down-set N of the bottom copy, removing up(copy - N) | down(N) must
    leave chain(n-1) x (q restricted to N), point for point."""
    assert n >= 1
    if not q.is_downset(n_mask):
        raise NotADownSet("N must be a down-set of the bottom copy")
    p = product(chain(n), q)
    m0 = (1 << q.n) - 1
    residual = p.remove(p.updown(m0, n_mask))
    expected = sorted(k * q.n + j for k in range(1, n) for j in _bits(n_mask))
    if list(residual.parent_map) != expected:
        return False
    sub = q.induced(n_mask)
    ref = product(chain(n - 1), sub)
    send = {}
    for local, parent in enumerate(residual.parent_map):
        k, j = divmod(parent, q.n)
        send[local] = (k - 1) * sub.n + sub._positions()[j]
    for local in range(residual.n):
        image = 0
        for other in _bits(residual.up[local]):
            image |= 1 << send[other]
        if image != ref.up[send[local]]:
            return False
    return True


def middle_counts(n_max):
    'middle-region down-set counts for 3..n_max, by the cheapest route each'
    out = {}
    for k in range(3, n_max + 1):
        if k <= 5:
            out[k] = count_downsets(sub_poset(boolean(k), "middle"))
        elif k == 6:
            out[k] = bmm6_mu().value
        else:
            raise DomainError("no middle-region supplier for %d atoms" % k)
    return out
