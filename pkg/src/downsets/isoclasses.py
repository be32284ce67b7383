"""Poset isomorphism for small posets, and the class catalogue of the
down-sets of the 20-point middle region on 5 atoms.

Canonical forms: per connected component, an ordered partition of the points
starts from (longest chain below, up-degree, down-degree) colors and is
refined to equitability; the search then repeatedly singles out one point of
the first non-singleton cell and re-refines, so branching stays close to the
automorphism count.  Among all discrete partitions reached this way, the
lexicographically least packed relation matrix is the certificate.  The
certificate of a poset is the sorted tuple of its component certificates, so
equal certificates mean isomorphic posets.
"""

import json
from dataclasses import dataclass, replace
from itertools import combinations

from .engine import enumerate_downsets
from .errors import CapacityError
from .poset import _bits, _popcount

CANON_MAX_POINTS = 24


# -- canonical forms -------------------------------------------------------


def _height(p, mask):
    'per point of mask: longest chain strictly below, within mask'
    h = {}
    order = sorted(_bits(mask), key=lambda i: _popcount(p.down[i] & mask))
    for i in order:
        below = p.down[i] & mask & ~(1 << i)
        h[i] = 1 + max((h[j] for j in _bits(below)), default=-1)
    return h


def _equitable(up_loc, dn_loc, cells):
    """Refine an ordered partition (list of local bitmasks) until every cell
    sees every other cell uniformly.  Splitting keys use cell indices and
    neighbor counts only, so the result is relabel-invariant."""
    k = len(up_loc)
    while True:
        cell_of = [0] * k
        for ci, cell in enumerate(cells):
            for v in _bits(cell):
                cell_of[v] = ci
        sig = []
        for v in range(k):
            prof = []
            for ci, cell in enumerate(cells):
                cu = _popcount(up_loc[v] & cell)
                cd = _popcount(dn_loc[v] & cell)
                if cu or cd:
                    prof.append((ci, cu, cd))
            sig.append((cell_of[v], tuple(prof)))
        buckets = {}
        for v in range(k):
            buckets.setdefault(sig[v], 0)
            buckets[sig[v]] |= 1 << v
        new = [buckets[key] for key in sorted(buckets)]
        if len(new) == len(cells):
            return cells
        cells = new


def _component_certificate(p, mask):
    points = list(_bits(mask))
    k = len(points)
    pos = {q: idx for idx, q in enumerate(points)}
    up_loc = [0] * k
    dn_loc = [0] * k
    for a in points:
        for b in _bits(p.up[a] & mask & ~(1 << a)):
            up_loc[pos[a]] |= 1 << pos[b]
            dn_loc[pos[b]] |= 1 << pos[a]

    h = _height(p, mask)
    first = {}
    for v in range(k):
        key = (h[points[v]], _popcount(up_loc[v]), _popcount(dn_loc[v]))
        first.setdefault(key, 0)
        first[key] |= 1 << v
    cells = _equitable(up_loc, dn_loc, [first[key] for key in sorted(first)])

    # true twins (same strict up- and down-sets) are interchangeable, so one
    # member per twin class is enough at each individualization step
    twin = list(range(k))
    for v in range(k):
        if twin[v] == v:
            for w in range(v + 1, k):
                if up_loc[v] == up_loc[w] and dn_loc[v] == dn_loc[w]:
                    twin[w] = v

    best = [None]

    def leaf(discrete):
        order = [(cell.bit_length() - 1) for cell in discrete]
        rows = []
        for v in order:
            r = 0
            for w in order:
                r = (r << 1) | ((up_loc[v] >> w) & 1)
            rows.append(r)
        if best[0] is None or rows < best[0]:
            best[0] = rows

    def search(cells):
        target = None
        for ci, cell in enumerate(cells):
            if cell & (cell - 1):
                target = ci
                break
        if target is None:
            leaf(cells)
            return
        tried = set()
        for v in _bits(cells[target]):
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            split = cells[:target] + [1 << v, cells[target] & ~(1 << v)] + cells[target + 1:]
            search(_equitable(up_loc, dn_loc, split))

    search(cells)
    return bytes([k]) + b"".join(r.to_bytes((k + 7) // 8, "big") for r in best[0])


@dataclass(frozen=True)
class CanonicalForm:
    'relabel-invariant certificate; equality means isomorphism'
    certificate: bytes


def canonical_form(p):
    if p.n > CANON_MAX_POINTS:
        raise CapacityError("canonical form capped at %d points, got %d" % (CANON_MAX_POINTS, p.n))
    parts = sorted(_component_certificate(p, comp) for comp in p.components())
    return CanonicalForm(certificate=bytes([p.n]) + b"|".join(parts))


def are_isomorphic(p, q):
    if p.n != q.n:
        return False
    return canonical_form(p) == canonical_form(q)


# -- isolated points and type codes ----------------------------------------


def strip_isolated(p):
    '(sub-poset without isolated points, number of isolated points removed)'
    iso = 0
    for i in range(p.n):
        if (p.up[i] | p.down[i]) == 1 << i:
            iso |= 1 << i
    return p.induced(p.carrier & ~iso), _popcount(iso)


def _upper_lower(q23, mask):
    'split a point set of the two-level poset by level'
    uppers = 0
    lowers = 0
    for i in _bits(mask):
        if q23.down[i] & ~(1 << i):
            uppers |= 1 << i
        else:
            lowers |= 1 << i
    return uppers, lowers


def _has_crown(q23, uppers, lowers):
    """Induced 4 + 4 sub-poset whose comparability graph is a single
    8-cycle: each chosen lower under exactly two chosen uppers, each chosen
    upper over exactly two chosen lowers, all in one cycle."""
    ups = list(_bits(uppers))
    lows = list(_bits(lowers))
    if len(ups) < 4 or len(lows) < 4:
        return False
    for four_up in combinations(ups, 4):
        up_mask = sum(1 << u for u in four_up)
        cands = [l for l in lows if _popcount(q23.up[l] & up_mask) == 2]
        for four_low in combinations(cands, 4):
            deg = {u: 0 for u in four_up}
            for l in four_low:
                for u in _bits(q23.up[l] & up_mask):
                    deg[u] += 1
            if any(d != 2 for d in deg.values()):
                continue
            # degree-2 bipartite on 4+4 vertices is one 8-cycle or two
            # 4-cycles; walk from one lower and count the steps to close
            start = four_low[0]
            cur, is_lower, prev, steps = start, True, None, 0
            while True:
                if is_lower:
                    nbrs = list(_bits(q23.up[cur] & up_mask))
                else:
                    nbrs = [l for l in four_low if (q23.up[l] >> cur) & 1]
                nxt = nbrs[0] if nbrs[0] != prev else nbrs[1]
                prev, cur, is_lower = cur, nxt, not is_lower
                steps += 1
                if is_lower and cur == start:
                    break
            if steps == 8:
                return True
    return False


def type_code(q23, core_mask):
    """Code u-c1c2c3 of a down-set without isolated points: u upper points,
    c_j lower points covered by exactly j of them.  Two codes are ambiguous
    and get a -0/-1 digit: 4-440 splits on containing an 8-crown, 6-442 on
    whether every upper point sits over some triply-covered lower point."""
    uppers, lowers = _upper_lower(q23, core_mask)
    u = _popcount(uppers)
    c = [0, 0, 0, 0]
    for l in _bits(lowers):
        c[_popcount(q23.up[l] & uppers)] += 1
    assert c[0] == 0, "core has an uncovered (isolated) lower point"
    code = "%d-%d%d%d" % (u, c[1], c[2], c[3])
    if code == "4-440":
        code += "-1" if _has_crown(q23, uppers, lowers) else "-0"
    elif code == "6-442":
        triple_mask = sum(1 << l for l in _bits(lowers) if _popcount(q23.up[l] & uppers) == 3)
        all_covered = all(q23.down[x] & triple_mask for x in _bits(uppers))
        code += "-0" if all_covered else "-1"
    return code


# -- the class catalogue ----------------------------------------------------


@dataclass
class IsoClassRecord:
    'one class of isolated-free down-sets of the 20-point middle region'
    representative: int      # down-set mask, local to the two-level poset
    type_code: str
    iota: int                # number of copies among the down-sets
    delta: int               # number of free lower points
    delta_mask: int          # free lower points of the representative
    members: tuple           # all copies, as masks
    t_val: int = None
    sigma_val: int = None
    downclosure_count: int = None
    inner_sum: int = None

    def sort_key(self):
        u, rest = self.type_code.split("-", 1)
        digits = rest.split("-")
        c = digits[0]
        # c3 can be two digits only in the full-carrier class
        c1, c2, c3 = int(c[0]), int(c[1]), int(c[2:])
        suffix = int(digits[1]) if len(digits) > 1 else -1
        return (int(u), self.delta, c1, c2, c3, suffix)


def representation_system(q23):
    """Classify every down-set of the two-level poset.

    records: one per isomorphism class of isolated-free down-sets (the
    cores), lexicographically least mask as representative, in catalogue
    order.  classes_all: one (record index, isolated count) pair per class
    of arbitrary down-sets, since every down-set is a core plus free lower
    points and the pair determines the class.
    """
    fam = enumerate_downsets(q23)
    lowers_all = q23.minimal_points()
    by_cert = {}
    for mask in fam.members:
        uppers, _ = _upper_lower(q23, mask)
        core = q23.down_closure(uppers) if uppers else 0
        if core != mask:
            continue  # has isolated lower points; its core is listed anyway
        cert = canonical_form(q23.induced(mask)).certificate
        by_cert.setdefault(cert, []).append(mask)
    records = []
    for members in by_cert.values():
        members.sort()
        rep = members[0]
        free = lowers_all & ~q23.down_closure(rep)
        records.append(
            IsoClassRecord(
                representative=rep,
                type_code=type_code(q23, rep),
                iota=len(members),
                delta=_popcount(free),
                delta_mask=free,
                members=tuple(members),
            )
        )
    records.sort(key=IsoClassRecord.sort_key)
    classes_all = [(idx, a) for idx, rec in enumerate(records) for a in range(rec.delta + 1)]
    return classes_all, records


def table7(split, records):
    """Fill t, sigma, containment count and inner sum on every record,
    returning them in catalogue order.  Needs the sigma machinery."""
    from .methods import build_T0_T1, class_parameters

    tables = build_T0_T1(split)
    return [replace(rec, **class_parameters(split, rec, tables)) for rec in records]


def records_to_json(records):
    'JSON export of the catalogue'
    return json.dumps(
        [
            {
                "code": r.type_code,
                "representative": r.representative,
                "iota": r.iota,
                "delta": r.delta,
                "t": r.t_val,
                "sigma": r.sigma_val,
                "downsets_below": r.downclosure_count,
                "inner_sum": r.inner_sum,
            }
            for r in records
        ],
        indent=2,
    )
