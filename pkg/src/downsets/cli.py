"""Command-line front end.

Four commands: count a poset file (optionally through an explicit pivot
decomposition, optionally as a DOT digraph), compute a Dedekind number by a
chosen method, emit one of the coefficient tables, and run the verification
suite.  Output is plain decimal text, CSV or JSON, and is byte-identical
across runs and --jobs settings: nothing time- or machine-dependent is ever
printed.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 capacity error,
4 unsupported request.
"""

import argparse
import json as jsonlib
import random
import sys

from .boolean import boolean, dedekind_standard, dedekind_via_theorem2, sub_poset
from .engine import (
    chain_product_count,
    count_downsets,
    count_via_decomposition,
    decompose,
    enumerate_downsets,
)
from .errors import CapacityError, DomainError, MissingInput, ParseError
from .isoclasses import representation_system, table7
from .methods import (
    bmm5_gamma,
    bmm5_iso,
    bmm5_nu,
    bmm6_iso,
    bmm6_lemma2_reference,
    bmm6_mu,
    build_qsplit,
    build_sigma_precomp,
    build_T0_T1,
    gamma_residual_multiset,
    middle_counts,
    sigma_fast,
    t_of,
)
from .poset import poset_from_text, from_covers


B_SMALL = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168, 5: 7581, 6: 7828354}
NU_ROW = (388, 290, 195, 70, 40, 30, 0, 10, 0, 0, 1)


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallelism degree; results never depend on it")
    parser = argparse.ArgumentParser(
        prog="downsets",
        description="count and decompose down-sets of finite posets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="count the down-sets of a poset file")
    c.add_argument("file")
    c.add_argument("--pivot", default=None, metavar="I,J,...",
                   help="decompose over these point indices and report term statistics")
    c.add_argument("--dot", action="store_true",
                   help="emit the transitive reduction as a DOT digraph instead")
    c.add_argument("--limit", type=int, default=1 << 24,
                   help="cap on enumerated decomposition terms")

    d = sub.add_parser("dedekind", parents=[common], help="compute a Dedekind number")
    d.add_argument("n", type=int)
    d.add_argument("--method", required=True,
                   choices=("theorem2", "standard", "nu", "gamma", "mu", "lemma2", "iso"))

    t = sub.add_parser("tables", parents=[common], help="emit a coefficient table")
    t.add_argument("which", choices=("nu", "gamma", "mu", "iso"))

    v = sub.add_parser("verify", parents=[common], help="run the verification suite")
    v.add_argument("--strict", action="store_true",
                   help="additionally sample non-representative class members")
    return parser


# -- count -------------------------------------------------------------------


def _dot_digraph(p):
    lines = ["digraph poset {"]
    for i in range(p.n):
        name = str(i)
        if p.labels and p.labels[i] is not None:
            name = p.labels[i]
        lines.append('  n%d [label="%s"];' % (i, name))
    for a, b in p.covers():
        lines.append("  n%d -> n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _parse_pivot(p, text):
    mask = 0
    for tok in text.replace(",", " ").split():
        try:
            i = int(tok)
        except ValueError:
            raise ParseError("pivot index %r is not an integer" % tok)
        if not 0 <= i < p.n:
            raise ParseError("pivot index %d out of range 0..%d" % (i, p.n - 1))
        mask |= 1 << i
    return mask


def cmd_count(args):
    with open(args.file, "r", encoding="utf-8") as handle:
        p = poset_from_text(handle.read())
    if args.dot:
        return _dot_digraph(p)
    pivot = (args.pivot or "").strip()
    if not pivot:
        value = count_downsets(p)
        if args.format == "json":
            return jsonlib.dumps({"value": value}) + "\n"
        return "%d\n" % value
    m_mask = _parse_pivot(p, pivot)
    sizes = {}
    value = 0
    terms = 0
    for term in decompose(p, m_mask):
        terms += 1
        if terms > args.limit:
            raise CapacityError("more than %d decomposition terms" % args.limit)
        sizes[term.residual.n] = sizes.get(term.residual.n, 0) + 1
        value += term.residual_count
    hist = sorted(sizes.items())
    if args.format == "json":
        return jsonlib.dumps(
            {"value": value, "terms": terms, "residual_sizes": hist}
        ) + "\n"
    if args.format == "csv":
        out = ["%d,%d" % (value, terms)]
        out += ["%d,%d" % pair for pair in hist]
        return "\n".join(out) + "\n"
    out = ["%d" % value, "terms: %d" % terms,
           "residual sizes: " + " ".join("%d:%d" % pair for pair in hist)]
    return "\n".join(out) + "\n"


# -- dedekind ----------------------------------------------------------------


def _ladder_value(n, bmm):
    return dedekind_via_theorem2(n, bmm).value


def _dedekind(n, method):
    'value and evaluation counter for one (n, method) request'
    if method == "theorem2":
        if not 0 <= n <= 6:
            raise DomainError("theorem2 ladder covers n = 0..6")
        bmm = middle_counts(n) if n >= 3 else {}
        return _ladder_value(n, bmm), max(0, n - 2)
    if method == "standard":
        run = dedekind_standard(n)
        return run.value, run.summands
    if method == "nu":
        if n != 5:
            raise DomainError("method nu covers n = 5 only")
        rep = bmm5_nu()
        return _ladder_value(5, {**middle_counts(4), 5: rep.value}), rep.evaluations
    if method == "gamma":
        if n != 5:
            raise DomainError("method gamma covers n = 5 only")
        rep = bmm5_gamma()
        return _ladder_value(5, {**middle_counts(4), 5: rep.value}), rep.evaluations
    if method == "mu":
        if n != 6:
            raise DomainError("method mu covers n = 6 only")
        rep = bmm6_mu()
        return _ladder_value(6, {**middle_counts(5), 6: rep.value}), rep.evaluations
    if method == "lemma2":
        if n != 6:
            raise DomainError("method lemma2 covers n = 6 only")
        rep = bmm6_lemma2_reference(build_qsplit())
        return _ladder_value(6, {**middle_counts(5), 6: rep.value}), rep.evaluations
    if method == "iso":
        if n == 5:
            mid = sub_poset(boolean(5), "middle")
            _, records = representation_system(mid)
            rep = bmm5_iso(records)
            return _ladder_value(5, {**middle_counts(4), 5: rep.value}), rep.evaluations
        if n == 6:
            rep = bmm6_iso(build_qsplit())
            return _ladder_value(6, {**middle_counts(5), 6: rep.value}), rep.evaluations
        raise DomainError("method iso covers n = 5 and 6")
    raise DomainError("unknown method %r" % method)


def cmd_dedekind(args):
    value, evaluations = _dedekind(args.n, args.method)
    if args.format == "json":
        return jsonlib.dumps(
            {"n": args.n, "method": args.method, "value": value, "evaluations": evaluations}
        ) + "\n"
    if args.format == "csv":
        return "%d,%s,%d,%d\n" % (args.n, args.method, value, evaluations)
    if args.method == "theorem2":
        return "%d\n" % value
    return "%d\nevaluations: %d\n" % (value, evaluations)


# -- tables ------------------------------------------------------------------


def _iso_rows():
    split = build_qsplit()
    _, records = representation_system(split.q23)
    report = bmm6_iso(split, records)
    return report.table


def cmd_tables(args):
    if args.which == "nu":
        row = bmm5_nu().table
        if args.format == "json":
            return jsonlib.dumps(row) + "\n"
        return ",".join(str(x) for x in row) + "\n"
    if args.which == "gamma":
        table = bmm5_gamma().table
        if args.format == "json":
            return jsonlib.dumps(
                {"columns": [list(col) for col in table["columns"]], "rows": table["rows"]}
            ) + "\n"
        head = "j," + ",".join("%d-%d" % col for col in table["columns"])
        lines = [head]
        for j, row in enumerate(table["rows"]):
            lines.append("%d," % j + ",".join(str(x) for x in row))
        return "\n".join(lines) + "\n"
    if args.which == "mu":
        grid = bmm6_mu().table
        if args.format == "json":
            return jsonlib.dumps(grid) + "\n"
        return "\n".join(",".join(str(x) for x in row) for row in grid) + "\n"
    rows = _iso_rows()
    if args.format == "json":
        return jsonlib.dumps(rows, indent=2) + "\n"
    lines = ["code,iota,delta,t,sigma,downsets,inner"]
    for r in rows:
        lines.append("%s,%d,%d,%d,%d,%d,%d" % (
            r["code"], r["iota"], r["delta"], r["t"],
            r["sigma"], r["downsets_below"], r["inner_sum"]))
    return "\n".join(lines) + "\n"


# -- verify ------------------------------------------------------------------


def _random_poset(rng, max_points):
    n = rng.randrange(0, max_points + 1)
    covers = []
    for j in range(1, n):
        for i in range(j):
            if rng.random() < 0.25:
                covers.append((i, j))
    return from_covers(n, covers)


def _check_ladder():
    ladder = dedekind_via_theorem2(6, middle_counts(6))
    assert ladder.bmm == {3: 1, 4: 64, 5: 6212, 6: 7741776}, ladder.bmm
    assert ladder.bm == {2: 2, 3: 9, 4: 114, 5: 6894, 6: 7785062}, ladder.bm
    assert ladder.b == B_SMALL, ladder.b


def _run_checks(strict):
    checks = []

    def add(name, fn):
        checks.append((name, fn))

    add("ladder", _check_ladder)

    def check_standard():
        for n in range(2, 7):
            run = dedekind_standard(n)
            assert run.value == B_SMALL[n], (n, run.value)
            if n == 5:
                assert run.summands == 210, run.summands
            if n == 6:
                assert run.summands == 14196, run.summands

    add("standard", check_standard)

    def check_nu():
        rep = bmm5_nu()
        assert tuple(rep.table) == NU_ROW, rep.table
        assert sum(rep.table) == 1024
        assert rep.value == 6212, rep.value

    add("nu", check_nu)

    def check_gamma():
        rep = bmm5_gamma()
        assert rep.evaluations == 80, rep.evaluations
        for row in rep.table["rows"]:
            assert sum(row) == 16, row
        assert rep.value == 6212, rep.value

    add("gamma", check_gamma)

    def check_mu():
        rep = bmm6_mu()
        grid = rep.table
        assert grid[0][0] == 165980, grid[0][0]
        assert sum(sum(row) for row in grid) == 1 << 20
        for i in range(16):
            for j in range(16):
                assert grid[i][j] == grid[j][i], (i, j)
        assert rep.value == 7741776, rep.value

    add("mu", check_mu)

    split = build_qsplit()

    def check_lemma2():
        rep = bmm6_lemma2_reference(split)
        assert rep.value == 7741776, rep.value
        assert rep.table["inner_terms"] == 3933651, rep.table

    add("lemma2", check_lemma2)

    def check_product_identity():
        assert chain_product_count(2, split.q23) == 3933651

    add("product-identity", check_product_identity)

    def check_catalogue():
        classes_all, records = representation_system(split.q23)
        assert len(records) == 34, len(records)
        assert len(classes_all) == 91, len(classes_all)
        assert sum(rec.iota for rec in records) == 1024
        assert bmm5_iso(records).value == 6212
        report = bmm6_iso(split, records)
        assert report.value == 7741776, report.value
        assert report.evaluations == 272, report.evaluations
        spent = sum(
            3 ** rec.delta * row["downsets_below"]
            for rec, row in zip(records, report.table)
        )
        assert spent == 208099, spent

    add("catalogue", check_catalogue)

    def check_decomposition():
        b3 = boolean(3).lattice
        atoms = sum(1 << i for i in range(b3.n) if bin(i).count("1") == 1)
        counts = sorted(t.residual_count for t in decompose(b3, atoms))
        assert counts == [1, 1, 1, 2, 2, 2, 2, 9], counts
        assert sum(counts) == 20

    add("decomposition", check_decomposition)

    def check_random_sample():
        rng = random.Random(20260815)
        for _ in range(200):
            p = _random_poset(rng, 10)
            direct = count_downsets(p)
            assert direct == len(enumerate_downsets(p))
            m_mask = 0
            for i in range(p.n):
                if rng.random() < 0.5:
                    m_mask |= 1 << i
            assert direct == count_via_decomposition(p, m_mask)

    add("random-sample", check_random_sample)

    if strict:

        def check_class_constancy():
            rng = random.Random(4057)
            _, bare = representation_system(split.q23)
            records = table7(split, bare)
            tables = build_T0_T1(split)
            for rec in records:
                copy = rec.representative
                others = [m for m in rec.members if m != rec.representative]
                if others:
                    copy = rng.choice(others)
                pre = build_sigma_precomp(split, copy, tables[1])
                t_val = t_of(split, split.q23.to_parent_mask(copy))
                assert t_val == rec.t_val, (rec.type_code, t_val)
                assert sigma_fast(split, copy, 0, pre) == rec.sigma_val, rec.type_code
                inner = 0
                sub = pre.free
                while True:
                    inner += sigma_fast(split, copy, sub, pre)
                    if sub == 0:
                        break
                    sub = (sub - 1) & pre.free
                assert inner == rec.inner_sum, rec.type_code

        add("class-constancy", check_class_constancy)

        def check_gamma_uniformity():
            mid = sub_poset(boolean(5), "middle")
            msb = 1 << 4
            m2_bits = [i for i, w in enumerate(mid.parent_map)
                       if bin(w).count("1") == 2 and w & msb]
            reference = {}
            for sub_idx in range(16):
                n2 = sum(1 << m2_bits[b] for b in range(4) if (sub_idx >> b) & 1)
                key = bin(sub_idx).count("1")
                got = gamma_residual_multiset(n2)
                if key in reference:
                    assert got == reference[key], key
                else:
                    reference[key] = got

        add("gamma-uniformity", check_gamma_uniformity)

    return checks


def cmd_verify(args):
    lines = []
    failed = 0
    for name, fn in _run_checks(args.strict):
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - every failure must be reported
            failed += 1
            lines.append("FAIL %s: %s" % (name, exc))
        else:
            lines.append("ok   %s" % name)
    lines.append("%d checks, %d failed" % (len(lines), failed))
    return "\n".join(lines) + "\n", (1 if failed else 0)


# -- entry point ---------------------------------------------------------------


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            out = cmd_count(args)
        elif args.command == "dedekind":
            out = cmd_dedekind(args)
        elif args.command == "tables":
            out = cmd_tables(args)
        else:
            out, code = cmd_verify(args)
            sys.stdout.write(out)
            return code
    except ParseError as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return 2
    except OSError as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return 2
    except CapacityError as exc:
        sys.stderr.write("capacity error: %s\n" % exc)
        return 3
    except (DomainError, MissingInput) as exc:
        sys.stderr.write("unsupported: %s\n" % exc)
        return 4
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
