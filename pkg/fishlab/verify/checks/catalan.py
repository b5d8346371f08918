"""Checks on Dyck paths, their statistics and both Catalan pair types."""

from __future__ import annotations

import itertools
from collections import Counter

from fishlab.base.tables import Distribution
from fishlab.catalan.dyck import DyckStats, dyck_stats, enumerate_dyck
from fishlab.catalan.numbers import ballot_count, catalan_number, narayana
from fishlab.catalan.pairs import c1_of_dyck, c2_of_dyck, psi
from fishlab.relations.canonical import canonical_form
from fishlab.relations.model import RelStructure, mmax, mmin
from fishlab.triples.axioms import check_c1_pair, check_c2_pair
from fishlab.verify.registry import check
from fishlab.verify.report import Outcome, SuiteParams, fail, ok


@check("catalan.counts")
def counts(params: SuiteParams) -> Outcome:
    for n in range(params.max_dyck_order + 1):
        found = sum(1 for _ in enumerate_dyck(n))
        if found != catalan_number(n):
            return fail(f"{found} paths of order {n}, expected C_{n}")
    return ok()


@check("catalan.pair_statistics")
def pair_statistics(params: SuiteParams) -> Outcome:
    """Minimal and maximal counts of both pairs give the path statistics."""
    for n in range(1, params.max_dyck_order + 1):
        for p in enumerate_dyck(n):
            st = dyck_stats(p)
            s, r = c1_of_dyck(p).components
            t, r2 = c2_of_dyck(p).components
            c1 = (mmin(r), mmax(r), mmax(s), mmin(s))
            c2 = (mmin(r2), mmax(r2), mmin(t), mmax(t))
            if c1 != (st.asc, st.des, st.ret, st.pea):
                return fail("C1-pair statistics differ", str(p))
            if c2 != (st.asc, st.des, st.ret, st.ret):
                return fail("C2-pair statistics differ", str(p))
    return ok()


@check("catalan.pair_axioms")
def pair_axioms(params: SuiteParams) -> Outcome:
    """Both encodings satisfy their axioms; for C1-pairs S | R is a
    linear order."""
    for n in range(1, params.max_dyck_order + 1):
        for p in enumerate_dyck(n):
            c1 = c1_of_dyck(p)
            violation = check_c1_pair(c1) or check_c2_pair(c2_of_dyck(p))
            if violation is not None:
                return fail(str(violation), str(p))
            s, r = c1.components
            if not s.union(r).is_linear_order():
                return fail("S | R is not a linear order", str(p))
    return ok()


@check("catalan.injective")
def injective(params: SuiteParams) -> Outcome:
    for n in range(1, params.max_dyck_order + 1):
        paths = list(enumerate_dyck(n))
        for encode in (c1_of_dyck, c2_of_dyck):
            keys = {canonical_form(encode(p)) for p in paths}
            if len(keys) != len(paths):
                return fail(
                    f"{encode.__name__} is not injective at order {n}"
                )
    return ok()


def _all_stats(n: int) -> list[DyckStats]:
    return [dyck_stats(p) for p in enumerate_dyck(n)]


@check("catalan.classical_counts")
def classical_counts(params: SuiteParams) -> Outcome:
    """Ballot and Narayana numbers match the enumerated statistics."""
    for n in range(1, params.catstat_order + 1):
        stats = _all_stats(n)
        for name in ("asc", "des", "ret"):
            found = Counter(getattr(st, name) for st in stats)
            for k in range(1, n + 1):
                if found[k] != ballot_count(n, k):
                    return fail(f"|D_{n}[{name}={k}]| = {found[k]}")
        peaks = Counter(st.pea for st in stats)
        for k in range(1, n + 1):
            if peaks[k] != narayana(n, k):
                return fail(f"|D_{n}[pea={k}]| = {peaks[k]}")
            if narayana(n, k) != narayana(n, n - k + 1):
                return fail(f"Narayana row {n} is not symmetric")
        for first, second in itertools.combinations(("asc", "des", "ret"), 2):
            table = Distribution.tally(
                (first, second),
                ((getattr(st, first), getattr(st, second)) for st in stats),
            )
            if not table.is_symmetric():
                return fail(f"({first}, {second}) is not symmetric at {n}")
    return ok()


@check("catalan.catstat")
def catstat(params: SuiteParams) -> Outcome:
    """(asc, ret, pea) and (ret, asc, n - pea + 1) are equidistributed."""
    for n in range(1, params.catstat_order + 1):
        stats = _all_stats(n)
        left = Counter((st.asc, st.ret, st.pea) for st in stats)
        right = Counter((st.ret, st.asc, n - st.pea + 1) for st in stats)
        if left != right:
            return fail(f"Multisets differ at order {n}", {"n": n})
    return ok()


@check("catalan.psi")
def psi_check(params: SuiteParams) -> Outcome:
    """psi is a bijection keeping mmax of the first and second component."""
    for n in range(1, params.max_dyck_order + 1):
        images: set[bytes] = set()
        for p in enumerate_dyck(n):
            c1 = c1_of_dyck(p)
            image = psi(c1)
            if image != c2_of_dyck(p):
                return fail("psi differs from the path encoding", str(p))
            s, r = c1.components
            t2, r2 = image.components
            if mmax(s) != mmax(t2) or mmax(r) != mmax(r2):
                return fail("psi changed a statistic", str(p))
            images.add(canonical_form(image))
        if len(images) != catalan_number(n):
            return fail(f"psi is not bijective at order {n}")
    return ok()


@check("catalan.c1_symmetry")
def c1_symmetry(params: SuiteParams) -> Outcome:
    """(mmax S, mmax R) is symmetric over C1-pairs."""
    for n in range(1, params.max_dyck_order + 1):
        pairs = (c1_of_dyck(p).components for p in enumerate_dyck(n))
        table = Distribution.tally(
            ("max_s", "max_r"), ((mmax(s), mmax(r)) for s, r in pairs)
        )
        if not table.is_symmetric():
            return fail(f"Not symmetric at order {n}", table.model_dump())
    return ok()


@check("catalan.reflection")
def reflection(params: SuiteParams) -> Outcome:
    """Reflecting a path inverts R, and T for C2-pairs."""
    for n in range(1, params.max_dyck_order + 1):
        for p in enumerate_dyck(n):
            q = p.reflect()
            s, r = c1_of_dyck(p).components
            t, r2 = c2_of_dyck(p).components
            expected_c1 = RelStructure.of(s, r.inverse())
            expected_c2 = RelStructure.of(t.inverse(), r2.inverse())
            if canonical_form(c1_of_dyck(q)) != canonical_form(expected_c1):
                return fail("C1-pair of the reflection differs", str(p))
            if canonical_form(c2_of_dyck(q)) != canonical_form(expected_c2):
                return fail("C2-pair of the reflection differs", str(p))
    return ok()
