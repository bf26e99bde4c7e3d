"""Intervals, isomorphism with certificates, fingerprints, parents,
Z-sets, and the structural lemma checks."""

import collections
import itertools

import pytest

import oracles
from bruhat_forge import poset, regions, weyl
from bruhat_forge.poset import (
    IsoCertificate,
    NotComparableError,
    build_interval,
    fingerprint,
    is_isomorphic,
    parents,
    structural_lemma_checks,
    z_invariant,
    z_preserved_check,
)
from bruhat_forge.regions import theta, theta1, theta2, x_chain
from bruhat_forge.weyl import RHO, from_word, generator, identity

ID = identity()


def _all_intervals(max_length, max_size=None):
    for y in weyl.enumerate_up_to_length(max_length):
        if y.is_identity:
            continue
        for x in weyl.lower_interval(y):
            if x == y:
                continue
            interval = build_interval(x, y)
            if max_size is None or len(interval) <= max_size:
                yield interval


def test_build_examples():
    two = build_interval(ID, generator(1))
    assert len(two) == 2 and two.span == 1
    six = build_interval(ID, theta((0, 0)))
    assert len(six) == 6
    assert six.rank_sizes == (1, 2, 2, 1)
    with pytest.raises(NotComparableError):
        build_interval(generator(0), theta((0, 0)))


def test_interval_json():
    obj = build_interval(ID, theta((0, 0))).to_json_obj()
    assert obj["bottom"] == "" and obj["top"] == "121"
    assert obj["members"] == ["", "1", "2", "12", "21", "121"]
    assert [0, 1] in obj["covers"]
    assert all(i < j for i, j in obj["covers"])


def test_gradedness_to_length_6():
    for interval in _all_intervals(6):
        assert interval.is_graded()


def test_every_span2_interval_is_a_diamond():
    for interval in _all_intervals(6):
        if interval.span == 2:
            assert len(interval) == 4
            assert interval.rank_sizes == (1, 2, 1)


def test_coatom_count_of_theta2_top():
    # with both family indices positive the top has six coatoms
    interval = build_interval(ID, theta2((1, 1)))
    coatoms = [z for z in interval.members if z.length == interval.top.length - 1]
    assert len(coatoms) == 6


def test_coatom_set_formula_for_theta2_tops():
    # the six coatoms of s0 theta(m,n) s, m, n > 0, written through the
    # flanking elements and the three short conjugates of the top
    for m in range(1, 3):
        for n in range(1, 3):
            y = theta2((m, n))
            s = regions.s_mn((m, n))
            rho_s = RHO.apply_generator(s)
            rho2_s = (RHO * RHO).apply_generator(s)
            z1 = theta((m, n - 1)).left_mult(0)
            z2 = theta((m - 1, n)).left_mult(0)
            expected = {
                z1.right_mult(rho2_s).right_mult(s),
                z2.right_mult(rho_s).right_mult(s),
                y.right_mult(s),
                y.left_mult(0).left_mult(1).left_mult(0),
                y.left_mult(0).left_mult(2).left_mult(0),
                y.left_mult(0),
            }
            got = {
                w
                for w in weyl.elements_of_length(y.length - 1)
                if weyl.bruhat_leq(w, y)
            }
            assert got == expected, (m, n)


def test_parents_containment_table():
    # which of the six coatoms sit above each flanking element: the
    # pattern behind the 3/2 parent-count table
    for m in range(1, 3):
        for n in range(1, 3):
            y = theta2((m, n))
            s = regions.s_mn((m, n))
            rho_s = RHO.apply_generator(s)
            rho2_s = (RHO * RHO).apply_generator(s)
            z = {
                1: theta((m, n - 1)).left_mult(0),
                2: theta((m - 1, n)).left_mult(0),
                3: (RHO * RHO).apply(theta1((m - 1, n))),
                4: RHO.apply(theta1((m, n - 1))),
            }
            coatoms = {
                "c1": z[1].right_mult(rho2_s).right_mult(s),
                "c2": z[2].right_mult(rho_s).right_mult(s),
                "ys": y.right_mult(s),
                "c010": y.left_mult(0).left_mult(1).left_mult(0),
                "c020": y.left_mult(0).left_mult(2).left_mult(0),
                "s0y": y.left_mult(0),
            }
            expected_above = {
                "c1": {1, 2, 4},
                "c2": {1, 2, 3},
                "ys": {1, 2},
                "c010": {2, 3, 4},
                "c020": {1, 3, 4},
                "s0y": {3, 4},
            }
            for name, coatom in coatoms.items():
                above = {i for i, zi in z.items() if weyl.bruhat_leq(zi, coatom)}
                assert above == expected_above[name], (m, n, name, above)


def test_is_isomorphic_basics():
    a = build_interval(ID, generator(0))
    b = build_interval(generator(1), from_word("12"))
    cert = is_isomorphic(a, b)
    assert cert is not None and cert.is_valid(a, b)

    same = build_interval(ID, from_word("12"))
    cert = is_isomorphic(same, same)
    assert cert is not None
    assert all(cert.apply(z) == z for z in same.members)

    chain = build_interval(ID, generator(1))
    assert is_isomorphic(chain, same) is None


def test_certificate_determinism_and_inverse():
    a = build_interval(ID, theta((1, 0)))
    b = build_interval(ID, RHO.apply(theta((1, 0))))
    c1 = is_isomorphic(a, b)
    c2 = is_isomorphic(a, b)
    assert c1 is not None and c1.mapping == c2.mapping
    assert c1.inverse().is_valid(b, a)
    perm = c1.to_index_permutation(a, b)
    assert sorted(perm) == list(range(len(a.members)))


def test_is_isomorphic_matches_brute_force_small():
    buckets = collections.defaultdict(list)
    for interval in _all_intervals(5, max_size=10):
        buckets[(len(interval), interval.rank_sizes)].append(interval)
    compared = 0
    for items in buckets.values():
        for a, b in itertools.combinations(items, 2):
            fast = is_isomorphic(a, b) is not None
            assert fast == oracles.brute_force_isomorphic(a, b)
            compared += 1
    assert compared > 1000


def test_fingerprint_soundness():
    # isomorphic intervals always share the fingerprint (no false negatives)
    intervals = list(_all_intervals(6, max_size=24))
    for a, b in itertools.islice(itertools.combinations(intervals, 2), 0, None, 97):
        if is_isomorphic(a, b) is not None:
            assert fingerprint(a) == fingerprint(b)
    chain = build_interval(ID, generator(1))
    diamond = build_interval(ID, from_word("12"))
    assert fingerprint(chain) != fingerprint(diamond)


def test_fingerprint_no_false_negatives_to_length_8():
    # class the intervals WITHOUT fingerprint gating, then check every
    # isomorphism class carries a single fingerprint
    buckets = collections.defaultdict(list)
    for interval in _all_intervals(8):
        buckets[(interval.span, len(interval), interval.rank_sizes)].append(interval)
    for items in buckets.values():
        reps = []
        for interval in items:
            for rep in reps:
                if is_isomorphic(interval, rep) is not None:
                    assert fingerprint(interval) == fingerprint(rep)
                    break
            else:
                reps.append(interval)


def test_parent_counts_preserved_by_certificates():
    pairs = [
        (build_interval(ID, theta1((1, 1))),
         build_interval(ID, RHO.apply(theta1((1, 1))))),
        (build_interval(ID, theta2((1, 0))),
         build_interval(ID, (RHO * RHO).apply(theta2((1, 0))))),
    ]
    for a, b in pairs:
        cert = is_isomorphic(a, b)
        assert cert is not None
        by_rank = collections.defaultdict(list)
        for z in a.members:
            by_rank[a.rank_of(z)].append(z)
        for rank, elems in by_rank.items():
            for u, v in itertools.combinations(elems, 2):
                for m in (1, 2):
                    if rank + m > a.span:
                        continue
                    left = len(parents(u, v, a, m))
                    right = len(parents(cert.apply(u), cert.apply(v), b, m))
                    assert left == right


def test_short_intervals_share_kl_when_isomorphic():
    # isomorphic pairs with span <= 4 have equal KL polynomials,
    # checked over all tops of length <= 9
    from bruhat_forge import closedform
    from bruhat_forge.verify import interval_survey

    survey = interval_survey(9)
    for cls in survey.classes:
        x0, y0 = cls.rep
        if y0.length - x0.length > 4:
            continue
        ref = closedform.kl_fast(x0, y0)
        for x, y in cls.members:
            assert closedform.kl_fast(x, y) == ref


def test_fingerprint_collision_rate_reported():
    intervals = list(_all_intervals(7))
    fps = collections.defaultdict(list)
    for interval in intervals:
        fps[fingerprint(interval)].append(interval)
    classes = 0
    for items in fps.values():
        reps = []
        for interval in items:
            if not any(is_isomorphic(interval, r) for r in reps):
                reps.append(interval)
        classes += len(reps)
    collisions = classes - len(fps)
    print(
        f"fingerprint census at length 7: {len(intervals)} intervals, "
        f"{len(fps)} fingerprints, {classes} classes, {collisions} collisions"
    )


def test_parents_table_and_errors():
    m, n = 1, 1
    interval = build_interval(ID, theta2((m, n)))
    z1 = theta((m, n - 1)).left_mult(0)
    z2 = theta((m - 1, n)).left_mult(0)
    z3 = (RHO * RHO).apply(theta1((m - 1, n)))
    z4 = RHO.apply(theta1((m, n - 1)))
    zs = {1: z1, 2: z2, 3: z3, 4: z4}
    for i, j in itertools.combinations(zs, 2):
        expected = 3 if {i, j} in ({1, 2}, {3, 4}) else 2
        assert len(parents(zs[i], zs[j], interval, 2)) == expected
    with pytest.raises(ValueError):
        parents(z1, interval.top, interval, 2)  # rank mismatch
    with pytest.raises(ValueError):
        parents(z1, z2, interval, 0)


def test_four_parent_set_for_even_chains():
    k = 6
    interval = build_interval(ID, x_chain(k))
    a = x_chain(k - 3)
    b = x_chain(k - 5).left_mult(0).left_mult(1)
    got = parents(a, b, interval, 2)
    assert got == frozenset(
        {
            x_chain(k - 1),
            RHO.apply(x_chain(k - 1)),
            theta((k // 2 - 2, 0)),
            (RHO * RHO).apply(theta((k // 2 - 2, 0))),
        }
    )
    assert len(got) == 4


def test_z_invariant_examples():
    assert z_invariant(build_interval(ID, theta((1, 1))), 3) == frozenset()
    assert z_invariant(build_interval(ID, theta((2, 1))), 3) == frozenset()
    got = z_invariant(build_interval(ID, theta1((1, 1))), 3)
    assert got == frozenset({theta((0, 1)), theta((1, 0))})
    got = z_invariant(build_interval(ID, theta1((2, 2))), 3)
    assert got == frozenset({theta((1, 2)), theta((2, 1))})
    for interval in itertools.islice(_all_intervals(6), 0, None, 13):
        assert z_invariant(interval, 1) == frozenset()


def test_z_preserved_on_symmetric_pairs():
    for idx in ((1, 0), (1, 1)):
        a = build_interval(ID, theta1(idx))
        for tau in weyl.SYMMETRY_GROUP[:6]:
            b = build_interval(tau.apply(ID), tau.apply(theta1(idx)))
            cert = IsoCertificate({z: tau.apply(z) for z in a.members})
            assert cert.is_valid(a, b)
            assert z_preserved_check(a, b, cert)
    a = build_interval(ID, theta((1, 1)))
    ident = IsoCertificate({z: z for z in a.members})
    assert z_preserved_check(a, a, ident)


def test_structural_lemma_checks_bound_8():
    rep = structural_lemma_checks(8)
    assert rep["holds"]
    assert not rep["violations"]
    assert rep["counts"]["six_case"] > 0
    # the (m, n) = (0, 0) top with bottom s0 must appear, with gap 4
    hits = [
        inst
        for inst in rep["six_case_instances"]
        if inst["y"] == "01210" and inst["x"] == "0"
    ]
    assert hits and hits[0]["ok"] and hits[0]["gap"] == 4


def test_structural_six_case_includes_rho_chain_bottom():
    # y = s0 theta(1,0) s with bottom rho(x_2): empty Z^3, P = 1 + q,
    # a singleton Z^4, and length gap 5
    from bruhat_forge import closedform

    y = theta2((1, 0))
    x = RHO.apply(x_chain(2))
    interval = build_interval(x, y)
    assert z_invariant(interval, 3) == frozenset()
    assert str(closedform.kl_fast(x, y)) == "1 + q"
    assert len(z_invariant(interval, 4)) == 1
    assert y.length - x.length == 5

    rep = structural_lemma_checks(8)
    hits = [
        inst
        for inst in rep["six_case_instances"]
        if inst["x"] == x.word() and inst["y"] == y.word()
    ]
    assert hits and all(h["ok"] and h["gap"] == 5 for h in hits)
