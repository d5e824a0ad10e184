import pytest

from operadlab import verify
from operadlab.combinatorics import permutations, right_cover_pairs, swap_adjacent
from operadlab.errors import NotACoverError, ResourceLimitError, WordError
from operadlab.trees import catalan, parse_tree
from operadlab.verify import (
    CHECKS,
    DEFAULT_CHECKS,
    Collapsed,
    StrictRotation,
    VerificationReport,
    check_local_indices,
    classify_cover,
    quotient_poset,
    render_text,
    render_tsv,
    run_checks,
    swap_rewrite_witness,
    verify_classes,
    verify_completeness,
    verify_identities,
    verify_local_indices,
    verify_monotonicity,
    verify_normalization,
    verify_order_preservation,
    verify_quotient,
    verify_soundness_fuzz,
)


def test_classify_independent_cover():
    c = classify_cover((1, 3, 2), (3, 1, 2))
    assert c.position == 1
    assert c.verdict == Collapsed()
    assert str(c.verdict) == "collapsed"


def test_classify_dependent_cover():
    c = classify_cover((1, 2, 3), (2, 1, 3))
    assert isinstance(c.verdict, StrictRotation)
    assert c.verdict.tree_to in verify.rotations(c.verdict.tree_from)
    assert "rotation" in str(c.verdict)


@pytest.mark.parametrize("pi, rho", [((2, 1, 3), (1, 2, 3)), ((1, 2, 3), (3, 2, 1)), ((1, 2), (1, 2, 3))])
def test_not_a_cover(pi, rho):
    with pytest.raises(NotACoverError):
        classify_cover(pi, rho)


def test_swap_witness_shapes():
    w = swap_rewrite_witness((1, 3, 2), 1)
    assert w.independent and len(w.steps) == 1 and w.steps[0].axiom == "assoc2"
    w = swap_rewrite_witness((1, 2, 3), 1)
    assert not w.independent and [s.axiom for s in w.steps] == ["assoc1", "assoc1"]
    assert w.local_path == ("arg",)
    w = swap_rewrite_witness((1, 2, 3), 2)
    assert not w.independent and w.steps == ()


@pytest.mark.parametrize("n", range(2, 7))
def test_swap_witnesses_check_out(n):
    for pi, rho, i in right_cover_pairs(n):
        assert verify._check_swap_witness(pi, rho, i) is None


@pytest.mark.parametrize("n, covers", [(1, 0), (2, 1), (3, 6), (4, 36), (5, 240)])
def test_order_report_counts_covers(n, covers):
    r = verify_order_preservation(n)
    assert r.passed and r.instances == covers


def test_identities_cumulative_count():
    reports = [verify_identities(n) for n in range(1, 8)]
    total = reports[0]
    for r in reports[1:]:
        total = total.merge(r)
    assert total.passed
    assert total.instances == 5913
    assert total.n_label == "1..7"


@pytest.mark.parametrize("n", range(0, 7))
def test_per_n_checks_pass(n):
    for check in (verify_classes, verify_quotient, verify_local_indices, verify_normalization,
                  verify_monotonicity):
        r = check(n)
        assert r.passed, (check.__name__, r.failures[:3])


@pytest.mark.parametrize("n", range(0, 8))
def test_classes_report_counts(n):
    assert verify_classes(n).instances == catalan(n)


def test_quotient_small_cases():
    q, iso = quotient_poset(3)
    assert iso and len(q.elements) == 5 and len(q.covers) == 5
    q, iso = quotient_poset(4)
    assert iso and len(q.elements) == 14


def test_local_indices():
    assert check_local_indices((3, 1), 2, 4)
    assert check_local_indices((), 1, 2)
    with pytest.raises(WordError):
        check_local_indices((1,), 3, 2)
    with pytest.raises(WordError):
        check_local_indices((1, 2), 2, 3)


def test_local_indices_over_six_letters_with_v_up_to_seven():
    for tau in permutations(6):
        for size in range(7):
            word = tau[:size]
            rest = [x for x in range(1, 8) if x not in word]
            for u in rest:
                for v in rest:
                    if u < v:
                        assert check_local_indices(word, u, v)


def test_fuzz_is_seeded_and_clean():
    a = verify_soundness_fuzz(500, seed=3)
    b = verify_soundness_fuzz(500, seed=3)
    assert a.passed and a.instances == 500
    assert (a.instances, a.failures) == (b.instances, b.failures)


def test_completeness_both_versions():
    assert verify_completeness(5).passed
    six = verify_completeness(6)
    assert six.passed and six.instances == 1 + 2 + 10 + 72 + 644 + 6704
    r = verify_completeness(4, indexed=True)
    assert r.passed and r.instances == 1 + 2 * 2 + 10 * 6 + 72 * 24


# --- the checks actually detect defects -------------------------------------

def test_identities_detect_a_broken_map(monkeypatch):
    real = verify.phihat
    monkeypatch.setattr(verify, "phihat", lambda p: real(p[::-1]))
    assert not verify_identities(3).passed


def test_order_detects_a_non_monotone_map(monkeypatch):
    monkeypatch.setattr(verify, "tonks_map", lambda p: verify.loday_ronco(p[::-1]))
    assert not verify_order_preservation(3).passed


def test_classes_detect_wrong_partition(monkeypatch):
    real = verify.tonks_map
    monkeypatch.setattr(verify, "tonks_map",
                        lambda p: parse_tree("(*,*)") if p == (1, 3, 2) else real(p))
    assert not verify_classes(3).passed


def test_completeness_detects_missing_rewrites(monkeypatch):
    real = verify.applicable_steps
    monkeypatch.setattr(verify, "applicable_steps",
                        lambda t: [s for s in real(t) if s.axiom != "assoc2"])
    assert not verify_completeness(4).passed


# --- reports ------------------------------------------------------------------

def test_merge_is_associative_and_order_free():
    a = VerificationReport("x", 1, 1, 2, ["b"])
    b = VerificationReport("x", 2, 2, 3, ["a"])
    c = VerificationReport("x", 3, 3, 1, ["c"])
    left = a.merge(b).merge(c)
    right = a.merge(b.merge(c))
    assert (left.instances, left.failures) == (right.instances, right.failures) == (6, ["a", "b", "c"])
    assert b.merge(a).failures == a.merge(b).failures
    with pytest.raises(ValueError):
        a.merge(VerificationReport("y", 1, 1))


def test_render_formats():
    ok = VerificationReport("identities", 3, 3, 6)
    bad = VerificationReport("order", 2, 4, 10, ["f1", "f2"])
    text = render_text([ok, bad], max_failures=1)
    lines = text.splitlines()
    assert lines[0].startswith("PASS  identities") and "instances=6" in lines[0]
    assert lines[1].startswith("FAIL  order") and "n=2..4" in lines[1]
    assert "f1" in text and "... 1 more" in text
    assert render_tsv([ok, bad]).splitlines() == [
        "check\tn\tinstances\tfailures", "identities\t3\t6\t0", "order\t2..4\t10\t2",
    ]


def test_run_checks_layout():
    reports = run_checks(3, ["identities", "completeness"])
    assert [r.check for r in reports] == ["identities"] * 4 + ["completeness"]
    assert all(r.passed for r in reports)
    with pytest.raises(ValueError):
        run_checks(2, ["nope"])
    with pytest.raises(ResourceLimitError):
        run_checks(9)


def test_check_names():
    assert set(DEFAULT_CHECKS) < set(CHECKS)
    assert "monotone" in CHECKS


def test_guards():
    with pytest.raises(ResourceLimitError):
        verify_identities(9)
    with pytest.raises(ValueError):
        verify_identities(-1)


def test_swap_adjacent_round_trip():
    for pi in permutations(4):
        for i in range(1, 4):
            assert swap_adjacent(swap_adjacent(pi, i), i) == pi
