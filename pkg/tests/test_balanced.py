import pytest

from tomofix import balanced as bal
from tomofix.core import puncture, square_window
from tomofix.golden import PRINTED_TRIPLES

S2S = puncture(square_window(2))


def test_is_balanced_examples():
    assert bal.is_balanced(bal.A1)
    assert not bal.is_balanced(bal.ZnArray(3, (0,) * 9))
    assert bal.is_balanced(bal.construct_fn(4))


def test_is_zero_sum_examples():
    cert = bal.is_zero_sum(bal.A1, S2S)
    assert cert.zero_sum and cert.translate_sums == (0,) * 9
    ones = bal.is_zero_sum(bal.ZnArray(3, (1,) * 9), S2S)
    assert not ones.zero_sum and set(ones.translate_sums) == {3}
    assert bal.is_zero_sum(bal.construct_fn(5), puncture(square_window(4))).valid


def test_certificate_json_has_full_table():
    raw = bal.is_zero_sum(bal.A1, S2S).to_json()
    assert len(raw["translate_sums"]) == 9 and raw["balanced"] and raw["zero_sum"]


def test_search_3torus():
    sols = bal.search_balanced_3torus()
    assert len(sols) == 12
    assert sols[0].values == (0, 1, 2, 5, 3, 4, 7, 8, 6)
    assert [a.values for a in sols] == sorted(bal.PRINTED_ARRAYS)
    assert all(bal.is_zero_sum(a, S2S).valid for a in sols)


def test_search_matches_brute_force():
    assert bal.search_balanced_3torus() == bal.brute_force_3torus()


def test_support_triples():
    got = bal.support_triples()
    assert frozenset({0, 1, 7}) in got and frozenset({0, 2, 6}) in got
    assert got == {frozenset(int(c) for c in t) for t in PRINTED_TRIPLES}
    assert all(sum(k in t for t in got) == 3 for k in range(9))


def test_permutation_action_examples():
    arrays = bal.PRINTED_ARRAYS
    assert bal.permutation_action(bal.P, bal.A1).values == arrays[3]
    assert bal.permutation_action(bal.Q, bal.A1).values == arrays[7]
    assert bal.permutation_action(bal.CellPermutation.identity(), bal.A1) == bal.A1
    with pytest.raises(ValueError):
        bal.permutation_action(bal.P, bal.construct_fn(4))


def test_printed_cycle_forms():
    assert bal.P == bal.CellPermutation.from_cycles((1, 3, 6, 7, 5, 2), (4, 8))
    assert bal.Q == bal.CellPermutation.from_cycles((1, 3), (2, 6), (5, 7))


def test_action_law():
    group = bal.generate_group([bal.P, bal.Q])
    for g in group[:6]:
        for h in group[6:]:
            lhs = bal.permutation_action(g * h, bal.A1)
            rhs = bal.permutation_action(g, bal.permutation_action(h, bal.A1))
            assert lhs == rhs


def test_dihedral_group():
    rep = bal.dihedral_group_check()
    assert rep.order_p == 6 and rep.order_q == 2
    assert rep.qpq_is_p_inverse and rep.qpq[:2] == (2, 5)  # 1 -> 2, 2 -> 5
    assert rep.group_order == 12 and rep.orbit_size == 12
    assert rep.ok


def test_stabiliser_trivial():
    group = bal.generate_group([bal.P, bal.Q])
    assert [g for g in group if bal.permutation_action(g, bal.A1) == bal.A1] == [bal.CellPermutation.identity()]


def test_group_preserves_solutions_and_value_sets():
    sols = bal.search_balanced_3torus()
    group = bal.generate_group([bal.P, bal.Q])
    triples = bal.support_triples()
    for a in sols:
        for g in group:
            assert bal.is_zero_sum(bal.permutation_action(g, a), S2S).valid

    def value_set(x):
        return {sum(x.values[i] for i in t) for t in triples}

    for a in sols:
        for g in (bal.P, bal.Q):
            assert value_set(bal.permutation_action(g, a)) == value_set(a)


def test_hypergraph_automorphisms():
    autos = bal.hypergraph_automorphisms()
    assert bal.P in autos and bal.Q in autos
    s = set(autos)
    assert all(g * h in s and g.inverse() in s for g in autos for h in autos)
    assert len(autos) == 12


def test_construct_fn_examples():
    assert bal.construct_fn(3).values == bal.A1.values
    for n in (4, 5, 7):
        f = bal.construct_fn(n)
        assert all(bal.g_value(n, i, j) == bal.g_value(n, i + 1, j + 1) for i in range(n) for j in range(n))
        for j0 in range(n):
            assert {f[i, j0] for i in range(n)} == set(range(n * j0, n * j0 + n))


@pytest.mark.parametrize("n", range(3, 33))
def test_construct_fn_balanced_zero_sum(n):
    f = bal.construct_fn(n)
    assert bal.is_zero_sum(f, puncture(square_window(n - 1))).valid
    assert (n + 1) * (n - 2) % 2 == 0


@pytest.mark.parametrize("n", range(3, 11))
def test_proof_identities(n):
    assert bal.proof_identities_check(n).ok


def test_identity_examples():
    f3 = bal.construct_fn(3)
    assert all(sum(f3[i, j] for i in range(3)) % 9 == 3 for j in range(3))
    assert 16 * 5 * 2 // 2 == 80 and 80 % 16 == 0


@pytest.mark.parametrize("p,k", [(5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (7, 5)])
def test_nonexistence_certificates(p, k):
    cert = bal.nonexistence_certificate(p, k)
    assert cert.applicable and cert.kernel_dimension == 0


def test_certificate_not_applicable_at_p_minus_one():
    with pytest.raises(bal.CertificateNotApplicable):
        bal.nonexistence_certificate(5, 4)
    cert = bal.nonexistence_certificate(5, 4, strict=False)
    assert not cert.applicable and cert.kernel_dimension > 0


def test_certificate_agrees_with_search_on_5_torus():
    # the certificate's claim, checked by exhaustive search where it is cheap
    rep = bal.search_balanced(5, 2, budget=2_000_000)
    assert rep.status == "EXHAUSTED-NONE"


def test_probe_finds_f4():
    rep = bal.composite_probe(bal.ProbeConfig(4, 3, budget=100_000, max_solutions=None))
    assert rep.status == "FOUND" and rep.complete and len(rep.solutions) == 384
    assert bal.construct_fn(4) in rep.solutions
    assert all(bal.is_zero_sum(a, puncture(square_window(3))).valid for a in rep.solutions)


def test_probe_small_budget_reports():
    rep = bal.composite_probe(bal.ProbeConfig(4, 2, budget=5))
    assert rep.status in {"FOUND", "EXHAUSTED-NONE", "BUDGET"}
    assert rep.nodes <= 5
    assert set(rep.to_json()) == {"n", "k", "status", "nodes", "solutions", "complete"}


def test_probe_budget_never_claims_nonexistence():
    rep = bal.search_balanced(6, 3, budget=1)
    assert rep.status == "BUDGET" or rep.status == "EXHAUSTED-NONE" and rep.nodes <= 1


def test_probe_finds_f6():
    rep = bal.composite_probe(bal.ProbeConfig(6, 5))
    assert rep.status == "FOUND" and rep.solutions[0] == bal.construct_fn(6)


def test_probe_rejects_primes():
    with pytest.raises(ValueError):
        bal.composite_probe(bal.ProbeConfig(5, 3))
