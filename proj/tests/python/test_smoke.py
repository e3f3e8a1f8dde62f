"""Smoke tests for the python bindings."""

import relzk


def test_prime_selection():
    assert relzk.choose_prime(10) == 11
    assert relzk.choose_prime(11) == 11
    q = relzk.choose_prime(2**321)
    assert q >= 2**321
    assert relzk.is_probable_prime(q)
    assert relzk.field_bit_length(q) == 322


def test_commitment_roundtrip():
    w = relzk.commit(11, 3, 4, 5)
    assert w == 6
    assert relzk.verify_open(11, 3, w, 4, 5)
    assert not relzk.verify_open(11, 3, w, 4, 6)
    # sum of two commitments opens to the sum of contents with summed keys
    w2 = relzk.commit(11, 3, 2, 1)
    combined = relzk.combine_commitments(11, [1, 1], [w, w2])
    assert relzk.verify_open(11, 3, combined, 6, 6)


def test_generate_and_prove():
    inst = relzk.gen_subset_sum(n=8, K=3, seed=5)
    assert sum(si for si, vi in zip(inst["s"], inst["v"]) if vi) == inst["k"]
    result = relzk.prove_subset_sum(inst["s"], inst["k"], inst["v"], K=3, rounds=30, seed=7)
    assert result["accepted"]
    assert result["accepted_rounds"] == 30


def test_prove_three_sat():
    clauses = [[3, -2, 5], [-1, -4, -5], [1, -2, 5], [1, 4, 2]]
    assignment = [1, 0, 1, 0, 0]
    assert relzk.evaluate_cnf(5, clauses, assignment)
    result = relzk.prove_three_sat(5, clauses, assignment, K=3, rounds=20, seed=9)
    assert result["accepted"]


def test_witnessless_attack_frequency():
    result = relzk.attack_subset_sum([2, 3], 4, "answer-chall0", K=8, rounds=2000, seed=3)
    assert not result["accepted"]
    freq = result["accepted_rounds"] / result["rounds"]
    assert 0.45 < freq < 0.55


def test_extraction_identity():
    # worked trace: Q=11, s=(2,2), k=3, z=0, zero keys, x=(1,0), c'=6 -> a=5
    a = relzk.extract_subset_sum(11, [2, 2], 3, [0, 0], [0, 0], [0, 0], [1, 0], 6)
    assert a == 5


def test_bench_reproduces_the_round_accounting():
    row = relzk.bench_subset_sum(300, 5)
    assert row["bits_per_round"] == 289682.5
    assert row["rounds"] == 110
    assert 3.96 <= row["total_mb"] <= 3.99
    assert relzk.rounds_needed(5, 100) == 110
    assert relzk.round_bits(300, 321.0) == 289682.5


def test_chsh_values():
    wins = relzk.chsh_wins()
    assert relzk.omega_classical(2, 2, 2, 2, wins) == (3, 4)
    assert relzk.omega_coupled_classical(2, 2, 2, 2, wins) == (1, 2)
    assert relzk.check_coupling_bound(2, 2, 2, 2, wins)


def test_zero_knowledge_exact():
    rows = relzk.zk_exact_subset_sum(5, [1, 2], 3, [1, 1])
    assert len(rows) >= 4
    assert all(is_zero for _, is_zero, _ in rows)
    assert all(atoms == 2500 for _, _, atoms in rows)

    rows = relzk.zk_exact_three_sat(5, 1, [[1, -1, 1]], [1])
    assert all(is_zero for _, is_zero, _ in rows)
    assert all(atoms == 1875 for _, _, atoms in rows)


def test_exhaustive_soundness():
    assert relzk.exhaustive_soundness_subset_sum([2, 3], 4, 11) == (6, 11)
    assert relzk.exhaustive_soundness_subset_sum([2, 3], 5, 11) == (1, 1)
