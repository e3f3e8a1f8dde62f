// Python bindings for the core operations: field/commitment arithmetic,
// instance generation, protocol sessions, game values, the zero-knowledge
// distance checker, and the desk-scale soundness search.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relzk/adversary.hpp"
#include "relzk/commitment.hpp"
#include "relzk/session.hpp"
#include "relzk/zk_sim.hpp"

namespace py = pybind11;
using namespace relzk;

namespace pybind11::detail {

// arbitrary-precision bridge: python int <-> cpp_int via decimal strings
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = BigInt(std::string(py::str(src)));
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

FieldElement fe(const FieldCtxPtr& ctx, const BigInt& v) { return FieldElement(ctx, v); }

ss::SubsetSumInstance make_instance(std::vector<BigInt> s, BigInt k) {
    ss::SubsetSumInstance inst;
    inst.s = std::move(s);
    inst.k = std::move(k);
    return inst;
}

sat::Cnf3 make_cnf(unsigned n, const std::vector<std::vector<long>>& clauses) {
    sat::Cnf3 phi;
    phi.var_count = n;
    for (const auto& clause : clauses) {
        if (clause.size() != 3) throw std::invalid_argument("clauses must have three literals");
        sat::Clause c;
        for (std::size_t i = 0; i < 3; ++i) {
            long lit = clause[i];
            c[i] = sat::Literal{static_cast<unsigned>(lit < 0 ? -lit : lit), lit < 0};
        }
        phi.clauses.push_back(c);
    }
    phi.validate();
    return phi;
}

games::FiniteGame make_game(std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob,
                            const std::vector<std::tuple<int, int, int, int>>& wins) {
    games::FiniteGame g(ia, ib, oa, ob);
    for (const auto& [x, y, a, b] : wins) g.set_win(x, y, a, b, true);
    return g;
}

py::dict run_result_dict(const session::RunResult& result) {
    py::dict out;
    int accepted_rounds = 0;
    for (const auto& r : result.transcript.rounds) accepted_rounds += r.accepted ? 1 : 0;
    out["accepted"] = result.accepted;
    out["rounds"] = result.transcript.rounds.size();
    out["accepted_rounds"] = accepted_rounds;
    out["bytes_total"] = result.transcript.total_bytes();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-prover zero-knowledge proofs over homomorphic commitments";

    // field and prime selection
    m.def("choose_prime", [](const BigInt& bound) { return choose_prime(bound)->modulus(); },
          py::arg("min_bound"), "smallest prime >= min_bound");
    m.def("field_bit_length",
          [](const BigInt& q) { return FieldCtx::create(q)->bit_length(); }, py::arg("q"));
    m.def("is_probable_prime", &is_probable_prime, py::arg("n"));

    // commitment primitive: w = a*b + c over F_q
    m.def("commit",
          [](const BigInt& q, const BigInt& a, const BigInt& b, const BigInt& c) {
              auto ctx = FieldCtx::create(q);
              return commit({fe(ctx, a)}, fe(ctx, b), {fe(ctx, c)}).w.value();
          },
          py::arg("q"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("verify_open",
          [](const BigInt& q, const BigInt& a, const BigInt& w, const BigInt& b,
             const BigInt& c) {
              auto ctx = FieldCtx::create(q);
              return verify_open({fe(ctx, a)}, {fe(ctx, w)}, {fe(ctx, b), fe(ctx, c)});
          },
          py::arg("q"), py::arg("a"), py::arg("w"), py::arg("b"), py::arg("c"));
    m.def("combine_commitments",
          [](const BigInt& q, const std::vector<BigInt>& coeffs, const std::vector<BigInt>& ws) {
              auto ctx = FieldCtx::create(q);
              std::vector<FieldElement> cs;
              std::vector<CommitValue> values;
              for (const auto& c : coeffs) cs.push_back(fe(ctx, c));
              for (const auto& w : ws) values.push_back({fe(ctx, w)});
              return combine_linear(cs, values).w.value();
          },
          py::arg("q"), py::arg("coeffs"), py::arg("ws"),
          "linear combination of commitments made under one challenge");

    // subset-sum instances and sessions
    m.def("gen_subset_sum",
          [](std::size_t n, unsigned k, std::uint64_t seed, bool nonempty) {
              auto ctx = ss::choose_params(n, k, 0);
              Rng rng(seed);
              auto [inst, wit] = ss::generate_instance(n, ctx, rng, nonempty);
              py::dict out;
              out["s"] = inst.s;
              out["k"] = inst.k;
              out["v"] = wit.v;
              out["q"] = ctx->modulus();
              return out;
          },
          py::arg("n"), py::arg("K"), py::arg("seed"), py::arg("nonempty") = true);
    m.def("prove_subset_sum",
          [](std::vector<BigInt> s, BigInt k, std::vector<std::uint8_t> v, unsigned security_k,
             int rounds, std::uint64_t seed) {
              auto inst = make_instance(std::move(s), std::move(k));
              auto ctx = ss::choose_params(inst.size(), security_k, inst.sum());
              session::SubsetSumProtocol proto(ctx, inst);
              auto parties = session::honest_parties(proto, ss::SubsetSumWitness{std::move(v)},
                                                     Rng(seed).derive(1).seed());
              return run_result_dict(session::run_protocol(proto, parties, rounds, seed));
          },
          py::arg("s"), py::arg("k"), py::arg("v"), py::arg("K"), py::arg("rounds"),
          py::arg("seed"));
    m.def("attack_subset_sum",
          [](std::vector<BigInt> s, BigInt k, const std::string& strategy, unsigned security_k,
             int rounds, std::uint64_t seed) {
              auto inst = make_instance(std::move(s), std::move(k));
              auto ctx = ss::choose_params(inst.size(), security_k, inst.sum());
              session::SubsetSumProtocol proto(ctx, inst);
              std::uint64_t shared = Rng(seed).derive(2).seed();
              adv::SsCheatStrategy cheat;
              if (strategy == "answer-chall0") {
                  cheat = adv::strategy_answer_chall0(proto, shared);
              } else if (strategy == "guess-chall0") {
                  cheat = adv::strategy_guess_chall(proto, 0, shared);
              } else if (strategy == "guess-chall1") {
                  cheat = adv::strategy_guess_chall(proto, 1, shared);
              } else {
                  throw std::invalid_argument("unknown strategy: " + strategy);
              }
              auto parties = adv::cheat_parties(proto, cheat);
              return run_result_dict(session::run_protocol(proto, parties, rounds, seed));
          },
          py::arg("s"), py::arg("k"), py::arg("strategy"), py::arg("K"), py::arg("rounds"),
          py::arg("seed"));
    m.def("extract_subset_sum",
          [](const BigInt& q, std::vector<BigInt> s, BigInt k, std::vector<std::uint8_t> z,
             std::vector<BigInt> c0, std::vector<BigInt> c1, std::vector<std::uint8_t> x,
             const BigInt& c_sum) -> std::optional<BigInt> {
              auto ctx = FieldCtx::create(q);
              auto inst = make_instance(std::move(s), std::move(k));
              ss::Chall0Response chall0{std::move(z), {}, {}};
              for (const auto& c : c0) chall0.c0.push_back(fe(ctx, c));
              for (const auto& c : c1) chall0.c1.push_back(fe(ctx, c));
              ss::Chall1Response chall1{std::move(x), fe(ctx, c_sum)};
              auto got = ss::extract_a(ctx, inst, chall0, chall1);
              if (!got) return std::nullopt;
              return got->value();
          },
          py::arg("q"), py::arg("s"), py::arg("k"), py::arg("z"), py::arg("c0"), py::arg("c1"),
          py::arg("x"), py::arg("c_sum"),
          "recover a from consistent answers to both challenges, or None");

    // 3SAT
    m.def("prove_three_sat",
          [](unsigned n, const std::vector<std::vector<long>>& clauses,
             std::vector<std::uint8_t> assignment, unsigned security_k, int rounds,
             std::uint64_t seed) {
              auto phi = make_cnf(n, clauses);
              auto ctx = sat::sat_choose_params(phi.clause_count(), security_k);
              session::ThreeSatProtocol proto(ctx, phi);
              auto parties = session::honest_parties(proto, sat::Assignment{std::move(assignment)},
                                                     Rng(seed).derive(1).seed());
              return run_result_dict(session::run_protocol(proto, parties, rounds, seed));
          },
          py::arg("n"), py::arg("clauses"), py::arg("assignment"), py::arg("K"),
          py::arg("rounds"), py::arg("seed"),
          "clauses as triples of signed 1-based variable indices");
    m.def("evaluate_cnf",
          [](unsigned n, const std::vector<std::vector<long>>& clauses,
             std::vector<std::uint8_t> assignment) {
              return sat::evaluate(make_cnf(n, clauses), sat::Assignment{std::move(assignment)});
          },
          py::arg("n"), py::arg("clauses"), py::arg("assignment"));

    // efficiency accounting
    m.def("round_bits", &ss::round_bits, py::arg("n"), py::arg("log_q"));
    m.def("rounds_needed", &ss::rounds_needed, py::arg("K"), py::arg("target_exponent"));
    m.def("bench_subset_sum",
          [](std::size_t n, unsigned k) {
              auto ctx = ss::choose_params(n, k, 0);
              double log_q = ss::log2_modulus(ctx);
              double bits = ss::round_bits(n, log_q);
              int rounds = ss::rounds_needed(k, 100);
              py::dict out;
              out["log2_q"] = log_q;
              out["bit_length"] = ctx->bit_length();
              out["bits_per_round"] = bits;
              out["rounds"] = rounds;
              out["total_mb"] = bits * rounds / 8.0 / 1.0e6;
              return out;
          },
          py::arg("n"), py::arg("K"));

    // game values
    m.def("omega_classical",
          [](std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob,
             const std::vector<std::tuple<int, int, int, int>>& wins) {
              auto value = games::omega_classical(make_game(ia, ib, oa, ob, wins));
              return std::pair<long long, long long>(value.numerator(), value.denominator());
          },
          py::arg("ia"), py::arg("ib"), py::arg("oa"), py::arg("ob"), py::arg("wins"),
          "exact classical value as a (numerator, denominator) pair");
    m.def("omega_coupled_classical",
          [](std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob,
             const std::vector<std::tuple<int, int, int, int>>& wins) {
              auto coup = games::build_coupled(make_game(ia, ib, oa, ob, wins));
              auto value = games::omega_classical(coup.game);
              return std::pair<long long, long long>(value.numerator(), value.denominator());
          },
          py::arg("ia"), py::arg("ib"), py::arg("oa"), py::arg("ob"), py::arg("wins"));
    m.def("check_coupling_bound",
          [](std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob,
             const std::vector<std::tuple<int, int, int, int>>& wins) {
              return games::check_coupling_bound(make_game(ia, ib, oa, ob, wins));
          },
          py::arg("ia"), py::arg("ib"), py::arg("oa"), py::arg("ob"), py::arg("wins"));
    m.def("chsh_wins", []() {
        std::vector<std::tuple<int, int, int, int>> wins;
        auto g = games::chsh();
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        if (g.win(x, y, a, b)) wins.emplace_back(x, y, a, b);
        return wins;
    });

    // zero-knowledge distance and desk-scale soundness
    m.def("zk_exact_subset_sum",
          [](const BigInt& q, std::vector<BigInt> s, BigInt k, std::vector<std::uint8_t> v) {
              auto ctx = FieldCtx::create(q);
              auto inst = make_instance(std::move(s), std::move(k));
              ss::SubsetSumWitness wit{std::move(v)};
              std::vector<std::tuple<std::string, bool, BigInt>> out;
              for (const auto& verifier : zk::standard_ss_verifiers()) {
                  auto tv = zk::tv_exact_subset_sum(ctx, inst, wit, verifier);
                  out.emplace_back(verifier.label, tv.is_zero(), tv.atoms);
              }
              return out;
          },
          py::arg("q"), py::arg("s"), py::arg("k"), py::arg("v"),
          "per-verifier (label, tv_is_zero, atoms) by full enumeration");
    m.def("zk_exact_three_sat",
          [](const BigInt& q, unsigned n, const std::vector<std::vector<long>>& clauses,
             std::vector<std::uint8_t> assignment) {
              auto ctx = FieldCtx::create(q);
              auto phi = make_cnf(n, clauses);
              sat::Assignment s{std::move(assignment)};
              std::vector<std::tuple<std::string, bool, BigInt>> out;
              for (const auto& verifier : zk::standard_sat_verifiers()) {
                  auto tv = zk::tv_exact_three_sat(ctx, phi, s, verifier);
                  out.emplace_back(verifier.label, tv.is_zero(), tv.atoms);
              }
              return out;
          },
          py::arg("q"), py::arg("n"), py::arg("clauses"), py::arg("assignment"));
    m.def("exhaustive_soundness_subset_sum",
          [](std::vector<BigInt> s, BigInt k, const BigInt& q) {
              auto ctx = FieldCtx::create(q);
              auto value =
                  adv::exhaustive_soundness_subset_sum(make_instance(std::move(s), std::move(k)),
                                                       ctx);
              return std::pair<long long, long long>(value.numerator(), value.denominator());
          },
          py::arg("s"), py::arg("k"), py::arg("q"));
}
