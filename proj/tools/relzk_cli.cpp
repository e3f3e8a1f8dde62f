// relzk: two-prover zero-knowledge proofs for Subset Sum and 3SAT on the
// relativistic homomorphic commitment scheme. Subcommands: gen, prove,
// attack, bench, game-check, zk-check. Exit codes: 0 accept/pass,
// 1 reject/fail, 2 usage or config error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "relzk/adversary.hpp"
#include "relzk/instance_io.hpp"
#include "relzk/session.hpp"
#include "relzk/zk_sim.hpp"

using namespace relzk;

namespace {

struct KeyValues {
    std::vector<std::pair<std::string, std::string>> pairs;

    void add(const std::string& key, const std::string& value) { pairs.emplace_back(key, value); }
    void add(const std::string& key, double value, int precision = 6) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(precision);
        os << value;
        add(key, os.str());
    }
    void add(const std::string& key, std::uint64_t value) { add(key, std::to_string(value)); }

    void write_file(const std::string& path) const {
        std::ostringstream os;
        for (const auto& [k, v] : pairs) os << k << ' ' << v << '\n';
        io::write_text_file(path, os.str());
    }
};

std::string format_rational(const games::Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

std::string format_double(double v, int precision) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(precision);
    os << v;
    return os.str();
}

void write_transcript(const std::string& path, const session::Transcript& transcript) {
    std::ostringstream os;
    for (const auto& line : transcript.export_lines()) os << line << '\n';
    io::write_text_file(path, os.str());
}

void print_round_verdicts(const session::Transcript& transcript) {
    const std::size_t rounds = transcript.rounds.size();
    std::size_t accepted = 0;
    for (const auto& r : transcript.rounds) accepted += r.accepted ? 1 : 0;
    if (rounds <= 32) {
        for (std::size_t i = 0; i < rounds; ++i) {
            const auto& r = transcript.rounds[i];
            std::cout << "round " << i << " chall=" << int(r.chall) << ": "
                      << (r.accepted ? "accept" : "reject (" + r.reason + ")") << '\n';
        }
    } else {
        for (std::size_t i = 0; i < rounds; ++i) {
            const auto& r = transcript.rounds[i];
            if (!r.accepted) {
                std::cout << "round " << i << " chall=" << int(r.chall) << ": reject ("
                          << r.reason << ")\n";
            }
        }
        std::cout << "rounds accepted: " << accepted << "/" << rounds << '\n';
    }
}

template <class Proto>
void print_byte_accounting(const session::Transcript& transcript, const Proto& proto,
                           KeyValues& kv) {
    auto acc = session::byte_accounting(transcript, proto);
    std::cout << "bytes total " << acc.total_bytes << " (V1 "
              << acc.by_party[std::size_t(session::PartyId::V1)] << ", V2 "
              << acc.by_party[std::size_t(session::PartyId::V2)] << ", P1 "
              << acc.by_party[std::size_t(session::PartyId::P1)] << ", P2 "
              << acc.by_party[std::size_t(session::PartyId::P2)] << ")\n";
    std::cout << "bits/round: formula " << format_double(acc.formula_bits_mean, 1)
              << " (chall0 " << format_double(acc.formula_bits_chall0, 1) << ", chall1 "
              << format_double(acc.formula_bits_chall1, 1) << "), realized "
              << format_double(acc.realized_bits_per_round, 1) << '\n';
    kv.add("bytes_total", std::uint64_t(acc.total_bytes));
    kv.add("formula_bits_mean", acc.formula_bits_mean, 1);
    kv.add("formula_bits_chall0", acc.formula_bits_chall0, 1);
    kv.add("formula_bits_chall1", acc.formula_bits_chall1, 1);
    kv.add("realized_bits_per_round", acc.realized_bits_per_round, 1);
}

int cmd_gen(const std::string& protocol, std::size_t n, std::size_t m, unsigned k,
            std::uint64_t seed, const std::string& out, bool nonempty,
            const std::string& dimacs_in, const std::string& assignment_bits) {
    if (protocol == "subset-sum") {
        auto ctx = ss::choose_params(n, k, 0);
        Rng rng(seed);
        auto [inst, wit] = ss::generate_instance(n, ctx, rng, nonempty);
        io::write_subset_sum_file(out, io::SsRecord{inst, wit});
        std::cout << "wrote subset-sum instance: n=" << n << " k=" << inst.k.str() << " to "
                  << out << '\n';
        return 0;
    }
    if (!dimacs_in.empty()) {
        // validation path: check a provided assignment against a CNF
        auto record = io::read_dimacs_file(dimacs_in);
        if (!assignment_bits.empty()) {
            sat::Assignment s;
            for (char ch : assignment_bits) {
                if (ch != '0' && ch != '1') throw DecodeError("assignment must be 0/1 bits");
                s.bits.push_back(ch == '1');
            }
            record.assignment = s;
        }
        if (!record.assignment) {
            std::cerr << "no assignment to validate (use --assignment or a 'c assignment' line)\n";
            return 2;
        }
        if (!sat::evaluate(record.phi, *record.assignment)) {
            std::cout << "rejected: assignment does not satisfy the formula\n";
            return 1;
        }
        io::write_dimacs_file(out, record);
        std::cout << "validated assignment; wrote " << out << '\n';
        return 0;
    }
    Rng rng(seed);
    auto [phi, plant] = sat::generate_satisfiable(static_cast<unsigned>(n), m, rng);
    io::write_dimacs_file(out, io::CnfRecord{phi, plant});
    std::cout << "wrote satisfiable 3-CNF: n=" << n << " m=" << m << " to " << out << '\n';
    return 0;
}

int finish_run(bool accepted, const session::Transcript& transcript, unsigned k, int rounds,
               KeyValues& kv, const std::string& transcript_out, const std::string& export_path) {
    print_round_verdicts(transcript);
    double log2_eps = -std::log2(0.5 + std::exp2(-double(k)));
    std::cout << "single-round soundness error: 1/2 + 2^-" << k << '\n';
    std::cout << "soundness claim after " << rounds << " rounds: 2^-"
              << format_double(log2_eps * rounds, 1) << '\n';
    std::cout << (accepted ? "ACCEPT" : "REJECT") << '\n';
    kv.add("accepted", std::string(accepted ? "1" : "0"));
    kv.add("rounds", std::uint64_t(rounds));
    kv.add("soundness_exponent", log2_eps * rounds, 1);
    if (!transcript_out.empty()) write_transcript(transcript_out, transcript);
    if (!export_path.empty()) kv.write_file(export_path);
    return accepted ? 0 : 1;
}

int cmd_prove(const std::string& protocol, const std::string& instance_path, unsigned k,
              int rounds, std::uint64_t seed, const std::string& transcript_out,
              const std::string& export_path) {
    if (rounds <= 0) rounds = ss::rounds_needed(k, 100);
    KeyValues kv;
    kv.add("protocol", protocol);
    kv.add("seed", std::uint64_t(seed));

    if (protocol == "subset-sum") {
        auto record = io::read_subset_sum_file(instance_path);
        auto ctx = ss::choose_params(record.inst.size(), k, record.inst.sum());
        kv.add("n", std::uint64_t(record.inst.size()));
        kv.add("log2_q", ss::log2_modulus(ctx), 1);
        session::SubsetSumProtocol proto(ctx, record.inst);
        std::cout << "subset-sum instance: n=" << record.inst.size() << ", bit length "
                  << ctx->bit_length() << ", rounds " << rounds << '\n';

        session::RunResult result;
        if (record.witness) {
            if (!ss::check_witness(record.inst, *record.witness)) {
                std::cerr << "instance/witness mismatch: the witness does not hit the target\n";
                return 2;
            }
            auto parties =
                session::honest_parties(proto, *record.witness, Rng(seed).derive(1).seed());
            result = session::run_protocol(proto, parties, rounds, seed);
        } else {
            std::cout << "no witness in the instance file; running the witnessless "
                         "answer-one-challenge strategy\n";
            auto strategy = adv::strategy_answer_chall0(proto, Rng(seed).derive(1).seed());
            auto parties = adv::cheat_parties(proto, strategy);
            result = session::run_protocol(proto, parties, rounds, seed);
        }
        print_byte_accounting(result.transcript, proto, kv);
        return finish_run(result.accepted, result.transcript, k, rounds, kv, transcript_out,
                          export_path);
    }

    auto record = io::read_dimacs_file(instance_path);
    if (!record.assignment) {
        std::cerr << "3sat proving requires an assignment ('c assignment' line)\n";
        return 2;
    }
    if (!sat::evaluate(record.phi, *record.assignment)) {
        std::cerr << "instance/witness mismatch: assignment does not satisfy the formula\n";
        return 2;
    }
    auto ctx = sat::sat_choose_params(record.phi.clause_count(), k);
    kv.add("n", std::uint64_t(record.phi.var_count));
    kv.add("m", std::uint64_t(record.phi.clause_count()));
    kv.add("log2_q", ss::log2_modulus(ctx), 1);
    session::ThreeSatProtocol proto(ctx, record.phi);
    std::cout << "3sat instance: n=" << record.phi.var_count << ", m="
              << record.phi.clause_count() << ", bit length " << ctx->bit_length() << ", rounds "
              << rounds << '\n';
    auto parties = session::honest_parties(proto, *record.assignment, Rng(seed).derive(1).seed());
    auto result = session::run_protocol(proto, parties, rounds, seed);
    print_byte_accounting(result.transcript, proto, kv);
    return finish_run(result.accepted, result.transcript, k, rounds, kv, transcript_out,
                      export_path);
}

int cmd_attack(const std::string& protocol, const std::string& instance_path,
               const std::string& strategy_name, int rounds, unsigned k, std::uint64_t q,
               std::uint64_t seed, const std::string& export_path) {
    KeyValues kv;
    kv.add("protocol", protocol);
    kv.add("strategy", strategy_name);
    kv.add("seed", std::uint64_t(seed));

    if (strategy_name == "exhaustive") {
        auto ctx = choose_prime(q);
        games::Rational value(0);
        if (protocol == "subset-sum") {
            auto record = io::read_subset_sum_file(instance_path);
            if (record.inst.sum() >= ctx->modulus()) {
                std::cerr << "instance sum exceeds the tiny field; pick a larger --q\n";
                return 2;
            }
            value = adv::exhaustive_soundness_subset_sum(record.inst, ctx);
        } else {
            auto record = io::read_dimacs_file(instance_path);
            value = adv::exhaustive_soundness_three_sat(record.phi, ctx);
        }
        std::cout << "exact max single-round acceptance over deterministic prover pairs at Q="
                  << ctx->modulus().str() << ": " << format_rational(value) << " = "
                  << format_double(boost::rational_cast<double>(value), 6) << '\n';
        kv.add("q", ctx->modulus().str());
        kv.add("value", format_rational(value));
        if (!export_path.empty()) kv.write_file(export_path);
        return 0;
    }

    if (protocol != "subset-sum") {
        std::cerr << "session attack strategies are defined for --protocol subset-sum\n";
        return 2;
    }
    auto record = io::read_subset_sum_file(instance_path);
    auto ctx = ss::choose_params(record.inst.size(), k, record.inst.sum());
    session::SubsetSumProtocol proto(ctx, record.inst);

    adv::SsCheatStrategy strategy;
    std::uint64_t shared_seed = Rng(seed).derive(2).seed();
    if (strategy_name == "answer-chall0") {
        strategy = adv::strategy_answer_chall0(proto, shared_seed);
    } else if (strategy_name == "guess-chall0") {
        strategy = adv::strategy_guess_chall(proto, 0, shared_seed);
    } else if (strategy_name == "guess-chall1") {
        strategy = adv::strategy_guess_chall(proto, 1, shared_seed);
    } else {
        std::cerr << "unknown strategy: " << strategy_name
                  << " (try answer-chall0, guess-chall0, guess-chall1, exhaustive)\n";
        return 2;
    }

    auto parties = adv::cheat_parties(proto, strategy);
    auto result = session::run_protocol(proto, parties, rounds, seed);
    int accepted = 0;
    for (const auto& r : result.transcript.rounds) accepted += r.accepted ? 1 : 0;
    double freq = rounds > 0 ? double(accepted) / rounds : 0.0;

    std::cout << "strategy " << strategy.label << " on n=" << record.inst.size()
              << " (witnessless)\n";
    std::cout << "rounds " << rounds << ", accepted " << accepted << ", frequency "
              << format_double(freq, 4) << '\n';
    std::cout << "reference: 1/2 = 0.5000, per-round bound 1/2 + 2^-" << k << " = "
              << format_double(0.5 + std::exp2(-double(k)), 4) << '\n';
    std::cout << "overall: " << (result.accepted ? "ACCEPT" : "REJECT") << '\n';
    kv.add("rounds", std::uint64_t(rounds));
    kv.add("accepted_rounds", std::uint64_t(accepted));
    kv.add("frequency", freq, 4);
    if (!export_path.empty()) kv.write_file(export_path);
    return 0;
}

int cmd_bench(const std::string& protocol, std::size_t n, std::size_t m, unsigned k,
              std::uint64_t seed, bool mult_bench, const std::string& export_path) {
    KeyValues kv;
    kv.add("protocol", protocol);
    FieldCtxPtr ctx;
    double bits = 0;

    if (protocol == "subset-sum") {
        ctx = ss::choose_params(n, k, 0);
        bits = ss::round_bits(n, ss::log2_modulus(ctx));
        kv.add("n", std::uint64_t(n));
    } else {
        ctx = sat::sat_choose_params(m, k);
        bits = sat::sat_round_bits(n, m, ss::log2_modulus(ctx));
        kv.add("n", std::uint64_t(n));
        kv.add("m", std::uint64_t(m));
    }
    kv.add("K", std::uint64_t(k));

    int rounds = ss::rounds_needed(k, 100);
    double kb_per_round = bits / 8.0 / 1000.0;
    double total_mb = bits * rounds / 8.0 / 1.0e6;

    std::cout << "protocol       " << protocol << '\n';
    std::cout << "log2_q         " << format_double(ss::log2_modulus(ctx), 1) << '\n';
    std::cout << "bit_length     " << ctx->bit_length() << '\n';
    std::cout << "bits_per_round " << format_double(bits, 1) << '\n';
    std::cout << "kb_per_round   " << format_double(kb_per_round, 1) << '\n';
    std::cout << "rounds_2^-100  " << rounds << '\n';
    std::cout << "total_mb       " << format_double(total_mb, 2) << '\n';
    kv.add("log2_q", ss::log2_modulus(ctx), 1);
    kv.add("bit_length", std::uint64_t(ctx->bit_length()));
    kv.add("bits_per_round", bits, 1);
    kv.add("kb_per_round", kb_per_round, 1);
    kv.add("rounds", std::uint64_t(rounds));
    kv.add("total_mb", total_mb, 2);

    // realized wire bytes from an actual honest round of each branch
    if (protocol == "subset-sum") {
        Rng rng(seed);
        auto [inst, wit] = ss::generate_instance(n, ctx, rng, true);
        session::SubsetSumProtocol proto(ctx, inst);
        std::size_t per_round[2];
        for (std::uint8_t chall : {0, 1}) {
            auto parties = session::honest_parties(proto, wit, 7);
            parties.v2_pick_chall = [chall](int, Rng&) { return chall; };
            auto result = session::run_protocol(proto, parties, 1, seed);
            per_round[chall] = result.transcript.total_bytes();
        }
        double realized_mean = (double(per_round[0]) + double(per_round[1])) / 2.0;
        std::cout << "bytes_realized chall0 " << per_round[0] << ", chall1 " << per_round[1]
                  << ", mean " << format_double(realized_mean, 1) << '\n';
        kv.add("bytes_realized_chall0", std::uint64_t(per_round[0]));
        kv.add("bytes_realized_chall1", std::uint64_t(per_round[1]));
        kv.add("bytes_realized_mean", realized_mean, 1);
    }

    if (!export_path.empty()) kv.write_file(export_path);

    if (mult_bench) {
        // wall-clock measurement; not part of the deterministic output
        Rng rng(seed);
        auto x = FieldElement::random(ctx, rng);
        auto y = FieldElement::random(ctx, rng);
        const int iters = 200000;
        auto start = std::chrono::steady_clock::now();
        for (int i = 0; i < iters; ++i) y = x * y;
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::cout << "field_mul_ops_per_sec " << format_double(iters / elapsed.count(), 0)
                  << " (bit length " << ctx->bit_length() << "; timing varies per run)\n";
    }
    return 0;
}

int cmd_game_check(const std::string& game_path, int random_count, bool use_chsh,
                   std::uint64_t seed, const std::string& export_path) {
    KeyValues kv;
    if (random_count > 0) {
        Rng rng(seed);
        int pass = 0;
        for (int i = 0; i < random_count; ++i) {
            if (games::check_coupling_bound(games::random_binary_game(rng))) ++pass;
        }
        std::cout << pass << '/' << random_count
                  << " random binary games satisfy 2*omega - 1 <= omega_coup\n";
        kv.add("games", std::uint64_t(random_count));
        kv.add("pass", std::uint64_t(pass));
        if (!export_path.empty()) kv.write_file(export_path);
        return pass == random_count ? 0 : 1;
    }

    games::FiniteGame game = use_chsh ? games::chsh() : io::read_game_file(game_path);
    auto omega = games::omega_classical(game);
    std::cout << "omega = " << format_rational(omega) << '\n';
    kv.add("omega", format_rational(omega));
    bool ok = true;
    if (game.bob_inputs() >= 2) {
        auto coup = games::build_coupled(game);
        auto omega_coup = games::omega_classical(coup.game);
        std::cout << "omega_coup = " << format_rational(omega_coup) << '\n';
        kv.add("omega_coup", format_rational(omega_coup));
        if (game.bob_inputs() == 2) {
            ok = 2 * omega - 1 <= omega_coup;
            std::cout << "coupling bound 2*omega - 1 <= omega_coup: " << (ok ? "holds" : "FAILS")
                      << '\n';
            kv.add("bound_holds", std::string(ok ? "1" : "0"));
        }
    }
    std::cout << "projectivity S = " << games::projectivity(game) << '\n';
    kv.add("projectivity", std::uint64_t(games::projectivity(game)));
    if (!export_path.empty()) kv.write_file(export_path);
    return ok ? 0 : 1;
}

int cmd_zk_check(const std::string& protocol, std::size_t n, std::size_t m, std::uint64_t q,
                 const std::string& mode, std::size_t samples, std::uint64_t seed,
                 const std::string& instance_path, const std::string& export_path) {
    KeyValues kv;
    kv.add("protocol", protocol);
    kv.add("mode", mode);
    auto ctx = choose_prime(q);
    kv.add("q", ctx->modulus().str());
    bool all_zero = true;

    auto report = [&](const std::string& label, const zk::TvResult& tv) {
        std::string value = tv.is_zero() ? "0" : format_double(tv.value(), 6);
        std::cout << "verifier " << label << ": TV = " << value
                  << (tv.exact ? " (exact, " : " (sampled, ") << tv.atoms.str()
                  << (tv.exact ? " atoms)" : " samples)") << '\n';
        kv.add("tv." + label, value);
        all_zero = all_zero && tv.is_zero();
    };

    if (protocol == "subset-sum") {
        ss::SubsetSumInstance inst;
        ss::SubsetSumWitness wit;
        if (!instance_path.empty()) {
            auto record = io::read_subset_sum_file(instance_path);
            if (!record.witness) {
                std::cerr << "zk-check needs a witness in the instance file\n";
                return 2;
            }
            inst = record.inst;
            wit = *record.witness;
        } else {
            Rng rng(seed);
            std::tie(inst, wit) = ss::generate_instance(n, ctx, rng, true);
        }
        if (inst.sum() >= ctx->modulus()) {
            std::cerr << "instance sum exceeds the field; pick a larger --q\n";
            return 2;
        }
        kv.add("n", std::uint64_t(inst.size()));
        for (const auto& verifier : zk::standard_ss_verifiers()) {
            if (mode == "exact") {
                report(verifier.label, zk::tv_exact_subset_sum(ctx, inst, wit, verifier));
            } else {
                Rng rng(Rng(seed).derive(3).seed());
                report(verifier.label,
                       zk::tv_sampled_subset_sum(ctx, inst, wit, verifier, samples, rng));
            }
        }
    } else {
        sat::Cnf3 phi;
        sat::Assignment s;
        if (!instance_path.empty()) {
            auto record = io::read_dimacs_file(instance_path);
            if (!record.assignment) {
                std::cerr << "zk-check needs a 'c assignment' line in the CNF\n";
                return 2;
            }
            phi = record.phi;
            s = *record.assignment;
        } else {
            Rng rng(seed);
            std::tie(phi, s) = sat::generate_satisfiable(static_cast<unsigned>(n), m, rng);
        }
        if (!sat::evaluate(phi, s)) {
            std::cerr << "assignment does not satisfy the formula\n";
            return 2;
        }
        kv.add("n", std::uint64_t(phi.var_count));
        kv.add("m", std::uint64_t(phi.clause_count()));
        for (const auto& verifier : zk::standard_sat_verifiers()) {
            if (mode == "exact") {
                report(verifier.label, zk::tv_exact_three_sat(ctx, phi, s, verifier));
            } else {
                Rng rng(Rng(seed).derive(3).seed());
                report(verifier.label,
                       zk::tv_sampled_three_sat(ctx, phi, s, verifier, samples, rng));
            }
        }
    }

    if (mode == "exact") {
        std::cout << (all_zero ? "perfect zero knowledge at this size: TV = 0 for every verifier"
                               : "NONZERO TV DISTANCE FOUND")
                  << '\n';
    }
    kv.add("all_zero", std::string(all_zero ? "1" : "0"));
    if (!export_path.empty()) kv.write_file(export_path);
    return (mode != "exact" || all_zero) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-prover zero-knowledge proofs over homomorphic commitments"};
    app.require_subcommand(1);

    std::string protocol = "subset-sum";
    std::size_t n = 20, m = 4;
    unsigned k = 5;
    int rounds = 0;
    std::uint64_t seed = 1, q = 11;
    std::string instance_path, out_path, transcript_out, export_path;
    std::string strategy_name = "answer-chall0", mode = "exact";
    std::size_t samples = 100000;
    bool nonempty = false, use_chsh = false, mult_bench = false;
    int random_count = 0;
    std::string dimacs_in, assignment_bits, game_path;

    auto add_common = [&](CLI::App* cmd, bool with_protocol = true) {
        if (with_protocol) {
            cmd->add_option("--protocol", protocol, "subset-sum or 3sat")
                ->check(CLI::IsMember({"subset-sum", "3sat"}));
        }
        cmd->add_option("--seed", seed, "deterministic seed")->envname("RELZK_SEED");
        cmd->add_option("--export", export_path, "write machine-readable key-value pairs here");
    };

    auto* gen = app.add_subcommand("gen", "generate or validate an instance file");
    add_common(gen);
    gen->add_option("--n", n, "set size / variable count");
    gen->add_option("--m", m, "clause count (3sat)");
    gen->add_option("--K", k, "soundness parameter (sets the field size)");
    gen->add_option("--out", out_path, "output path")->required();
    gen->add_flag("--nonempty", nonempty, "resample until the chosen subset is non-empty");
    gen->add_option("--dimacs", dimacs_in, "validate this CNF instead of generating");
    gen->add_option("--assignment", assignment_bits, "assignment bits for validation");

    auto* prove = app.add_subcommand("prove", "run the interactive proof");
    add_common(prove);
    prove->add_option("--instance", instance_path, "instance file")->required();
    prove->add_option("--K", k, "soundness parameter");
    prove->add_option("--rounds", rounds, "rounds (default: enough for 2^-100)");
    prove->add_option("--transcript-out", transcript_out, "write the message log here");

    auto* attack = app.add_subcommand("attack", "run a witnessless cheating strategy");
    add_common(attack);
    attack->add_option("--instance", instance_path, "instance file")->required();
    attack->add_option("--strategy", strategy_name,
                       "answer-chall0 | guess-chall0 | guess-chall1 | exhaustive");
    attack->add_option("--rounds", rounds, "rounds to play")->default_val(10000);
    attack->add_option("--K", k, "soundness parameter for the field");
    attack->add_option("--q", q, "tiny field bound for --strategy exhaustive");

    auto* bench = app.add_subcommand("bench", "efficiency accounting for the chosen parameters");
    add_common(bench);
    bench->add_option("--n", n, "instance size")->default_val(300);
    bench->add_option("--m", m, "clause count (3sat)");
    bench->add_option("--K", k, "soundness parameter");
    bench->add_flag("--mult-bench", mult_bench,
                    "also measure field multiplication throughput (wall clock)");

    auto* game_check = app.add_subcommand("game-check", "game values and the coupling bound");
    add_common(game_check, false);
    game_check->add_option("--game", game_path, "game description file");
    game_check->add_option("--random", random_count, "check this many random binary games");
    game_check->add_flag("--chsh", use_chsh, "use the built-in CHSH game");

    auto* zk_check = app.add_subcommand("zk-check", "honest-vs-simulated view distance");
    add_common(zk_check);
    zk_check->add_option("--n", n, "instance size")->default_val(2);
    zk_check->add_option("--m", m, "clause count (3sat)")->default_val(1);
    zk_check->add_option("--q", q, "field bound (smallest prime >= q)")->default_val(5);
    zk_check->add_option("--mode", mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}));
    zk_check->add_option("--samples", samples, "sample count for --mode sampled");
    zk_check->add_option("--instance", instance_path, "use this instance instead of generating");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (protocol == "3sat" && gen->count("--n") == 0) n = 5;
            return cmd_gen(protocol, n, m, k, seed, out_path, nonempty, dimacs_in,
                           assignment_bits);
        }
        if (prove->parsed()) {
            return cmd_prove(protocol, instance_path, k, rounds, seed, transcript_out,
                             export_path);
        }
        if (attack->parsed()) {
            return cmd_attack(protocol, instance_path, strategy_name, rounds, k, q, seed,
                              export_path);
        }
        if (bench->parsed()) {
            return cmd_bench(protocol, n, m, k, seed, mult_bench, export_path);
        }
        if (game_check->parsed()) {
            if (game_path.empty() && random_count == 0 && !use_chsh) {
                std::cerr << "game-check needs --game, --random, or --chsh\n";
                return 2;
            }
            return cmd_game_check(game_path, random_count, use_chsh, seed, export_path);
        }
        if (zk_check->parsed()) {
            return cmd_zk_check(protocol, n, m, q, mode, samples, seed, instance_path,
                                export_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
