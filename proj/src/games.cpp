#include "relzk/games.hpp"

#include <cmath>

namespace relzk::games {

namespace {

double log2_big(const BigInt& n) {
    unsigned b = boost::multiprecision::msb(n);
    if (b <= 900) return std::log2(n.convert_to<double>());
    BigInt top = n >> (b - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(b - 52);
}

void guard_strategy_space(const FiniteGame& g) {
    if (g.log2_strategy_space() > 24.0) {
        throw SizeGuardExceeded("game strategy space exceeds 2^24 pairs");
    }
}

} // namespace

FiniteGame::FiniteGame(std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob)
    : ia_(ia), ib_(ib), oa_(oa), ob_(ob), table_(ia * ib * oa * ob, 0) {
    if (ia == 0 || ib == 0 || oa == 0 || ob == 0) {
        throw std::invalid_argument("FiniteGame: alphabets must be non-empty");
    }
}

std::size_t FiniteGame::index_(std::size_t x, std::size_t y, std::size_t a, std::size_t b) const {
    return ((x * ib_ + y) * oa_ + a) * ob_ + b;
}

double FiniteGame::log2_strategy_space() const {
    return static_cast<double>(ia_) * std::log2(static_cast<double>(oa_)) +
           static_cast<double>(ib_) * std::log2(static_cast<double>(ob_));
}

Rational omega_classical(const FiniteGame& g) {
    guard_strategy_space(g);
    const std::size_t ia = g.alice_inputs(), ib = g.bob_inputs();
    const std::size_t oa = g.alice_outputs(), ob = g.bob_outputs();

    // Enumerate the smaller side's strategies; the other side best-responds
    // per input, which is exact because inputs are scored independently.
    double alice_side = static_cast<double>(ia) * std::log2(static_cast<double>(oa));
    double bob_side = static_cast<double>(ib) * std::log2(static_cast<double>(ob));

    std::uint64_t best;
    if (alice_side <= bob_side) {
        std::vector<std::size_t> radix(ia, oa);
        best = detail::max_over_assignments(radix, [&](std::span<const std::size_t> fa) {
            std::uint64_t total = 0;
            for (std::size_t y = 0; y < ib; ++y) {
                std::uint64_t local = 0;
                for (std::size_t b = 0; b < ob; ++b) {
                    std::uint64_t wins = 0;
                    for (std::size_t x = 0; x < ia; ++x) wins += g.win(x, y, fa[x], b) ? 1 : 0;
                    local = std::max(local, wins);
                }
                total += local;
            }
            return total;
        });
    } else {
        std::vector<std::size_t> radix(ib, ob);
        best = detail::max_over_assignments(radix, [&](std::span<const std::size_t> fb) {
            std::uint64_t total = 0;
            for (std::size_t x = 0; x < ia; ++x) {
                std::uint64_t local = 0;
                for (std::size_t a = 0; a < oa; ++a) {
                    std::uint64_t wins = 0;
                    for (std::size_t y = 0; y < ib; ++y) wins += g.win(x, y, a, fb[y]) ? 1 : 0;
                    local = std::max(local, wins);
                }
                total += local;
            }
            return total;
        });
    }
    return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(ia * ib));
}

Rational evaluate_strategy(const FiniteGame& g, const DetStrategy& s) {
    if (s.alice.size() != g.alice_inputs() || s.bob.size() != g.bob_inputs()) {
        throw DimensionMismatch("strategy does not cover the game's inputs");
    }
    std::int64_t wins = 0;
    for (std::size_t x = 0; x < g.alice_inputs(); ++x)
        for (std::size_t y = 0; y < g.bob_inputs(); ++y)
            wins += g.win(x, y, s.alice[x], s.bob[y]) ? 1 : 0;
    return Rational(wins, static_cast<std::int64_t>(g.alice_inputs() * g.bob_inputs()));
}

CoupledGame build_coupled(const FiniteGame& g) {
    if (g.bob_inputs() < 2) {
        throw std::invalid_argument("build_coup: Bob needs at least two inputs");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t y = 0; y < g.bob_inputs(); ++y)
        for (std::size_t y2 = 0; y2 < g.bob_inputs(); ++y2)
            if (y != y2) pairs.emplace_back(y, y2);

    const std::size_t ob = g.bob_outputs();
    FiniteGame coup(g.alice_inputs(), pairs.size(), g.alice_outputs(), ob * ob);
    for (std::size_t x = 0; x < g.alice_inputs(); ++x)
        for (std::size_t p = 0; p < pairs.size(); ++p)
            for (std::size_t a = 0; a < g.alice_outputs(); ++a)
                for (std::size_t b = 0; b < ob; ++b)
                    for (std::size_t b2 = 0; b2 < ob; ++b2)
                        coup.set_win(x, p, a, b * ob + b2,
                                     g.win(x, pairs[p].first, a, b) &&
                                         g.win(x, pairs[p].second, a, b2));
    return CoupledGame{std::move(coup), std::move(pairs), ob};
}

std::size_t projectivity(const FiniteGame& g) {
    std::size_t worst = 0;
    for (std::size_t x = 0; x < g.alice_inputs(); ++x)
        for (std::size_t y = 0; y < g.bob_inputs(); ++y)
            for (std::size_t a = 0; a < g.alice_outputs(); ++a) {
                std::size_t count = 0;
                for (std::size_t b = 0; b < g.bob_outputs(); ++b)
                    if (g.win(x, y, a, b)) ++count;
                worst = std::max(worst, count);
            }
    return worst;
}

DetStrategy rewind_strategy(const DetStrategy& s, const CoupledGame& coup) {
    DetStrategy out;
    out.alice = s.alice;
    out.bob.reserve(coup.bob_inputs.size());
    for (const auto& [y, y2] : coup.bob_inputs) {
        out.bob.push_back(s.bob.at(y) * coup.base_ob + s.bob.at(y2));
    }
    return out;
}

bool check_coupling_bound(const FiniteGame& g) {
    if (g.bob_inputs() != 2) {
        throw std::invalid_argument("check_coupling_bound: hypothesis requires |I_B| = 2");
    }
    Rational omega = omega_classical(g);
    Rational omega_coup = omega_classical(build_coupled(g).game);
    return 2 * omega - 1 <= omega_coup;
}

double coupling_value_bound(const BigInt& s_projective, std::size_t bob_input_count,
                   const BigInt& omega_coup_num, const BigInt& omega_coup_den) {
    if (s_projective < 1 || bob_input_count == 0 || omega_coup_den <= 0 || omega_coup_num < 0) {
        throw std::invalid_argument("coupling_value_bound: bad arguments");
    }
    if (omega_coup_num == 0) return 1.0 / static_cast<double>(bob_input_count);
    double log_term =
        6.0 + log2_big(s_projective) + log2_big(omega_coup_num) - log2_big(omega_coup_den);
    return 1.0 / static_cast<double>(bob_input_count) + std::exp2(log_term / 3.0);
}

FiniteGame chsh() {
    FiniteGame g(2, 2, 2, 2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) g.set_win(x, y, a, b, (a ^ b) == (x & y));
    return g;
}

FiniteGame random_binary_game(Rng& rng) {
    FiniteGame g(2, 2, 2, 2);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t b = 0; b < 2; ++b) g.set_win(x, y, a, b, rng.next_bit() != 0);
    return g;
}

} // namespace relzk::games
