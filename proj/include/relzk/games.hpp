#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "relzk/field.hpp"

namespace relzk::games {

using Rational = boost::rational<std::int64_t>;

/// Two-player one-round game with inputs drawn uniformly. Alphabets are
/// 0-based index ranges; V is a total valuation table.
class FiniteGame {
public:
    FiniteGame(std::size_t ia, std::size_t ib, std::size_t oa, std::size_t ob);

    std::size_t alice_inputs() const { return ia_; }
    std::size_t bob_inputs() const { return ib_; }
    std::size_t alice_outputs() const { return oa_; }
    std::size_t bob_outputs() const { return ob_; }

    bool win(std::size_t x, std::size_t y, std::size_t a, std::size_t b) const {
        return table_[index_(x, y, a, b)] != 0;
    }
    void set_win(std::size_t x, std::size_t y, std::size_t a, std::size_t b, bool v) {
        table_[index_(x, y, a, b)] = v ? 1 : 0;
    }

    /// Number of deterministic strategy pairs, as log2 (guards use this).
    double log2_strategy_space() const;

private:
    std::size_t index_(std::size_t x, std::size_t y, std::size_t a, std::size_t b) const;

    std::size_t ia_, ib_, oa_, ob_;
    std::vector<std::uint8_t> table_;
};

struct DetStrategy {
    std::vector<std::size_t> alice; // I_A -> O_A
    std::vector<std::size_t> bob;   // I_B -> O_B
};

/// Coupled variant: Bob receives an ordered pair of distinct base inputs and
/// must answer both. `game` re-encodes pairs as flat alphabets; bob_inputs[i]
/// is the base pair behind coup input i; coup output b*base_ob + b2 encodes
/// the answer pair (b, b2).
struct CoupledGame {
    FiniteGame game;
    std::vector<std::pair<std::size_t, std::size_t>> bob_inputs;
    std::size_t base_ob;
};

namespace detail {

/// Walk every assignment f over the given mixed radix and return the largest
/// value of total(f). This odometer is the brute-force core shared by the
/// game-value search and the desk-scale soundness sweep.
template <typename TotalFn>
std::uint64_t max_over_assignments(std::span<const std::size_t> radix, TotalFn&& total) {
    std::vector<std::size_t> f(radix.size(), 0);
    std::uint64_t best = 0;
    for (;;) {
        std::uint64_t v = total(std::span<const std::size_t>(f));
        best = std::max(best, v);
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == radix[i]) f[i++] = 0;
        if (i == f.size()) return best;
    }
}

} // namespace detail

/// Exact classical value: max over deterministic strategies of the uniform
/// winning probability. Guarded at 2^24 strategy pairs.
Rational omega_classical(const FiniteGame& g);

/// Exact value of a given deterministic strategy.
Rational evaluate_strategy(const FiniteGame& g, const DetStrategy& s);

CoupledGame build_coupled(const FiniteGame& g);

/// Max number of winning Bob outputs over all (x, y, a).
std::size_t projectivity(const FiniteGame& g);

/// Run Bob on both coup inputs separately with the base strategy; Alice
/// unchanged.
DetStrategy rewind_strategy(const DetStrategy& s, const CoupledGame& coup);

/// 2*omega(G) - 1 <= omega(G_coup), compared in exact rationals.
/// Requires |I_B| = 2.
bool check_coupling_bound(const FiniteGame& g);

/// Upper bound on the quantum value implied by the coupling bound:
/// 1/bob_input_count + cbrt(64 * S * omega_coup). Used for parameter
/// selection only; computed in log space so 2^300-scale arguments work.
double coupling_value_bound(const BigInt& s_projective, std::size_t bob_input_count,
                   const BigInt& omega_coup_num, const BigInt& omega_coup_den);

/// The CHSH game: binary alphabets, win iff a xor b == x and y.
FiniteGame chsh();

/// Uniformly random valuation over binary alphabets.
FiniteGame random_binary_game(Rng& rng);

} // namespace relzk::games
