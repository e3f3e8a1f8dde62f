#include "relzk/zk_sim.hpp"

#include <map>

#include "relzk/wire.hpp"

namespace relzk::zk {

namespace {

using Key = std::vector<std::uint8_t>;

Key ss_view_key(const SsView& view) {
    Key key;
    wire::append_fe(key, view.a);
    wire::append_fe_vec(key, view.resp1.w0);
    wire::append_fe_vec(key, view.resp1.w1);
    key.push_back(view.chall);
    if (const auto* r0 = std::get_if<ss::Chall0Response>(&view.resp2)) {
        wire::append_bytes(key, wire::pack_bits(r0->z));
        wire::append_fe_vec(key, r0->c0);
        wire::append_fe_vec(key, r0->c1);
    } else {
        const auto& r1 = std::get<ss::Chall1Response>(view.resp2);
        wire::append_bytes(key, wire::pack_bits(r1.x));
        wire::append_fe(key, r1.c_sum);
    }
    return key;
}

Key sat_view_key(const SatView& view) {
    Key key;
    wire::append_fe(key, view.a);
    wire::append_fe_vec(key, view.resp1.w_prime);
    wire::append_fe_vec(key, view.resp1.w);
    key.push_back(view.chall);
    if (const auto* r0 = std::get_if<sat::SatChall0Response>(&view.resp2)) {
        wire::append_bytes(key, wire::pack_crumbs(r0->perm.rot));
        wire::append_fe_vec(key, r0->delta);
    } else {
        const auto& r1 = std::get<sat::SatChall1Response>(view.resp2);
        wire::append_bytes(key, wire::pack_crumbs(r1.f));
        wire::append_fe_vec(key, r1.gamma);
    }
    return key;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > cap / base) throw SizeGuardExceeded("exact enumeration exceeds the atom cap");
        out *= base;
    }
    return out;
}

/// every assignment of `digits` base-q digits
template <typename Fn>
void for_each_digits(std::size_t digits, unsigned long q, Fn&& fn) {
    std::vector<unsigned long> d(digits, 0);
    for (;;) {
        fn(std::span<const unsigned long>(d));
        std::size_t i = 0;
        while (i < d.size() && ++d[i] == q) d[i++] = 0;
        if (i == d.size()) return;
    }
}

std::vector<FieldElement> digits_to_vec(const FieldCtxPtr& ctx,
                                        std::span<const unsigned long> digits) {
    std::vector<FieldElement> out;
    out.reserve(digits.size());
    for (auto d : digits) out.emplace_back(ctx, d);
    return out;
}

std::vector<std::uint8_t> mask_to_bits(std::size_t mask, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
    return bits;
}

TvResult tv_from_counts(const std::map<Key, std::int64_t>& diff_counts, const BigInt& atoms,
                        bool exact) {
    TvResult out;
    out.atoms = atoms;
    out.exact = exact;
    for (const auto& [key, d] : diff_counts) {
        out.diff += d >= 0 ? d : -d;
    }
    return out;
}

} // namespace

double TvResult::value() const {
    if (atoms == 0) return 0.0;
    return (BigInt(500000000) * diff / atoms).convert_to<double>() / 1e9;
}

ss::Chall0Response simulate_ss_chall0(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                                      const FieldElement& a, const ss::P1Response& resp1,
                                      std::vector<std::uint8_t> z) {
    ss::Chall0Response out{std::move(z), {}, {}};
    out.c0.reserve(inst.size());
    out.c1.reserve(inst.size());
    FieldElement zero(ctx, 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        FieldElement si(ctx, inst.s[i]);
        out.c0.push_back(resp1.w0[i] - a * (out.z[i] ? si : zero));
        out.c1.push_back(resp1.w1[i] - a * (out.z[i] ? zero : si));
    }
    return out;
}

ss::Chall1Response simulate_ss_chall1(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                                      const FieldElement& a, const ss::P1Response& resp1,
                                      std::vector<std::uint8_t> x) {
    FieldElement selected(ctx, 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        selected = selected + (x[i] ? resp1.w1[i] : resp1.w0[i]);
    }
    return ss::Chall1Response{std::move(x), selected - FieldElement(ctx, inst.k) * a};
}

sat::SatChall0Response simulate_sat_chall0(const sat::Cnf3& phi, const FieldElement& a,
                                           const sat::SatP1Response& resp1, sat::CyclicPerm perm) {
    sat::Cnf3 permuted = sat::apply_perm(perm, phi);
    sat::SatChall0Response out{std::move(perm), {}};
    const std::size_t total = 3 * phi.clause_count();
    out.delta.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        const sat::Literal& lit = permuted.clauses[i / 3][i % 3];
        const FieldElement& wj = resp1.w_prime.at(lit.var - 1);
        out.delta.push_back(lit.negated ? resp1.w[i] + wj - a : resp1.w[i] - wj);
    }
    return out;
}

sat::SatChall1Response simulate_sat_chall1(const FieldElement& a, const sat::SatP1Response& resp1,
                                           std::vector<std::uint8_t> f) {
    sat::SatChall1Response out{std::move(f), {}};
    out.gamma.reserve(out.f.size());
    for (std::size_t i = 0; i < out.f.size(); ++i) {
        out.gamma.push_back(resp1.w.at(3 * i + out.f[i] - 1) - a);
    }
    return out;
}

SsView simulate_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                           const SsVerifier& verifier, Rng& rng) {
    SsView view{verifier.pick_a(ctx),
                ss::P1Response{random_vector(ctx, inst.size(), rng),
                               random_vector(ctx, inst.size(), rng)},
                0,
                ss::P2Response{}};
    view.chall = verifier.pick_chall(view.a, view.resp1);
    auto bits = random_bits(inst.size(), rng);
    if (view.chall == 0) {
        view.resp2 = simulate_ss_chall0(ctx, inst, view.a, view.resp1, std::move(bits));
    } else {
        view.resp2 = simulate_ss_chall1(ctx, inst, view.a, view.resp1, std::move(bits));
    }
    return view;
}

SatView simulate_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi,
                           const SatVerifier& verifier, Rng& rng) {
    const std::size_t m = phi.clause_count();
    SatView view{verifier.pick_a(ctx),
                 sat::SatP1Response{random_vector(ctx, phi.var_count, rng),
                                    random_vector(ctx, 3 * m, rng)},
                 0,
                 sat::SatP2Response{}};
    view.chall = verifier.pick_chall(view.a, view.resp1);
    if (view.chall == 0) {
        sat::CyclicPerm perm;
        for (std::size_t i = 0; i < m; ++i) {
            perm.rot.push_back(static_cast<std::uint8_t>(rng.below(3)));
        }
        view.resp2 = simulate_sat_chall0(phi, view.a, view.resp1, std::move(perm));
    } else {
        std::vector<std::uint8_t> f;
        for (std::size_t i = 0; i < m; ++i) {
            f.push_back(static_cast<std::uint8_t>(1 + rng.below(3)));
        }
        view.resp2 = simulate_sat_chall1(view.a, view.resp1, std::move(f));
    }
    return view;
}

SsView honest_view_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                              const ss::SubsetSumWitness& wit, const SsVerifier& verifier,
                              Rng& rng) {
    auto st = ss::sample_shared_state(ctx, inst.size(), rng);
    SsView view{verifier.pick_a(ctx), ss::P1Response{}, 0, ss::P2Response{}};
    view.resp1 = ss::p1_respond(view.a, inst, st);
    view.chall = verifier.pick_chall(view.a, view.resp1);
    view.resp2 = ss::p2_respond(view.chall, wit, st);
    return view;
}

SatView honest_view_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi,
                              const sat::Assignment& s, const SatVerifier& verifier, Rng& rng) {
    auto st = sat::sample_shared_state(ctx, phi, rng);
    auto e = sat::witness_positions(phi, s);
    SatView view{verifier.pick_a(ctx), sat::SatP1Response{}, 0, sat::SatP2Response{}};
    auto p = sat::formula_bits(sat::apply_perm(st.perm, phi), s);
    view.resp1 = sat::sat_p1_respond(view.a, st, s, p);
    view.chall = verifier.pick_chall(view.a, view.resp1);
    view.resp2 = sat::sat_p2_respond(view.chall, st, phi, e);
    return view;
}

TvResult tv_exact_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                             const ss::SubsetSumWitness& wit, const SsVerifier& verifier) {
    const std::size_t n = inst.size();
    const unsigned long q = ctx->modulus().convert_to<unsigned long>();
    const std::uint64_t masks = checked_pow(2, n, kExactAtomCap);
    const std::uint64_t vecs = checked_pow(q, 2 * n, kExactAtomCap);
    if (masks > kExactAtomCap / vecs) {
        throw SizeGuardExceeded("exact enumeration exceeds the atom cap");
    }
    const std::uint64_t atoms = masks * vecs;

    FieldElement a = verifier.pick_a(ctx);
    std::map<Key, std::int64_t> diff;

    // honest side: every shared state (z, c0, c1)
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        ss::ProverSharedState st;
        st.z = mask_to_bits(mask, n);
        for_each_digits(2 * n, q, [&](std::span<const unsigned long> d) {
            st.c0 = digits_to_vec(ctx, d.subspan(0, n));
            st.c1 = digits_to_vec(ctx, d.subspan(n, n));
            SsView view{a, ss::p1_respond(a, inst, st), 0, ss::P2Response{}};
            view.chall = verifier.pick_chall(a, view.resp1);
            view.resp2 = ss::p2_respond(view.chall, wit, st);
            diff[ss_view_key(view)] += 1;
        });
    }

    // simulated side: every (w0, w1) and branch draw
    for_each_digits(2 * n, q, [&](std::span<const unsigned long> d) {
        SsView view{a,
                    ss::P1Response{digits_to_vec(ctx, d.subspan(0, n)),
                                   digits_to_vec(ctx, d.subspan(n, n))},
                    0, ss::P2Response{}};
        view.chall = verifier.pick_chall(a, view.resp1);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            auto bits = mask_to_bits(mask, n);
            if (view.chall == 0) {
                view.resp2 = simulate_ss_chall0(ctx, inst, a, view.resp1, std::move(bits));
            } else {
                view.resp2 = simulate_ss_chall1(ctx, inst, a, view.resp1, std::move(bits));
            }
            diff[ss_view_key(view)] -= 1;
        }
    });

    return tv_from_counts(diff, atoms, true);
}

TvResult tv_exact_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi, const sat::Assignment& s,
                            const SatVerifier& verifier) {
    const std::size_t m = phi.clause_count();
    const std::size_t n = phi.var_count;
    const unsigned long q = ctx->modulus().convert_to<unsigned long>();
    const std::uint64_t perms = checked_pow(3, m, kExactAtomCap);
    const std::uint64_t vecs = checked_pow(q, 3 * m + n, kExactAtomCap);
    if (perms > kExactAtomCap / vecs) {
        throw SizeGuardExceeded("exact enumeration exceeds the atom cap");
    }
    const std::uint64_t atoms = perms * vecs;

    FieldElement a = verifier.pick_a(ctx);
    auto e = sat::witness_positions(phi, s);
    std::map<Key, std::int64_t> diff;

    auto nth_perm = [m](std::uint64_t idx) {
        sat::CyclicPerm perm;
        perm.rot.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            perm.rot.push_back(static_cast<std::uint8_t>(idx % 3));
            idx /= 3;
        }
        return perm;
    };

    // honest side: every (Pi, c, c')
    for (std::uint64_t pidx = 0; pidx < perms; ++pidx) {
        sat::SatSharedState st;
        st.perm = nth_perm(pidx);
        auto p = sat::formula_bits(sat::apply_perm(st.perm, phi), s);
        for_each_digits(3 * m + n, q, [&](std::span<const unsigned long> d) {
            st.c = digits_to_vec(ctx, d.subspan(0, 3 * m));
            st.c_prime = digits_to_vec(ctx, d.subspan(3 * m, n));
            SatView view{a, sat::sat_p1_respond(a, st, s, p), 0, sat::SatP2Response{}};
            view.chall = verifier.pick_chall(a, view.resp1);
            view.resp2 = sat::sat_p2_respond(view.chall, st, phi, e);
            diff[sat_view_key(view)] += 1;
        });
    }

    // simulated side: every (w', w) and branch draw
    for_each_digits(3 * m + n, q, [&](std::span<const unsigned long> d) {
        SatView view{a,
                     sat::SatP1Response{digits_to_vec(ctx, d.subspan(3 * m, n)),
                                        digits_to_vec(ctx, d.subspan(0, 3 * m))},
                     0, sat::SatP2Response{}};
        view.chall = verifier.pick_chall(a, view.resp1);
        for (std::uint64_t t = 0; t < perms; ++t) {
            if (view.chall == 0) {
                view.resp2 = simulate_sat_chall0(phi, a, view.resp1, nth_perm(t));
            } else {
                std::vector<std::uint8_t> f;
                std::uint64_t idx = t;
                for (std::size_t i = 0; i < m; ++i) {
                    f.push_back(static_cast<std::uint8_t>(1 + idx % 3));
                    idx /= 3;
                }
                view.resp2 = simulate_sat_chall1(a, view.resp1, std::move(f));
            }
            diff[sat_view_key(view)] -= 1;
        }
    });

    return tv_from_counts(diff, atoms, true);
}

TvResult tv_sampled_subset_sum(const FieldCtxPtr& ctx, const ss::SubsetSumInstance& inst,
                               const ss::SubsetSumWitness& wit, const SsVerifier& verifier,
                               std::size_t samples, Rng& rng) {
    std::map<Key, std::int64_t> diff;
    for (std::size_t i = 0; i < samples; ++i) {
        diff[ss_view_key(honest_view_subset_sum(ctx, inst, wit, verifier, rng))] += 1;
        diff[ss_view_key(simulate_subset_sum(ctx, inst, verifier, rng))] -= 1;
    }
    return tv_from_counts(diff, samples, false);
}

TvResult tv_sampled_three_sat(const FieldCtxPtr& ctx, const sat::Cnf3& phi,
                              const sat::Assignment& s, const SatVerifier& verifier,
                              std::size_t samples, Rng& rng) {
    std::map<Key, std::int64_t> diff;
    for (std::size_t i = 0; i < samples; ++i) {
        diff[sat_view_key(honest_view_three_sat(ctx, phi, s, verifier, rng))] += 1;
        diff[sat_view_key(simulate_three_sat(ctx, phi, verifier, rng))] -= 1;
    }
    return tv_from_counts(diff, samples, false);
}

std::vector<SsVerifier> standard_ss_verifiers() {
    auto fixed_a = [](long v) {
        return [v](const FieldCtxPtr& c) { return FieldElement(c, v); };
    };
    std::vector<SsVerifier> out;
    out.push_back({"a0-always-audit", fixed_a(0),
                   [](const FieldElement&, const ss::P1Response&) -> std::uint8_t { return 0; }});
    out.push_back({"a1-always-unveil", fixed_a(1),
                   [](const FieldElement&, const ss::P1Response&) -> std::uint8_t { return 1; }});
    out.push_back({"a2-parity-of-w0", fixed_a(2),
                   [](const FieldElement&, const ss::P1Response& r) -> std::uint8_t {
                       return static_cast<std::uint8_t>(r.w0.front().value() & 1);
                   }});
    out.push_back({"a3-threshold-mix", fixed_a(3),
                   [](const FieldElement& a, const ss::P1Response& r) -> std::uint8_t {
                       FieldElement mix = r.w0.front() + r.w1.back() + a;
                       return mix.value() * 2 >= mix.ctx()->modulus() ? 1 : 0;
                   }});
    out.push_back({"amax-sum-parity", [](const FieldCtxPtr& c) {
                       return FieldElement(c, c->modulus() - 1);
                   },
                   [](const FieldElement&, const ss::P1Response& r) -> std::uint8_t {
                       FieldElement total = r.w0.front();
                       for (std::size_t i = 1; i < r.w0.size(); ++i) total = total + r.w0[i];
                       for (const auto& w : r.w1) total = total + w;
                       return static_cast<std::uint8_t>(total.value() & 1);
                   }});
    return out;
}

std::vector<SatVerifier> standard_sat_verifiers() {
    auto fixed_a = [](long v) {
        return [v](const FieldCtxPtr& c) { return FieldElement(c, v); };
    };
    std::vector<SatVerifier> out;
    out.push_back({"a0-always-audit", fixed_a(0),
                   [](const FieldElement&, const sat::SatP1Response&) -> std::uint8_t {
                       return 0;
                   }});
    out.push_back({"a1-always-unveil", fixed_a(1),
                   [](const FieldElement&, const sat::SatP1Response&) -> std::uint8_t {
                       return 1;
                   }});
    out.push_back({"a2-parity-of-w", fixed_a(2),
                   [](const FieldElement&, const sat::SatP1Response& r) -> std::uint8_t {
                       return static_cast<std::uint8_t>(r.w.front().value() & 1);
                   }});
    out.push_back({"a3-threshold-mix", fixed_a(3),
                   [](const FieldElement& a, const sat::SatP1Response& r) -> std::uint8_t {
                       FieldElement mix = r.w.front() + r.w_prime.front() + a;
                       return mix.value() * 2 >= mix.ctx()->modulus() ? 1 : 0;
                   }});
    out.push_back({"amax-sum-parity", [](const FieldCtxPtr& c) {
                       return FieldElement(c, c->modulus() - 1);
                   },
                   [](const FieldElement&, const sat::SatP1Response& r) -> std::uint8_t {
                       FieldElement total = r.w_prime.front();
                       for (const auto& w : r.w) total = total + w;
                       return static_cast<std::uint8_t>(total.value() & 1);
                   }});
    return out;
}

} // namespace relzk::zk
