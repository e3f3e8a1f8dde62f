#include "relzk/commitment.hpp"

namespace relzk {

CommitValue commit(const CommitChallenge& a, const FieldElement& b, const CommitKey& key) {
    return CommitValue{a.a * b + key.c};
}

bool verify_open(const CommitChallenge& a, const CommitValue& w, const Opening& opening) {
    return w.w == a.a * opening.b + opening.c;
}

CommitValue combine_linear(std::span<const FieldElement> coeffs, std::span<const CommitValue> ws) {
    if (coeffs.size() != ws.size()) {
        throw DimensionMismatch("combine_linear: " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(ws.size()) + " commitments");
    }
    if (coeffs.empty()) throw DimensionMismatch("combine_linear: empty combination");
    FieldElement acc = coeffs[0] * ws[0].w;
    for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc + coeffs[i] * ws[i].w;
    return CommitValue{acc};
}

CommitKey combine_keys(std::span<const FieldElement> coeffs, std::span<const CommitKey> keys) {
    if (coeffs.size() != keys.size()) {
        throw DimensionMismatch("combine_keys: " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(keys.size()) + " keys");
    }
    if (coeffs.empty()) throw DimensionMismatch("combine_keys: empty combination");
    FieldElement acc = coeffs[0] * keys[0].c;
    for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc + coeffs[i] * keys[i].c;
    return CommitKey{acc};
}

std::pair<Opening, Opening> double_open_attack(const CommitValue& w, const FieldElement& b,
                                               const FieldElement& b2, const FieldElement& guess_a) {
    if (b == b2) throw std::invalid_argument("double_open_attack: values must differ");
    return {Opening{b, w.w - guess_a * b}, Opening{b2, w.w - guess_a * b2}};
}

} // namespace relzk
