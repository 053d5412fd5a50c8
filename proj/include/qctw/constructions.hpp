#ifndef QCTW_CONSTRUCTIONS_HPP
#define QCTW_CONSTRUCTIONS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qctw/analysis.hpp"
#include "qctw/errors.hpp"
#include "qctw/qc_matrix.hpp"

namespace qctw {

// Predicted parameters of the two-weight family: block length i(q^t - 1)/(q - 1),
// dimension 2t, weights (i - 1)q^(t-1) and i*q^(t-1), with i the block count p.
struct Su2Params {
    unsigned q;
    unsigned t;
    unsigned p;
    std::size_t n;
    unsigned k;
    std::size_t w1;
    std::size_t w2;
};

namespace detail {

inline std::uint64_t int_pow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace detail

inline Su2Params su2_params(const Field& field, unsigned t, unsigned p) {
    const unsigned q = field.order();
    if (std::gcd(q - 1, t) != 1)
        throw std::invalid_argument("two-weight construction needs gcd(q - 1, t) = 1; got q = " + std::to_string(q) +
                                    ", t = " + std::to_string(t));
    const std::uint64_t qt = detail::int_pow(q, t);
    if (p < 2 || p > qt)
        throw std::invalid_argument("block count must satisfy 2 <= p <= q^t; got p = " + std::to_string(p));
    const std::size_t m = std::size_t((qt - 1) / (q - 1));
    const std::uint64_t w = qt / q;  // q^(t-1)
    return {q, t, p, std::size_t(p) * m, 2 * t, std::size_t((p - 1) * w), std::size_t(p * w)};
}

// One block factor of the second generator row: a * x^e with a nonzero.
// The absent value is the zero block.
struct BlockMultiplier {
    Residue scale;
    std::size_t shift;

    bool operator==(const BlockMultiplier&) const = default;
};

// The full second-row block list, one entry per circulant block. Pairwise
// distinctness (the zero marker included) is what limits every nonzero
// codeword to at most one vanishing block and so forces the two-weight
// structure.
using MultiplierSet = std::vector<std::optional<BlockMultiplier>>;

inline void validate_multipliers(const Field& field, std::size_t m, const MultiplierSet& multipliers) {
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (multipliers[i]) {
            if (multipliers[i]->scale == 0 || multipliers[i]->scale >= field.order())
                throw std::invalid_argument("multiplier scale must be a nonzero field residue");
            if (multipliers[i]->shift >= m)
                throw std::invalid_argument("multiplier shift must be below the block order");
        }
        for (std::size_t j = i + 1; j < multipliers.size(); ++j)
            if (multipliers[i] == multipliers[j])
                throw std::invalid_argument("block multipliers must be pairwise distinct");
    }
}

// The canonical multiplier list for p blocks: the zero marker, then the first
// p - 1 factors in the fixed order x^0, x^1, ..., x^(m-1), 2x^0, 2x^1, ...
// Over GF(2) this is the zero block followed by x^0 ... x^(p-2).
inline MultiplierSet default_multipliers(const Field& field, unsigned t, unsigned p) {
    const unsigned q = field.order();
    const std::uint64_t qt = detail::int_pow(q, t);
    if (p < 2 || p > qt)
        throw std::invalid_argument("block count must satisfy 2 <= p <= q^t; got p = " + std::to_string(p));
    const std::size_t m = std::size_t((qt - 1) / (q - 1));
    MultiplierSet out;
    out.reserve(p);
    out.push_back(std::nullopt);
    for (unsigned j = 0; j + 1 < p; ++j)
        out.push_back(BlockMultiplier{Residue(1 + j / m), std::size_t(j % m)});
    return out;
}

// True iff g generates a cyclic simplex code of dimension t: monic divisor of
// x^m - 1 of degree m - t whose nonzero multiples all have weight q^(t-1).
inline bool is_simplex_generator(const Polynomial& g, unsigned t) {
    const Field& field = g.field();
    const unsigned q = field.order();
    const std::uint64_t qt = detail::int_pow(q, t);
    const std::size_t m = std::size_t((qt - 1) / (q - 1));
    if (g.is_zero() || !g.is_monic() || g.degree() != m - t) return false;
    auto [h, rem] = poly_divmod(Polynomial::x_pow_minus_one(field, m), g);
    if (!rem.is_zero()) return false;
    bool equidistant = true;
    detail::for_each_tuple(field, t, [&](const std::vector<Residue>& msg) {
        if (!equidistant) return;
        Polynomial a(field, msg);
        if (a.is_zero()) return;
        if ((a * g).weight() != qt / q) equidistant = false;
    });
    return equidistant;
}

namespace detail {

inline Polynomial reduced_block(const Polynomial& p, std::size_t m) {
    const CyclicWord word = CyclicWord::from_polynomial(p, m);
    return {p.field(), word.coeffs()};
}

inline std::vector<Polynomial> second_row_blocks(const Polynomial& g1, std::size_t m,
                                                 const MultiplierSet& multipliers) {
    std::vector<Polynomial> row;
    row.reserve(multipliers.size());
    for (const auto& mu : multipliers) {
        if (!mu)
            row.push_back(Polynomial::zero(g1.field()));
        else
            row.push_back(reduced_block(Polynomial::monomial(g1.field(), mu->scale, mu->shift) * g1, m));
    }
    return row;
}

}  // namespace detail

// The 2-generator quasi-cyclic two-weight construction: first generator row
// is p copies of g1, second row applies one distinct factor per block. The
// measured parameters are checked against the predicted ones before the code
// is returned.
inline LinearCode build_two_weight(const Polynomial& g1, unsigned t, const MultiplierSet& multipliers) {
    const Field& field = g1.field();
    if (!is_simplex_generator(g1, t))
        throw std::invalid_argument("g1 is not a simplex generator polynomial for (q = " +
                                    std::to_string(field.order()) + ", k = " + std::to_string(t) + ")");
    const Su2Params predicted = su2_params(field, t, unsigned(multipliers.size()));
    const std::size_t m = predicted.n / predicted.p;
    validate_multipliers(field, m, multipliers);

    std::vector<std::vector<Polynomial>> grid = {
        std::vector<Polynomial>(multipliers.size(), g1),
        detail::second_row_blocks(g1, m, multipliers),
    };
    LinearCode code = from_generator(expand(QcGeneratorSpec(field, m, std::move(grid))));

    if (code.length != predicted.n || code.dimension != predicted.k)
        throw VerificationError("two-weight build produced [" + std::to_string(code.length) + ", " +
                                std::to_string(code.dimension) + "], expected [" + std::to_string(predicted.n) +
                                ", " + std::to_string(predicted.k) + "]");
    const auto weights = weight_distribution(code).nonzero_weights();
    if (weights != std::vector<std::size_t>{predicted.w1, predicted.w2})
        throw VerificationError("two-weight build does not have weight set {" + std::to_string(predicted.w1) + ", " +
                                std::to_string(predicted.w2) + "}; the multiplier set is outside the construction's "
                                "validity");
    return code;
}

enum class GrVariant { minus, plus };

struct CodeParams {
    std::size_t n;
    unsigned k;
    std::size_t d;

    bool operator==(const CodeParams&) const = default;
};

// Parameters of binary self-complementary codes meeting the Grey-Rankin
// bound: [2^(2t-1) - 2^(t-1), 2t + 1, 2^(2t-2) - 2^(t-1)] for the minus
// variant and [2^(2t-1) + 2^(t-1), 2t + 1, 2^(2t-2)] for the plus variant.
inline CodeParams gr_params(unsigned t, GrVariant variant) {
    if (t < 2) throw std::invalid_argument("self-complementary construction needs t >= 2");
    const std::uint64_t half = detail::int_pow(2, t - 1);  // 2^(t-1)
    if (variant == GrVariant::minus)
        return {std::size_t(2 * half * half - half), 2 * t + 1, std::size_t(half * half - half)};
    return {std::size_t(2 * half * half + half), 2 * t + 1, std::size_t(half * half)};
}

namespace detail {

inline LinearCode build_self_complementary(const Polynomial& g1, unsigned t, GrVariant variant) {
    const Field& field = g1.field();
    if (field.order() != 2)
        throw std::invalid_argument("self-complementary construction is defined over GF(2) only");
    const CodeParams expected = gr_params(t, variant);
    if (!is_simplex_generator(g1, t))
        throw std::invalid_argument("g1 is not a simplex generator polynomial for (q = 2, k = " + std::to_string(t) +
                                    ")");
    const unsigned i = unsigned(int_pow(2, t - 1)) + (variant == GrVariant::plus ? 1 : 0);
    const std::size_t m = int_pow(2, t) - 1;

    std::vector<std::vector<Polynomial>> grid = {
        std::vector<Polynomial>(i, g1),
        second_row_blocks(g1, m, default_multipliers(field, t, i)),
        std::vector<Polynomial>(i, Polynomial::all_ones(field, m)),
    };
    std::vector<std::vector<Residue>> extras;
    if (variant == GrVariant::plus) extras.push_back({0, 0, 1});
    LinearCode code = from_generator(expand(QcGeneratorSpec(field, m, std::move(grid), std::move(extras))));

    if (code.length != expected.n || code.dimension != expected.k)
        throw VerificationError("self-complementary build produced [" + std::to_string(code.length) + ", " +
                                std::to_string(code.dimension) + "], expected [" + std::to_string(expected.n) + ", " +
                                std::to_string(expected.k) + "]");
    const WeightDistribution dist = weight_distribution(code);
    if (dist.min_nonzero() != expected.d)
        throw VerificationError("self-complementary build has distance " + std::to_string(dist.min_nonzero()) +
                                ", expected " + std::to_string(expected.d));
    if (!is_self_complementary(code)) throw VerificationError("built code does not contain the all-ones vector");
    if (!grey_rankin_met(code.length, expected.d, codeword_count(code)))
        throw VerificationError("built code does not meet the Grey-Rankin bound with equality");
    return code;
}

}  // namespace detail

// 3-generator construction with i = 2^(t-1) blocks: the two-weight rows plus
// an all-ones generator row.
inline LinearCode build_self_complementary_minus(const Polynomial& g1, unsigned t) {
    return detail::build_self_complementary(g1, t, GrVariant::minus);
}

// 3-generator construction with i = 2^(t-1) + 1 blocks and one parity column
// with band constants (0, 0, 1).
inline LinearCode build_self_complementary_plus(const Polynomial& g1, unsigned t) {
    return detail::build_self_complementary(g1, t, GrVariant::plus);
}

}  // namespace qctw

#endif
