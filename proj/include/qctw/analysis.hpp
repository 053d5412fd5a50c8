#ifndef QCTW_ANALYSIS_HPP
#define QCTW_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qctw/errors.hpp"
#include "qctw/linear_code.hpp"
#include "qctw/qc_matrix.hpp"

namespace qctw {

inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t(1) << 24;

// q^k, or a GuardExceeded if the codeword count would pass the guard.
inline std::uint64_t codeword_count(const LinearCode& code, std::uint64_t guard = kDefaultEnumerationGuard) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < code.dimension; ++i) {
        if (count > guard / code.field.order())
            throw GuardExceeded("code with q^" + std::to_string(code.dimension) +
                                " codewords is too large to enumerate (guard " + std::to_string(guard) + ")");
        count *= code.field.order();
    }
    if (count > guard)
        throw GuardExceeded("code with " + std::to_string(count) + " codewords is too large to enumerate (guard " +
                            std::to_string(guard) + ")");
    return count;
}

// Visits all q^k codewords exactly once, in lexicographic order of the
// basis-coefficient tuples. The word is updated incrementally: bumping one
// message digit adds one basis row, and a digit rolling over from q-1 to 0 is
// the same +1 step, so each odometer carry is a single row addition.
template <typename Fn>
void enumerate_codewords(const LinearCode& code, Fn&& fn, std::uint64_t guard = kDefaultEnumerationGuard) {
    const std::uint64_t total = codeword_count(code, guard);
    const Field& field = code.field;
    const unsigned k = code.dimension;

    std::vector<Residue> digits(k, 0);
    std::vector<Residue> word(code.length, 0);
    fn(std::span<const Residue>(word));
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t i = k;
        while (i > 0) {
            --i;
            digits[i] = field.add(digits[i], 1);
            const auto row = code.basis.row(i);
            for (std::size_t c = 0; c < word.size(); ++c) word[c] = field.add(word[c], row[c]);
            if (digits[i] != 0) break;
        }
        fn(std::span<const Residue>(word));
    }
}

// Count of codewords by Hamming weight; the keys are the code's weight set.
struct WeightDistribution {
    std::map<std::size_t, std::uint64_t> counts;

    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (const auto& [w, c] : counts) sum += c;
        return sum;
    }

    std::vector<std::size_t> nonzero_weights() const {
        std::vector<std::size_t> out;
        for (const auto& [w, c] : counts)
            if (w != 0) out.push_back(w);
        return out;
    }

    std::size_t min_nonzero() const {
        for (const auto& [w, c] : counts)
            if (w != 0) return w;
        throw std::logic_error("distribution has no nonzero weight");
    }

    bool operator==(const WeightDistribution&) const = default;
};

inline WeightDistribution weight_distribution(const LinearCode& code,
                                              std::uint64_t guard = kDefaultEnumerationGuard) {
    WeightDistribution dist;
    enumerate_codewords(
        code,
        [&](std::span<const Residue> word) {
            std::size_t w = 0;
            for (Residue v : word) w += (v != 0);
            ++dist.counts[w];
        },
        guard);
    return dist;
}

inline std::size_t min_distance(const LinearCode& code, std::uint64_t guard = kDefaultEnumerationGuard) {
    return weight_distribution(code, guard).min_nonzero();
}

// The (w1, w2) pair with w1 < w2 when the nonzero codewords take exactly two
// distinct weights.
inline std::optional<std::pair<std::size_t, std::size_t>> is_two_weight(const WeightDistribution& dist) {
    const auto weights = dist.nonzero_weights();
    if (weights.size() != 2) return std::nullopt;
    return std::make_pair(weights[0], weights[1]);
}

// Pairwise linear independence of coordinates: no zero column of the basis
// and no column a scalar multiple of another. Columns are normalized by the
// inverse of their first nonzero entry before comparison.
inline bool is_projective(const LinearCode& code) {
    const Field& field = code.field;
    const std::size_t k = code.basis.rows();
    std::set<std::vector<Residue>> seen;
    for (std::size_t c = 0; c < code.length; ++c) {
        std::vector<Residue> col(k);
        for (std::size_t r = 0; r < k; ++r) col[r] = code.basis.at(r, c);
        std::size_t first = 0;
        while (first < k && col[first] == 0) ++first;
        if (first == k) return false;  // zero coordinate
        const Residue inv = field.inv(col[first]);
        for (Residue& v : col) v = field.mul(inv, v);
        if (!seen.insert(std::move(col)).second) return false;  // repeated projective point
    }
    return true;
}

// Binary codes only: a linear code contains all complements iff it contains
// the all-ones vector.
inline bool is_self_complementary(const LinearCode& code) {
    if (code.field.order() != 2)
        throw std::invalid_argument("self-complementarity is defined for binary codes only");
    return contains(code, std::vector<Residue>(code.length, 1));
}

// 8d(n-d) / (n - (n-2d)^2); an upper bound on the size of binary
// self-complementary codes. Inapplicable when the denominator is not positive.
inline double grey_rankin_bound(std::size_t n, std::size_t d) {
    const long long nn = static_cast<long long>(n), dd = static_cast<long long>(d);
    const long long den = nn - (nn - 2 * dd) * (nn - 2 * dd);
    if (den <= 0) throw std::domain_error("Grey-Rankin bound inapplicable: n - (n - 2d)^2 is not positive");
    return double(8 * dd * (nn - dd)) / double(den);
}

// Exact integer test for |C| = 8d(n-d) / (n - (n-2d)^2).
inline bool grey_rankin_met(std::size_t n, std::size_t d, std::uint64_t codewords) {
    const long long nn = static_cast<long long>(n), dd = static_cast<long long>(d);
    const long long den = nn - (nn - 2 * dd) * (nn - 2 * dd);
    if (den <= 0) return false;
    return static_cast<long long>(codewords) * den == 8 * dd * (nn - dd);
}

// Everything the toolkit can say about one code, in one record.
struct PropertyReport {
    Field field;
    std::size_t length;
    unsigned dimension;
    std::size_t min_distance;
    std::uint64_t codewords;
    WeightDistribution distribution;
    std::optional<std::pair<std::size_t, std::size_t>> two_weight;
    bool projective;
    bool self_complementary;  // always false for non-binary fields
    bool quasi_cyclic;
    std::size_t block_order;  // the m the QC check ran with
    std::size_t block_count;  // derived p = floor(length / m)
    std::optional<double> grey_rankin;  // empty when the bound is inapplicable
    bool grey_rankin_met;
};

inline PropertyReport analyze(const LinearCode& code, std::size_t m,
                              std::uint64_t guard = kDefaultEnumerationGuard) {
    if (m == 0 || m > code.length) throw std::invalid_argument("block order must be in [1, code length]");
    const std::size_t p = code.length / m;

    PropertyReport report{code.field,
                          code.length,
                          code.dimension,
                          0,
                          codeword_count(code, guard),
                          weight_distribution(code, guard),
                          std::nullopt,
                          false,
                          false,
                          false,
                          m,
                          p,
                          std::nullopt,
                          false};
    report.min_distance = report.distribution.min_nonzero();
    report.two_weight = is_two_weight(report.distribution);
    report.projective = is_projective(code);
    report.self_complementary = code.field.order() == 2 && is_self_complementary(code);
    report.quasi_cyclic = row_shift_invariance_witness(code, m, p);
    const long long nn = static_cast<long long>(code.length);
    const long long dd = static_cast<long long>(report.min_distance);
    if (nn - (nn - 2 * dd) * (nn - 2 * dd) > 0) {
        report.grey_rankin = grey_rankin_bound(code.length, report.min_distance);
        report.grey_rankin_met = grey_rankin_met(code.length, report.min_distance, report.codewords);
    }
    return report;
}

namespace detail {

inline std::string format_bound(double value) {
    if (value == static_cast<double>(static_cast<long long>(value)))
        return std::to_string(static_cast<long long>(value));
    std::ostringstream out;
    out.precision(10);
    out << value;
    return out.str();
}

inline std::string weight_set_text(const WeightDistribution& dist) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t w : dist.nonzero_weights()) {
        if (!first) out << ',';
        out << w;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace detail

inline std::string render_human(const PropertyReport& r) {
    std::ostringstream out;
    out << "parameters         : [" << r.length << ", " << r.dimension << ", " << r.min_distance << "] over GF("
        << r.field.order() << ")\n";
    out << "codewords          : " << r.codewords << '\n';
    out << "weight distribution: {";
    bool first = true;
    for (const auto& [w, c] : r.distribution.counts) {
        if (!first) out << ", ";
        out << w << ": " << c;
        first = false;
    }
    out << "}\n";
    out << "two-weight         : " << (r.two_weight ? "yes" : "no");
    if (r.two_weight) out << " (w1 = " << r.two_weight->first << ", w2 = " << r.two_weight->second << ")";
    out << '\n';
    out << "projective         : " << (r.projective ? "yes" : "no") << '\n';
    out << "self-complementary : " << (r.self_complementary ? "yes" : "no") << '\n';
    out << "quasi-cyclic       : " << (r.quasi_cyclic ? "yes" : "no") << " (m = " << r.block_order
        << ", p = " << r.block_count << ")\n";
    out << "grey-rankin bound  : ";
    if (r.grey_rankin)
        out << detail::format_bound(*r.grey_rankin) << (r.grey_rankin_met ? " (met with equality)" : " (not met)");
    else
        out << "n/a";
    out << '\n';
    return out.str();
}

inline std::string render_machine(const PropertyReport& r) {
    std::ostringstream out;
    out << '[' << r.length << ',' << r.dimension << ',' << r.min_distance << ']';
    out << " q=" << r.field.order();
    out << " weights=" << detail::weight_set_text(r.distribution);
    out << " two_weight=" << (r.two_weight ? "true" : "false");
    out << " projective=" << (r.projective ? "true" : "false");
    out << " selfc=" << (r.self_complementary ? "true" : "false");
    out << " qc=" << (r.quasi_cyclic ? "true" : "false");
    out << " gr_bound=" << (r.grey_rankin ? detail::format_bound(*r.grey_rankin) : "n/a");
    out << " gr_met=" << (r.grey_rankin_met ? "true" : "false");
    return out.str();
}

}  // namespace qctw

#endif
