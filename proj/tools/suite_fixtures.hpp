#ifndef QCTW_TOOLS_SUITE_FIXTURES_HPP
#define QCTW_TOOLS_SUITE_FIXTURES_HPP

// Expected values for the reproduction suites, kept as data in one place so
// they can be audited against the published tables they come from.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qctw::fixtures {

// Generator polynomials used by the worked examples, in the ascending
// coefficient text format. The t = 4 and t = 5 suites take the first
// discovered generator instead of a pinned one.
inline constexpr const char* kBinarySimplexGeneratorT3 = "1 1 1 0 1";
inline constexpr const char* kTernarySimplexGeneratorT3 = "1 0 1 1 1 2 2 0 1 2 1";

struct TwoWeightCase {
    const char* label;
    unsigned q;
    unsigned t;
    unsigned p;
    const char* g1;            // nullptr: first discovered generator
    const char* multipliers;   // nullptr: default multiplier pattern
    std::size_t n;
    unsigned k;
    std::size_t d;
    std::size_t w1;
    std::size_t w2;
};

// The published table of optimal binary 2-generator quasi-cyclic [pm, 2k]
// two-weight codes: p = 3..8 over m = 7, p = 10..16 over m = 15.
inline const std::vector<TwoWeightCase>& table1_cases() {
    static const std::vector<TwoWeightCase> cases = {
        {"p=3 m=7", 2, 3, 3, kBinarySimplexGeneratorT3, nullptr, 21, 6, 8, 8, 12},
        {"p=4 m=7", 2, 3, 4, kBinarySimplexGeneratorT3, nullptr, 28, 6, 12, 12, 16},
        {"p=5 m=7", 2, 3, 5, kBinarySimplexGeneratorT3, nullptr, 35, 6, 16, 16, 20},
        {"p=6 m=7", 2, 3, 6, kBinarySimplexGeneratorT3, nullptr, 42, 6, 20, 20, 24},
        {"p=7 m=7", 2, 3, 7, kBinarySimplexGeneratorT3, nullptr, 49, 6, 24, 24, 28},
        {"p=8 m=7", 2, 3, 8, kBinarySimplexGeneratorT3, nullptr, 56, 6, 28, 28, 32},
        {"p=10 m=15", 2, 4, 10, nullptr, nullptr, 150, 8, 72, 72, 80},
        {"p=11 m=15", 2, 4, 11, nullptr, nullptr, 165, 8, 80, 80, 88},
        {"p=12 m=15", 2, 4, 12, nullptr, nullptr, 180, 8, 88, 88, 96},
        {"p=13 m=15", 2, 4, 13, nullptr, nullptr, 195, 8, 96, 96, 104},
        {"p=14 m=15", 2, 4, 14, nullptr, nullptr, 210, 8, 104, 104, 112},
        {"p=15 m=15", 2, 4, 15, nullptr, nullptr, 225, 8, 112, 112, 120},
        {"p=16 m=15", 2, 4, 16, nullptr, nullptr, 240, 8, 120, 120, 128},
    };
    return cases;
}

// The binary worked example: all seven [7p, 6] two-weight codes built from
// the simplex [7, 3, 4] generator above.
inline const std::vector<TwoWeightCase>& example1_cases() {
    static const std::vector<TwoWeightCase> cases = {
        {"p=2", 2, 3, 2, kBinarySimplexGeneratorT3, nullptr, 14, 6, 4, 4, 8},
        {"p=3", 2, 3, 3, kBinarySimplexGeneratorT3, nullptr, 21, 6, 8, 8, 12},
        {"p=4", 2, 3, 4, kBinarySimplexGeneratorT3, nullptr, 28, 6, 12, 12, 16},
        {"p=5", 2, 3, 5, kBinarySimplexGeneratorT3, nullptr, 35, 6, 16, 16, 20},
        {"p=6", 2, 3, 6, kBinarySimplexGeneratorT3, nullptr, 42, 6, 20, 20, 24},
        {"p=7", 2, 3, 7, kBinarySimplexGeneratorT3, nullptr, 49, 6, 24, 24, 28},
        {"p=8", 2, 3, 8, kBinarySimplexGeneratorT3, nullptr, 56, 6, 28, 28, 32},
    };
    return cases;
}

// Full weight distribution of the [14, 6; 4, 8] code, confirmed by direct
// enumeration of all 64 codewords.
inline const std::vector<std::pair<std::size_t, std::size_t>>& example1_p2_distribution() {
    static const std::vector<std::pair<std::size_t, std::size_t>> counts = {{0, 1}, {4, 14}, {8, 49}};
    return counts;
}

// The ternary worked example: the two displayed matrices (explicit
// multipliers) and the three larger codes reached with the default pattern.
inline const std::vector<TwoWeightCase>& example2_cases() {
    static const std::vector<TwoWeightCase> cases = {
        {"p=2", 3, 3, 2, kTernarySimplexGeneratorT3, "0;1,0", 26, 6, 9, 9, 18},
        {"p=3", 3, 3, 3, kTernarySimplexGeneratorT3, "0;1,0;2,0", 39, 6, 18, 18, 27},
        {"p=15", 3, 3, 15, kTernarySimplexGeneratorT3, nullptr, 195, 6, 126, 126, 135},
        {"p=16", 3, 3, 16, kTernarySimplexGeneratorT3, nullptr, 208, 6, 135, 135, 144},
        {"p=17", 3, 3, 17, kTernarySimplexGeneratorT3, nullptr, 221, 6, 144, 144, 153},
    };
    return cases;
}

struct GreyRankinCase {
    const char* label;
    bool plus;   // false: i = 2^(t-1); true: i = 2^(t-1) + 1 with parity digit
    unsigned t;
    std::size_t n;
    unsigned k;
    std::size_t d;
    const char* note;  // informational line printed after the case, if any
};

inline constexpr const char* kPlusT4Note =
    "NOTE: the plus variant at t=4 builds length 136 as the parameter formula gives; "
    "a related 1-generator quasi-cyclic family is cited in the literature with length 135.";

inline const std::vector<GreyRankinCase>& grey_rankin_cases() {
    static const std::vector<GreyRankinCase> cases = {
        {"minus t=2", false, 2, 6, 5, 2, nullptr},
        {"minus t=3", false, 3, 28, 7, 12, nullptr},
        {"minus t=4", false, 4, 120, 9, 56, nullptr},
        {"minus t=5", false, 5, 496, 11, 240, nullptr},
        {"plus t=3", true, 3, 36, 7, 16, nullptr},
        {"plus t=4", true, 4, 136, 9, 64, kPlusT4Note},
        {"plus t=5", true, 5, 528, 11, 256, nullptr},
    };
    return cases;
}

}  // namespace qctw::fixtures

#endif
