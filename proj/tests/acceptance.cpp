// Acceptance suite. Runs the six verification criteria, prints one pass/fail
// line per criterion, and exits nonzero if any fails. An optional argument
// selects a single criterion by number.
//
// Every expected value here is pinned: parameter tables are exact integers,
// distributions were confirmed by an independent enumeration before being
// frozen, and bound attainment is checked in exact integer arithmetic.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qctw/analysis.hpp"
#include "qctw/constructions.hpp"

using namespace qctw;

namespace {

struct Check {
    std::string label;
    bool pass;
    std::string detail;
};

std::vector<Check>& checks() {
    static std::vector<Check> current;
    return current;
}

std::vector<std::string>& notes() {
    static std::vector<std::string> current;
    return current;
}

void expect(bool pass, const std::string& label, const std::string& detail = "") {
    checks().push_back({label, pass, detail});
}

std::string triple(std::size_t n, unsigned k, std::size_t d) {
    std::ostringstream out;
    out << '[' << n << ',' << k << ',' << d << ']';
    return out.str();
}

const Field f2(2);
const Field f3(3);

Polynomial binary_g1_t3() { return Polynomial(f2, {1, 1, 1, 0, 1}); }
Polynomial ternary_g1_t3() { return Polynomial::from_ints(f3, {1, 0, 1, 1, 1, -1, -1, 0, 1, -1, 1}); }

void check_two_weight_case(const std::string& label, const Polynomial& g1, unsigned t,
                           const MultiplierSet& multipliers, std::size_t n, unsigned k, std::size_t d,
                           std::size_t w1, std::size_t w2) {
    try {
        const LinearCode code = build_two_weight(g1, t, multipliers);
        const WeightDistribution dist = weight_distribution(code);
        const bool ok = code.length == n && code.dimension == k && dist.min_nonzero() == d &&
                        dist.nonzero_weights() == std::vector<std::size_t>{w1, w2};
        std::ostringstream detail;
        if (!ok)
            detail << "measured " << triple(code.length, code.dimension, dist.min_nonzero()) << ", expected "
                   << triple(n, k, d) << " with weights {" << w1 << "," << w2 << "}";
        expect(ok, label, detail.str());
    } catch (const std::exception& e) {
        expect(false, label, e.what());
    }
}

// --------------------------------------------------------------------------
// criterion 1: the 13-row table of optimal binary two-weight codes
// --------------------------------------------------------------------------
void criterion_table() {
    struct Row {
        unsigned p, m, t;
        std::size_t d, w1, w2;
    };
    const std::vector<Row> rows = {
        {3, 7, 3, 8, 8, 12},       {4, 7, 3, 12, 12, 16},     {5, 7, 3, 16, 16, 20},
        {6, 7, 3, 20, 20, 24},     {7, 7, 3, 24, 24, 28},     {8, 7, 3, 28, 28, 32},
        {10, 15, 4, 72, 72, 80},   {11, 15, 4, 80, 80, 88},   {12, 15, 4, 88, 88, 96},
        {13, 15, 4, 96, 96, 104},  {14, 15, 4, 104, 104, 112}, {15, 15, 4, 112, 112, 120},
        {16, 15, 4, 120, 120, 128},
    };
    const Polynomial g1_t4 = find_simplex_generators(f2, 4).front();
    for (const Row& row : rows) {
        std::ostringstream label;
        label << "p=" << row.p << " m=" << row.m;
        check_two_weight_case(label.str(), row.t == 3 ? binary_g1_t3() : g1_t4, row.t,
                              default_multipliers(f2, row.t, row.p), std::size_t(row.p) * row.m, 2 * row.t, row.d,
                              row.w1, row.w2);
    }
}

// --------------------------------------------------------------------------
// criterion 2: the binary worked-example family, plus the frozen [14, 6]
// distribution confirmed by the independent raw-combination oracle
// --------------------------------------------------------------------------
void criterion_binary_family() {
    for (unsigned p = 2; p <= 8; ++p) {
        std::ostringstream label;
        label << "p=" << p;
        check_two_weight_case(label.str(), binary_g1_t3(), 3, default_multipliers(f2, 3, p), 7u * p, 6,
                              4u * (p - 1), 4u * (p - 1), 4u * p);
    }

    const LinearCode code = build_two_weight(binary_g1_t3(), 3, default_multipliers(f2, 3, 2));
    const std::map<std::size_t, std::uint64_t> frozen = {{0, 1}, {4, 14}, {8, 49}};
    const auto by_oracle = oracle::weight_distribution_by_raw_combinations(code.raw_generator);
    expect(by_oracle == frozen, "[14,6] distribution by independent oracle",
           "raw-combination enumeration disagrees with {0:1, 4:14, 8:49}");
    expect(weight_distribution(code).counts == frozen, "[14,6] distribution by library enumeration",
           "library enumeration disagrees with {0:1, 4:14, 8:49}");
}

// --------------------------------------------------------------------------
// criterion 3: the ternary worked-example family
// --------------------------------------------------------------------------
void criterion_ternary_family() {
    check_two_weight_case("p=2 (displayed matrix)", ternary_g1_t3(), 3,
                          {std::nullopt, BlockMultiplier{1, 0}}, 26, 6, 9, 9, 18);
    check_two_weight_case("p=3 (displayed matrix)", ternary_g1_t3(), 3,
                          {std::nullopt, BlockMultiplier{1, 0}, BlockMultiplier{2, 0}}, 39, 6, 18, 18, 27);
    check_two_weight_case("p=15 (default multipliers)", ternary_g1_t3(), 3, default_multipliers(f3, 3, 15), 195, 6,
                          126, 126, 135);
    check_two_weight_case("p=16 (default multipliers)", ternary_g1_t3(), 3, default_multipliers(f3, 3, 16), 208, 6,
                          135, 135, 144);
    check_two_weight_case("p=17 (default multipliers)", ternary_g1_t3(), 3, default_multipliers(f3, 3, 17), 221, 6,
                          144, 144, 153);
}

// --------------------------------------------------------------------------
// criterion 4: self-complementary builds meeting the Grey-Rankin bound
// --------------------------------------------------------------------------
void criterion_grey_rankin() {
    struct Case {
        bool plus;
        unsigned t;
        std::size_t n;
        unsigned k;
        std::size_t d;
    };
    const std::vector<Case> cases = {
        {false, 2, 6, 5, 2},     {false, 3, 28, 7, 12},   {false, 4, 120, 9, 56}, {false, 5, 496, 11, 240},
        {true, 3, 36, 7, 16},    {true, 4, 136, 9, 64},   {true, 5, 528, 11, 256},
    };
    for (const Case& c : cases) {
        std::ostringstream label;
        label << (c.plus ? "plus" : "minus") << " t=" << c.t;
        try {
            const Polynomial g1 = find_simplex_generators(f2, c.t).front();
            const LinearCode code =
                c.plus ? build_self_complementary_plus(g1, c.t) : build_self_complementary_minus(g1, c.t);
            const std::size_t d = min_distance(code);
            bool ok = code.length == c.n && code.dimension == c.k && d == c.d;
            ok = ok && is_self_complementary(code);
            // |C| * (n - (n-2d)^2) == 8d(n-d), in exact integers
            const long long nn = static_cast<long long>(code.length), dd = static_cast<long long>(d);
            const long long den = nn - (nn - 2 * dd) * (nn - 2 * dd);
            ok = ok && den > 0 && static_cast<long long>(codeword_count(code)) * den == 8 * dd * (nn - dd);
            std::ostringstream detail;
            if (!ok)
                detail << "measured " << triple(code.length, code.dimension, d) << ", expected "
                       << triple(c.n, c.k, c.d) << " self-complementary with the bound met exactly";
            expect(ok, label.str(), detail.str());
        } catch (const std::exception& e) {
            expect(false, label.str(), e.what());
        }
        if (c.plus && c.t == 4)
            notes().push_back(
                "NOTE: the plus variant at t=4 builds length 136 as the parameter formula gives; a related "
                "1-generator family is cited in the literature with length 135.");
    }
}

// --------------------------------------------------------------------------
// criterion 5: simplex generator discovery over six parameter pairs
// --------------------------------------------------------------------------
void criterion_simplex() {
    const std::vector<std::pair<unsigned, unsigned>> pairs = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}};
    for (const auto& [q, k] : pairs) {
        std::ostringstream label;
        label << "(q=" << q << ", k=" << k << ")";
        const Field field(q);
        std::uint64_t qk = 1;
        for (unsigned i = 0; i < k; ++i) qk *= q;
        const std::size_t m = std::size_t((qk - 1) / (q - 1));
        try {
            const auto generators = find_simplex_generators(field, k);
            bool ok = !generators.empty();
            for (const Polynomial& g : generators) {
                auto [h, rem] = poly_divmod(Polynomial::x_pow_minus_one(field, m), g);
                ok = ok && rem.is_zero();
                detail::for_each_tuple(field, k, [&](const std::vector<Residue>& msg) {
                    const Polynomial a(field, msg);
                    if (!a.is_zero() && (a * g).weight() != qk / q) ok = false;
                });
            }
            expect(ok, label.str() + " nonempty and equidistant",
                   ok ? "" : "a returned generator fails the divisor or equidistance re-check");
            if (q == 2 && k == 3) {
                const bool found = std::find(generators.begin(), generators.end(), binary_g1_t3()) != generators.end();
                expect(found, "(q=2, k=3) contains 1 1 1 0 1");
            }
            if (q == 3 && k == 3) {
                const bool found =
                    std::find(generators.begin(), generators.end(), ternary_g1_t3()) != generators.end();
                expect(found, "(q=3, k=3) contains 1 0 1 1 1 2 2 0 1 2 1");
            }
        } catch (const std::exception& e) {
            // Confirm by hand whether any monic degree-(m-k) divisor of
            // x^m - 1 yields an equidistant code before reporting.
            std::size_t survivors = 0;
            detail::for_each_tuple(field, m - k, [&](const std::vector<Residue>& tail) {
                std::vector<Residue> gc(tail);
                gc.push_back(1);
                const Polynomial g(field, gc);
                auto [quot, rem] = poly_divmod(Polynomial::x_pow_minus_one(field, m), g);
                if (!rem.is_zero()) return;
                bool equidistant = true;
                detail::for_each_tuple(field, k, [&](const std::vector<Residue>& msg) {
                    const Polynomial a(field, msg);
                    if (!a.is_zero() && (a * g).weight() != qk / q) equidistant = false;
                });
                if (equidistant) ++survivors;
            });
            std::ostringstream detail_text;
            detail_text << e.what() << "; exhaustive search over all monic degree-" << (m - k) << " divisors of x^"
                        << m << " - 1 over GF(" << q << ") finds " << survivors << " equidistant generators";
            expect(false, label.str() + " nonempty and equidistant", detail_text.str());
        }
    }
}

// --------------------------------------------------------------------------
// criterion 6: structural property suite
// --------------------------------------------------------------------------
void criterion_structural() {
    // circulant expansion is a ring homomorphism
    {
        std::mt19937 rng(20240601);
        bool ok = true;
        for (unsigned q : {2u, 3u}) {
            const Field field(q);
            std::uniform_int_distribution<unsigned> coeff(0, q - 1);
            for (std::size_t m = 3; m <= 8; ++m)
                for (int trial = 0; trial < 30; ++trial) {
                    std::vector<Residue> cc(m), dc(m);
                    for (auto& v : cc) v = Residue(coeff(rng));
                    for (auto& v : dc) v = Residue(coeff(rng));
                    const Polynomial c(field, cc), d(field, dc);
                    const Polynomial product(field, CyclicWord::from_polynomial(c * d, m).coeffs());
                    if (!(mat_mul(circulant({c, m}), circulant({d, m})) == circulant({product, m}))) ok = false;
                }
        }
        expect(ok, "circulant product matches ring product");
    }

    // every constructed code is closed under block rotation, counts sum to
    // q^k, and the self-complementary builds have symmetric distributions
    std::vector<std::pair<LinearCode, std::size_t>> built;  // code, block order
    const Polynomial g1_t4 = find_simplex_generators(f2, 4).front();
    const Polynomial g1_t5 = find_simplex_generators(f2, 5).front();
    for (unsigned p = 2; p <= 8; ++p)
        built.emplace_back(build_two_weight(binary_g1_t3(), 3, default_multipliers(f2, 3, p)), 7);
    for (unsigned p : {10u, 13u, 16u})
        built.emplace_back(build_two_weight(g1_t4, 4, default_multipliers(f2, 4, p)), 15);
    for (unsigned p : {2u, 3u, 15u, 16u, 17u}) {
        const MultiplierSet mult = p == 2 ? MultiplierSet{std::nullopt, BlockMultiplier{1, 0}}
                                 : p == 3 ? MultiplierSet{std::nullopt, BlockMultiplier{1, 0}, BlockMultiplier{2, 0}}
                                          : default_multipliers(f3, 3, p);
        built.emplace_back(build_two_weight(ternary_g1_t3(), 3, mult), 13);
    }
    std::vector<LinearCode> self_complementary;
    for (unsigned t : {2u, 3u, 4u, 5u}) {
        const Polynomial g1 = t == 2   ? Polynomial(f2, {1, 1})
                              : t == 3 ? binary_g1_t3()
                              : t == 4 ? g1_t4
                                       : g1_t5;
        self_complementary.push_back(build_self_complementary_minus(g1, t));
        built.emplace_back(self_complementary.back(), (std::size_t(1) << t) - 1);
        if (t >= 3) {
            self_complementary.push_back(build_self_complementary_plus(g1, t));
            built.emplace_back(self_complementary.back(), (std::size_t(1) << t) - 1);
        }
    }

    {
        bool rotation_ok = true, sums_ok = true;
        for (const auto& [code, m] : built) {
            rotation_ok = rotation_ok && row_shift_invariance_witness(code, m, code.length / m);
            sums_ok = sums_ok && weight_distribution(code).total() == codeword_count(code);
        }
        expect(rotation_ok, "every constructed code passes the block-rotation witness");
        expect(sums_ok, "weight-distribution counts sum to q^k for every constructed code");
    }

    {
        bool symmetric = true;
        for (const LinearCode& code : self_complementary) {
            const WeightDistribution dist = weight_distribution(code);
            for (const auto& [w, c] : dist.counts) {
                const auto it = dist.counts.find(code.length - w);
                if (it == dist.counts.end() || it->second != c) symmetric = false;
            }
        }
        expect(symmetric, "self-complementary distributions satisfy count(w) = count(n-w)");
    }

    {
        const LinearCode code = build_two_weight(binary_g1_t3(), 3, default_multipliers(f2, 3, 2));
        const bool by_columns = is_projective(code);
        const std::size_t dual_d = oracle::dual_min_distance(code.basis);
        expect(by_columns == (dual_d >= 3), "[14,6] projectivity column check agrees with dual distance",
               "column check and dual minimum distance disagree");
    }
}

struct Criterion {
    int number;
    std::string title;
    void (*run)();
    double budget_seconds;  // informational runtime expectation, asserted
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "optimal binary two-weight parameter table (13 cases)", criterion_table, 5.0},
        {2, "binary worked-example family and frozen [14,6] distribution", criterion_binary_family, 1.0},
        {3, "ternary worked-example family (5 cases)", criterion_ternary_family, 2.0},
        {4, "grey-rankin self-complementary builds (7 cases)", criterion_grey_rankin, 10.0},
        {5, "simplex generator discovery (6 parameter pairs)", criterion_simplex, 30.0},
        {6, "structural property suite", criterion_structural, 30.0},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 6) {
            std::cerr << "usage: acceptance [1-6]\n";
            return 2;
        }
    }

    bool all_pass = true;
    for (const Criterion& criterion : criteria()) {
        if (selected != 0 && criterion.number != selected) continue;
        checks().clear();
        notes().clear();
        const auto start = std::chrono::steady_clock::now();
        criterion.run();
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::size_t passed = 0;
        for (const Check& c : checks()) passed += c.pass ? 1 : 0;
        const bool in_budget = elapsed < criterion.budget_seconds;
        const bool pass = passed == checks().size() && in_budget;
        all_pass = all_pass && pass;

        std::cout << "criterion " << criterion.number << ": " << criterion.title << " ... "
                  << (pass ? "PASS" : "FAIL") << " (" << passed << '/' << checks().size() << " checks, "
                  << static_cast<long long>(elapsed * 1000.0) << " ms)\n";
        for (const std::string& note : notes()) std::cout << "    " << note << '\n';
        for (const Check& c : checks())
            if (!c.pass) std::cout << "    - " << c.label << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        if (!in_budget)
            std::cout << "    - runtime " << elapsed << " s exceeds the expected budget of " << criterion.budget_seconds
                      << " s\n";
    }
    return all_pass ? 0 : 1;
}
