// Command-line surface of the toolkit: construct the quasi-cyclic code
// families, analyze generator matrices, and re-verify the published
// parameter tables as pass/fail suites.
//
// Exit codes: 0 success, 1 suite failure, 2 usage or parse error,
// 3 construction verification failure, 4 enumeration guard.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qctw/analysis.hpp"
#include "qctw/constructions.hpp"
#include "qctw/matrix.hpp"
#include "qctw/polynomial.hpp"
#include "suite_fixtures.hpp"

namespace {

using namespace qctw;

bool looks_inline(const std::string& text) {
    if (text.empty()) return false;
    return text.find_first_not_of("0123456789- \t") == std::string::npos;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Polynomial resolve_g1(const Field& field, unsigned t, const std::string& arg) {
    if (arg.empty()) return find_simplex_generators(field, t).front();
    return parse_polynomial(field, looks_inline(arg) ? arg : read_file(arg));
}

// Multiplier syntax: semicolon-separated blocks, each "a,e" or "0" for the
// zero block, e.g. "0;1,0;2,0".
MultiplierSet parse_multiplier_spec(const std::string& text) {
    MultiplierSet out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item == "0") {
            out.push_back(std::nullopt);
            continue;
        }
        const auto comma = item.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("multiplier '" + item + "' is neither '0' nor 'a,e'");
        std::size_t used = 0;
        unsigned long scale = 0, shift = 0;
        try {
            scale = std::stoul(item.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("");
            shift = std::stoul(item.substr(comma + 1), &used);
            if (used != item.size() - comma - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("multiplier '" + item + "' is neither '0' nor 'a,e'");
        }
        if (scale == 0 || scale > 0xffff) throw std::invalid_argument("multiplier scale out of range in '" + item + "'");
        out.push_back(BlockMultiplier{Residue(scale), std::size_t(shift)});
    }
    if (out.empty()) throw std::invalid_argument("empty multiplier specification");
    return out;
}

Matrix read_matrix_input(const std::string& path) {
    if (path.empty()) return parse_matrix(std::cin);
    std::istringstream in(read_file(path));
    return parse_matrix(in);
}

// ---------------------------------------------------------------------------
// reproduction suites
// ---------------------------------------------------------------------------

struct CaseOutcome {
    std::string label;
    std::string expected;
    std::string measured;
    bool pass = false;
    std::string note;
};

struct SuiteOutcome {
    std::string name;
    std::vector<CaseOutcome> cases;

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

std::string weight_pair_text(std::size_t n, unsigned k, std::size_t d, std::size_t w1, std::size_t w2) {
    std::ostringstream out;
    out << '[' << n << ',' << k << ',' << d << "] w={" << w1 << ',' << w2 << '}';
    return out.str();
}

SuiteOutcome run_two_weight_suite(const std::string& name, const std::vector<fixtures::TwoWeightCase>& cases,
                                  bool check_p2_distribution) {
    SuiteOutcome suite{name, {}};
    for (const auto& fixture : cases) {
        CaseOutcome outcome;
        outcome.label = fixture.label;
        outcome.expected = weight_pair_text(fixture.n, fixture.k, fixture.d, fixture.w1, fixture.w2);
        try {
            Field field(fixture.q);
            const Polynomial g1 = resolve_g1(field, fixture.t, fixture.g1 ? fixture.g1 : "");
            const MultiplierSet multipliers = fixture.multipliers
                                                  ? parse_multiplier_spec(fixture.multipliers)
                                                  : default_multipliers(field, fixture.t, fixture.p);
            const LinearCode code = build_two_weight(g1, fixture.t, multipliers);
            const WeightDistribution dist = weight_distribution(code);
            const auto weights = dist.nonzero_weights();
            outcome.measured = weight_pair_text(code.length, code.dimension, dist.min_nonzero(),
                                                weights.size() > 0 ? weights[0] : 0,
                                                weights.size() > 1 ? weights[1] : 0);
            outcome.pass = code.length == fixture.n && code.dimension == fixture.k &&
                           dist.min_nonzero() == fixture.d &&
                           weights == std::vector<std::size_t>{fixture.w1, fixture.w2};
            if (outcome.pass && check_p2_distribution && fixture.p == 2) {
                WeightDistribution frozen;
                for (const auto& [w, c] : fixtures::example1_p2_distribution()) frozen.counts[w] = c;
                if (!(dist == frozen)) {
                    outcome.pass = false;
                    outcome.measured += " (distribution mismatch)";
                }
            }
        } catch (const std::exception& e) {
            outcome.measured = std::string("error: ") + e.what();
        }
        suite.cases.push_back(std::move(outcome));
    }
    return suite;
}

SuiteOutcome run_grey_rankin_suite() {
    SuiteOutcome suite{"grey-rankin", {}};
    const Field field(2);
    for (const auto& fixture : fixtures::grey_rankin_cases()) {
        CaseOutcome outcome;
        outcome.label = fixture.label;
        {
            std::ostringstream expected;
            expected << '[' << fixture.n << ',' << fixture.k << ',' << fixture.d << "] selfc=true gr_met=true";
            outcome.expected = expected.str();
        }
        if (fixture.note) outcome.note = fixture.note;
        try {
            const Polynomial g1 = find_simplex_generators(field, fixture.t).front();
            const LinearCode code = fixture.plus ? build_self_complementary_plus(g1, fixture.t)
                                                 : build_self_complementary_minus(g1, fixture.t);
            const std::size_t m = (std::size_t(1) << fixture.t) - 1;
            const PropertyReport report = analyze(code, m);
            std::ostringstream measured;
            measured << '[' << report.length << ',' << report.dimension << ',' << report.min_distance
                     << "] selfc=" << (report.self_complementary ? "true" : "false")
                     << " gr_met=" << (report.grey_rankin_met ? "true" : "false");
            outcome.measured = measured.str();
            outcome.pass = report.length == fixture.n && report.dimension == fixture.k &&
                           report.min_distance == fixture.d && report.self_complementary &&
                           report.grey_rankin_met;
        } catch (const std::exception& e) {
            outcome.measured = std::string("error: ") + e.what();
        }
        suite.cases.push_back(std::move(outcome));
    }
    return suite;
}

void print_suite(const SuiteOutcome& suite, const std::string& format) {
    std::size_t failed = 0;
    for (const auto& c : suite.cases) failed += c.pass ? 0 : 1;
    if (format == "machine") {
        for (const auto& c : suite.cases) {
            std::cout << suite.name << " case=\"" << c.label << "\" expected=\"" << c.expected << "\" measured=\""
                      << c.measured << "\" pass=" << (c.pass ? "true" : "false") << '\n';
            if (!c.note.empty()) std::cout << c.note << '\n';
        }
        std::cout << suite.name << " result=" << (suite.pass() ? "pass" : "fail")
                  << " passed=" << (suite.cases.size() - failed) << " failed=" << failed << '\n';
        return;
    }
    std::size_t label_w = 0, expected_w = 0;
    for (const auto& c : suite.cases) {
        label_w = std::max(label_w, c.label.size());
        expected_w = std::max(expected_w, c.expected.size());
    }
    std::cout << "suite " << suite.name << '\n';
    for (const auto& c : suite.cases) {
        std::cout << "  " << std::left << std::setw(int(label_w) + 2) << c.label << "expected "
                  << std::setw(int(expected_w) + 2) << c.expected << "measured " << c.measured << "  "
                  << (c.pass ? "pass" : "FAIL") << '\n';
        if (!c.note.empty()) std::cout << "  " << c.note << '\n';
    }
    std::cout << "  result: " << (suite.pass() ? "PASS" : "FAIL") << " (" << (suite.cases.size() - failed) << '/'
              << suite.cases.size() << " cases)\n";
}

int cmd_reproduce(const std::string& which, const std::string& format) {
    std::vector<SuiteOutcome> outcomes;
    if (which == "table1" || which == "all")
        outcomes.push_back(run_two_weight_suite("table1", fixtures::table1_cases(), false));
    if (which == "example1" || which == "all")
        outcomes.push_back(run_two_weight_suite("example1", fixtures::example1_cases(), true));
    if (which == "example2" || which == "all")
        outcomes.push_back(run_two_weight_suite("example2", fixtures::example2_cases(), false));
    if (which == "grey-rankin" || which == "all") outcomes.push_back(run_grey_rankin_suite());

    bool all_pass = true;
    for (const auto& suite : outcomes) {
        print_suite(suite, format);
        all_pass = all_pass && suite.pass();
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// other commands
// ---------------------------------------------------------------------------

int cmd_simplex(unsigned q, unsigned k) {
    const Field field(q);
    for (const Polynomial& g : find_simplex_generators(field, k)) std::cout << to_text(g) << '\n';
    return 0;
}

int cmd_construct(const std::string& kind, unsigned q, unsigned k, unsigned p, const std::string& g1_arg,
                  const std::string& multiplier_arg) {
    const Field field(q);
    const Polynomial g1 = resolve_g1(field, k, g1_arg);
    LinearCode code = [&] {
        if (kind == "su2") {
            MultiplierSet multipliers;
            if (!multiplier_arg.empty()) {
                multipliers = parse_multiplier_spec(multiplier_arg);
                if (p != 0 && p != multipliers.size())
                    throw std::invalid_argument("--p disagrees with the multiplier count");
            } else {
                if (p == 0) throw std::invalid_argument("su2 needs --p or --multipliers");
                multipliers = default_multipliers(field, k, p);
            }
            return build_two_weight(g1, k, multipliers);
        }
        if (q != 2) throw std::invalid_argument(kind + " is a binary construction; drop --q or pass --q 2");
        if (p != 0 || !multiplier_arg.empty())
            throw std::invalid_argument(kind + " derives its block pattern from --k; --p/--multipliers do not apply");
        return kind == "gr-minus" ? build_self_complementary_minus(g1, k) : build_self_complementary_plus(g1, k);
    }();
    std::cout << to_text(code.raw_generator);
    return 0;
}

int cmd_analyze(const std::string& input, std::size_t m, std::uint64_t guard, const std::string& format) {
    const Matrix raw = read_matrix_input(input);
    const LinearCode code = from_generator(raw);
    const PropertyReport report = analyze(code, m, guard);
    if (format.empty() || format == "human") std::cout << render_human(report);
    if (format.empty() || format == "machine") std::cout << render_machine(report) << '\n';
    return 0;
}

int cmd_export(const std::string& input) {
    std::cout << to_text(read_matrix_input(input));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification of 2-generator quasi-cyclic two-weight codes\n"
                 "and the derived 3-generator self-complementary codes"};
    app.require_subcommand(1);

    unsigned q = 2, k = 0, p = 0;
    std::size_t m = 0;
    std::uint64_t guard = qctw::kDefaultEnumerationGuard;
    std::string g1_arg, multiplier_arg, format, input, kind, suite;

    auto* simplex = app.add_subcommand("simplex", "list all cyclic simplex generator polynomials for (q, k)");
    simplex->add_option("--q", q, "field order (prime)")->capture_default_str();
    simplex->add_option("--k", k, "simplex code dimension")->required();

    auto* construct = app.add_subcommand("construct", "build a generator matrix and print it");
    construct->add_option("kind", kind, "construction: su2, gr-minus, gr-plus")
        ->required()
        ->check(CLI::IsMember({"su2", "gr-minus", "gr-plus"}));
    construct->add_option("--q", q, "field order (prime)")->capture_default_str();
    construct->add_option("--k", k, "simplex code dimension")->required();
    construct->add_option("--p", p, "number of circulant blocks (su2)");
    construct->add_option("--g1", g1_arg, "generator polynomial, inline text or file (default: first discovered)");
    construct->add_option("--multipliers", multiplier_arg, "second-row blocks, e.g. \"0;1,0;2,1\" (su2)");

    auto* analyze_cmd = app.add_subcommand("analyze", "compute the property report of a generator matrix");
    analyze_cmd->add_option("input", input, "matrix text file (default: stdin)");
    analyze_cmd->add_option("--m", m, "circulant block order for the quasi-cyclic check")->required();
    analyze_cmd->add_option("--guard", guard, "enumeration guard on q^k")->capture_default_str();
    analyze_cmd->add_option("--format", format, "human or machine (default: both)")
        ->check(CLI::IsMember({"human", "machine"}));

    auto* export_cmd = app.add_subcommand("export", "parse a matrix and re-emit it canonically");
    export_cmd->add_option("input", input, "matrix text file (default: stdin)");

    auto* reproduce = app.add_subcommand("reproduce", "run a verification suite against its published parameters");
    reproduce->add_option("suite", suite, "table1, example1, example2, grey-rankin, or all")
        ->required()
        ->check(CLI::IsMember({"table1", "example1", "example2", "grey-rankin", "all"}));
    reproduce->add_option("--format", format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (simplex->parsed()) return cmd_simplex(q, k);
        if (construct->parsed()) return cmd_construct(kind, q, k, p, g1_arg, multiplier_arg);
        if (analyze_cmd->parsed()) return cmd_analyze(input, m, guard, format);
        if (export_cmd->parsed()) return cmd_export(input);
        if (reproduce->parsed()) return cmd_reproduce(suite, format);
    } catch (const qctw::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const qctw::VerificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
