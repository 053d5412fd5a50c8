#ifndef QCTW_POLYNOMIAL_HPP
#define QCTW_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qctw/field.hpp"

namespace qctw {

// Polynomial over GF(q), coefficients stored ascending: coeffs[i] is the
// coefficient of x^i (least significant on the left, matching the defining
// polynomial convention of circulants). Canonical form: empty vector for the
// zero polynomial, otherwise a nonzero leading coefficient.
class Polynomial {
  public:
    explicit Polynomial(Field field) : field_(field) {}

    Polynomial(Field field, std::vector<Residue> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
        for (Residue c : coeffs_)
            if (c >= field_.order())
                throw std::invalid_argument("coefficient " + std::to_string(c) + " out of range for GF(" +
                                            std::to_string(field_.order()) + ")");
        trim();
    }

    // Accepts arbitrary signed integers and reduces them, so that fixtures
    // written in -1/+1 notation map onto residues (-1 becomes q-1).
    static Polynomial from_ints(Field field, const std::vector<long long>& values) {
        std::vector<Residue> coeffs;
        coeffs.reserve(values.size());
        for (long long v : values) coeffs.push_back(field.reduce(v));
        return {field, std::move(coeffs)};
    }

    static Polynomial zero(Field field) { return Polynomial(field); }
    static Polynomial one(Field field) { return {field, {1}}; }
    // a * x^e with a nonzero
    static Polynomial monomial(Field field, Residue scale, std::size_t exponent) {
        if (scale == 0 || scale >= field.order())
            throw std::invalid_argument("monomial scale must be a nonzero residue");
        std::vector<Residue> coeffs(exponent + 1, 0);
        coeffs.back() = scale;
        return {field, std::move(coeffs)};
    }
    // the all-ones polynomial 1 + x + ... + x^(m-1)
    static Polynomial all_ones(Field field, std::size_t m) {
        return {field, std::vector<Residue>(m, 1)};
    }
    // x^m - 1, the modulus of the cyclic ring of order m
    static Polynomial x_pow_minus_one(Field field, std::size_t m) {
        std::vector<Residue> coeffs(m + 1, 0);
        coeffs[0] = field.neg(1);
        coeffs[m] = 1;
        return {field, std::move(coeffs)};
    }

    const Field& field() const { return field_; }
    const std::vector<Residue>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Degree of the zero polynomial is not defined; callers check is_zero().
    std::size_t degree() const {
        if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
        return coeffs_.size() - 1;
    }

    // Coefficient of x^i, zero beyond the stored length.
    Residue coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Residue(0); }

    std::size_t weight() const {
        return std::size_t(std::count_if(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c != 0; }));
    }

    bool operator==(const Polynomial&) const = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same_field(a, b);
        std::vector<Residue> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coeff(i), b.coeff(i));
        return {a.field_, std::move(out)};
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Residue> out(a.coeffs_);
        for (Residue& c : out) c = a.field_.neg(c);
        return {a.field_, std::move(out)};
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_field(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Residue> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = a.field_.add(out[i + j], a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return {a.field_, std::move(out)};
    }

    friend Polynomial operator*(const FieldElement& s, const Polynomial& a) {
        if (!(s.field() == a.field_)) throw std::invalid_argument("scalar from a different field");
        std::vector<Residue> out(a.coeffs_);
        for (Residue& c : out) c = a.field_.mul(s.value(), c);
        return {a.field_, std::move(out)};
    }

  private:
    static void check_same_field(const Polynomial& a, const Polynomial& b) {
        if (!(a.field_ == b.field_))
            throw std::invalid_argument("operation between polynomials over GF(" + std::to_string(a.field_.order()) +
                                        ") and GF(" + std::to_string(b.field_.order()) + ")");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    Field field_;
    std::vector<Residue> coeffs_;
};

// Long division: a = quotient * b + remainder with deg(remainder) < deg(b).
inline std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("division between polynomials over different fields");
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Field field = a.field();
    if (a.is_zero() || a.degree() < b.degree()) return {Polynomial::zero(field), a};

    std::vector<Residue> rem(a.coeffs());
    std::vector<Residue> quot(a.degree() - b.degree() + 1, 0);
    const Residue lead_inv = field.inv(b.coeffs().back());
    for (std::size_t d = rem.size(); d-- > b.coeffs().size() - 1;) {
        if (rem[d] == 0) continue;
        const std::size_t shift = d - b.degree();
        const Residue factor = field.mul(rem[d], lead_inv);
        quot[shift] = factor;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            rem[shift + j] = field.sub(rem[shift + j], field.mul(factor, b.coeffs()[j]));
    }
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

// Fixed-width residue representative modulo x^m - 1: exactly m coefficients,
// trailing zeros kept. The codeword form of a block of a quasi-cyclic row.
class CyclicWord {
  public:
    CyclicWord(Field field, std::size_t m) : field_(field), coeffs_(m, 0) {
        if (m == 0) throw std::invalid_argument("cyclic ring order must be positive");
    }

    CyclicWord(Field field, std::vector<Residue> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("cyclic ring order must be positive");
        for (Residue c : coeffs_)
            if (c >= field_.order()) throw std::invalid_argument("coefficient out of range");
    }

    // Reduces a polynomial of arbitrary degree into the width-m residue.
    static CyclicWord from_polynomial(const Polynomial& p, std::size_t m) {
        CyclicWord word(p.field(), m);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            word.coeffs_[i % m] = p.field().add(word.coeffs_[i % m], p.coeffs()[i]);
        return word;
    }

    const Field& field() const { return field_; }
    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Residue>& coeffs() const { return coeffs_; }

    bool operator==(const CyclicWord&) const = default;

  private:
    Field field_;
    std::vector<Residue> coeffs_;
};

// Residue of a * b modulo x^m - 1 as a fixed-width word.
inline CyclicWord cyclic_mul(const CyclicWord& a, const Polynomial& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("cyclic product over different fields");
    const Field field = a.field();
    const std::size_t m = a.order();
    std::vector<Residue> out(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            if (b.coeffs()[j] == 0) continue;
            std::size_t pos = (i + j) % m;
            out[pos] = field.add(out[pos], field.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return {field, std::move(out)};
}

namespace detail {

// All q^count coefficient tuples, in ascending lexicographic order, fed to
// the callback as a running odometer.
template <typename Fn>
void for_each_tuple(const Field& field, std::size_t count, Fn&& fn) {
    std::vector<Residue> digits(count, 0);
    while (true) {
        fn(digits);
        std::size_t i = count;
        while (i > 0) {
            --i;
            digits[i] = field.add(digits[i], 1);
            if (digits[i] != 0) break;
            if (i == 0) return;
        }
        if (count == 0) return;
    }
}

}  // namespace detail

// All monic generator polynomials of cyclic simplex codes of dimension k over
// GF(q): monic divisors g of x^m - 1 with deg g = m - k, m = (q^k - 1)/(q - 1),
// such that every nonzero multiple a(x) * g(x) with deg a < k has Hamming
// weight exactly q^(k-1). Sorted by ascending coefficient sequence.
//
// Candidates are enumerated through their degree-k cofactors h = (x^m - 1)/g,
// which keeps the search at q^k trials instead of q^(m-k).
inline std::vector<Polynomial> find_simplex_generators(const Field& field, unsigned k) {
    const unsigned q = field.order();
    if (k < 2) throw std::invalid_argument("simplex dimension must be at least 2");
    if (std::gcd(q - 1, k) != 1)
        throw std::invalid_argument("cyclic simplex codes require gcd(q - 1, k) = 1; got q = " + std::to_string(q) +
                                    ", k = " + std::to_string(k));
    {
        std::uint64_t size = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (size > (std::uint64_t(1) << 20) / q)
                throw std::invalid_argument("q^k exceeds the search bound 2^20");
            size *= q;
        }
    }

    std::uint64_t m64 = 1;
    for (unsigned i = 0; i < k; ++i) m64 *= q;
    const std::size_t m = std::size_t((m64 - 1) / (q - 1));
    const std::uint64_t expected_weight = m64 / q;  // q^(k-1)

    const Polynomial modulus = Polynomial::x_pow_minus_one(field, m);
    std::vector<Polynomial> generators;

    detail::for_each_tuple(field, k, [&](const std::vector<Residue>& tail) {
        std::vector<Residue> hc(tail);
        hc.push_back(1);  // monic degree-k candidate cofactor
        const Polynomial h(field, std::move(hc));
        auto [g, rem] = poly_divmod(modulus, h);
        if (!rem.is_zero()) return;

        // Equidistance: deg(a * g) < m, so plain products are the codewords.
        bool equidistant = true;
        detail::for_each_tuple(field, k, [&](const std::vector<Residue>& msg) {
            if (!equidistant) return;
            Polynomial a(field, msg);
            if (a.is_zero()) return;
            if ((a * g).weight() != expected_weight) equidistant = false;
        });
        if (equidistant) generators.push_back(std::move(g));
    });

    std::sort(generators.begin(), generators.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.coeffs() < b.coeffs(); });
    if (generators.empty())
        throw std::logic_error("no simplex generator found for admissible (q, k); this cannot happen");
    return generators;
}

// Text format: space-separated coefficient residues, ascending degree.
// "1 1 1 0 1" is 1 + x + x^2 + x^4. The zero polynomial renders as "0".
inline std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) out << ' ';
        out << p.coeffs()[i];
    }
    return out.str();
}

inline Polynomial parse_polynomial(const Field& field, const std::string& text) {
    std::istringstream in(text);
    std::vector<long long> values;
    long long v = 0;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw std::invalid_argument("malformed polynomial text: '" + text + "'");
    if (values.empty()) throw std::invalid_argument("empty polynomial text");
    return Polynomial::from_ints(field, values);
}

}  // namespace qctw

#endif
