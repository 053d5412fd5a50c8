#ifndef QCTW_FIELD_HPP
#define QCTW_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qctw {

// Residues are stored reduced into [0, q). q is capped at 2^16 so that a
// product of two residues always fits a uint32_t.
using Residue = std::uint16_t;

// A prime field GF(q). Value type, cheap to copy; two Field objects compare
// equal iff they have the same order, so it doubles as the tag that detects
// arithmetic between elements of different fields.
class Field {
  public:
    explicit Field(unsigned q) : q_(q) {
        if (q < 2 || q > 65535)
            throw std::invalid_argument("field order must be in [2, 65535], got " + std::to_string(q));
        for (unsigned d = 2; d * d <= q; ++d)
            if (q % d == 0)
                throw std::invalid_argument("field order must be prime, got " + std::to_string(q));
    }

    unsigned order() const { return q_; }

    bool operator==(const Field&) const = default;

    // Raw residue arithmetic. Inputs must already be reduced; these are the
    // workhorses of the enumeration loops where per-element field tags would
    // be dead weight.
    Residue add(Residue a, Residue b) const {
        std::uint32_t s = std::uint32_t(a) + b;
        return Residue(s >= q_ ? s - q_ : s);
    }
    Residue neg(Residue a) const { return Residue(a == 0 ? 0 : q_ - a); }
    Residue sub(Residue a, Residue b) const { return add(a, neg(b)); }
    Residue mul(Residue a, Residue b) const { return Residue(std::uint32_t(a) * b % q_); }
    Residue inv(Residue a) const {
        if (a == 0)
            throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
        // q is tiny in practice; exponentiation a^(q-2) keeps this branch-free
        // and total on nonzero elements.
        std::uint32_t result = 1, base = a, e = q_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % q_;
            base = base * base % q_;
            e >>= 1;
        }
        return Residue(result);
    }

    // Reduces an arbitrary signed value into [0, q).
    Residue reduce(long long v) const {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return Residue(r);
    }

  private:
    unsigned q_;
};

// An element of GF(q) carrying its field; operations between elements of
// different fields throw.
class FieldElement {
  public:
    FieldElement(Residue value, Field field) : value_(value), field_(field) {
        if (value >= field.order())
            throw std::invalid_argument("residue " + std::to_string(value) + " out of range for GF(" +
                                        std::to_string(field.order()) + ")");
    }

    Residue value() const { return value_; }
    const Field& field() const { return field_; }

    bool is_zero() const { return value_ == 0; }

    FieldElement inverse() const { return {field_.inv(value_), field_}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        return {a.field_.add(a.value_, b.value_), a.field_};
    }
    friend FieldElement operator-(const FieldElement& a) { return {a.field_.neg(a.value_), a.field_}; }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        return {a.field_.sub(a.value_, b.value_), a.field_};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_same_field(a, b);
        return {a.field_.mul(a.value_, b.value_), a.field_};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

    bool operator==(const FieldElement&) const = default;

  private:
    static void check_same_field(const FieldElement& a, const FieldElement& b) {
        if (!(a.field_ == b.field_))
            throw std::invalid_argument("operation between elements of GF(" + std::to_string(a.field_.order()) +
                                        ") and GF(" + std::to_string(b.field_.order()) + ")");
    }

    Residue value_;
    Field field_;
};

}  // namespace qctw

#endif
