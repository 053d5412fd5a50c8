#ifndef QCTW_MATRIX_HPP
#define QCTW_MATRIX_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qctw/field.hpp"

namespace qctw {

// Dense row-major matrix over GF(q).
class Matrix {
  public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue v) {
        if (v >= field_.order()) throw std::invalid_argument("entry out of range for the field");
        data_[r * cols_ + c] = v;
    }

    std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const {
        for (Residue v : data_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Residue> data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("product of matrices over different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("incompatible shapes in matrix product");
    const Field& field = a.field();
    Matrix out(field, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Residue aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.set(i, j, field.add(out.at(i, j), field.mul(aik, b.at(k, j))));
        }
    return out;
}

// Text format: header "q n_rows n_cols", then one line per row of
// space-separated residues. Round-trips byte for byte.
inline std::string to_text(const Matrix& m) {
    std::ostringstream out;
    out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << ' ';
            out << m.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

inline Matrix parse_matrix(std::istream& in) {
    unsigned q = 0;
    std::size_t rows = 0, cols = 0;
    if (!(in >> q >> rows >> cols)) throw std::invalid_argument("malformed matrix header; expected 'q n_rows n_cols'");
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    Field field(q);
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            long long v = 0;
            if (!(in >> v)) throw std::invalid_argument("matrix body ends early");
            m.set(r, c, field.reduce(v));
        }
    return m;
}

inline Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    Matrix m = parse_matrix(in);
    long long extra = 0;
    if (in >> extra) throw std::invalid_argument("trailing data after matrix body");
    return m;
}

}  // namespace qctw

#endif
