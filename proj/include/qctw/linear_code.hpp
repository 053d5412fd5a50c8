#ifndef QCTW_LINEAR_CODE_HPP
#define QCTW_LINEAR_CODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qctw/matrix.hpp"

namespace qctw {

// Reduced row echelon form with zero rows dropped; the returned matrix has
// rank-many rows spanning the same row space.
inline Matrix row_reduce(const Matrix& m) {
    const Field& field = m.field();
    std::vector<std::vector<Residue>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());

    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < rows.size(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);

        const Residue inv = field.inv(rows[pivot_row][c]);
        for (std::size_t j = c; j < m.cols(); ++j) rows[pivot_row][j] = field.mul(rows[pivot_row][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][c] == 0) continue;
            const Residue factor = rows[r][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                rows[r][j] = field.sub(rows[r][j], field.mul(factor, rows[pivot_row][j]));
        }
        ++pivot_row;
    }

    Matrix out(field, pivot_row, m.cols());
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, rows[r][c]);
    return out;
}

// A linear [n, k] code: the raw generator matrix as assembled (possibly with
// dependent rows) together with a reduced basis of its row space.
struct LinearCode {
    Field field;
    std::size_t length;
    Matrix raw_generator;
    Matrix basis;  // RREF, exactly `dimension` rows
    unsigned dimension;
};

inline LinearCode from_generator(const Matrix& raw) {
    if (raw.is_zero()) throw std::invalid_argument("zero generator matrix spans no code");
    Matrix basis = row_reduce(raw);
    return {raw.field(), raw.cols(), raw, basis, unsigned(basis.rows())};
}

// Membership test against the RREF basis: eliminate the word's pivot
// positions and check that nothing remains.
inline bool contains(const LinearCode& code, std::span<const Residue> word) {
    if (word.size() != code.length) throw std::invalid_argument("word length differs from code length");
    const Field& field = code.field;
    std::vector<Residue> rem(word.begin(), word.end());
    for (std::size_t r = 0; r < code.basis.rows(); ++r) {
        std::size_t pivot = 0;
        while (pivot < code.length && code.basis.at(r, pivot) == 0) ++pivot;
        if (pivot == code.length || rem[pivot] == 0) continue;
        const Residue factor = rem[pivot];
        for (std::size_t c = pivot; c < code.length; ++c)
            rem[c] = field.sub(rem[c], field.mul(factor, code.basis.at(r, c)));
    }
    for (Residue v : rem)
        if (v != 0) return false;
    return true;
}

}  // namespace qctw

#endif
