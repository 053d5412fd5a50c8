#ifndef QCTW_QC_MATRIX_HPP
#define QCTW_QC_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qctw/linear_code.hpp"
#include "qctw/matrix.hpp"
#include "qctw/polynomial.hpp"

namespace qctw {

// An m x m circulant, defined by the polynomial formed by its first row.
struct CirculantSpec {
    Polynomial defining_poly;
    std::size_t order;

    CirculantSpec(Polynomial poly, std::size_t m) : defining_poly(std::move(poly)), order(m) {
        if (m == 0) throw std::invalid_argument("circulant order must be positive");
        if (!defining_poly.is_zero() && defining_poly.degree() >= m)
            throw std::invalid_argument("defining polynomial degree must be below the circulant order");
    }
};

// Row s holds the coefficients of x^s * c(x) mod x^m - 1: row 0 is the
// defining polynomial's coefficient word and every following row is the
// previous one rotated right by one position.
inline Matrix circulant(const CirculantSpec& spec) {
    const std::size_t m = spec.order;
    Matrix out(spec.defining_poly.field(), m, m);
    const CyclicWord first = CyclicWord::from_polynomial(spec.defining_poly, m);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t c = 0; c < m; ++c) out.set(s, (c + s) % m, first.coeffs()[c]);
    return out;
}

// Symbolic form of an r-generator quasi-cyclic generator matrix: a grid of
// r x p defining polynomials, one per circulant block, plus optional constant
// column extensions (one value per generator band) for parity digits.
struct QcGeneratorSpec {
    Field field;
    std::size_t order;                           // m, shared by every block
    std::vector<std::vector<Polynomial>> rows;   // r generator rows of p polynomials
    std::vector<std::vector<Residue>> extra_columns;  // each entry has r band constants

    QcGeneratorSpec(Field f, std::size_t m, std::vector<std::vector<Polynomial>> grid,
                    std::vector<std::vector<Residue>> extras = {})
        : field(f), order(m), rows(std::move(grid)), extra_columns(std::move(extras)) {
        if (order == 0) throw std::invalid_argument("block order must be positive");
        if (rows.empty() || rows.front().empty()) throw std::invalid_argument("generator grid must be nonempty");
        const std::size_t p = rows.front().size();
        for (const auto& row : rows) {
            if (row.size() != p) throw std::invalid_argument("generator grid must be rectangular");
            for (const Polynomial& poly : row) {
                if (!(poly.field() == field)) throw std::invalid_argument("grid polynomial over a different field");
                if (!poly.is_zero() && poly.degree() >= order)
                    throw std::invalid_argument("grid polynomial degree must be below the block order");
            }
        }
        for (const auto& col : extra_columns) {
            if (col.size() != rows.size())
                throw std::invalid_argument("extra column needs one constant per generator row");
            for (Residue v : col)
                if (v >= field.order()) throw std::invalid_argument("extra column constant out of range");
        }
    }

    std::size_t generator_rows() const { return rows.size(); }
    std::size_t block_count() const { return rows.front().size(); }
};

// Expands the symbolic grid to the explicit (r*m) x (p*m + extras) matrix.
// Block (i, j) is the circulant of rows[i][j]; each extra column is constant
// down every m-row generator band.
inline Matrix expand(const QcGeneratorSpec& spec) {
    const std::size_t m = spec.order;
    const std::size_t r = spec.generator_rows();
    const std::size_t p = spec.block_count();
    Matrix out(spec.field, r * m, p * m + spec.extra_columns.size());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const Matrix block = circulant({spec.rows[i][j], m});
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t c = 0; c < m; ++c) out.set(i * m + s, j * m + c, block.at(s, c));
        }
    for (std::size_t e = 0; e < spec.extra_columns.size(); ++e)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t s = 0; s < m; ++s) out.set(i * m + s, p * m + e, spec.extra_columns[e][i]);
    return out;
}

// Checks the quasi-cyclic automorphism in block-circulant coordinate order:
// rotating every length-m block of every basis codeword right by one position
// must land back in the code. Coordinates beyond p*m (parity extensions) are
// held fixed. Equivalent to invariance under a cyclic shift by p in the
// interleaved coordinate order.
inline bool row_shift_invariance_witness(const LinearCode& code, std::size_t m, std::size_t p) {
    if (m == 0 || p == 0) throw std::invalid_argument("block order and block count must be positive");
    if (code.length < p * m) throw std::invalid_argument("code length is shorter than p * m");
    std::vector<Residue> rotated(code.length);
    for (std::size_t r = 0; r < code.basis.rows(); ++r) {
        const auto row = code.basis.row(r);
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t c = 0; c < m; ++c) rotated[j * m + (c + 1) % m] = row[j * m + c];
        for (std::size_t c = p * m; c < code.length; ++c) rotated[c] = row[c];
        if (!contains(code, rotated)) return false;
    }
    return true;
}

}  // namespace qctw

#endif
