#pragma once

// Dense exact rational matrices plus the two elimination routines the rest
// of the library leans on: fraction-free (Bareiss) rank/kernel-dimension
// over scaled integer rows, and an incremental reduced row-echelon basis
// for span-membership and consistency questions.

#include <optional>
#include <string>
#include <vector>

#include "ptelab/rational.hpp"

namespace ptelab::linalg {

class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Rat& c) const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    // Kronecker (tensor) product: (a (x) b)[(i1,i2),(j1,j2)].
    ExactMatrix kron(const ExactMatrix& o) const;

    Rat trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    // The scalar c when the matrix equals c * Id, otherwise nullopt.
    std::optional<Rat> as_scalar() const;
    bool commutes_with(const ExactMatrix& o) const;

    // Rank by fraction-free Bareiss elimination on integer-scaled rows.
    int rank() const;
    // Nullity = cols - rank.
    int kernel_dimension() const { return cols_ - rank(); }

    std::string to_string() const;  // aligned grid, one row per line

private:
    int rows_, cols_;
    std::vector<Rat> data_;  // row-major
};

// Incremental reduced echelon basis over the rationals. Rows are added one
// at a time; each is reduced against the current basis and kept if nonzero.
class RowEchelon {
public:
    explicit RowEchelon(int width) : width_(width) {}

    // Returns true when the row extended the span (was independent).
    bool add(std::vector<Rat> v);
    // True when v already lies in the span of the added rows.
    bool contains(std::vector<Rat> v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

private:
    void reduce(std::vector<Rat>& v) const;
    int width_;
    std::vector<std::vector<Rat>> rows_;  // each normalized with pivot 1
    std::vector<int> pivots_;
};

// Consistency of sum_j x_j * columns[j] = target, i.e. target in the
// column span. Column vectors must share the target's length.
bool in_span(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target);

}  // namespace ptelab::linalg
