#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pihom/rational.hpp"

namespace pihom {

class QMatrix;
struct RrefResult;
RrefResult rref_with_transform(const QMatrix& m);

// Sparse matrix of exact rationals. Rows are ordered maps column -> value;
// zero entries are never stored, so equality and iteration order are
// canonical regardless of how entries were inserted.
class QMatrix {
  public:
    using Row = std::map<int, Rat>;

    QMatrix() = default;
    QMatrix(int rows, int cols);

    static QMatrix identity(int n);
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
    static QMatrix from_dense(const std::vector<std::vector<long>>& a);
    static QMatrix from_columns(int rows, const std::vector<QVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add(int r, int c, const Rat& v);

    const Row& row(int r) const { return data_[r]; }
    std::size_t nnz() const;

    bool operator==(const QMatrix& other) const = default;

    QVec apply(const QVec& x) const;           // M * x
    QMatrix multiply(const QMatrix& rhs) const; // M * rhs
    QMatrix transpose() const;
    QMatrix hstack(const QMatrix& rhs) const;
    QVec column(int c) const;
    bool is_zero() const { return nnz() == 0; }

    std::string to_string() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> data_;

    friend RrefResult rref_with_transform(const QMatrix& m);
};

// Reduced row echelon form plus the invertible transform realizing it
// (transform * input == rref). Pivoting is deterministic: columns left to
// right, pivot row = lowest-index unused row with a nonzero entry.
struct RrefResult {
    QMatrix rref;
    QMatrix transform;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

std::pair<QMatrix, std::vector<int>> rref(const QMatrix& m);
int rank(const QMatrix& m);

// Basis of the null space, one vector per free column, in column order.
std::vector<QVec> kernel_basis(const QMatrix& m);

// Exact solution of M x = b, or nullopt when b is outside the column space.
// Free variables are set to zero.
std::optional<QVec> solve(const QMatrix& m, const QVec& b);

// Coefficients expressing v in the given (independent) vectors, or nullopt.
std::optional<QVec> coordinates_in_span(const std::vector<QVec>& basis, const QVec& v);

// Factors a matrix once and answers many solve() queries against it.
class LinearSolver {
  public:
    explicit LinearSolver(QMatrix m);

    std::optional<QVec> solve(const QVec& b) const;
    int rank() const { return fact_.rank(); }
    const std::vector<int>& pivot_cols() const { return fact_.pivot_cols; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    RrefResult fact_;
};

}  // namespace pihom
