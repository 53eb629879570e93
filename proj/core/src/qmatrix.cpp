#include "pihom/qmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace pihom {

namespace {
const Rat kZero(0);
}

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows)
{
    if (rows < 0 || cols < 0)
        throw internal_error("negative matrix dimension");
}

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, Rat(1));
    return m;
}

QMatrix QMatrix::from_dense(const std::vector<std::vector<long>>& a)
{
    int r = static_cast<int>(a.size());
    int c = r == 0 ? 0 : static_cast<int>(a[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(a[i].size()) != c)
            throw internal_error("ragged dense matrix");
        for (int j = 0; j < c; ++j)
            if (a[i][j] != 0)
                m.set(i, j, Rat(a[i][j]));
    }
    return m;
}

QMatrix QMatrix::from_columns(int rows, const std::vector<QVec>& cols)
{
    QMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw internal_error("column length mismatch");
        for (int i = 0; i < rows; ++i)
            if (cols[j][i] != 0)
                m.set(i, j, cols[j][i]);
    }
    return m;
}

const Rat& QMatrix::at(int r, int c) const
{
    auto it = data_[r].find(c);
    return it == data_[r].end() ? kZero : it->second;
}

void QMatrix::set(int r, int c, const Rat& v)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw internal_error("matrix index out of range");
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void QMatrix::add(int r, int c, const Rat& v)
{
    if (v == 0)
        return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            data_[r].erase(it);
    }
}

std::size_t QMatrix::nnz() const
{
    std::size_t n = 0;
    for (const Row& row : data_)
        n += row.size();
    return n;
}

QVec QMatrix::apply(const QVec& x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw internal_error("matvec dimension mismatch");
    QVec y = zero_vec(rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [c, v] : data_[i])
            y[i] += v * x[c];
    return y;
}

QMatrix QMatrix::multiply(const QMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw internal_error("matmul dimension mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [k, v] : data_[i])
            for (const auto& [j, w] : rhs.data_[k])
                out.add(i, j, v * w);
    return out;
}

QMatrix QMatrix::transpose() const
{
    QMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [c, v] : data_[i])
            out.set(c, i, v);
    return out;
}

QMatrix QMatrix::hstack(const QMatrix& rhs) const
{
    if (rows_ != rhs.rows_)
        throw internal_error("hstack row mismatch");
    QMatrix out(rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (const auto& [c, v] : data_[i])
            out.set(i, c, v);
        for (const auto& [c, v] : rhs.data_[i])
            out.set(i, cols_ + c, v);
    }
    return out;
}

QVec QMatrix::column(int c) const
{
    QVec v = zero_vec(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, c);
    return v;
}

std::string QMatrix::to_string() const
{
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "[";
    bool first = true;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [c, v] : data_[i]) {
            if (!first)
                os << " ";
            first = false;
            os << i << "," << c << ":" << v.get_str();
        }
    os << "]";
    return os.str();
}

namespace {

// row_i -= f * row_j, applied to both the working matrix and the transform.
void axpy_row(QMatrix::Row& dst, const QMatrix::Row& src, const Rat& f)
{
    for (const auto& [c, v] : src) {
        auto [it, inserted] = dst.try_emplace(c, -f * v);
        if (!inserted) {
            it->second -= f * v;
            if (it->second == 0)
                dst.erase(it);
        } else if (it->second == 0) {
            dst.erase(it);
        }
    }
}

void scale_row(QMatrix::Row& row, const Rat& f)
{
    for (auto& [c, v] : row)
        v *= f;
}

}  // namespace

RrefResult rref_with_transform(const QMatrix& m)
{
    const int nr = m.rows();
    const int nc = m.cols();
    std::vector<QMatrix::Row> work(m.data_);
    std::vector<QMatrix::Row> trans(nr);
    for (int i = 0; i < nr; ++i)
        trans[i][i] = Rat(1);

    std::vector<int> pivot_cols;
    std::vector<int> pivot_rows;
    std::vector<char> used(nr, 0);

    for (int col = 0; col < nc; ++col) {
        int pr = -1;
        for (int r = 0; r < nr; ++r) {
            if (!used[r] && work[r].count(col)) {
                pr = r;
                break;
            }
        }
        if (pr < 0)
            continue;
        used[pr] = 1;
        Rat inv = 1 / work[pr][col];
        scale_row(work[pr], inv);
        scale_row(trans[pr], inv);
        for (int r = 0; r < nr; ++r) {
            if (r == pr)
                continue;
            auto it = work[r].find(col);
            if (it == work[r].end())
                continue;
            Rat f = it->second;
            axpy_row(work[r], work[pr], f);
            axpy_row(trans[r], trans[pr], f);
        }
        pivot_cols.push_back(col);
        pivot_rows.push_back(pr);
    }

    // Reorder rows: pivot rows first in pivot-column order, then the rest.
    RrefResult res;
    res.rref = QMatrix(nr, nc);
    res.transform = QMatrix(nr, nr);
    res.pivot_cols = pivot_cols;
    int out = 0;
    for (int pr : pivot_rows) {
        res.rref.data_[out] = std::move(work[pr]);
        res.transform.data_[out] = std::move(trans[pr]);
        ++out;
    }
    for (int r = 0; r < nr; ++r) {
        if (!used[r]) {
            res.rref.data_[out] = std::move(work[r]);
            res.transform.data_[out] = std::move(trans[r]);
            ++out;
        }
    }
    return res;
}

std::pair<QMatrix, std::vector<int>> rref(const QMatrix& m)
{
    RrefResult r = rref_with_transform(m);
    return {std::move(r.rref), std::move(r.pivot_cols)};
}

int rank(const QMatrix& m) { return rref_with_transform(m).rank(); }

std::vector<QVec> kernel_basis(const QMatrix& m)
{
    RrefResult f = rref_with_transform(m);
    const int nc = m.cols();
    std::vector<char> is_pivot(nc, 0);
    for (int c : f.pivot_cols)
        is_pivot[c] = 1;

    std::vector<QVec> basis;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot[free])
            continue;
        QVec v = zero_vec(nc);
        v[free] = Rat(1);
        for (int i = 0; i < f.rank(); ++i)
            v[f.pivot_cols[i]] = -f.rref.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMatrix& m, const QVec& b)
{
    return LinearSolver(m).solve(b);
}

std::optional<QVec> coordinates_in_span(const std::vector<QVec>& basis, const QVec& v)
{
    int rows = static_cast<int>(v.size());
    return solve(QMatrix::from_columns(rows, basis), v);
}

LinearSolver::LinearSolver(QMatrix m)
    : rows_(m.rows()), cols_(m.cols()), fact_(rref_with_transform(m))
{
}

std::optional<QVec> LinearSolver::solve(const QVec& b) const
{
    if (static_cast<int>(b.size()) != rows_)
        throw internal_error("solve: rhs length mismatch");
    QVec y = fact_.transform.apply(b);
    for (int i = fact_.rank(); i < rows_; ++i)
        if (y[i] != 0)
            return std::nullopt;
    // Free variables pinned to zero, so each pivot variable reads off its row.
    QVec x = zero_vec(cols_);
    for (int i = 0; i < fact_.rank(); ++i)
        x[fact_.pivot_cols[i]] = y[i];
    return x;
}

}  // namespace pihom
