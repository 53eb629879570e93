#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pihom/qmatrix.hpp"

using namespace pihom;

namespace {

// Independent rank oracle: largest k admitting a nonzero k x k minor,
// determinants by cofactor expansion. Exponential, test-only.
Rat minor_det(const QMatrix& m, const std::vector<int>& rs, const std::vector<int>& cs)
{
    const std::size_t k = rs.size();
    if (k == 1)
        return m.at(rs[0], cs[0]);
    Rat det(0);
    for (std::size_t i = 0; i < k; ++i) {
        Rat a = m.at(rs[i], cs[0]);
        if (a == 0)
            continue;
        std::vector<int> sub;
        for (std::size_t t = 0; t < k; ++t)
            if (t != i)
                sub.push_back(rs[t]);
        Rat cofactor = minor_det(m, sub, std::vector<int>(cs.begin() + 1, cs.end()));
        det += (i % 2 == 0 ? a : -a) * cofactor;
    }
    return det;
}

bool has_nonzero_minor(const QMatrix& m, int k, std::vector<int>& rs, std::vector<int>& cs,
                       int row_from, int col_from, bool picking_rows)
{
    if (picking_rows) {
        if (static_cast<int>(rs.size()) == k)
            return has_nonzero_minor(m, k, rs, cs, 0, 0, false);
        for (int r = row_from; r < m.rows(); ++r) {
            rs.push_back(r);
            if (has_nonzero_minor(m, k, rs, cs, r + 1, col_from, true))
                return true;
            rs.pop_back();
        }
        return false;
    }
    if (static_cast<int>(cs.size()) == k)
        return minor_det(m, rs, cs) != 0;
    for (int c = col_from; c < m.cols(); ++c) {
        cs.push_back(c);
        if (has_nonzero_minor(m, k, rs, cs, 0, c + 1, false))
            return true;
        cs.pop_back();
    }
    return false;
}

int minor_rank(const QMatrix& m)
{
    for (int k = std::min(m.rows(), m.cols()); k >= 1; --k) {
        std::vector<int> rs, cs;
        if (has_nonzero_minor(m, k, rs, cs, 0, 0, true))
            return k;
    }
    return 0;
}

QMatrix random_matrix(std::mt19937& rng, int rows, int cols)
{
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int n = num(rng);
            if (n != 0)
                m.set(r, c, rat(n, den(rng)));
        }
    return m;
}

}  // namespace

TEST_CASE("rationals stay canonical")
{
    Rat a = rat(2, -4);
    CHECK(a.get_num() == -1);
    CHECK(a.get_den() == 2);
    CHECK(rat(1, 3) * 3 == 1);
    CHECK(rat_parse("-6/8") == rat(-3, 4));
    CHECK(rat_str(rat(7, 2)) == "7/2");
    CHECK_THROWS_AS(rat(1, 0), input_error);
}

TEST_CASE("rref identity and rank-1 cases")
{
    QMatrix id = QMatrix::identity(2);
    auto [r1, p1] = rref(id);
    CHECK(r1 == id);
    CHECK(p1 == std::vector<int>{0, 1});

    QMatrix m = QMatrix::from_dense({{1, 2}, {2, 4}});
    auto [r2, p2] = rref(m);
    CHECK(r2 == QMatrix::from_dense({{1, 2}, {0, 0}}));
    CHECK(p2 == std::vector<int>{0});
}

TEST_CASE("random rref agrees with the minor-rank oracle and is idempotent")
{
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 8; ++trial) {
        QMatrix m = random_matrix(rng, 6, 6);
        auto [r, pivots] = rref(m);
        CHECK(static_cast<int>(pivots.size()) == minor_rank(m));
        auto [rr, pv2] = rref(r);
        CHECK(rr == r);
        CHECK(pv2 == pivots);
    }
}

TEST_CASE("rank basics")
{
    CHECK(rank(QMatrix(3, 4)) == 0);
    CHECK(rank(QMatrix::identity(5)) == 5);
    // Boundary of the two-vertex circle in degree 1: rows are +-1.
    QMatrix d1 = QMatrix::from_dense({{-1, 1}, {1, -1}});
    CHECK(rank(d1) == 1);
}

TEST_CASE("kernel bases")
{
    CHECK(kernel_basis(QMatrix::identity(3)).empty());

    QMatrix m(1, 2);
    m.set(0, 0, Rat(1));
    m.set(0, 1, Rat(-1));
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == QVec{Rat(1), Rat(1)});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        QMatrix a = random_matrix(rng, 5, 7);
        auto basis = kernel_basis(a);
        CHECK(rank(a) + static_cast<int>(basis.size()) == a.cols());
        for (const QVec& v : basis)
            CHECK(is_zero_vec(a.apply(v)));
    }
}

TEST_CASE("solve")
{
    QVec b{rat(3), rat(-1, 2)};
    auto x = solve(QMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    QMatrix col(2, 1);
    col.set(0, 0, Rat(1));
    col.set(1, 0, Rat(1));
    CHECK_FALSE(solve(col, QVec{Rat(1), Rat(2)}).has_value());

    std::mt19937 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        QMatrix m = random_matrix(rng, 5, 4);
        QVec v(4);
        for (auto& e : v)
            e = rat(std::uniform_int_distribution<int>(-4, 4)(rng), 1);
        QVec rhs = m.apply(v);
        auto got = solve(m, rhs);
        REQUIRE(got.has_value());
        CHECK(m.apply(*got) == rhs);
        // Solvability matches the rank criterion on the augmented matrix.
        CHECK(rank(m.hstack(QMatrix::from_columns(5, {rhs}))) == rank(m));
    }
}

TEST_CASE("coordinates_in_span")
{
    std::vector<QVec> basis{{Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(1)}};
    auto c0 = coordinates_in_span(basis, basis[0]);
    REQUIRE(c0.has_value());
    CHECK(*c0 == QVec{Rat(1), Rat(0)});

    auto cz = coordinates_in_span(basis, zero_vec(3));
    REQUIRE(cz.has_value());
    CHECK(is_zero_vec(*cz));

    QVec outside{Rat(1), Rat(1), Rat(0)};
    CHECK_FALSE(coordinates_in_span(basis, outside).has_value());
    QMatrix b = QMatrix::from_columns(3, basis);
    CHECK(rank(b.hstack(QMatrix::from_columns(3, {outside}))) == rank(b) + 1);
}

TEST_CASE("results do not depend on insertion order")
{
    std::mt19937 rng(5150);
    QMatrix a(6, 6), b(6, 6);
    std::vector<std::tuple<int, int, Rat>> entries;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c)
            entries.emplace_back(r, c, rat((r * 7 + c * 3) % 5 - 2, 1 + (r + c) % 2));
    for (const auto& [r, c, v] : entries)
        a.set(r, c, v);
    std::shuffle(entries.begin(), entries.end(), rng);
    for (const auto& [r, c, v] : entries)
        b.set(r, c, v);
    CHECK(a == b);
    CHECK(rref(a).first.to_string() == rref(b).first.to_string());
}

TEST_CASE("LinearSolver answers repeated queries like one-shot solve")
{
    std::mt19937 rng(321);
    QMatrix m = random_matrix(rng, 6, 5);
    LinearSolver ls(m);
    for (int trial = 0; trial < 5; ++trial) {
        QVec v(5);
        for (auto& e : v)
            e = rat(std::uniform_int_distribution<int>(-2, 2)(rng), 1);
        QVec rhs = m.apply(v);
        auto a = ls.solve(rhs);
        auto b = solve(m, rhs);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == *b);
    }
    CHECK(ls.solve(QVec(6, Rat(1))).has_value() == solve(m, QVec(6, Rat(1))).has_value());
}
