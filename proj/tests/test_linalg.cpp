#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tatesyz/matrix.hpp"

using namespace tatesyz;

namespace {

// Independent rank oracle: column echelon on the transpose, eliminating
// with the *last* nonzero entry of each column.  Deliberately a different
// sweep order and pivot rule than Matrix::rref.
template <class F>
std::size_t oracle_rank(const Matrix<F>& m) {
    const F& f = m.field();
    // work on columns of m^T = rows of m
    std::vector<std::vector<typename F::Elt>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<typename F::Elt> r;
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    std::vector<bool> used(rows.size(), false);
    // sweep pivot positions from the last coordinate backwards
    for (std::size_t jj = m.cols(); jj-- > 0;) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && !f.is_zero(rows[i][jj])) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        used[pivot] = true;
        ++rank;
        auto inv = f.inv(rows[pivot][jj]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot || f.is_zero(rows[i][jj])) continue;
            auto c = f.mul(rows[i][jj], inv);
            for (std::size_t k = 0; k < m.cols(); ++k)
                rows[i][k] = f.sub(rows[i][k], f.mul(c, rows[pivot][k]));
        }
    }
    return rank;
}

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ent(-4, 4);
    // bias towards rank deficiency: zero out some rows wholesale
    std::uniform_int_distribution<int> coin(0, 3);
    Matrix<F> m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        bool wipe = (coin(rng) == 0);
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = wipe ? f.zero() : f.from_long(ent(rng));
    }
    return m;
}

template <class F>
void run_oracle_suite(const F& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int t = 0; t < 500; ++t) {
        auto m = random_matrix(f, dim(rng), dim(rng), rng);
        std::size_t rk = m.rank();
        REQUIRE(rk == oracle_rank(m));
        REQUIRE(rk == m.transpose().rank());

        auto ker = m.kernel_basis();
        REQUIRE(ker.cols() == m.cols() - rk);
        REQUIRE((m * ker).is_zero());
        REQUIRE(ker.rank() == ker.cols());

        // solve consistency: m * x is always solvable and the residual vanishes
        std::vector<typename F::Elt> x;
        std::uniform_int_distribution<int> ent(-3, 3);
        for (std::size_t j = 0; j < m.cols(); ++j) x.push_back(f.from_long(ent(rng)));
        auto b = m.apply(x);
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        auto back = m.apply(*sol);
        for (std::size_t i = 0; i < b.size(); ++i) REQUIRE(f.eq(back[i], b[i]));
    }
}

}  // namespace

TEST_CASE("rank/kernel/solve agree with the transpose-echelon oracle over Q") {
    run_oracle_suite(RationalField{}, 12345);
}

TEST_CASE("rank/kernel/solve agree with the transpose-echelon oracle over F_32003") {
    run_oracle_suite(PrimeField{kDefaultPrime}, 54321);
}

TEST_CASE("rank/kernel/solve agree with the transpose-echelon oracle over F_2") {
    run_oracle_suite(PrimeField{2}, 99);
}

TEST_CASE("rref is idempotent and inverse round-trips") {
    RationalField f;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int t = 0; t < 100; ++t) {
        auto m = random_matrix(f, dim(rng), dim(rng), rng);
        auto r1 = m.rref().m;
        auto r2 = r1.rref().m;
        REQUIRE(r1 == r2);
    }
    for (int t = 0; t < 50; ++t) {
        std::size_t n = dim(rng);
        auto m = random_matrix(f, n, n, rng);
        auto inv = m.inverse();
        if (m.rank() == n) {
            REQUIRE(inv.has_value());
            REQUIRE((m * *inv) == Matrix<RationalField>::identity(f, n));
            REQUIRE((*inv * m) == Matrix<RationalField>::identity(f, n));
        } else {
            REQUIRE(!inv.has_value());
        }
    }
}

TEST_CASE("kron rank is multiplicative") {
    PrimeField f{kDefaultPrime};
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int t = 0; t < 60; ++t) {
        auto a = random_matrix(f, dim(rng), dim(rng), rng);
        auto b = random_matrix(f, dim(rng), dim(rng), rng);
        REQUIRE(a.kron(b).rank() == a.rank() * b.rank());
    }
}

TEST_CASE("exact rational pivots: no precision loss on an ill-conditioned pattern") {
    RationalField f;
    // Hilbert-like matrix; floating point would misjudge this rank
    const std::size_t n = 9;
    Matrix<RationalField> h(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = f.from_fraction(1, static_cast<long>(i + j + 1));
    REQUIRE(h.rank() == n);
    auto inv = h.inverse();
    REQUIRE(inv.has_value());
    REQUIRE((h * *inv) == Matrix<RationalField>::identity(f, n));
}
