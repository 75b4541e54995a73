#include <doctest.h>

#include "deloop/linalg.hpp"

#include <random>

using namespace deloop::linalg;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<u32>> rows, u32 p) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix m(r, c, p);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (u32 v : row) m(i, j++) = v % p;
        ++i;
    }
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, u32 p) {
    Matrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<u32>(rng() % p);
    return m;
}

} // namespace

TEST_CASE("modular scalar helpers") {
    CHECK(add_mod(3, 4, 5) == 2);
    CHECK(sub_mod(1, 3, 5) == 3);
    CHECK(mul_mod(3, 4, 5) == 2);
    CHECK(inv_mod(2, 5) == 3);
    CHECK(pow_mod(2, 100, 101) == 1); // Fermat
    CHECK(is_prime(101));
    CHECK(!is_prime(91));
    CHECK_THROWS(inv_mod(0, 7));
}

TEST_CASE("rref identity and zero") {
    Matrix id = Matrix::identity(3, 101);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.rank == 3);

    Matrix z(2, 4, 101);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.rank == 0);
}

TEST_CASE("rref rank-1 example mod 5") {
    // [[1,2],[2,4]] mod 5: the second row is twice the first
    Matrix m = from_rows({{1, 2}, {2, 4}}, 5);
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced == from_rows({{1, 2}, {0, 0}}, 5));
    // idempotence
    CHECK(rref(r.reduced).reduced == r.reduced);
}

TEST_CASE("kernel_basis dimensions and membership") {
    CHECK(kernel_basis(Matrix::identity(4, 7)).cols() == 0);
    CHECK(kernel_basis(Matrix(3, 3, 7)).cols() == 3);

    // x + y = 0 mod 7: solutions spanned by (1, 6), found here by enumeration
    Matrix m = from_rows({{1, 1}}, 7);
    Matrix k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    std::vector<std::pair<u32, u32>> sols;
    for (u32 x = 0; x < 7; ++x)
        for (u32 y = 0; y < 7; ++y)
            if ((x + y) % 7 == 0 && (x | y)) sols.push_back({x, y});
    bool matched = false;
    for (auto [x, y] : sols)
        for (u32 c = 1; c < 7; ++c)
            if (mul_mod(c, k(0, 0), 7) == x && mul_mod(c, k(1, 0), 7) == y) matched = true;
    CHECK(matched);
}

TEST_CASE("rank + kernel dimension = cols on random matrices") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = rng() % 6, c = rng() % 6;
        Matrix m = random_matrix(rng, r, c, 101);
        CHECK(rank(m) + kernel_basis(m).cols() == c);
        // M * K = 0
        Matrix k = kernel_basis(m);
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("solve_right") {
    Matrix b = from_rows({{3, 1}, {2, 5}}, 7);
    auto x = solve_right(Matrix::identity(2, 7), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    CHECK(!solve_right(Matrix(2, 2, 7), b).has_value());

    // 2x = 1 mod 5 -> x = 3, confirmed by enumerating residues
    u32 expected = 0;
    for (u32 c = 0; c < 5; ++c)
        if (mul_mod(2, c, 5) == 1) expected = c;
    CHECK(expected == 3);
    auto s = solve_right(from_rows({{2}}, 5), from_rows({{1}}, 5));
    REQUIRE(s.has_value());
    CHECK((*s)(0, 0) == 3);
}

TEST_CASE("solve_right returns exact solutions on random systems") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 5, m = 1 + rng() % 5, k = 1 + rng() % 3;
        Matrix a = random_matrix(rng, n, m, 101);
        Matrix x0 = random_matrix(rng, m, k, 101);
        Matrix b = a * x0;
        auto x = solve_right(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("kron") {
    CHECK(kron(Matrix::identity(2, 101), Matrix::identity(3, 101)) == Matrix::identity(6, 101));
    CHECK(kron(from_rows({{1, 2}}, 5), Matrix(2, 2, 5)).is_zero());
    // definition expansion: [[1,1]] (x) [[1],[1]] is the 2x2 all-ones pattern
    Matrix a = from_rows({{1, 1}}, 3);
    Matrix b = from_rows({{1}, {1}}, 3);
    CHECK(kron(a, b) == from_rows({{1, 1}, {1, 1}}, 3));
    CHECK_THROWS(kron(from_rows({{1}}, 3), from_rows({{1}}, 5)));
}

TEST_CASE("rank of kron is product of ranks") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        Matrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 101);
        Matrix b = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 101);
        CHECK(rank(kron(a, b)) == rank(a) * rank(b));
    }
}

TEST_CASE("inverse, left kernel, row space") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng() % 5;
        Matrix m = random_matrix(rng, n, n, 101);
        auto inv = inverse(m);
        if (inv) {
            CHECK(m * *inv == Matrix::identity(n, 101));
        } else {
            CHECK(rank(m) < n);
        }
        Matrix lk = left_kernel_basis(m);
        CHECK((lk * m).is_zero());
        CHECK(lk.rows() + rank(m) == n);
    }
    Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}, 7);
    Matrix b = row_space_basis(m);
    CHECK(b.rows() == 2);
    CHECK(rows_contained(m, b));
    CHECK(!rows_contained(Matrix::identity(3, 7), b));
}

TEST_CASE("char_poly matches explicit determinant expansions") {
    const u32 p = 101;
    // companion matrix of x^3 + 2x + 5
    Matrix c(3, 3, p);
    c(0, 2) = p - 5;
    c(1, 0) = 1; c(1, 2) = p - 2;
    c(2, 1) = 1;
    auto q = char_poly(c);
    REQUIRE(q.size() == 4);
    CHECK(q[0] == 5);
    CHECK(q[1] == 2);
    CHECK(q[2] == 0);
    CHECK(q[3] == 1);

    // eigenvalues of char_poly vanish exactly where rank drops
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 5;
        Matrix m = random_matrix(rng, n, n, p);
        auto poly = char_poly(m);
        for (u32 x = 0; x < p; ++x) {
            Matrix shifted = m - Matrix::identity(n, p).scaled(x);
            bool singular = rank(shifted) < n;
            CHECK((poly_eval(poly, x, p) == 0) == singular);
        }
    }
}

TEST_CASE("modulus mismatch is a hard error") {
    Matrix a(2, 2, 5), b(2, 2, 7);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}
