#ifndef DELOOP_LINALG_HPP
#define DELOOP_LINALG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace deloop::linalg {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Modular scalar helpers. All values are residues in [0, p).
inline u32 add_mod(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 sub_mod(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 neg_mod(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 mul_mod(u32 a, u32 b, u32 p) { return static_cast<u32>((u64)a * b % p); }
u32 pow_mod(u32 a, u64 e, u32 p);
u32 inv_mod(u32 a, u32 p); // throws on a == 0
bool is_prime(u32 p);

/// Dense row-major matrix over F_p. A single modulus is shared by all
/// entries; mixing moduli in any binary operation is a hard error.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), mod_(2) {}
    Matrix(std::size_t rows, std::size_t cols, u32 mod)
        : rows_(rows), cols_(cols), mod_(mod), a_(rows * cols, 0) {}

    static Matrix identity(std::size_t n, u32 mod);
    static Matrix zero(std::size_t rows, std::size_t cols, u32 mod) { return Matrix(rows, cols, mod); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u32 modulus() const { return mod_; }

    u32 operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    u32& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const std::vector<u32>& data() const { return a_; }

    bool operator==(const Matrix& o) const = default;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(u32 c) const;

    /// Rows of `o` appended below this matrix.
    Matrix vstack(const Matrix& o) const;
    /// Columns of `o` appended to the right.
    Matrix hstack(const Matrix& o) const;
    Matrix row(std::size_t r) const;
    Matrix submatrix_rows(const std::vector<std::size_t>& idx) const;
    Matrix submatrix_cols(const std::vector<std::size_t>& idx) const;

private:
    std::size_t rows_, cols_;
    u32 mod_;
    std::vector<u32> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form (Gauss-Jordan over F_p).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel {x : M x = 0};
/// column count = cols - rank.
Matrix kernel_basis(const Matrix& m);

/// Rows form a basis of the left kernel {y : y M = 0}.
Matrix left_kernel_basis(const Matrix& m);

/// Solves A X = B exactly; empty when no solution exists.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

/// Solves X A = B exactly (row-space membership of B's rows).
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Standard Kronecker product; dims multiply.
Matrix kron(const Matrix& a, const Matrix& b);

/// Nonzero rows of rref(m): canonical basis of the row space.
Matrix row_space_basis(const Matrix& m);

/// True when every row of v lies in the row space of `basis`
/// (basis need not be reduced).
bool rows_contained(const Matrix& v, const Matrix& basis);

/// Characteristic polynomial coefficients, low degree first
/// (c[0] + c[1] x + ... + x^n), computed by Hessenberg reduction.
std::vector<u32> char_poly(const Matrix& m);

/// Evaluates a polynomial (low degree first) at x.
u32 poly_eval(const std::vector<u32>& coeffs, u32 x, u32 p);

} // namespace deloop::linalg

#endif
