#include "deloop/linalg.hpp"

#include <algorithm>
#include <string>

namespace deloop::linalg {

namespace {

void check_same_mod(const Matrix& a, const Matrix& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) +
                                    " vs " + std::to_string(b.modulus()));
}

} // namespace

u32 pow_mod(u32 a, u64 e, u32 p) {
    u64 base = a % p, acc = 1 % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

u32 inv_mod(u32 a, u32 p) {
    if (a % p == 0) throw std::domain_error("inverse of zero residue");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t; t = new_t; new_t = tmp;
        tmp = r - q * new_r; r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::domain_error("modulus not prime or value not invertible");
    if (t < 0) t += p;
    return static_cast<u32>(t);
}

bool is_prime(u32 p) {
    if (p < 2) return false;
    for (u32 d = 2; (u64)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Matrix Matrix::identity(std::size_t n, u32 mod) {
    Matrix m(n, n, mod);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % mod;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](u32 v) { return v == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, mod_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_mod(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in add");
    Matrix s(rows_, cols_, mod_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = add_mod(a_[i], o.a_[i], mod_);
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_mod(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in sub");
    Matrix s(rows_, cols_, mod_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = sub_mod(a_[i], o.a_[i], mod_);
    return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_mod(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
    Matrix prod(rows_, o.cols_, mod_);
    // lazy accumulation is safe while p^2 * cols fits in u64
    const bool lazy = (u64)mod_ * mod_ <= (u64(1) << 40);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            u32 v = (*this)(i, k);
            if (v == 0) continue;
            const u32* orow = &o.a_[k * o.cols_];
            u32* prow = &prod.a_[i * o.cols_];
            if (lazy) {
                for (std::size_t j = 0; j < o.cols_; ++j)
                    prow[j] = static_cast<u32>(((u64)v * orow[j] + prow[j]) % mod_);
            } else {
                for (std::size_t j = 0; j < o.cols_; ++j)
                    prow[j] = add_mod(prow[j], mul_mod(v, orow[j], mod_), mod_);
            }
        }
    }
    return prod;
}

Matrix Matrix::scaled(u32 c) const {
    Matrix s(rows_, cols_, mod_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = mul_mod(a_[i], c % mod_, mod_);
    return s;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (rows_ == 0 && cols_ == 0) return o;
    if (o.rows_ == 0 && o.cols_ == 0) return *this;
    check_same_mod(*this, o);
    if (cols_ != o.cols_) throw std::invalid_argument("shape mismatch in vstack");
    Matrix s(rows_ + o.rows_, cols_, mod_);
    std::copy(a_.begin(), a_.end(), s.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), s.a_.begin() + a_.size());
    return s;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_mod(*this, o);
    if (rows_ != o.rows_) throw std::invalid_argument("shape mismatch in hstack");
    Matrix s(rows_, cols_ + o.cols_, mod_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::copy(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_, s.a_.begin() + r * s.cols_);
        std::copy(o.a_.begin() + r * o.cols_, o.a_.begin() + (r + 1) * o.cols_,
                  s.a_.begin() + r * s.cols_ + cols_);
    }
    return s;
}

Matrix Matrix::row(std::size_t r) const {
    Matrix s(1, cols_, mod_);
    std::copy(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_, s.a_.begin());
    return s;
}

Matrix Matrix::submatrix_rows(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), cols_, mod_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        std::copy(a_.begin() + idx[i] * cols_, a_.begin() + (idx[i] + 1) * cols_,
                  s.a_.begin() + i * cols_);
    return s;
}

Matrix Matrix::submatrix_cols(const std::vector<std::size_t>& idx) const {
    Matrix s(rows_, idx.size(), mod_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < idx.size(); ++i)
            s(r, i) = (*this)(r, idx[i]);
    return s;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    Matrix a = m;
    const u32 p = a.modulus();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead, j));
        u32 inv = inv_mod(a(lead, c), p);
        for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) = mul_mod(a(lead, j), inv, p);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead) continue;
            u32 f = a(r, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a(r, j) = sub_mod(a(r, j), mul_mod(f, a(lead, j), p), p);
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    res.reduced = std::move(a);
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(m.cols(), free_cols.size(), m.modulus());
    const u32 p = m.modulus();
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t f = free_cols[fi];
        k(f, fi) = 1 % p;
        for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
            k(r.pivot_cols[pi], fi) = neg_mod(r.reduced(pi, f), p);
    }
    return k;
}

Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    check_same_mod(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("shape mismatch in solve_right");
    RrefResult r = rref(a.hstack(b));
    // any pivot beyond a's columns means an inconsistent system
    for (std::size_t c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.modulus());
    for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(r.pivot_cols[pi], j) = r.reduced(pi, a.cols() + j);
    return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    auto xt = solve_right(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    RrefResult r = rref(m.hstack(Matrix::identity(m.rows(), m.modulus())));
    if (r.rank != m.rows()) return std::nullopt;
    std::vector<std::size_t> right(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) right[i] = m.cols() + i;
    return r.reduced.submatrix_cols(right);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    check_same_mod(a, b);
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            u32 v = a(ar, ac);
            if (v == 0) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    k(ar * b.rows() + br, ac * b.cols() + bc) = mul_mod(v, b(br, bc), a.modulus());
        }
    return k;
}

Matrix row_space_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<std::size_t> idx(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) idx[i] = i;
    return r.reduced.submatrix_rows(idx);
}

bool rows_contained(const Matrix& v, const Matrix& basis) {
    if (v.rows() == 0) return true;
    std::size_t rb = rank(basis);
    return rank(basis.vstack(v)) == rb;
}

std::vector<u32> char_poly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    const u32 p = m.modulus();
    if (n == 0) return {1 % p};
    Matrix h = m;
    // reduce to upper Hessenberg form by similarity transformations
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && h(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
        }
        u32 inv = inv_mod(h(c + 1, c), p);
        for (std::size_t r = c + 2; r < n; ++r) {
            u32 f = mul_mod(h(r, c), inv, p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                h(r, j) = sub_mod(h(r, j), mul_mod(f, h(c + 1, j), p), p);
            for (std::size_t i = 0; i < n; ++i)
                h(i, c + 1) = add_mod(h(i, c + 1), mul_mod(f, h(i, r), p), p);
        }
    }
    // recurrence for char polys of leading principal Hessenberg blocks
    std::vector<std::vector<u32>> q(n + 1);
    q[0] = {1 % p};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<u32> poly(k + 1, 0);
        // (x - h[k-1][k-1]) * q[k-1]
        for (std::size_t i = 0; i < q[k - 1].size(); ++i) {
            poly[i + 1] = add_mod(poly[i + 1], q[k - 1][i], p);
            poly[i] = sub_mod(poly[i], mul_mod(h(k - 1, k - 1), q[k - 1][i], p), p);
        }
        u32 prod = 1 % p;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod = mul_mod(prod, h(i, i - 1), p);
            if (prod == 0) break;
            u32 f = mul_mod(prod, h(i - 1, k - 1), p);
            for (std::size_t j = 0; j < q[i - 1].size(); ++j)
                poly[j] = sub_mod(poly[j], mul_mod(f, q[i - 1][j], p), p);
        }
        q[k] = std::move(poly);
    }
    return q[n];
}

u32 poly_eval(const std::vector<u32>& coeffs, u32 x, u32 p) {
    u32 acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = add_mod(mul_mod(acc, x, p), coeffs[i], p);
    return acc;
}

} // namespace deloop::linalg
