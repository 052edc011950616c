#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubeflow {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* Dense bit-packed matrix over GF(2).  Rows are arrays of 64-bit words. */
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
          bits_(rows * stride_, 0) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        check(r, c);
        uint64_t& w = bits_[r * stride_ + c / 64];
        uint64_t mask = uint64_t(1) << (c % 64);
        if (v) w |= mask; else w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { set(r, c, !get(r, c)); }

    void xor_row(std::size_t dst, std::size_t src) {
        uint64_t* d = &bits_[dst * stride_];
        const uint64_t* s = &bits_[src * stride_];
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
    }

    bool row_empty(std::size_t r) const {
        const uint64_t* p = &bits_[r * stride_];
        for (std::size_t k = 0; k < stride_; ++k)
            if (p[k]) return false;
        return true;
    }

    F2Matrix transposed() const {
        F2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    F2Matrix operator*(const F2Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix: size mismatch");
        F2Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k)
                if (get(r, k)) out.xor_row_from(r, o, k);
        return out;
    }

    bool operator==(const F2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

    std::vector<bool> apply(const std::vector<bool>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("F2Matrix: vector size");
        std::vector<bool> out(rows_, false);
        for (std::size_t r = 0; r < rows_; ++r) {
            bool acc = false;
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c) && v[c]) acc = !acc;
            out[r] = acc;
        }
        return out;
    }

    bool is_zero() const {
        for (uint64_t w : bits_) if (w) return false;
        return true;
    }

private:
    void xor_row_from(std::size_t dst, const F2Matrix& o, std::size_t src) {
        uint64_t* d = &bits_[dst * stride_];
        const uint64_t* s = &o.bits_[src * o.stride_];
        for (std::size_t k = 0; k < stride_ && k < o.stride_; ++k) d[k] ^= s[k];
    }
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("F2Matrix: index");
    }

    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> bits_;
};

std::size_t rank(F2Matrix m);

/* Basis of the null space {v : m v = 0}; size cols - rank. */
std::vector<std::vector<bool>> kernel_basis(const F2Matrix& m);

/* Element of the exterior algebra over GF(2)^n.  A monomial is a subset of
 * {0..n-1} stored as a bitmask; an element is a set of monomials (each with
 * coefficient 1). */
class ExtElement {
public:
    explicit ExtElement(int ambient_dim) : dim_(ambient_dim) {}
    static ExtElement zero(int dim) { return ExtElement(dim); }
    static ExtElement monomial(int dim, uint32_t mask) {
        ExtElement e(dim);
        e.terms_.push_back(mask);
        return e;
    }
    static ExtElement generator(int dim, int i) { return monomial(dim, uint32_t(1) << i); }

    int ambient_dim() const { return dim_; }
    const std::vector<uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExtElement operator+(const ExtElement& o) const;  // symmetric difference
    ExtElement operator*(const ExtElement& o) const;  // wedge product
    bool operator==(const ExtElement& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    void add_term(uint32_t mask);  // xor in one monomial

private:
    int dim_;
    std::vector<uint32_t> terms_;  // sorted, distinct
};

inline ExtElement wedge(const ExtElement& a, const ExtElement& b) { return a * b; }

/* Symmetric integer matrix; carrier for signature/determinant/nullity. */
class SymIntMatrix {
public:
    SymIntMatrix() = default;
    explicit SymIntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    std::size_t size() const { return n_; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, BigInt v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = std::move(v);
    }
    bool symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (a_[i * n_ + j] != a_[j * n_ + i]) return false;
        return true;
    }

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

struct FormInvariants {
    long long signature = 0;
    BigInt determinant = 1;
    std::size_t nullity = 0;
};

/* Exact signature/determinant/nullity of a symmetric integer form, computed
 * over the rationals by congruence diagonalization.  When the remaining block
 * has zero diagonal but a nonzero off-diagonal entry, a hyperbolic 2x2 block
 * is split off, contributing (+1,-1). */
FormInvariants signature_det_nullity(const SymIntMatrix& a);

}  // namespace cubeflow
