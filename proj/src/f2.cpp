#include "cubeflow/f2.hpp"

#include <algorithm>

namespace cubeflow {

std::size_t rank(F2Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t cc = 0; cc < m.cols(); ++cc) {
                bool t = m.get(r, cc);
                m.set(r, cc, m.get(pivot, cc));
                m.set(pivot, cc, t);
            }
        for (std::size_t rr = 0; rr < m.rows(); ++rr)
            if (rr != r && m.get(rr, c)) m.xor_row(rr, r);
        ++r;
    }
    return r;
}

std::vector<std::vector<bool>> kernel_basis(const F2Matrix& m) {
    // Row-reduce a working copy, remembering pivot columns.
    F2Matrix w = m;
    std::vector<long> pivot_of_col(m.cols(), -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
        std::size_t p = r;
        while (p < w.rows() && !w.get(p, c)) ++p;
        if (p == w.rows()) continue;
        if (p != r)
            for (std::size_t cc = 0; cc < w.cols(); ++cc) {
                bool t = w.get(r, cc);
                w.set(r, cc, w.get(p, cc));
                w.set(p, cc, t);
            }
        for (std::size_t rr = 0; rr < w.rows(); ++rr)
            if (rr != r && w.get(rr, c)) w.xor_row(rr, r);
        pivot_of_col[c] = long(r);
        ++r;
    }
    std::vector<std::vector<bool>> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<bool> v(m.cols(), false);
        v[c] = true;
        for (std::size_t cc = 0; cc < m.cols(); ++cc)
            if (pivot_of_col[cc] >= 0 && w.get(std::size_t(pivot_of_col[cc]), c))
                v[cc] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

void ExtElement::add_term(uint32_t mask) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask);
    if (it != terms_.end() && *it == mask)
        terms_.erase(it);
    else
        terms_.insert(it, mask);
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("ExtElement: dimension mismatch");
    ExtElement out(dim_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                  o.terms_.end(), std::back_inserter(out.terms_));
    return out;
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("ExtElement: dimension mismatch");
    ExtElement out(dim_);
    for (uint32_t a : terms_)
        for (uint32_t b : o.terms_)
            if ((a & b) == 0) out.add_term(a | b);  // shared factor kills the term mod 2
    return out;
}

FormInvariants signature_det_nullity(const SymIntMatrix& a) {
    if (!a.symmetric()) throw std::invalid_argument("signature_det_nullity: not symmetric");
    const std::size_t n = a.size();

    // Exact determinant by fraction-free (Bareiss) elimination.
    {
        std::vector<BigInt> m(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.at(i, j);
        BigInt det = 1, prev = 1;
        long swaps = 0;
        bool singular = false;
        for (std::size_t k = 0; k < n && !singular; ++k) {
            std::size_t p = k;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) { singular = true; break; }
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[k * n + j]);
                ++swaps;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            prev = m[k * n + k];
        }
        if (n == 0)
            det = 1;
        else
            det = singular ? BigInt(0) : m[(n - 1) * n + (n - 1)];
        if (swaps % 2) det = -det;
        FormInvariants inv;
        inv.determinant = det;

        // Congruence diagonalization over Q for signature and nullity.
        std::vector<BigRat> q(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q[i * n + j] = BigRat(a.at(i, j));
        std::vector<char> done(n, 0);
        long long sig = 0;
        std::size_t rank_count = 0;
        auto clear_with = [&](std::size_t piv) {
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i] || i == piv || q[i * n + piv] == 0) continue;
                BigRat f = q[i * n + piv] / q[piv * n + piv];
                for (std::size_t j = 0; j < n; ++j) q[i * n + j] -= f * q[piv * n + j];
                for (std::size_t j = 0; j < n; ++j) q[j * n + i] -= f * q[j * n + piv];
            }
        };
        while (true) {
            std::size_t piv = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!done[i] && q[i * n + i] != 0) { piv = i; break; }
            if (piv < n) {
                sig += (q[piv * n + piv] > 0) ? 1 : -1;
                ++rank_count;
                clear_with(piv);
                done[piv] = 1;
                continue;
            }
            // All remaining diagonal entries vanish; look for an off-diagonal.
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && q[i * n + j] != 0) { bi = i; bj = j; break; }
            }
            if (bi == n) break;  // remaining block is zero
            // Hyperbolic pair: rows i,j with q_ii = q_jj = 0, q_ij != 0.
            // Congruence x_i -> x_i + x_j puts a nonzero on the diagonal;
            // the pair contributes (+1, -1).
            for (std::size_t j = 0; j < n; ++j) q[bi * n + j] += q[bj * n + j];
            for (std::size_t j = 0; j < n; ++j) q[j * n + bi] += q[j * n + bj];
            sig += (q[bi * n + bi] > 0) ? 1 : -1;
            ++rank_count;
            clear_with(bi);
            done[bi] = 1;
        }
        inv.signature = sig;
        inv.nullity = n - rank_count;
        return inv;
    }
}

}  // namespace cubeflow
