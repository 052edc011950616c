#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace cubeflow {

/* Sparse Laurent polynomial in one variable with integer coefficients.
 * Exponent units are the caller's business (several users work in powers of
 * q^(1/2) to keep exponents integral). */
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly term(long long coeff, int exp) {
        LaurentPoly p;
        p.add(coeff, exp);
        return p;
    }

    void add(long long coeff, int exp) {
        if (!coeff) return;
        auto it = c_.find(exp);
        if (it == c_.end()) c_[exp] = coeff;
        else {
            it->second += coeff;
            if (!it->second) c_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, v] : o.c_) r.add(v, e);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, v] : o.c_) r.add(-v, e);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, v1] : c_)
            for (auto& [e2, v2] : o.c_) r.add(v1 * v2, e1 + e2);
        return r;
    }
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool is_zero() const { return c_.empty(); }

    long long eval_at_one() const {
        long long s = 0;
        for (auto& [e, v] : c_) s += v;
        return s;
    }
    long long eval_at_minus_one() const {  // exponent parity rules the sign
        long long s = 0;
        for (auto& [e, v] : c_) s += (e % 2 ? -v : v);
        return s;
    }
    // For polynomials stored in powers of q^(1/2): value at q = -1.
    // Requires integral q-powers (knots).
    long long eval_q_minus_one() const {
        long long s = 0;
        for (auto& [e, v] : c_) {
            if (e % 2) throw std::invalid_argument("eval_q_minus_one: fractional power");
            s += ((e / 2) % 2 ? -v : v);
        }
        return s;
    }
    LaurentPoly shifted(int dexp) const {
        LaurentPoly r;
        for (auto& [e, v] : c_) r.c_[e + dexp] = v;
        return r;
    }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    const std::map<int, long long>& coeffs() const { return c_; }

    // Pretty-print; exponents are halved when half_units is set, and shown as
    // k/2 when odd.
    std::string str(const std::string& var, bool half_units = false) const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, v] : c_) {
            long long a = v;
            if (!first) { os << (a < 0 ? " - " : " + "); if (a < 0) a = -a; }
            first = false;
            bool unit = (a == 1 || a == -1);
            long long mag = a < 0 ? -a : a;
            if (e == 0) { if (v < 0 && os.str().empty()) os << "-"; os << mag; continue; }
            if (v < 0 && os.str().empty()) os << "-";
            if (!unit) os << mag << "*";
            os << var;
            int ee = e;
            if (half_units) {
                if (ee % 2 == 0) ee /= 2;
                else { os << "^(" << ee << "/2)"; continue; }
            }
            if (ee != 1) os << "^" << ee;
        }
        return os.str();
    }

private:
    std::map<int, long long> c_;
};

/* Two-variable polynomial Sum c * t^i q^j used for page/homology polynomials. */
class Poly2 {
public:
    void add(long long coeff, int i, int j) {
        if (!coeff) return;
        auto key = std::pair{i, j};
        auto it = c_.find(key);
        if (it == c_.end()) c_[key] = coeff;
        else {
            it->second += coeff;
            if (!it->second) c_.erase(it);
        }
    }
    bool operator==(const Poly2& o) const { return c_ == o.c_; }
    const std::map<std::pair<int, int>, long long>& coeffs() const { return c_; }

    // V(q) = P(-1, q^(1/2)), returned in powers of q^(1/2).
    LaurentPoly jones_specialization() const {
        LaurentPoly v;
        for (auto& [ij, r] : c_) v.add(ij.first % 2 ? -r : r, ij.second);
        return v;
    }
    // U(delta) = Sum (-1)^i c delta^(j/2 - i), in powers of delta^(1/2).
    LaurentPoly delta_specialization() const {
        LaurentPoly u;
        for (auto& [ij, r] : c_) u.add(ij.first % 2 ? -r : r, ij.second - 2 * ij.first);
        return u;
    }
    Poly2 q_shifted(int dq) const {
        Poly2 r;
        for (auto& [ij, v] : c_) r.c_[{ij.first, ij.second + dq}] = v;
        return r;
    }
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [ij, v] : c_) {
            if (!first) os << (v < 0 ? " - " : " + ");
            else if (v < 0) os << "-";
            first = false;
            long long mag = v < 0 ? -v : v;
            bool shown = false;
            if (mag != 1) { os << mag; shown = true; }
            if (ij.first) { os << "t"; if (ij.first != 1) os << "^" << ij.first; shown = true; }
            if (ij.second) { os << "q"; if (ij.second != 1) os << "^" << ij.second; shown = true; }
            if (!shown) os << 1;
        }
        return os.str();
    }

private:
    std::map<std::pair<int, int>, long long> c_;
};

/* Ranks of a bigraded F2 vector space, indexed by (t, q). */
struct RankTable {
    std::map<std::pair<int, int>, long long> ranks;

    void add(int t, int q, long long r) {
        if (!r) return;
        ranks[{t, q}] += r;
        if (!ranks[{t, q}]) ranks.erase({t, q});
    }
    long long total() const {
        long long s = 0;
        for (auto& [tq, r] : ranks) s += r;
        return s;
    }
    Poly2 poincare() const {
        Poly2 p;
        for (auto& [tq, r] : ranks) p.add(r, tq.first, tq.second);
        return p;
    }
    bool operator==(const RankTable& o) const { return ranks == o.ranks; }
};

}  // namespace cubeflow
