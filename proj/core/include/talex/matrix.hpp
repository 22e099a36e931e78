#ifndef TALEX_MATRIX_HPP
#define TALEX_MATRIX_HPP

#include <vector>

#include "talex/errors.hpp"
#include "talex/scalar.hpp"

namespace talex {

/// Small dense square matrix over a scalar field.
template <ScalarField S>
class ScalarMatrix {
public:
    explicit ScalarMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static ScalarMatrix identity(int n) {
        ScalarMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = scalar_traits<S>::one();
        return m;
    }

    int dim() const { return n_; }
    S& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.n_ != b.n_) throw validation_error("matrix dimension mismatch");
        ScalarMatrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.n_ != b.n_) throw validation_error("matrix dimension mismatch");
        ScalarMatrix r(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }

    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.n_ != b.n_) throw validation_error("matrix dimension mismatch");
        ScalarMatrix r(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const S& c) {
        ScalarMatrix r(a.n_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] * c;
        return r;
    }
    friend ScalarMatrix operator*(const S& c, const ScalarMatrix& a) { return a * c; }

    bool operator==(const ScalarMatrix& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }

    S trace() const {
        S t = scalar_traits<S>::zero();
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    S determinant() const {
        ScalarMatrix m = *this;
        S det = scalar_traits<S>::one();
        for (int k = 0; k < n_; ++k) {
            int pivot = m.find_pivot(k);
            if (pivot < 0) return scalar_traits<S>::zero();
            if (pivot != k) {
                m.swap_rows(pivot, k);
                det = -det;
            }
            det = det * m.at(k, k);
            S inv_p = S(1) / m.at(k, k);
            for (int i = k + 1; i < n_; ++i) {
                S f = m.at(i, k) * inv_p;
                if (f.is_zero()) continue;
                for (int j = k; j < n_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
            }
        }
        return det;
    }

    ScalarMatrix inverse() const {
        ScalarMatrix m = *this;
        ScalarMatrix r = identity(n_);
        for (int k = 0; k < n_; ++k) {
            int pivot = m.find_pivot(k);
            if (pivot < 0) throw error("matrix not invertible");
            if (pivot != k) {
                m.swap_rows(pivot, k);
                r.swap_rows(pivot, k);
            }
            S inv_p = S(1) / m.at(k, k);
            for (int j = 0; j < n_; ++j) {
                m.at(k, j) = m.at(k, j) * inv_p;
                r.at(k, j) = r.at(k, j) * inv_p;
            }
            for (int i = 0; i < n_; ++i) {
                if (i == k) continue;
                S f = m.at(i, k);
                if (f.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    m.at(i, j) = m.at(i, j) - f * m.at(k, j);
                    r.at(i, j) = r.at(i, j) - f * r.at(k, j);
                }
            }
        }
        return r;
    }

    ScalarMatrix pow(long e) const {
        ScalarMatrix base = e >= 0 ? *this : inverse();
        unsigned long n = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        ScalarMatrix acc = identity(n_);
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

private:
    void swap_rows(int i, int j) {
        for (int k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
    }
    // Best pivot in column k among rows >= k: the largest magnitude for the
    // numeric backend, the first nonzero for the exact one.
    int find_pivot(int k) const {
        if constexpr (scalar_traits<S>::exact) {
            for (int i = k; i < n_; ++i)
                if (!at(i, k).is_zero()) return i;
            return -1;
        } else {
            int best = -1;
            BigFloat best_mag(0);
            for (int i = k; i < n_; ++i) {
                BigFloat mag = scalar_traits<S>::magnitude(at(i, k));
                if (mag > best_mag) {
                    best_mag = mag;
                    best = i;
                }
            }
            if (best >= 0 && scalar_traits<S>::negligible(at(best, k), BigFloat(1))) return -1;
            return best;
        }
    }

    int n_;
    std::vector<S> a_;
};

}  // namespace talex

#endif
