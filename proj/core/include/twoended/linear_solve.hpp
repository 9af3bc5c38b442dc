#pragma once

#include <algorithm>
#include <vector>

#include "twoended/numeric.hpp"

namespace twoended {

// Banded symmetric positive definite system, eliminated in place without
// pivoting (SPD keeps every pivot positive, in exact arithmetic literally).
// Row i holds columns [i - bw, i + bw]; fill-in stays inside the band.
template <typename T>
class BandedSpdSystem {
public:
    BandedSpdSystem(int n, int bandwidth)
        : n_(n),
          bw_(bandwidth),
          width_(2 * bandwidth + 1),
          data_(static_cast<size_t>(n) * width_, NumTraits<T>::zero()),
          rhs_(n, NumTraits<T>::zero()) {}

    T& at(int i, int j) { return data_[static_cast<size_t>(i) * width_ + (j - i + bw_)]; }
    T& rhs(int i) { return rhs_[i]; }

    std::vector<T> solve() {
        for (int k = 0; k < n_; ++k) {
            const T pivot = at(k, k);
            if (pivot == NumTraits<T>::zero()) {
                throw SolverError("zero pivot in SPD elimination (carrier not connected?)");
            }
            const int last = std::min(n_ - 1, k + bw_);
            for (int i = k + 1; i <= last; ++i) {
                if (at(i, k) == NumTraits<T>::zero()) continue;
                const T factor = at(i, k) / pivot;
                for (int j = k; j <= std::min(n_ - 1, k + bw_); ++j) {
                    at(i, j) -= factor * at(k, j);
                }
                rhs_[i] -= factor * rhs_[k];
            }
        }
        std::vector<T> x(n_, NumTraits<T>::zero());
        for (int i = n_ - 1; i >= 0; --i) {
            T acc = rhs_[i];
            const int last = std::min(n_ - 1, i + bw_);
            for (int j = i + 1; j <= last; ++j) {
                acc -= at(i, j) * x[j];
            }
            x[i] = acc / at(i, i);
        }
        return x;
    }

private:
    int n_;
    int bw_;
    int width_;
    std::vector<T> data_;
    std::vector<T> rhs_;
};

// Small dense solve with partial pivoting, for the handful of non-symmetric
// systems (periodic closed forms, affine fits). Throws SolverError when
// singular.
template <typename T>
std::vector<T> dense_solve(std::vector<std::vector<T>> a, std::vector<T> b) {
    const int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k) {
        int best = k;
        T best_abs = NumTraits<T>::abs(a[k][k]);
        for (int i = k + 1; i < n; ++i) {
            T v = NumTraits<T>::abs(a[i][k]);
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        if (best_abs == NumTraits<T>::zero()) {
            throw SolverError("singular system in dense solve");
        }
        std::swap(a[k], a[best]);
        std::swap(b[k], b[best]);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == NumTraits<T>::zero()) continue;
            const T factor = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
            b[i] -= factor * b[k];
        }
    }
    std::vector<T> x(n, NumTraits<T>::zero());
    for (int i = n - 1; i >= 0; --i) {
        T acc = b[i];
        for (int j = i + 1; j < n; ++j) {
            acc -= a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace twoended
