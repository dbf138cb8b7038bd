#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "simerr/error.hpp"

namespace simerr {

// Small dense row-major matrix of doubles.  Everything in this library is
// at most a few hundred rows by ~100 columns except the raw sample store,
// so no attempt is made at being clever.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
        return out;
    }

    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    // Largest relative asymmetry |a_ij - a_ji| / max(1, |a_ij|).
    double symmetry_defect() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j) {
                double denom = std::max(1.0, std::abs((*this)(i, j)));
                worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)) / denom);
            }
        return worst;
    }

    void symmetrize() {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j) {
                double avg = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = avg;
                (*this)(j, i) = avg;
            }
    }

    bool operator==(const Matrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Pairwise (cascade) summation.  Used wherever the result must not depend
// on how work is split across threads: the reduction tree is a pure
// function of the length.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

inline double mean_of(std::span<const double> v) {
    if (v.empty()) throw DataError("mean of empty vector");
    return pairwise_sum(v) / static_cast<double>(v.size());
}

}  // namespace simerr
