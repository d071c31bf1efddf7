#pragma once

#include "qhodge/series.hpp"

#include <functional>
#include <vector>

namespace qhodge {

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense rectangular matrix over an exact coefficient type (Scalar, QSeries
/// or LogPolySeries).  Entries default-construct to zero.
template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat operator-() const { return map([](const T& x) { return -x; }); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat m(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
        return m;
    }

    Mat operator-(const Mat& o) const { return *this + (-o); }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw MatrixError("matrix product shape mismatch");
        Mat m(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int kk = 0; kk < cols_; ++kk) {
                const T& a = (*this)(i, kk);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& b = o(kk, j);
                    if (b.is_zero()) continue;
                    m(i, j) += a * b;
                }
            }
        return m;
    }

    template <typename S>
    Mat scaled(const S& c) const {
        return map([&](const T& x) { return x * c; });
    }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < data_.size(); ++i)
            if (!(data_[i] == o.data_[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat map(const std::function<T(const T&)>& f) const {
        Mat m(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = f(data_[i]);
        return m;
    }

    template <typename U>
    Mat<U> map_to(const std::function<U(const T&)>& f) const {
        Mat<U> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("matrix shape mismatch");
    }
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using ScalarMat = Mat<Scalar>;
using SeriesMat = Mat<QSeries>;
using LogPolyMat = Mat<LogPolySeries>;
using ScalarVec = std::vector<Scalar>;

inline LogPolyMat to_logpoly(const SeriesMat& m) {
    return m.map_to<LogPolySeries>([](const QSeries& f) { return LogPolySeries(f); });
}

inline SeriesMat to_series(const ScalarMat& m, int r, int D) {
    return m.map_to<QSeries>([&](const Scalar& c) { return QSeries::constant(r, D, c); });
}

inline std::vector<Scalar> apply(const ScalarMat& m, const std::vector<Scalar>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw MatrixError("matrix-vector shape mismatch");
    std::vector<Scalar> w(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) w[i] += m(i, j) * v[j];
    return w;
}

/// exp of a nilpotent matrix; throws if the series does not terminate.
ScalarMat exp_nilpotent(const ScalarMat& n, int max_power = 64);
/// log of a unipotent matrix (Id + nilpotent).
ScalarMat log_unipotent(const ScalarMat& u, int max_power = 64);

}  // namespace qhodge
