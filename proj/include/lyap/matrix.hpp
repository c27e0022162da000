#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lyap/errors.hpp"

namespace lyap {

using Vector = std::vector<double>;

/// Dense square matrix stored row-major. The scalar is a template parameter so
/// the same code runs in double and in extended precision (oracles).
template <class T>
class BasicMatrix {
public:
    using value_type = T;

    BasicMatrix() = default;

    explicit BasicMatrix(std::size_t n) : n_(n), a_(n * n, T(0))
    {
        if (n == 0)
            throw DimensionError("matrix dimension must be at least 1");
    }

    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows)
        : BasicMatrix(rows.size())
    {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != n_)
                throw DimensionError("initializer is not square");
            std::copy(row.begin(), row.end(), a_.begin() + i * n_);
            ++i;
        }
    }

    static BasicMatrix identity(std::size_t n)
    {
        BasicMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static BasicMatrix diagonal(std::span<const T> d)
    {
        BasicMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    std::span<T> data() noexcept { return a_; }
    std::span<const T> data() const noexcept { return a_; }

    BasicMatrix transpose() const
    {
        BasicMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// (M + Mᵀ)/2
    BasicMatrix symmetrized() const
    {
        BasicMatrix s(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) {
                T v = ((*this)(i, j) + (*this)(j, i)) / T(2);
                s(i, j) = v;
                s(j, i) = v;
            }
        return s;
    }

    T trace() const
    {
        T s(0);
        for (std::size_t i = 0; i < n_; ++i)
            s += (*this)(i, i);
        return s;
    }

    template <class U>
    BasicMatrix<U> cast() const
    {
        BasicMatrix<U> m(n_);
        auto out = m.data();
        for (std::size_t k = 0; k < a_.size(); ++k)
            out[k] = static_cast<U>(a_[k]);
        return m;
    }

    BasicMatrix& operator+=(const BasicMatrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }

    BasicMatrix& operator-=(const BasicMatrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }

    BasicMatrix& operator*=(const T& s)
    {
        for (auto& v : a_)
            v *= s;
        return *this;
    }

    friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
    friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
    friend BasicMatrix operator*(const T& s, BasicMatrix a) { return a *= s; }
    friend BasicMatrix operator*(BasicMatrix a, const T& s) { return a *= s; }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b)
    {
        a.check_same(b);
        const std::size_t n = a.n_;
        BasicMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const T aik = a(i, k);
                for (std::size_t j = 0; j < n; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

private:
    void check_same(const BasicMatrix& o) const
    {
        if (o.n_ != n_)
            throw DimensionError("matrix dimension mismatch: " + std::to_string(n_) +
                                 " vs " + std::to_string(o.n_));
    }

    std::size_t n_ = 0;
    std::vector<T> a_;
};

using SquareMatrix = BasicMatrix<double>;

template <class T>
std::vector<T> operator*(const BasicMatrix<T>& m, std::span<const T> x)
{
    if (x.size() != m.size())
        throw DimensionError("matrix-vector dimension mismatch");
    std::vector<T> y(m.size(), T(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            y[i] += m(i, j) * x[j];
    return y;
}

inline Vector operator*(const SquareMatrix& m, const Vector& x)
{
    return m * std::span<const double>(x);
}

template <class T>
T max_abs(const BasicMatrix<T>& m)
{
    using std::abs;
    T r(0);
    for (const auto& v : m.data())
        r = std::max<T>(r, abs(v));
    return r;
}

inline bool all_finite(double v) { return std::isfinite(v); }

inline bool all_finite(std::span<const double> v)
{
    return std::all_of(v.begin(), v.end(), [](double e) { return std::isfinite(e); });
}

inline bool all_finite(const SquareMatrix& m) { return all_finite(m.data()); }

} // namespace lyap
