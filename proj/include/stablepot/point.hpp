#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>

namespace stablepot {

// Small stack vector for points of R^d, d <= kMaxDim.  Everything in this
// library runs at d = 2 or 3; the cap keeps hot Monte Carlo loops allocation
// free while the dimension stays a runtime value.
class Point {
public:
    static constexpr int kMaxDim = 8;

    Point() : d_(0) {}
    explicit Point(int d) : d_(d) { assert(d >= 0 && d <= kMaxDim); x_.fill(0.0); }
    Point(std::initializer_list<double> xs) : d_(static_cast<int>(xs.size())) {
        assert(d_ <= kMaxDim);
        int i = 0;
        for (double v : xs) x_[i++] = v;
        for (; i < kMaxDim; ++i) x_[i] = 0.0;
    }

    int dim() const { return d_; }
    double& operator[](int i) { return x_[i]; }
    double operator[](int i) const { return x_[i]; }

    Point& operator+=(const Point& o) {
        for (int i = 0; i < d_; ++i) x_[i] += o.x_[i];
        return *this;
    }
    Point& operator-=(const Point& o) {
        for (int i = 0; i < d_; ++i) x_[i] -= o.x_[i];
        return *this;
    }
    Point& operator*=(double c) {
        for (int i = 0; i < d_; ++i) x_[i] *= c;
        return *this;
    }

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(double c, Point a) { return a *= c; }
    friend Point operator*(Point a, double c) { return a *= c; }

    friend double dot(const Point& a, const Point& b) {
        double s = 0.0;
        for (int i = 0; i < a.d_; ++i) s += a.x_[i] * b.x_[i];
        return s;
    }
    double norm2() const { return dot(*this, *this); }
    double norm() const { return std::sqrt(norm2()); }

    friend double dist(const Point& a, const Point& b) { return (a - b).norm(); }

    bool operator==(const Point& o) const {
        if (d_ != o.d_) return false;
        for (int i = 0; i < d_; ++i)
            if (x_[i] != o.x_[i]) return false;
        return true;
    }

private:
    std::array<double, kMaxDim> x_;
    int d_;
};

}  // namespace stablepot
