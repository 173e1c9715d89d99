#pragma once

#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/matrix.hpp"

namespace specmate {

// Integer polynomial, dense little-endian coefficients, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& coeff(int i) const {
        static const Int zero = 0;
        return (i < 0 || i > degree()) ? zero : c_[static_cast<size_t>(i)];
    }
    const Int& lead() const {
        if (is_zero()) throw internal_error("IntPoly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const Int& k) const;

    Int eval(const Int& x) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

IntPoly derivative(const IntPoly& f);

// det(xI - M) by the Faddeev-LeVerrier recurrence; all divisions exact.
IntPoly char_poly(const IntMat& m);

// Resultant via the subresultant remainder sequence; coefficient growth stays
// polynomial and every division is exact.
Int resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(n(n-1)/2) * res(f, f') / lc(f) for n = deg f >= 1.
Int discriminant(const IntPoly& f);

// (deg f + deg g) square matrix whose determinant is res(f, g); mainly a
// cross-check for the subresultant path.
IntMat sylvester_matrix(const IntPoly& f, const IntPoly& g);

}  // namespace specmate
