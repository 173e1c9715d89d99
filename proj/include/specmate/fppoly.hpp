#pragma once

#include <utility>
#include <vector>

#include "specmate/bigint.hpp"
#include "specmate/graph.hpp"
#include "specmate/poly.hpp"

namespace specmate {

// Polynomial over F_p; coefficients kept reduced into [0, p).
class FpPoly {
public:
    explicit FpPoly(Int p) : p_(std::move(p)) { check_modulus(); }
    FpPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
        check_modulus();
        for (Int& x : c_) x = mod_floor(x, p_);
        normalize();
    }

    static FpPoly from_int_poly(const IntPoly& f, const Int& p) { return FpPoly(p, f.coeffs()); }
    static FpPoly one(const Int& p) { return FpPoly(p, {Int(1)}); }

    const Int& modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const {
        static const Int zero = 0;
        return (i < 0 || i > degree()) ? zero : c_[static_cast<size_t>(i)];
    }
    const Int& lead() const {
        if (is_zero()) throw internal_error("FpPoly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;

    FpPoly monic() const;
    FpPoly derivative() const;

    // quotient and remainder; divisor must be nonzero
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
    // division known to be exact
    static FpPoly exact_quotient(const FpPoly& a, const FpPoly& b);

private:
    void check_modulus() const {
        if (p_ < 2) throw internal_error("FpPoly: modulus must be at least 2");
    }
    void check_same(const FpPoly& o) const {
        if (p_ != o.p_) throw internal_error("FpPoly: modulus mismatch");
    }
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Int p_;
    std::vector<Int> c_;
};

// Monic gcd (zero if both inputs are zero).
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);

// Monic product of the distinct irreducible factors; handles vanishing
// derivatives via p-th roots, so it is correct in small characteristic.
FpPoly squarefree_part(const FpPoly& f);

// The degree-minimal monic polynomial used to deflate the walk matrix at p:
// for odd p it is charpoly(A)/sqfree(gcd(charpoly(A), charpoly(A+J))) over
// F_p; for p = 2 it is assembled from the even-index coefficients of the
// integer characteristic polynomial and has degree ceil(n/2).  Satisfies
// f(A)e = 0 (mod p), which is asserted.
FpPoly main_polynomial(const Graph& g, const Int& p);

}  // namespace specmate
