#include "specmate/poly.hpp"

#include <algorithm>
#include <utility>

namespace specmate {

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int& k) const {
    std::vector<Int> r = c_;
    for (Int& x : r) x *= k;
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly();
    std::vector<Int> r(static_cast<size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i) r[static_cast<size_t>(i - 1)] = Int(i) * f.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly char_poly(const IntMat& m) {
    if (m.rows() != m.cols()) throw internal_error("char_poly: matrix not square");
    int n = m.rows();
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    coeffs[static_cast<size_t>(n)] = 1;
    if (n == 0) return IntPoly(std::move(coeffs));

    // M_0 = I; N_k = A*M_{k-1}; c_k = -tr(N_k)/k; M_k = N_k + c_k*I.
    // The trace divisions are exact and M_n must vanish (both asserted).
    IntMat work = IntMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        IntMat next(n, n);
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                const Int& a = m.at(i, t);
                if (a == 0) continue;
                if (a == 1)
                    for (int j = 0; j < n; ++j) next.at(i, j) += work.at(t, j);
                else
                    for (int j = 0; j < n; ++j) next.at(i, j) += a * work.at(t, j);
            }
        Int trace = 0;
        for (int i = 0; i < n; ++i) trace += next.at(i, i);
        Int ck = exact_div(-trace, Int(k));
        for (int i = 0; i < n; ++i) next.at(i, i) += ck;
        coeffs[static_cast<size_t>(n - k)] = ck;
        work = std::move(next);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (work.at(i, j) != 0) throw internal_error("char_poly: recurrence did not terminate at zero");
    return IntPoly(std::move(coeffs));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw internal_error("pseudo_rem: zero divisor");
    int e = a.degree() - b.degree() + 1;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::vector<Int> shift(static_cast<size_t>(r.degree() - b.degree()) + 1, Int(0));
        shift.back() = r.lead();
        IntPoly s = IntPoly(std::move(shift)) * b;
        r = r.scaled(b.lead()) - s;
        --e;
    }
    for (; e > 0; --e) r = r.scaled(b.lead());
    return r;
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;

    IntPoly a = f, b = g;
    bool negative = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) negative = !negative;
        std::swap(a, b);
    }

    // res(f, g) = sign * factor * res(a, b) is maintained as the sequence
    // shrinks; factor stays a ratio of leading-coefficient powers.
    mpq_class factor = 1;
    Int gc = 1, h = 1;

    while (b.degree() > 0) {
        int m = a.degree(), n = b.degree();
        int delta = m - n;
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return 0;  // common factor of positive degree

        Int beta = gc * int_pow(h, static_cast<unsigned long>(delta));
        std::vector<Int> cs = r.coeffs();
        for (Int& x : cs) x = exact_div(x, beta);
        IntPoly rr(std::move(cs));
        int rdeg = rr.degree();

        // res(a,b) = (-1)^(mn) lc(b)^(m-rdeg) (beta/c)^n res(b, r/beta), c = lc(b)^(delta+1)
        if ((m & 1) && (n & 1)) negative = !negative;
        mpq_class lb(b.lead());
        mpq_class c_q(int_pow(b.lead(), static_cast<unsigned long>(delta) + 1));
        mpq_class step = 1;
        for (int i = 0; i < m - rdeg; ++i) step *= lb;
        mpq_class ratio = mpq_class(beta) / c_q;
        for (int i = 0; i < n; ++i) step *= ratio;
        factor *= step;

        a = std::move(b);
        b = std::move(rr);
        Int new_g = a.lead();
        if (delta == 1)
            h = new_g;
        else if (delta > 1)
            h = exact_div(int_pow(new_g, static_cast<unsigned long>(delta)),
                          int_pow(h, static_cast<unsigned long>(delta) - 1));
        gc = new_g;
    }

    if (b.is_zero()) return 0;
    mpq_class total = factor * mpq_class(int_pow(b.lead(), static_cast<unsigned long>(a.degree())));
    if (negative) total = -total;
    total.canonicalize();
    if (total.get_den() != 1) throw internal_error("resultant: non-integral accumulator");
    return total.get_num();
}

Int discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw internal_error("discriminant: degree must be at least 1");
    int n = f.degree();
    Int res = resultant(f, derivative(f));
    Int d = exact_div(res, f.lead());
    if ((n * (n - 1) / 2) % 2 != 0) d = -d;
    return d;
}

IntMat sylvester_matrix(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw internal_error("sylvester_matrix: zero polynomial");
    int m = f.degree(), n = g.degree();
    IntMat s(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s.at(i, i + k) = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s.at(n + i, i + k) = g.coeff(n - k);
    return s;
}

}  // namespace specmate
