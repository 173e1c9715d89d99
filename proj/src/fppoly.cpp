#include "specmate/fppoly.hpp"

#include <algorithm>

#include "specmate/matrix.hpp"

namespace specmate {

FpPoly FpPoly::operator+(const FpPoly& o) const {
    check_same(o);
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    check_same(o);
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    if (lead() == 1) return *this;
    Int inv = mod_inverse(lead(), p_);
    std::vector<Int> r = c_;
    for (Int& x : r) x *= inv;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::derivative() const {
    if (degree() < 1) return FpPoly(p_);
    std::vector<Int> r(static_cast<size_t>(degree()));
    for (int i = 1; i <= degree(); ++i) r[static_cast<size_t>(i - 1)] = Int(i) * coeff(i);
    return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
    a.check_same(b);
    if (b.is_zero()) throw internal_error("FpPoly: division by zero");
    const Int& p = a.p_;
    if (a.degree() < b.degree()) return {FpPoly(p), a};
    Int inv = mod_inverse(b.lead(), p);
    std::vector<Int> rem = a.c_;
    std::vector<Int> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int top = mod_floor(rem[static_cast<size_t>(k + b.degree())], p);
        if (top == 0) continue;
        Int q = mod_floor(top * inv, p);
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            Int& x = rem[static_cast<size_t>(k + j)];
            x = mod_floor(x - q * b.coeff(j), p);
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly FpPoly::exact_quotient(const FpPoly& a, const FpPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw internal_error("FpPoly: expected exact division");
    return q;
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = FpPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// f with zero derivative is g(x^p) = g(x)^p; pull out g
FpPoly pth_root(const FpPoly& f) {
    const Int& p = f.modulus();
    if (f.degree() < 1) return f;
    if (p > f.degree()) throw internal_error("pth_root: degree smaller than characteristic");
    unsigned long pu = p.get_ui();
    std::vector<Int> r(static_cast<size_t>(f.degree()) / pu + 1, Int(0));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (static_cast<unsigned long>(i) % pu != 0) throw internal_error("pth_root: stray coefficient");
        r[static_cast<size_t>(i) / pu] = f.coeff(i);
    }
    return FpPoly(p, std::move(r));
}

}  // namespace

FpPoly squarefree_part(const FpPoly& f) {
    if (f.is_zero()) throw internal_error("squarefree_part: zero polynomial");
    FpPoly g = f.monic();
    if (g.degree() == 0) return g;
    FpPoly gd = g.derivative();
    if (gd.is_zero()) return squarefree_part(pth_root(g));

    FpPoly d = fp_gcd(g, gd);
    if (d.degree() == 0) return g;  // already squarefree
    FpPoly w = FpPoly::exact_quotient(g, d);

    // strip w's factors out of d; what is left is a p-th power
    FpPoly y = d;
    for (;;) {
        FpPoly c = fp_gcd(y, w);
        if (c.degree() == 0) break;
        y = FpPoly::exact_quotient(y, c);
    }
    if (y.degree() == 0) return w;
    return (w * squarefree_part(pth_root(y))).monic();
}

namespace {

// coefficient list of f(A)e modulo p, via Krylov vectors of A
bool kills_walk_vector(const Graph& g, const FpPoly& f) {
    int n = g.n();
    std::vector<Int> acc(static_cast<size_t>(n), Int(0));
    std::vector<Int> v(static_cast<size_t>(n), Int(1));  // A^0 e
    for (int k = 0;; ++k) {
        if (f.coeff(k) != 0)
            for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] += f.coeff(k) * v[static_cast<size_t>(i)];
        if (k == f.degree()) break;
        std::vector<Int> next(static_cast<size_t>(n), Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.edge(i, j)) next[static_cast<size_t>(i)] += v[static_cast<size_t>(j)];
        v = std::move(next);
    }
    for (const Int& x : acc)
        if (mod_floor(x, f.modulus()) != 0) return false;
    return true;
}

}  // namespace

FpPoly main_polynomial(const Graph& g, const Int& p) {
    if (p < 2) throw internal_error("main_polynomial: bad prime");
    int n = g.n();
    FpPoly result(p);

    if (p == 2) {
        // rebuild from the even-index coefficients of the integer
        // characteristic polynomial; odd-index ones carry no new information
        // modulo 2
        IntPoly chi = char_poly(adjacency_matrix(g));
        int k = n / 2;
        std::vector<Int> c(static_cast<size_t>(n / 2 + n % 2) + 1, Int(0));
        // x^k + c_2 x^(k-1) + c_4 x^(k-2) + ... ; an extra factor x when n is odd
        int shift = n % 2;
        c[static_cast<size_t>(k + shift)] = 1;
        for (int j = 1; j <= k; ++j) c[static_cast<size_t>(k - j + shift)] = chi.coeff(n - 2 * j);
        result = FpPoly(p, std::move(c));
    } else {
        IntMat a = adjacency_matrix(g);
        IntMat aj = a;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) aj.at(i, j) += 1;
        FpPoly chi_a = FpPoly::from_int_poly(char_poly(a), p);
        FpPoly chi_aj = FpPoly::from_int_poly(char_poly(aj), p);
        FpPoly common = fp_gcd(chi_a, chi_aj);
        FpPoly strip = common.is_zero() ? FpPoly::one(p) : squarefree_part(common);
        result = FpPoly::exact_quotient(chi_a, strip);
    }

    if (!kills_walk_vector(g, result))
        throw internal_error("main_polynomial: f(A)e not divisible by p");
    return result;
}

}  // namespace specmate
