#include "specmate/matrix.hpp"

#include <algorithm>
#include <utility>

namespace specmate {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw internal_error("IntMat: dimension mismatch in product");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

IntMat adjacency_matrix(const Graph& g) {
    IntMat a(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j && g.edge(i, j)) a.at(i, j) = 1;
    return a;
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw internal_error("det: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n && piv < 0; ++i)
                if (a.at(i, k) != 0) piv = i;
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

int rank_mod_p(const IntMat& m, const Int& p) {
    if (p < 2) throw internal_error("rank_mod_p: bad modulus");
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = mod_floor(m.at(i, j), p);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows && piv < 0; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) piv = i;
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(r)]);
        Int inv = mod_inverse(a[static_cast<size_t>(r)][static_cast<size_t>(c)], p);
        for (int i = r + 1; i < rows; ++i) {
            Int& lead = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (lead == 0) continue;
            Int f = mod_floor(lead * inv, p);
            for (int j = c; j < cols; ++j) {
                Int& x = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = mod_floor(x - f * a[static_cast<size_t>(r)][static_cast<size_t>(j)], p);
            }
        }
        ++r;
    }
    return r;
}

namespace {

// Fraction-free elimination with row pivoting and column skipping; every
// intermediate entry is a minor of the input, so the divisions are exact.
int rank_bareiss(IntMat a) {
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows && piv < 0; ++i)
            if (a.at(i, c) != 0) piv = i;
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = exact_div(a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j), prev);
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

}  // namespace

int rank_exact(const IntMat& m) {
    // 2^61 - 1, prime; rank modulo a prime never exceeds the rational rank
    static const Int probe_prime = (Int(1) << 61) - 1;
    int full = std::min(m.rows(), m.cols());
    int rp = rank_mod_p(m, probe_prime);
    if (rp == full) return full;
    if (m.rows() == m.cols() && rp == m.rows() - 1) return det(m) != 0 ? m.rows() : rp;
    return rank_bareiss(m);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

struct SnfWork {
    IntMat d;
    bool track;
    IntMat u, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        if (track)
            for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        if (track)
            for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void row_sub(int a, const Int& q, int b) {
        if (q == 0) return;
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) -= q * d.at(b, j);
        if (track)
            for (int j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
    }
    void col_sub(int a, const Int& q, int b) {
        if (q == 0) return;
        for (int i = 0; i < d.rows(); ++i) d.at(i, a) -= q * d.at(i, b);
        if (track)
            for (int i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void row_add(int a, int b) {  // row a += row b
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) += d.at(b, j);
        if (track)
            for (int j = 0; j < u.cols(); ++j) u.at(a, j) += u.at(b, j);
    }
    void negate_row(int a) {
        for (int j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
        if (track)
            for (int j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }
};

// quotient with remainder in [-b/2, b/2]; b > 0
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > b) ++q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& m, bool with_transforms) {
    SnfWork w{m, with_transforms, IntMat(), IntMat()};
    if (with_transforms) {
        w.u = IntMat::identity(m.rows());
        w.v = IntMat::identity(m.cols());
    }
    int rows = m.rows(), cols = m.cols();
    int lim = std::min(rows, cols);

    for (int t = 0; t < lim; ++t) {
        // locate smallest nonzero |entry| in the trailing block
        auto find_pivot = [&](int& pi, int& pj) {
            pi = pj = -1;
            Int best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    const Int& x = w.d.at(i, j);
                    if (x == 0) continue;
                    Int ax = int_abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            return pi >= 0;
        };

        int pi, pj;
        if (!find_pivot(pi, pj)) break;  // block is zero; trailing diagonal stays 0

        for (;;) {
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.d.at(t, t) < 0) w.negate_row(t);

            for (int i = t + 1; i < rows; ++i)
                w.row_sub(i, nearest_quotient(w.d.at(i, t), w.d.at(t, t)), t);
            for (int j = t + 1; j < cols; ++j)
                w.col_sub(j, nearest_quotient(w.d.at(t, j), w.d.at(t, t)), t);

            bool clean = true;
            for (int i = t + 1; i < rows && clean; ++i)
                if (w.d.at(i, t) != 0) clean = false;
            for (int j = t + 1; j < cols && clean; ++j)
                if (w.d.at(t, j) != 0) clean = false;

            if (clean) {
                // pivot must divide everything that comes after it
                int bi = -1;
                for (int i = t + 1; i < rows && bi < 0; ++i)
                    for (int j = t + 1; j < cols; ++j)
                        if (!divides(w.d.at(t, t), w.d.at(i, j))) {
                            bi = i;
                            break;
                        }
                if (bi < 0) break;
                w.row_add(t, bi);
            }
            if (!find_pivot(pi, pj)) throw internal_error("smith_normal_form: pivot vanished");
        }
    }

    SmithDecomposition out;
    out.has_transforms = with_transforms;
    out.d.resize(static_cast<size_t>(lim));
    for (int i = 0; i < lim; ++i) out.d[static_cast<size_t>(i)] = w.d.at(i, i);
    for (int i = 0; i + 1 < lim; ++i)
        if (out.d[static_cast<size_t>(i)] != 0 &&
            !divides(out.d[static_cast<size_t>(i)], out.d[static_cast<size_t>(i + 1)]))
            throw internal_error("smith_normal_form: divisibility chain broken");
    if (with_transforms) {
        out.U = std::move(w.u);
        out.V = std::move(w.v);
    }
    return out;
}

}  // namespace specmate
