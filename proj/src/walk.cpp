#include "specmate/walk.hpp"

#include "specmate/fppoly.hpp"

namespace specmate {

const char* to_string(Controllability c) {
    switch (c) {
        case Controllability::controllable: return "controllable";
        case Controllability::almost_controllable: return "almost_controllable";
        case Controllability::unsupported: return "unsupported";
    }
    throw internal_error("to_string: bad Controllability");
}

std::vector<Int> apply_adjacency(const Graph& g, const std::vector<Int>& v) {
    int n = g.n();
    if (static_cast<int>(v.size()) != n) throw internal_error("apply_adjacency: size mismatch");
    std::vector<Int> out(static_cast<size_t>(n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.edge(i, j)) out[static_cast<size_t>(i)] += v[static_cast<size_t>(j)];
    return out;
}

namespace {

// cofactors along the last column; together they span the left kernel of W
// when rank W = n-1
std::vector<Int> cofactor_vector(const IntMat& w) {
    int n = w.rows();
    std::vector<Int> xi(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        IntMat minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 0; c + 1 < n; ++c) minor.at(rr, c) = w.at(r, c);
            ++rr;
        }
        Int m = det(minor);
        // (-1)^(i+n) with 1-based indices i+1 and n
        if ((i + 1 + n) % 2 != 0) m = -m;
        xi[static_cast<size_t>(i)] = m;
    }
    return xi;
}

Int half_power(int n) { return int_pow(Int(2), static_cast<unsigned long>(n / 2 >= 1 ? n / 2 - 1 : 0)); }

}  // namespace

WalkData build_walk_data(const Graph& g) {
    int n = g.n();
    WalkData wd;
    wd.W = IntMat(n, n);
    std::vector<Int> v(static_cast<size_t>(n), Int(1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) wd.W.at(i, j) = v[static_cast<size_t>(i)];
        if (j + 1 < n) v = apply_adjacency(g, v);
    }
    int r = rank_exact(wd.W);
    if (r == n) {
        wd.klass = Controllability::controllable;
    } else if (r == n - 1) {
        wd.klass = Controllability::almost_controllable;
        wd.xi = cofactor_vector(wd.W);
        bool nonzero = false;
        std::vector<Int> check(static_cast<size_t>(n), Int(0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) check[static_cast<size_t>(j)] += wd.xi[static_cast<size_t>(i)] * wd.W.at(i, j);
        for (const Int& x : check)
            if (x != 0) throw internal_error("build_walk_data: xi is not in the left kernel");
        for (const Int& x : wd.xi)
            if (x != 0) nonzero = true;
        if (!nonzero) throw internal_error("build_walk_data: cofactor vector vanished at rank n-1");
    } else {
        wd.klass = Controllability::unsupported;
    }
    return wd;
}

IntMat base_walk_matrix(const WalkData& wd, int delta) {
    if (wd.klass == Controllability::controllable) return wd.W;
    if (wd.klass != Controllability::almost_controllable)
        throw internal_error("base_walk_matrix: unsupported walk class");
    int n = wd.W.rows();
    IntMat out = wd.W;
    Int div = half_power(n);
    for (int i = 0; i < n; ++i) {
        Int v = exact_div(wd.xi[static_cast<size_t>(i)], div);
        out.at(i, n - 1) = (delta % 2 != 0) ? Int(-v) : v;
    }
    return out;
}

IntMat modified_walk_matrix(const WalkData& wd, const Graph& g, const Int& p, int delta) {
    if (wd.klass == Controllability::unsupported)
        throw internal_error("modified_walk_matrix: unsupported walk class");
    int n = g.n();
    FpPoly f = main_polynomial(g, p);
    int s = f.degree();
    if (s < 1 || s > n) throw internal_error("modified_walk_matrix: bad deflation degree");

    bool almost = wd.klass == Controllability::almost_controllable;
    if (almost && s > n - 1) throw internal_error("modified_walk_matrix: deflation degree too high");

    if (s == n) return wd.W;  // deflation cannot shorten anything

    // u = f(A)e / p from the stored Krylov columns
    std::vector<Int> u(static_cast<size_t>(n), Int(0));
    for (int k = 0; k <= s; ++k) {
        if (f.coeff(k) == 0) continue;
        for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] += f.coeff(k) * wd.W.at(i, k);
    }
    for (Int& x : u) x = exact_div(x, p);

    IntMat out(n, n);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < n; ++i) out.at(i, j) = wd.W.at(i, j);

    int iterated = almost ? n - 1 - s : n - s;  // columns built from u
    std::vector<Int> v = u;
    for (int k = 0; k < iterated; ++k) {
        for (int i = 0; i < n; ++i) out.at(i, s + k) = v[static_cast<size_t>(i)];
        if (k + 1 < iterated) v = apply_adjacency(g, v);
    }

    if (almost) {
        Int div = int_lcm(half_power(n), int_pow(p, static_cast<unsigned long>(n - 1 - s)));
        for (int i = 0; i < n; ++i) {
            Int x = exact_div(wd.xi[static_cast<size_t>(i)], div);
            out.at(i, n - 1) = (delta % 2 != 0) ? Int(-x) : x;
        }
    }
    return out;
}

}  // namespace specmate
