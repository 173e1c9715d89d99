#include "specmate/solver.hpp"

#include <algorithm>
#include <sstream>

namespace specmate {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// x^T A x over the edge list (twice the sum over edges)
Int quad_form(const Graph& g, const std::vector<Int>& x) {
    Int s = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.edge(i, j)) s += x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    return 2 * s;
}

}  // namespace

std::vector<ResidueVector> solve_prime_system(const IntMat& wp, const Graph& g, const Int& p,
                                              unsigned long t, uint64_t cap) {
    int n = wp.rows();
    if (wp.cols() != n || g.n() != n) throw internal_error("solve_prime_system: dimension mismatch");
    if (t < 1) throw internal_error("solve_prime_system: t must be positive");
    Int m = int_pow(p, t);

    SmithDecomposition snf = smith_normal_form(wp.transposed(), true);
    // x solves Wp^T x = 0 (mod m) iff x = V y with d_i y_i = 0 (mod m):
    // y_i ranges over multiples of m/gcd(m, d_i)
    std::vector<Int> gcds(static_cast<size_t>(n));
    Int expected = 1;
    unsigned long det_ord = 0;
    bool t_is_top = false;
    for (int i = 0; i < n; ++i) {
        const Int& di = snf.d[static_cast<size_t>(i)];
        if (di == 0) throw internal_error("solve_prime_system: singular deflated walk matrix");
        gcds[static_cast<size_t>(i)] = int_gcd(m, di);
        expected *= gcds[static_cast<size_t>(i)];
        det_ord += ord_p(di, p);
        if (i == n - 1) t_is_top = ord_p(di, p) <= t;
    }
    // with t = ord_p(d_n) the lattice size must be exactly p^(ord_p det)
    if (t_is_top && expected != int_pow(p, det_ord))
        throw internal_error("solve_prime_system: lattice size disagrees with determinant");
    if (expected > Int(static_cast<unsigned long>(cap))) {
        std::ostringstream msg;
        msg << "per-prime solution count " << expected.get_str() << " exceeds cap " << cap << " at p=" << p.get_str();
        throw cap_exceeded("step1", cap, msg.str());
    }

    // generator columns (m/gcd_i) * V[:,i] mod m, kept only where gcd_i > 1
    std::vector<int> active;
    std::vector<std::vector<Int>> gen;
    for (int i = 0; i < n; ++i) {
        if (gcds[static_cast<size_t>(i)] == 1) continue;
        active.push_back(i);
        std::vector<Int> col(static_cast<size_t>(n));
        Int scale = exact_div(m, gcds[static_cast<size_t>(i)]);
        for (int r = 0; r < n; ++r) col[static_cast<size_t>(r)] = mod_floor(scale * snf.V.at(r, i), m);
        gen.push_back(std::move(col));
    }

    std::vector<ResidueVector> out;
    std::vector<Int> digits(active.size(), Int(0));
    std::vector<Int> cur(static_cast<size_t>(n), Int(0));
    Int visited = 0;
    for (bool more = true; more;) {
        ++visited;
        if (mod_floor(dot(cur, cur), m) == 0 && mod_floor(quad_form(g, cur), m) == 0)
            out.push_back({m, cur});
        // odometer, last digit fastest (tuples in lexicographic order); a digit
        // rolling over has added gcd_i copies of its generator by then, which
        // is 0 mod m, so cur needs no reset
        more = false;
        size_t pos = digits.size();
        while (pos > 0) {
            --pos;
            for (int r = 0; r < n; ++r)
                cur[static_cast<size_t>(r)] =
                    mod_floor(cur[static_cast<size_t>(r)] + gen[pos][static_cast<size_t>(r)], m);
            if (++digits[pos] < gcds[static_cast<size_t>(active[pos])]) {
                more = true;
                break;
            }
            digits[pos] = 0;
        }
    }
    if (visited != expected) throw internal_error("solve_prime_system: enumeration count mismatch");

    std::sort(out.begin(), out.end());
    return out;
}

ResidueVector crt_combine(const std::vector<ResidueVector>& parts) {
    if (parts.empty()) throw internal_error("crt_combine: no parts");
    size_t n = parts[0].entries.size();
    Int big = 1;
    for (const auto& part : parts) {
        if (part.entries.size() != n) throw internal_error("crt_combine: length mismatch");
        if (int_gcd(big, part.modulus) != 1) throw internal_error("crt_combine: moduli not coprime");
        big *= part.modulus;
    }
    ResidueVector out{big, std::vector<Int>(n, Int(0))};
    for (const auto& part : parts) {
        Int rest = exact_div(big, part.modulus);
        Int coef = rest * mod_inverse(mod_floor(rest, part.modulus), part.modulus);
        for (size_t j = 0; j < n; ++j) out.entries[j] += coef * part.entries[j];
    }
    for (Int& x : out.entries) x = mod_floor(x, big);
    return out;
}

std::vector<SolutionVector> perfect_representatives(const ResidueVector& eta, const Graph& g,
                                                    const Int& L) {
    int n = g.n();
    if (static_cast<int>(eta.entries.size()) != n)
        throw internal_error("perfect_representatives: dimension mismatch");
    if (eta.modulus != L) throw internal_error("perfect_representatives: modulus is not L");

    bool all_zero = true;
    for (const Int& x : eta.entries)
        if (mod_floor(x, L) != 0) all_zero = false;
    if (all_zero) {
        // the class of the trivial solutions: exactly the n columns of L*I
        std::vector<SolutionVector> triv;
        for (int k = 0; k < n; ++k) {
            SolutionVector v(static_cast<size_t>(n), Int(0));
            v[static_cast<size_t>(k)] = L;
            triv.push_back(std::move(v));
        }
        return triv;
    }

    // shortest representative: entries in (-L/2, L/2]
    SolutionVector u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int r = mod_floor(eta.entries[static_cast<size_t>(i)], L);
        u[static_cast<size_t>(i)] = (2 * r > L) ? Int(r - L) : r;
    }

    Int uu = dot(u, u);
    Int ue = 0;
    for (const Int& x : u) ue += x;
    // no perfect vector can exist beyond these bounds
    if (uu > L * L) return {};
    if (int_abs(ue - L) > 3 * L) return {};

    // at most three entries can move by +-L, each in the direction of 0
    std::vector<int> pos;
    for (int i = 0; i < n; ++i)
        if (u[static_cast<size_t>(i)] != 0) pos.push_back(i);

    Int target = L * L;
    std::vector<SolutionVector> out;
    auto consider = [&](const std::vector<int>& flips) {
        SolutionVector w = u;
        for (int i : flips) {
            Int& x = w[static_cast<size_t>(i)];
            x += (x > 0) ? -L : L;
        }
        Int se = 0;
        for (const Int& x : w) se += x;
        if (se != L) return;
        if (dot(w, w) != target) return;
        if (quad_form(g, w) != 0) return;
        out.push_back(std::move(w));
    };

    consider({});
    for (size_t a = 0; a < pos.size(); ++a) {
        consider({pos[a]});
        for (size_t b = a + 1; b < pos.size(); ++b) {
            consider({pos[a], pos[b]});
            for (size_t c = b + 1; c < pos.size(); ++c) consider({pos[a], pos[b], pos[c]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionVector> solve_master(const Graph& g, const WalkData& wd, const LevelBound& lb,
                                         uint64_t cap) {
    int n = g.n();
    if (lb.factorization_incomplete)
        throw internal_error("solve_master: level bound is not fully factored");
    const Int& L = lb.L;

    std::vector<SolutionVector> solutions;
    std::vector<IntMat> wps;
    std::vector<Int> moduli;

    if (lb.primes.empty()) {
        if (L != 1) throw internal_error("solve_master: no primes but L != 1");
        ResidueVector zero{Int(1), std::vector<Int>(static_cast<size_t>(n), Int(0))};
        solutions = perfect_representatives(zero, g, L);
    } else {
        std::vector<std::vector<ResidueVector>> per_prime;
        Int product = 1;
        for (const auto& pp : lb.primes) {
            IntMat wp = modified_walk_matrix(wd, g, pp.p, 0);
            per_prime.push_back(solve_prime_system(wp, g, pp.p, pp.t, cap));
            wps.push_back(std::move(wp));
            moduli.push_back(int_pow(pp.p, pp.t));
            product *= Int(static_cast<unsigned long>(per_prime.back().size()));
        }
        if (product > Int(static_cast<unsigned long>(cap))) {
            std::ostringstream msg;
            msg << "residue combination count " << product.get_str() << " exceeds cap " << cap;
            throw cap_exceeded("step2", cap, msg.str());
        }

        std::vector<size_t> pick(per_prime.size(), 0);
        for (bool more = true; more;) {
            std::vector<ResidueVector> parts;
            for (size_t i = 0; i < per_prime.size(); ++i) parts.push_back(per_prime[i][pick[i]]);
            ResidueVector eta = per_prime.size() == 1 ? parts[0] : crt_combine(parts);
            if (eta.modulus != L) throw internal_error("solve_master: combined modulus is not L");
            for (auto& w : perfect_representatives(eta, g, L)) solutions.push_back(std::move(w));

            more = false;
            size_t pos = pick.size();
            while (pos > 0) {
                --pos;
                if (++pick[pos] < per_prime[pos].size()) {
                    more = true;
                    break;
                }
                pick[pos] = 0;
            }
        }
    }

    std::sort(solutions.begin(), solutions.end());
    for (size_t i = 0; i + 1 < solutions.size(); ++i)
        if (solutions[i] == solutions[i + 1])
            throw internal_error("solve_master: duplicate solutions");

    // full re-check of every constraint on every solution
    size_t trivial_seen = 0;
    for (const auto& x : solutions) {
        Int se = 0;
        for (const Int& v : x) se += v;
        if (se != L) throw internal_error("solve_master: row-sum constraint violated");
        if (dot(x, x) != L * L) throw internal_error("solve_master: norm constraint violated");
        if (quad_form(g, x) != 0) throw internal_error("solve_master: quadratic constraint violated");
        for (size_t k = 0; k < wps.size(); ++k) {
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int i = 0; i < n; ++i) acc += wps[k].at(i, j) * x[static_cast<size_t>(i)];
                if (mod_floor(acc, moduli[k]) != 0)
                    throw internal_error("solve_master: walk congruence violated");
            }
        }
        int nonzero = 0, at = -1;
        for (int i = 0; i < n; ++i)
            if (x[static_cast<size_t>(i)] != 0) {
                ++nonzero;
                at = i;
            }
        if (nonzero == 1 && x[static_cast<size_t>(at)] == L) ++trivial_seen;
    }
    if (trivial_seen != static_cast<size_t>(n))
        throw internal_error("solve_master: trivial solutions missing");
    return solutions;
}

}  // namespace specmate
