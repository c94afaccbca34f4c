#include "polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>

namespace infdex {

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.coef[std::vector<int>(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const std::vector<int>& exp, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.coef[exp] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, Rat(1));
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : coef) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous(int deg) const {
    for (const auto& [e, c] : coef)
        if (std::accumulate(e.begin(), e.end(), 0) != deg) return false;
    return true;
}

void MultiPoly::add_term(const std::vector<int>& exp, const Rat& c) {
    if (c == 0) return;
    auto it = coef.find(exp);
    if (it == coef.end()) {
        coef[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) coef.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    assert(nvars == o.nvars);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.coef) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    assert(nvars == o.nvars);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.coef) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    assert(nvars == o.nvars);
    MultiPoly out(nvars);
    for (const auto& [e1, c1] : coef)
        for (const auto& [e2, c2] : o.coef) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
    MultiPoly out(nvars);
    if (s == 0) return out;
    for (const auto& [e, c] : coef) out.coef[e] = c * s;
    return out;
}

Rat MultiPoly::eval(const QVec& x) const {
    assert(static_cast<int>(x.size()) == nvars);
    Rat total(0);
    for (const auto& [e, c] : coef) {
        Rat term = c;
        for (int i = 0; i < nvars; ++i)
            if (e[i]) term *= rat_pow(x[i], static_cast<unsigned>(e[i]));
        total += term;
    }
    return total;
}

double MultiPoly::eval_d(const std::vector<double>& x) const {
    double total = 0.0;
    for (const auto& [e, c] : coef) {
        double term = rat_d(c);
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly out(nvars);
    for (const auto& [e, c] : coef) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.add_term(d, c * Rat(e[var]));
    }
    return out;
}

MultiPoly MultiPoly::derivative(const std::vector<int>& beta) const {
    MultiPoly out = *this;
    for (int v = 0; v < nvars; ++v)
        for (int k = 0; k < beta[v]; ++k) out = out.partial(v);
    return out;
}

MultiPoly MultiPoly::compose_linear(const QMat& M) const {
    assert(M.rows == nvars);
    MultiPoly out(M.cols);
    // Substituted coordinate polynomials x_i(u).
    std::vector<MultiPoly> xs;
    xs.reserve(nvars);
    for (int i = 0; i < nvars; ++i) {
        MultiPoly xi(M.cols);
        for (int j = 0; j < M.cols; ++j)
            if (M.at(i, j) != 0) xi.add_term([&] {
                std::vector<int> e(M.cols, 0);
                e[j] = 1;
                return e;
            }(), M.at(i, j));
        xs.push_back(std::move(xi));
    }
    for (const auto& [e, c] : coef) {
        MultiPoly term = MultiPoly::constant(M.cols, c);
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * xs[i];
        out = out + term;
    }
    return out;
}

std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, const QVec& ell) {
    const int n = p.nvars;
    assert(static_cast<int>(ell.size()) == n);
    int pivot = -1;
    for (int i = 0; i < n; ++i)
        if (ell[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) return std::nullopt;  // ell == 0
    // Long division in x_pivot treating the other variables as coefficients:
    // repeatedly cancel the highest x_pivot power with (x_pivot + rest/c).
    MultiPoly rem = p;
    MultiPoly quot(n);
    const Rat c = ell[pivot];
    while (!rem.is_zero()) {
        // term of maximal pivot degree (ties: map order)
        auto best = rem.coef.end();
        int bestdeg = -1;
        for (auto it = rem.coef.begin(); it != rem.coef.end(); ++it)
            if (it->first[pivot] > bestdeg) {
                bestdeg = it->first[pivot];
                best = it;
            }
        if (bestdeg == 0) return std::nullopt;  // remainder free of pivot but nonzero
        std::vector<int> qe = best->first;
        qe[pivot] -= 1;
        Rat qc = best->second / c;
        quot.add_term(qe, qc);
        // rem -= (qc * x^qe) * ell
        for (int i = 0; i < n; ++i) {
            if (ell[i] == 0) continue;
            std::vector<int> e = qe;
            e[i] += 1;
            rem.add_term(e, -qc * ell[i]);
        }
    }
    return quot;
}

int vanishing_order(const MultiPoly& p, const QVec& ell, int cap) {
    MultiPoly cur = p;
    int order = 0;
    while (order < cap) {
        auto q = divide_by_linear(cur, ell);
        if (!q) break;
        cur = *q;
        ++order;
    }
    return order;
}

std::vector<std::vector<int>> monomials_up_to_degree(int nvars, int deg) {
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur(nvars, 0);
    // grouped by total degree for a graded order
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    for (int d = 0; d <= deg; ++d) rec(0, d);
    return out;
}

MultiPoly poly_interpolate(const std::vector<std::pair<QVec, Rat>>& samples, int degreeBound,
                           int nvars) {
    auto mons = monomials_up_to_degree(nvars, degreeBound);
    if (samples.size() != mons.size())
        throw precondition_error("interpolation needs exactly " + std::to_string(mons.size()) +
                                 " samples for degree <= " + std::to_string(degreeBound) + " in " +
                                 std::to_string(nvars) + " variables, got " +
                                 std::to_string(samples.size()));
    const int N = static_cast<int>(mons.size());
    QMat V(N, N);
    QVec b(N);
    for (int r = 0; r < N; ++r) {
        const QVec& x = samples[r].first;
        for (int c = 0; c < N; ++c) {
            Rat m(1);
            for (int i = 0; i < nvars; ++i)
                if (mons[c][i]) m *= rat_pow(x[i], static_cast<unsigned>(mons[c][i]));
            V.at(r, c) = m;
        }
        b[r] = samples[r].second;
    }
    if (rank(V) < N) throw precondition_error("singular interpolation sample configuration");
    auto sol = solve_square(V, b);
    if (!sol) throw precondition_error("singular interpolation sample configuration");
    MultiPoly p(nvars);
    for (int c = 0; c < N; ++c) p.add_term(mons[c], (*sol)[c]);
    return p;
}

}  // namespace infdex
