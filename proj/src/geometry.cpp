#include "geometry.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace infdex {

namespace {

// Normalize a row (normal, rhs) by its positive content so duplicates and
// positive multiples collapse.
std::vector<Rat> row_key(const LinIneq& q) {
    QVec joined = q.normal;
    joined.push_back(q.rhs);
    return primitive_oriented(joined);
}

struct Level {
    std::vector<LinIneq> rows;  // constraints in variables x_0..x_k
};

}  // namespace

std::optional<QVec> fm_feasible(std::vector<LinIneq> system, int dim) {
    // Record the system at each elimination level for back-substitution.
    std::vector<Level> levels(static_cast<size_t>(dim) + 1);
    auto canon = [](std::vector<LinIneq>& rows, int nvars) -> bool {
        std::set<std::vector<Rat>> seen;
        std::vector<LinIneq> kept;
        for (auto& r : rows) {
            bool zero = true;
            for (int i = 0; i < nvars; ++i)
                if (r.normal[i] != 0) {
                    zero = false;
                    break;
                }
            if (zero) {
                if (r.rhs > 0) return false;  // 0 >= positive: infeasible
                continue;
            }
            auto key = row_key(r);
            if (seen.insert(key).second) kept.push_back(std::move(r));
        }
        rows = std::move(kept);
        return true;
    };

    levels[dim].rows = std::move(system);
    if (!canon(levels[dim].rows, dim)) return std::nullopt;

    for (int k = dim - 1; k >= 0; --k) {
        const auto& cur = levels[k + 1].rows;
        std::vector<LinIneq> next;
        std::vector<const LinIneq*> lower, upper;
        for (const auto& r : cur) {
            const Rat& c = r.normal[k];
            if (c > 0)
                lower.push_back(&r);
            else if (c < 0)
                upper.push_back(&r);
            else
                next.push_back(r);
        }
        for (const auto* lo : lower)
            for (const auto* up : upper) {
                // (-up_k) * lo + lo_k * up eliminates x_k; both factors positive.
                Rat fl = -up->normal[k];
                Rat fu = lo->normal[k];
                LinIneq combined;
                combined.normal.resize(dim, Rat(0));
                for (int j = 0; j < k; ++j)
                    combined.normal[j] = fl * lo->normal[j] + fu * up->normal[j];
                combined.rhs = fl * lo->rhs + fu * up->rhs;
                next.push_back(std::move(combined));
            }
        if (!canon(next, k)) return std::nullopt;
        levels[k].rows = std::move(next);
    }

    // Feasible; reconstruct a witness from the lowest variable up.
    QVec x(dim, Rat(0));
    for (int k = 0; k < dim; ++k) {
        bool has_lo = false, has_up = false;
        Rat lo(0), up(0);
        for (const auto& r : levels[k + 1].rows) {
            const Rat& c = r.normal[k];
            if (c == 0) continue;
            Rat bound = r.rhs;
            for (int j = 0; j < k; ++j) bound -= r.normal[j] * x[j];
            bound /= c;
            if (c > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_up || bound < up) up = bound;
                has_up = true;
            }
        }
        if (has_lo && has_up)
            x[k] = (lo + up) / 2;
        else if (has_lo)
            x[k] = lo + 1;
        else if (has_up)
            x[k] = up - 1;
        // else free: keep 0
    }
    return x;
}

std::optional<QVec> pointedness_witness(const std::vector<QVec>& X, int dim) {
    std::vector<LinIneq> sys;
    sys.reserve(X.size());
    for (const auto& a : X) sys.push_back({a, Rat(1)});
    return fm_feasible(std::move(sys), dim);
}

bool pointedness_check(const std::vector<QVec>& X, int dim) {
    return pointedness_witness(X, dim).has_value();
}

std::vector<QVec> enumerate_walls(const std::vector<QVec>& X, int dim) {
    std::set<std::vector<Rat>> seen;
    std::vector<QVec> walls;
    auto push = [&](const QVec& normal) {
        QVec p = primitive(normal);
        if (qvec_is_zero(p)) return;
        if (seen.insert(p).second) walls.push_back(p);
    };
    if (dim == 1) {
        // The only hyperplane is the origin (spanned by the empty subset).
        push(QVec{Rat(1)});
    } else {
        const int m = static_cast<int>(X.size());
        std::vector<int> pick(dim - 1);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == dim - 1) {
                std::vector<QVec> rows;
                rows.reserve(pick.size());
                for (int idx : pick) rows.push_back(X[idx]);
                QMat M = QMat::from_rows(rows);
                if (rank(M) != dim - 1) return;
                auto ker = kernel_basis(M);
                if (ker.size() == 1) push(ker[0]);
                return;
            }
            for (int i = start; i < m; ++i) {
                pick[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    std::sort(walls.begin(), walls.end(), operator_lex_less);
    return walls;
}

namespace {

// Exact angular order of coplanar 2-D coordinates spanning less than a half
// turn: compare by cross product (all points share the cone's half-plane).
bool angular_less(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    Rat cross = a.first * b.second - a.second * b.first;
    if (cross != 0) return cross > 0;
    return false;
}

// Triangulation of a pointed full-dimensional cone from its extreme rays,
// by stellar subdivision from the interior ray; recursion goes through the
// supporting-hyperplane facets.
std::vector<std::vector<QVec>> triangulate_rays(const std::vector<QVec>& rays, int dim) {
    const int n = static_cast<int>(rays.size());
    if (n == dim) return {rays};
    if (dim <= 2) {
        // A pointed 1- or 2-dimensional cone is already simplicial.
        return {rays};
    }

    // Facets: supporting hyperplanes through rank-(dim-1) subsets of rays.
    std::set<std::vector<Rat>> facet_seen;
    std::vector<std::pair<QVec, std::vector<int>>> facets;  // (inward normal, ray indices)
    std::vector<int> pick(dim - 1);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == dim - 1) {
            std::vector<QVec> rows;
            for (int idx : pick) rows.push_back(rays[idx]);
            QMat M = QMat::from_rows(rows);
            if (rank(M) != dim - 1) return;
            auto ker = kernel_basis(M);
            if (ker.size() != 1) return;
            QVec normal = primitive(ker[0]);
            bool pos = false, neg = false;
            for (const auto& r : rays) {
                int s = rat_sign(dot(normal, r));
                if (s > 0) pos = true;
                if (s < 0) neg = true;
            }
            if (pos && neg) return;  // not supporting
            if (neg) normal = scale(normal, Rat(-1));
            if (!facet_seen.insert(normal).second) return;
            std::vector<int> on;
            for (int i = 0; i < n; ++i)
                if (dot(normal, rays[i]) == 0) on.push_back(i);
            facets.push_back({normal, on});
            return;
        }
        for (int i = start; i < n; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);

    QVec center(dim, Rat(0));
    for (const auto& r : rays) center = add(center, r);
    center = primitive_oriented(center);

    std::vector<std::vector<QVec>> out;
    for (const auto& [normal, on] : facets) {
        // Facet cone lives in the hyperplane of `normal`; express its rays in
        // hyperplane coordinates and triangulate recursively.
        QMat N = QMat::from_rows({normal});
        auto H = kernel_basis(N);  // dim-1 basis vectors
        QMat Hm = QMat::from_columns(H);
        std::vector<QVec> sub;
        sub.reserve(on.size());
        for (int idx : on) {
            auto y = solve_consistent(Hm, rays[idx]);
            assert(y);
            sub.push_back(*y);
        }
        if (dim - 1 == 2 && sub.size() > 2) {
            // Order the facet's rays angularly before pairing them off.
            std::vector<int> order(sub.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            std::sort(order.begin(), order.end(), [&](int i, int j) {
                return angular_less({sub[i][0], sub[i][1]}, {sub[j][0], sub[j][1]});
            });
            for (size_t i = 0; i + 1 < order.size(); ++i)
                out.push_back({center, rays[on[order[i]]], rays[on[order[i + 1]]]});
        } else {
            auto tris = triangulate_rays(sub, dim - 1);
            for (const auto& t : tris) {
                std::vector<QVec> simplex;
                simplex.push_back(center);
                for (const auto& y : t) simplex.push_back(Hm.apply(y));
                out.push_back(std::move(simplex));
            }
        }
    }
    return out;
}

}  // namespace

ChamberComplex enumerate_chambers(const std::vector<QVec>& X, int dim) {
    for (const auto& a : X)
        if (qvec_is_zero(a)) throw precondition_error("nonzero-weight precondition violated");
    if (X.empty()) throw precondition_error("empty weight list has no chamber complex");
    assert(rank(QMat::from_columns(X)) == dim);
    if (!pointedness_check(X, dim))
        throw precondition_error("unbounded support: weights do not span a pointed cone");

    ChamberComplex cc;
    cc.dim = dim;
    cc.walls = enumerate_walls(X, dim);
    const int W = static_cast<int>(cc.walls.size());

    // Facet-supporting walls have their sign forced by cone membership.
    std::vector<int> forced(W, 0);
    for (int k = 0; k < W; ++k) {
        bool pos = false, neg = false;
        for (const auto& a : X) {
            int s = rat_sign(dot(cc.walls[k], a));
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && !neg) forced[k] = 1;
        if (neg && !pos) forced[k] = -1;
        // pos && neg: interior wall, both signs occur; neither: impossible for
        // a spanning X.
    }

    std::vector<int> signs(W, 0);
    std::vector<Chamber> found;
    std::function<void(int)> dfs = [&](int k) {
        // Feasibility of the partial assignment.
        std::vector<LinIneq> sys;
        for (int j = 0; j < k; ++j) sys.push_back({scale(cc.walls[j], Rat(signs[j])), Rat(1)});
        auto wit = fm_feasible(std::move(sys), dim);
        if (!wit) return;
        if (k == W) {
            Chamber ch;
            ch.signs = signs;
            ch.interior = *wit;
            found.push_back(std::move(ch));
            return;
        }
        std::vector<int> choices =
            forced[k] != 0 ? std::vector<int>{forced[k]} : std::vector<int>{1, -1};
        for (int s : choices) {
            signs[k] = s;
            dfs(k + 1);
        }
        signs[k] = 0;
    };
    dfs(0);

    // Rays, interior, triangulation per chamber.
    for (auto& ch : found) {
        std::set<std::vector<Rat>> seen;
        if (dim == 1) {
            ch.rays = {QVec{Rat(ch.signs[0])}};
        } else {
            std::vector<int> pick(dim - 1);
            std::function<void(int, int)> rec = [&](int start, int depth) {
                if (depth == dim - 1) {
                    std::vector<QVec> rows;
                    for (int idx : pick) rows.push_back(cc.walls[idx]);
                    QMat M = QMat::from_rows(rows);
                    if (rank(M) != dim - 1) return;
                    auto ker = kernel_basis(M);
                    if (ker.size() != 1) return;
                    for (const QVec& cand : {primitive(ker[0]), scale(primitive(ker[0]), Rat(-1))}) {
                        bool ok = true;
                        bool nonzero_somewhere = false;
                        for (int j = 0; j < W && ok; ++j) {
                            int s = rat_sign(dot(cc.walls[j], cand));
                            if (s != 0 && s != ch.signs[j]) ok = false;
                            if (s != 0) nonzero_somewhere = true;
                        }
                        if (ok && nonzero_somewhere && seen.insert(cand).second)
                            ch.rays.push_back(cand);
                    }
                    return;
                }
                for (int i = start; i < W; ++i) {
                    pick[depth] = i;
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
            std::sort(ch.rays.begin(), ch.rays.end(), operator_lex_less);
        }
        ch.interior = interior_point(ch, cc.walls);
        ch.simplices = triangulate_rays(ch.rays, dim);
    }

    std::sort(found.begin(), found.end(),
              [](const Chamber& a, const Chamber& b) { return a.signs < b.signs; });
    cc.chambers = std::move(found);
    return cc;
}

QVec interior_point(const Chamber& chamber, const std::vector<QVec>& walls) {
    QVec c(walls.empty() ? chamber.rays[0].size() : walls[0].size(), Rat(0));
    if (!chamber.rays.empty()) {
        c = qvec_zero(static_cast<int>(chamber.rays[0].size()));
        for (const auto& r : chamber.rays) c = add(c, r);
    }
    auto consistent = [&](const QVec& p) {
        for (size_t k = 0; k < walls.size(); ++k) {
            int s = rat_sign(dot(walls[k], p));
            if (s == 0 || s != chamber.signs[k]) return false;
        }
        return true;
    };
    if (consistent(c)) return c;
    // Perturb toward the first ray; exact verification each time.
    Rat eps(1, 2);
    for (int tries = 0; tries < 64 && !chamber.rays.empty(); ++tries) {
        QVec p = add(c, scale(chamber.rays[0], eps));
        if (consistent(p)) return p;
        eps /= 2;
    }
    // Fall back to the stored witness (always strictly feasible).
    if (consistent(chamber.interior)) return chamber.interior;
    throw precondition_error("chamber has empty interior");
}

int locate_chamber(const ChamberComplex& cc, const QVec& xi) {
    std::vector<int> s(cc.walls.size());
    for (size_t k = 0; k < cc.walls.size(); ++k) {
        int sg = rat_sign(dot(cc.walls[k], xi));
        if (sg == 0) throw precondition_error("on-wall evaluation undefined");
        s[k] = sg;
    }
    for (size_t i = 0; i < cc.chambers.size(); ++i)
        if (cc.chambers[i].signs == s) return static_cast<int>(i);
    return -1;
}

}  // namespace infdex
