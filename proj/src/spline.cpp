#include "spline.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace infdex {

void validate_weights(const WeightList& X) {
    for (const auto& a : X.weights) {
        if (static_cast<int>(a.size()) != X.dim)
            throw input_error("weight dimension mismatch");
        if (qvec_is_zero(a))
            throw precondition_error("nonzero-weight precondition violated: zero weight in list");
    }
}

std::optional<QVec> weight_pointedness_witness(const WeightList& X) {
    return pointedness_witness(X.weights, X.dim);
}

std::optional<QVec> Carrier::to_carrier(const QVec& xi) const {
    QVec eta = leftInv.apply(xi);
    QVec back = basis.apply(eta);
    if (back != xi) return std::nullopt;
    return eta;
}

Carrier compute_carrier(const WeightList& X) {
    Carrier car;
    car.ambient = X.dim;
    std::vector<QVec> chosen;
    for (const auto& a : X.weights) {
        std::vector<QVec> trial = chosen;
        trial.push_back(a);
        if (rank(QMat::from_columns(trial)) > static_cast<int>(chosen.size()))
            chosen.push_back(a);
    }
    car.rank = static_cast<int>(chosen.size());
    if (car.rank == 0) throw precondition_error("empty weight list has no carrier");
    if (car.rank == X.dim) {
        // Full rank: ambient coordinates directly, so densities are with
        // respect to ambient Lebesgue measure.
        car.basis = QMat::identity(X.dim);
        car.leftInv = QMat::identity(X.dim);
        return car;
    }
    car.basis = QMat::from_columns(chosen);
    auto li = left_inverse(car.basis);
    assert(li);
    car.leftInv = *li;
    return car;
}

RecursiveEvaluator::RecursiveEvaluator(const WeightList& X) {
    validate_weights(X);
    car_ = compute_carrier(X);
    const int r = car_.rank;

    std::vector<QVec> Xc;
    Xc.reserve(X.weights.size());
    for (const auto& a : X.weights) {
        auto eta = car_.to_carrier(a);
        assert(eta);
        Xc.push_back(*eta);
    }
    auto wit = pointedness_witness(Xc, r);
    if (!wit)
        throw precondition_error("unbounded support: weights do not span a pointed cone");
    witness_ = *wit;

    lists_.push_back(Xc);
    while (static_cast<int>(lists_.back().size()) > r) {
        const auto& cur = lists_.back();
        int pick = -1;
        for (int i = static_cast<int>(cur.size()) - 1; i >= 0; --i) {
            std::vector<QVec> rest;
            for (int j = 0; j < static_cast<int>(cur.size()); ++j)
                if (j != i) rest.push_back(cur[j]);
            if (rank(QMat::from_columns(rest)) == r) {
                pick = i;
                lists_.push_back(std::move(rest));
                break;
            }
        }
        // some removable weight exists whenever |X| > rank
        if (pick < 0) throw precondition_error("weight list admits no rank-preserving chain");
        removed_.push_back(pick);
    }
    walls_.reserve(lists_.size());
    for (const auto& lst : lists_) walls_.push_back(enumerate_walls(lst, r));
}

Rat RecursiveEvaluator::eval_ambient(const QVec& xi) const {
    auto eta = car_.to_carrier(xi);
    if (!eta) return Rat(0);  // off span(X), outside the support
    return eval_carrier(*eta);
}

Rat RecursiveEvaluator::eval_carrier(const QVec& eta) const {
    for (const auto& w : walls_[0])
        if (dot(w, eta) == 0) throw precondition_error("on-wall evaluation undefined");
    return eval_level(0, eta);
}

Rat RecursiveEvaluator::eval_level(size_t level, const QVec& eta) const {
    const auto& X = lists_[level];
    const int r = car_.rank;
    if (static_cast<int>(X.size()) == r) {
        QMat B = QMat::from_columns(X);
        auto t = solve_square(B, eta);
        assert(t);
        for (const auto& ti : *t) {
            if (ti == 0) throw precondition_error("on-wall evaluation undefined");
            if (ti < 0) return Rat(0);
        }
        return Rat(1) / rat_abs(determinant(B));
    }

    const QVec a = X[static_cast<size_t>(removed_[level])];
    Rat phi_eta = dot(witness_, eta);
    if (phi_eta <= 0) return Rat(0);  // outside {phi > 0} which contains cone(X)\0
    Rat tmax = phi_eta / dot(witness_, a);

    // Exact breakpoints where the ray eta - t*a crosses walls of the reduced
    // complex.
    std::set<Rat> cuts;
    cuts.insert(Rat(0));
    cuts.insert(tmax);
    for (const auto& w : walls_[level + 1]) {
        Rat wa = dot(w, a);
        if (wa == 0) continue;  // ray parallel to the wall, eta is off it
        Rat t = dot(w, eta) / wa;
        if (t > 0 && t < tmax) cuts.insert(t);
    }

    const int deg = static_cast<int>(lists_[level + 1].size()) - r;  // piece degree below
    Rat total(0);
    auto it = cuts.begin();
    Rat t0 = *it;
    for (++it; it != cuts.end(); ++it) {
        const Rat t1 = *it;
        const Rat len = t1 - t0;
        // Nodes at interior fractions k/(deg+2) of the segment.
        std::vector<Rat> nodes;
        std::vector<Rat> values;
        nodes.reserve(deg + 1);
        for (int k = 1; k <= deg + 1; ++k) {
            Rat t = t0 + len * Rat(k, deg + 2);
            nodes.push_back(t);
            values.push_back(eval_level(level + 1, sub(eta, scale(a, t))));
        }
        // Lagrange coefficients of the degree-deg polynomial through the
        // nodes, then exact integration over [t0, t1].
        // poly(t) = sum_i values[i] * prod_{j != i} (t - nodes[j])/(nodes[i]-nodes[j])
        std::vector<Rat> poly(static_cast<size_t>(deg) + 1, Rat(0));
        for (int i = 0; i <= deg; ++i) {
            std::vector<Rat> basis{Rat(1)};
            Rat denom(1);
            for (int j = 0; j <= deg; ++j) {
                if (j == i) continue;
                // multiply basis by (t - nodes[j])
                std::vector<Rat> nb(basis.size() + 1, Rat(0));
                for (size_t k = 0; k < basis.size(); ++k) {
                    nb[k + 1] += basis[k];
                    nb[k] -= basis[k] * nodes[j];
                }
                basis = std::move(nb);
                denom *= nodes[i] - nodes[j];
            }
            Rat f = values[i] / denom;
            for (size_t k = 0; k < basis.size(); ++k) poly[k] += f * basis[k];
        }
        Rat seg(0);
        Rat p0(1), p1(1);
        for (size_t k = 0; k < poly.size(); ++k) {
            p0 *= t0;
            p1 *= t1;
            seg += poly[k] * (p1 - p0) / Rat(static_cast<long>(k) + 1);
        }
        total += seg;
        t0 = t1;
    }
    return total;
}

Rat eval_point_recursive(const WeightList& X, const QVec& xi) {
    RecursiveEvaluator ev(X);
    return ev.eval_ambient(xi);
}

namespace {

// Small deterministic rational generator for interpolation samples.
struct RatSampler {
    uint64_t state;
    explicit RatSampler(uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    uint64_t next_u64() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 2685821657736338717ULL;
    }
    Rat next_coeff() {
        // in (0, 8], denominator <= 17; spread enough for unisolvence
        long num = static_cast<long>(next_u64() % 120) + 1;
        long den = static_cast<long>(next_u64() % 16) + 2;
        return rat(num, den);
    }
};

}  // namespace

SplineForm build_spline(const WeightList& X) {
    validate_weights(X);
    RecursiveEvaluator ev(X);
    SplineForm S;
    S.X = X;
    S.car = ev.carrier();
    const int r = S.car.rank;

    std::vector<QVec> Xc;
    for (const auto& a : X.weights) Xc.push_back(*S.car.to_carrier(a));
    S.cc = enumerate_chambers(Xc, r);

    const int deg = X.count() - r;
    const auto mons = monomials_up_to_degree(r, deg);
    const size_t need = mons.size();

    for (const auto& ch : S.cc.chambers) {
        MultiPoly piece(r);
        bool done = false;
        for (uint64_t attempt = 0; attempt < 16 && !done; ++attempt) {
            RatSampler sampler(0x5eed0000ULL + attempt * 7919ULL +
                               static_cast<uint64_t>(&ch - S.cc.chambers.data()) * 104729ULL);
            std::vector<std::pair<QVec, Rat>> samples;
            std::set<std::vector<Rat>> used;
            int guard = 0;
            while (samples.size() < need && guard < 4000) {
                ++guard;
                QVec p = qvec_zero(r);
                for (const auto& ray : ch.rays) p = add(p, scale(ray, sampler.next_coeff()));
                bool off = true;
                for (size_t k = 0; k < S.cc.walls.size(); ++k) {
                    int s = rat_sign(dot(S.cc.walls[k], p));
                    if (s == 0 || s != ch.signs[k]) {
                        off = false;
                        break;
                    }
                }
                if (!off || !used.insert(p).second) continue;
                samples.push_back({p, ev.eval_carrier(p)});
            }
            if (samples.size() < need) continue;
            try {
                piece = poly_interpolate(samples, deg, r);
            } catch (const precondition_error&) {
                continue;  // singular configuration: resample
            }
            // Cross-check the piece at a fresh interior point.
            QVec fresh = qvec_zero(r);
            RatSampler fs(0xfee1 + attempt);
            for (const auto& ray : ch.rays) fresh = add(fresh, scale(ray, fs.next_coeff()));
            bool off = true;
            for (size_t k = 0; k < S.cc.walls.size(); ++k) {
                int s = rat_sign(dot(S.cc.walls[k], fresh));
                if (s == 0 || s != ch.signs[k]) off = false;
            }
            if (off && piece.eval(fresh) != ev.eval_carrier(fresh)) continue;
            done = true;
        }
        if (!done)
            throw precondition_error("spline interpolation failed after bounded retries");
        S.pieces.push_back(std::move(piece));
    }
    return S;
}

Rat eval_spline_form(const SplineForm& S, const QVec& xi) {
    if (static_cast<int>(xi.size()) != S.X.dim) throw input_error("point dimension mismatch");
    auto eta = S.car.to_carrier(xi);
    if (!eta) return Rat(0);
    int idx = locate_chamber(S.cc, *eta);
    if (idx < 0) return Rat(0);
    return S.pieces[static_cast<size_t>(idx)].eval(*eta);
}

Rat laplace_closed_form(const WeightList& X, const QVec& z) {
    Rat out(1);
    for (const auto& a : X.weights) {
        Rat d = dot(a, z);
        if (d <= 0) throw precondition_error("Laplace integral divergent");
        out /= d;
    }
    return out;
}

Rat laplace_transform(const SplineForm& S, const QVec& z) {
    for (const auto& a : S.X.weights)
        if (dot(a, z) <= 0) throw precondition_error("Laplace integral divergent");
    QVec zc = S.car.basis.transpose().apply(z);
    Rat total(0);
    for (size_t ci = 0; ci < S.cc.chambers.size(); ++ci) {
        const auto& ch = S.cc.chambers[ci];
        for (const auto& simplex : ch.simplices) {
            QMat B = QMat::from_columns(simplex);
            Rat det = rat_abs(determinant(B));
            assert(det != 0);
            MultiPoly qU = S.pieces[ci].compose_linear(B);
            QVec c = B.transpose().apply(zc);
            Rat contrib(0);
            for (const auto& [e, coeff] : qU.coef) {
                Rat term = coeff;
                for (size_t i = 0; i < e.size(); ++i) {
                    term *= rat_factorial(static_cast<unsigned>(e[i]));
                    term /= rat_pow(c[i], static_cast<unsigned>(e[i]) + 1);
                }
                contrib += term;
            }
            total += det * contrib;
        }
    }
    return total;
}

int wall_agreement_order(const SplineForm& S, int cap) {
    const int r = S.car.rank;
    const auto& walls = S.cc.walls;
    const auto& chs = S.cc.chambers;
    int min_order = cap;

    auto face_nonempty = [&](const std::vector<int>& signs, size_t k) {
        std::vector<LinIneq> sys;
        sys.push_back({walls[k], Rat(0)});
        sys.push_back({scale(walls[k], Rat(-1)), Rat(0)});
        for (size_t j = 0; j < walls.size(); ++j) {
            if (j == k) continue;
            sys.push_back({scale(walls[j], Rat(signs[j])), Rat(1)});
        }
        return fm_feasible(std::move(sys), r).has_value();
    };

    for (size_t k = 0; k < walls.size(); ++k) {
        // Interior walls: chamber pairs differing only in the k-th sign.
        for (size_t i = 0; i < chs.size(); ++i)
            for (size_t j = i + 1; j < chs.size(); ++j) {
                bool only_k = chs[i].signs[k] != chs[j].signs[k];
                for (size_t t = 0; t < walls.size() && only_k; ++t)
                    if (t != k && chs[i].signs[t] != chs[j].signs[t]) only_k = false;
                if (!only_k) continue;
                if (!face_nonempty(chs[i].signs, k)) continue;
                MultiPoly diff = S.pieces[i] - S.pieces[j];
                int order = diff.is_zero() ? cap : vanishing_order(diff, walls[k], cap + 1) - 1;
                min_order = std::min(min_order, order);
            }
        // Boundary facets: agreement with the zero function outside cone(X).
        bool pos = true, neg = true;
        for (const auto& ch : chs) {
            if (ch.signs[k] < 0) pos = false;
            if (ch.signs[k] > 0) neg = false;
        }
        if (!pos && !neg) continue;  // interior wall, both sides covered above
        for (size_t i = 0; i < chs.size(); ++i) {
            if (!face_nonempty(chs[i].signs, k)) continue;
            int order = S.pieces[i].is_zero() ? cap
                                              : vanishing_order(S.pieces[i], walls[k], cap + 1) - 1;
            min_order = std::min(min_order, order);
        }
    }
    return min_order;
}

}  // namespace infdex
