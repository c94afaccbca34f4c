// extern "C" implementation of the shared-library surface. Exceptions from
// the core map to status codes; messages land in a thread-local buffer.

#include "infdex/infdex.h"

#include "jsonio.hpp"
#include "verify.hpp"

#include <cstring>
#include <string>

using namespace infdex;

struct infdex_spline {
    SplineForm form;
};

struct infdex_dist {
    Distribution dist;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
infdex_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const input_error& e) {
        t_last_error = e.what();
        return INFDEX_ERR_INVALID_INPUT;
    } catch (const precondition_error& e) {
        t_last_error = e.what();
        return INFDEX_ERR_PRECONDITION;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return INFDEX_ERR_INTERNAL;
    }
}

Json complex_result(std::complex<double> v, double err) {
    Json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    j["err"] = err;
    return j;
}

}  // namespace

extern "C" {

const char* infdex_version(void) { return "1.0.0"; }

const char* infdex_last_error(void) { return t_last_error.c_str(); }

void infdex_string_free(char* s) { std::free(s); }

infdex_status infdex_spline_build(const char* weights_json, infdex_spline** out) {
    return guarded([&]() -> infdex_status {
        if (!weights_json || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        WeightList X = weights_from_json(parse_json(weights_json));
        auto* handle = new infdex_spline{build_spline(X)};
        *out = handle;
        return INFDEX_OK;
    });
}

infdex_status infdex_spline_from_json(const char* splineform_json, infdex_spline** out) {
    return guarded([&]() -> infdex_status {
        if (!splineform_json || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        auto* handle = new infdex_spline{spline_from_json(parse_json(splineform_json))};
        *out = handle;
        return INFDEX_OK;
    });
}

infdex_status infdex_spline_to_json(const infdex_spline* s, char** json_out) {
    return guarded([&]() -> infdex_status {
        if (!s || !json_out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        *json_out = dup_string(spline_to_json(s->form).dump(2));
        return INFDEX_OK;
    });
}

infdex_status infdex_spline_eval(const infdex_spline* s, const char* point,
                                 char** result_json) {
    return guarded([&]() -> infdex_status {
        if (!s || !point || !result_json) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        QVec xi = point_from_string(point);
        Rat v = eval_spline_form(s->form, xi);
        Json j;
        j["point"] = qvec_to_json(xi);
        j["value"] = rat_to_json(v);
        *result_json = dup_string(j.dump());
        return INFDEX_OK;
    });
}

infdex_status infdex_spline_laplace(const infdex_spline* s, const char* z,
                                    char** result_json) {
    return guarded([&]() -> infdex_status {
        if (!s || !z || !result_json) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        QVec zq = point_from_string(z);
        Rat got = laplace_transform(s->form, zq);
        Rat want = laplace_closed_form(s->form.X, zq);
        Json j;
        j["z"] = qvec_to_json(zq);
        j["value"] = rat_to_json(got);
        j["closedForm"] = rat_to_json(want);
        j["equal"] = (got == want);
        *result_json = dup_string(j.dump());
        return INFDEX_OK;
    });
}

infdex_status infdex_spline_grid(const infdex_spline* s, const char* box, uint32_t steps,
                                 char** csv_out) {
    return guarded([&]() -> infdex_status {
        if (!s || !box || !csv_out || steps == 0) {
            t_last_error = "null or empty argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        // box: "x0,x1;y0,y1;..."
        std::vector<std::pair<Rat, Rat>> bounds;
        {
            std::string sbox(box);
            size_t pos = 0;
            while (pos <= sbox.size()) {
                size_t next = sbox.find(';', pos);
                std::string part =
                    next == std::string::npos ? sbox.substr(pos) : sbox.substr(pos, next - pos);
                QVec pr = point_from_string(part);
                if (pr.size() != 2) throw input_error("box axis needs exactly two bounds");
                bounds.push_back({pr[0], pr[1]});
                if (next == std::string::npos) break;
                pos = next + 1;
            }
        }
        if (static_cast<int>(bounds.size()) != s->form.X.dim)
            throw input_error("box dimension does not match the spline");
        const int dim = s->form.X.dim;
        std::string csv;
        for (int i = 0; i < dim; ++i) csv += "x" + std::to_string(i) + ",";
        csv += "value\n";
        std::vector<uint32_t> idx(dim, 0);
        bool done = false;
        while (!done) {
            QVec pt(dim);
            for (int i = 0; i < dim; ++i) {
                Rat t = steps == 1 ? Rat(0) : Rat(static_cast<long>(idx[i])) / Rat(static_cast<long>(steps - 1));
                pt[i] = bounds[i].first + (bounds[i].second - bounds[i].first) * t;
            }
            for (int i = 0; i < dim; ++i) csv += rat_str(pt[i]) + ",";
            try {
                csv += rat_str(eval_spline_form(s->form, pt));
            } catch (const precondition_error&) {
                // on-wall points become empty cells so plotting tools show gaps
            }
            csv += "\n";
            int carry = dim - 1;
            while (carry >= 0) {
                if (++idx[carry] < steps) break;
                idx[carry] = 0;
                --carry;
            }
            if (carry < 0) done = true;
        }
        *csv_out = dup_string(csv);
        return INFDEX_OK;
    });
}

void infdex_spline_free(infdex_spline* s) { delete s; }

infdex_status infdex_dist_from_json(const char* json, infdex_dist** out) {
    return guarded([&]() -> infdex_status {
        if (!json || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        *out = new infdex_dist{distribution_from_json(parse_json(json))};
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_to_json(const infdex_dist* d, char** json_out) {
    return guarded([&]() -> infdex_status {
        if (!d || !json_out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        *json_out = dup_string(distribution_to_json(d->dist).dump(2));
        return INFDEX_OK;
    });
}

infdex_status infdex_model_index(const char* model_json, infdex_dist** out) {
    return guarded([&]() -> infdex_status {
        if (!model_json || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        ModelDescriptor m = model_from_json(parse_json(model_json));
        *out = new infdex_dist{expected_infdex(m)};
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_tensor(const infdex_dist* a, const infdex_dist* b,
                                 infdex_dist** out) {
    return guarded([&]() -> infdex_status {
        if (!a || !b || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        *out = new infdex_dist{tensor(a->dist, b->dist)};
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_convolve(const infdex_dist* a, const infdex_dist* b,
                                   infdex_dist** out) {
    return guarded([&]() -> infdex_status {
        if (!a || !b || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        *out = new infdex_dist{convolve(a->dist, b->dist)};
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_pushforward(const infdex_dist* d, const char* map_json,
                                      infdex_dist** out) {
    return guarded([&]() -> infdex_status {
        if (!d || !map_json || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        QMat p = matrix_from_json(parse_json(map_json));
        *out = new infdex_dist{pushforward(d->dist, p)};
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_induce(const infdex_dist* d, const char* map_json,
                                 const char* splitting_json, int apply_index_prefactor,
                                 infdex_dist** out) {
    return guarded([&]() -> infdex_status {
        if (!d || !map_json || !splitting_json || !out) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        QMat p = matrix_from_json(parse_json(map_json));
        QMat s = matrix_from_json(parse_json(splitting_json));
        *out = new infdex_dist{induce(d->dist, p, s, apply_index_prefactor != 0)};
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_pair(const infdex_dist* d, const char* testfn_json, uint64_t seed,
                               uint64_t samples, char** result_json) {
    return guarded([&]() -> infdex_status {
        if (!d || !testfn_json || !result_json) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        TestFunction f = testfn_from_json(parse_json(testfn_json));
        QuadratureConfig cfg{samples ? samples : 100000, seed, 0};
        ComplexEstimate e = pair_distribution(d->dist, f, cfg);
        Json j = complex_result(e.value, e.err);
        j["prefactor"] = prefactor_to_json(d->dist.pf);
        *result_json = dup_string(j.dump());
        return INFDEX_OK;
    });
}

infdex_status infdex_dist_eval_density(const infdex_dist* d, const char* point,
                                       char** result_json) {
    return guarded([&]() -> infdex_status {
        if (!d || !point || !result_json) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        QVec xi = point_from_string(point);
        DensityValue v = eval_density(d->dist, xi);
        Json j;
        j["coeff"] = rat_to_json(v.coeff);
        j["prefactor"] = prefactor_to_json(v.pf);
        auto z = v.value();
        j["re"] = z.real();
        j["im"] = z.imag();
        *result_json = dup_string(j.dump());
        return INFDEX_OK;
    });
}

void infdex_dist_free(infdex_dist* d) { delete d; }

infdex_status infdex_model_finite_s(const char* model_json, const char* testfn_json, double s,
                                    const char* cutoff_json, const char* poly_json,
                                    uint64_t seed, uint64_t samples, char** result_json) {
    return guarded([&]() -> infdex_status {
        if (!model_json || !testfn_json || !result_json) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        ModelDescriptor m = model_from_json(parse_json(model_json));
        TestFunction f = testfn_from_json(parse_json(testfn_json));
        CutoffSpec cut;
        if (cutoff_json && *cutoff_json) {
            Json cj = parse_json(cutoff_json);
            cut.R0 = cj.value("R0", 1.0);
            if (cut.R0 <= 0) throw precondition_error("cutoff radius must be positive");
        }
        std::optional<MultiPoly> P;
        if (poly_json && *poly_json)
            P = poly_from_json(parse_json(poly_json), m.ambient_dim());
        if (s <= 0) s = 2.0 * stabilization_s0(m, f, cut) + 1.0;
        QuadratureConfig cfg{samples ? samples : 100000, seed, 0};
        ComplexEstimate e = finite_s_pairing(m, f, s, cut, P ? &*P : nullptr, cfg);
        Json j = complex_result(e.value, e.err);
        j["s"] = s;
        *result_json = dup_string(j.dump());
        return INFDEX_OK;
    });
}

infdex_status infdex_verify(const char* suite, uint64_t seed, uint64_t samples, double tol,
                            char** report_json) {
    return guarded([&]() -> infdex_status {
        if (!suite || !report_json) {
            t_last_error = "null argument";
            return INFDEX_ERR_INVALID_INPUT;
        }
        verify::Options opt;
        opt.seed = seed;
        opt.samples = samples ? samples : 100000;
        opt.tol = tol > 0 ? tol : 0.01;
        auto suites = verify::run_named(suite, opt);
        Json j;
        j["suite"] = suite;
        j["seed"] = seed;
        j["samples"] = opt.samples;
        j["tol"] = opt.tol;
        bool all = true;
        Json arr = Json::array();
        for (const auto& s : suites) {
            Json sj;
            sj["name"] = s.name;
            sj["seconds"] = s.seconds;
            Json checks = Json::array();
            for (const auto& c : s.checks) {
                Json cj;
                cj["name"] = c.name;
                cj["pass"] = c.pass;
                cj["detail"] = c.detail;
                checks.push_back(std::move(cj));
                if (!c.pass) all = false;
            }
            sj["checks"] = checks;
            sj["pass"] = s.passed();
            arr.push_back(std::move(sj));
        }
        j["suites"] = arr;
        j["pass"] = all;
        *report_json = dup_string(j.dump(2));
        if (!all) {
            t_last_error = "verification checks failed";
            return INFDEX_ERR_CHECK_FAILED;
        }
        return INFDEX_OK;
    });
}

}  // extern "C"
