#include "jsonio.hpp"

#include <fstream>
#include <sstream>

namespace infdex {

Json rat_to_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return Json(static_cast<long>(r.get_num().get_si()));
    return Json(rat_str(r));
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw input_error("expected a rational (integer or \"p/q\" string)");
}

Json qvec_to_json(const QVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rat_to_json(x));
    return arr;
}

QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("expected an array of rationals");
    QVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json poly_to_json(const MultiPoly& p) {
    Json obj = Json::object();
    for (const auto& [e, c] : p.coef) {
        std::ostringstream key;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) key << ',';
            key << e[i];
        }
        obj[key.str()] = rat_to_json(c);
    }
    return obj;
}

MultiPoly poly_from_json(const Json& j, int nvars) {
    MultiPoly p(nvars);
    if (j.is_null()) return MultiPoly::constant(nvars, Rat(1));
    if (j.is_number_integer() || j.is_string()) {
        // constant shorthand: "1" or 1 or "3/2"
        return MultiPoly::constant(nvars, rat_from_json(j));
    }
    if (!j.is_object()) throw input_error("malformed polynomial");
    for (const auto& [key, val] : j.items()) {
        std::vector<int> e;
        std::stringstream ss(key);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                e.push_back(std::stoi(tok));
            } catch (...) {
                throw input_error("malformed polynomial exponent '" + key + "'");
            }
        }
        if (static_cast<int>(e.size()) != nvars)
            throw input_error("polynomial exponent '" + key + "' has wrong arity");
        for (int x : e)
            if (x < 0) throw input_error("negative exponent in polynomial");
        p.add_term(e, rat_from_json(val));
    }
    return p;
}

Json weights_to_json(const WeightList& X) {
    Json j;
    j["dim"] = X.dim;
    Json arr = Json::array();
    for (const auto& w : X.weights) arr.push_back(qvec_to_json(w));
    j["weights"] = arr;
    return j;
}

WeightList weights_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("weights"))
        throw input_error("weight list needs {dim, weights}");
    WeightList X;
    X.dim = j["dim"].get<int>();
    if (X.dim <= 0) throw input_error("dimension must be positive");
    for (const auto& w : j["weights"]) {
        QVec v = qvec_from_json(w);
        if (static_cast<int>(v.size()) != X.dim)
            throw input_error("weight dimension mismatch");
        X.weights.push_back(std::move(v));
    }
    if (X.weights.empty()) throw input_error("weight list is empty");
    return X;
}

Json spline_to_json(const SplineForm& S) {
    Json j;
    j["dim"] = S.X.dim;
    Json ws = Json::array();
    for (const auto& w : S.X.weights) ws.push_back(qvec_to_json(w));
    j["weights"] = ws;
    Json chambers = Json::array();
    for (size_t i = 0; i < S.cc.chambers.size(); ++i) {
        const auto& ch = S.cc.chambers[i];
        Json cj;
        Json gens = Json::array();
        for (const auto& ray : ch.rays) gens.push_back(qvec_to_json(S.car.to_ambient(ray)));
        cj["generators"] = gens;
        cj["signVector"] = ch.signs;
        cj["poly"] = poly_to_json(S.pieces[i]);
        chambers.push_back(std::move(cj));
    }
    j["chambers"] = chambers;
    return j;
}

SplineForm spline_from_json(const Json& j) {
    WeightList X = weights_from_json(j);
    SplineForm S = build_spline(X);
    if (!j.contains("chambers")) return S;
    const Json& chambers = j["chambers"];
    if (chambers.size() != S.cc.chambers.size())
        throw input_error("spline file chamber count does not match its weights");
    // Accept the stored pieces keyed by sign vector; they must match the
    // recomputed complex exactly.
    for (const auto& cj : chambers) {
        if (!cj.contains("signVector") || !cj.contains("poly"))
            throw input_error("spline chamber needs {signVector, poly}");
        std::vector<int> signs = cj["signVector"].get<std::vector<int>>();
        bool matched = false;
        for (size_t i = 0; i < S.cc.chambers.size(); ++i) {
            if (S.cc.chambers[i].signs != signs) continue;
            MultiPoly p = poly_from_json(cj["poly"], S.car.rank);
            if (!(p == S.pieces[i]))
                throw input_error("spline file piece disagrees with its weight list");
            matched = true;
            break;
        }
        if (!matched) throw input_error("spline file sign vector matches no chamber");
    }
    return S;
}

Json matrix_to_json(const QMat& m) {
    Json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(rat_to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = entries;
    return j;
}

QMat matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries")) throw input_error("matrix needs {entries}");
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.empty()) throw input_error("matrix entries empty");
    int rows = static_cast<int>(entries.size());
    int cols = static_cast<int>(entries[0].size());
    QMat m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols)
            throw input_error("ragged matrix entries");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(entries[r][c]);
    }
    if (j.contains("rows") && j["rows"].get<int>() != rows)
        throw input_error("matrix row count mismatch");
    if (j.contains("cols") && j["cols"].get<int>() != cols)
        throw input_error("matrix column count mismatch");
    return m;
}

Json prefactor_to_json(const Prefactor& p) {
    Json j;
    j["r"] = rat_to_json(p.r);
    j["twoPiPow"] = p.twoPiPow;
    j["iPow"] = p.iPow;
    return j;
}

Prefactor prefactor_from_json(const Json& j) {
    Prefactor p;
    if (j.contains("r")) p.r = rat_from_json(j["r"]);
    if (j.contains("twoPiPow")) p.twoPiPow = j["twoPiPow"].get<int>();
    if (j.contains("iPow")) p.iPow = j["iPow"].get<int>();
    p.normalize();
    return p;
}

Json distribution_to_json(const Distribution& d) {
    Json j;
    j["dim"] = d.dim;
    j["prefactor"] = prefactor_to_json(d.pf);
    if (d.splineTag) j["splineTag"] = weights_to_json(*d.splineTag);
    Json terms = Json::array();
    for (const auto& ct : d.cones) {
        Json t;
        t["type"] = "cone";
        Json gens = Json::array();
        for (int c = 0; c < ct.B.cols; ++c) gens.push_back(qvec_to_json(ct.B.column(c)));
        t["generators"] = gens;
        t["poly"] = poly_to_json(ct.q);
        terms.push_back(std::move(t));
    }
    for (const auto& pt : d.points) {
        Json t;
        t["type"] = "point";
        Json coeffs = Json::object();
        for (const auto& [e, c] : pt.c) {
            std::ostringstream key;
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) key << ',';
                key << e[i];
            }
            coeffs[key.str()] = rat_to_json(c);
        }
        t["coeffs"] = coeffs;
        terms.push_back(std::move(t));
    }
    j["terms"] = terms;
    return j;
}

Distribution distribution_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw input_error("distribution needs {dim}");
    Distribution d;
    d.dim = j["dim"].get<int>();
    if (d.dim <= 0) throw input_error("dimension must be positive");
    if (j.contains("prefactor")) d.pf = prefactor_from_json(j["prefactor"]);
    if (j.contains("splineTag")) d.splineTag = weights_from_json(j["splineTag"]);
    if (j.contains("terms")) {
        for (const auto& t : j["terms"]) {
            std::string type = t.value("type", "");
            if (type == "cone") {
                std::vector<QVec> cols;
                for (const auto& g : t["generators"]) {
                    QVec v = qvec_from_json(g);
                    if (static_cast<int>(v.size()) != d.dim)
                        throw input_error("cone generator dimension mismatch");
                    cols.push_back(std::move(v));
                }
                QMat B = QMat::from_columns(cols);
                if (rank(B) < B.cols)
                    throw input_error("cone generators must be linearly independent");
                d.cones.push_back({std::move(B), poly_from_json(t["poly"], d.dim)});
            } else if (type == "point") {
                PointTerm pt;
                for (const auto& [key, val] : t["coeffs"].items()) {
                    std::vector<int> e;
                    std::stringstream ss(key);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
                    if (static_cast<int>(e.size()) != d.dim)
                        throw input_error("point term multi-index arity mismatch");
                    pt.c[e] = rat_from_json(val);
                }
                d.points.push_back(std::move(pt));
            } else {
                throw input_error("unknown distribution term type '" + type + "'");
            }
        }
    }
    return d;
}

Json testfn_to_json(const TestFunction& f) {
    Json inner;
    inner["center"] = qvec_to_json(f.center);
    inner["poly"] = poly_to_json(f.poly);
    Json j;
    if (f.kind == TestFunction::Kind::PolyGaussian) {
        inner["sigma"] = rat_to_json(f.sigma);
        j["gaussian"] = inner;
    } else {
        inner["R"] = rat_to_json(f.radius);
        j["bump"] = inner;
    }
    j["dim"] = f.dim;
    return j;
}

TestFunction testfn_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("malformed test function");
    bool gauss = j.contains("gaussian");
    bool bump = j.contains("bump");
    if (gauss == bump) throw input_error("test function needs exactly one of {gaussian, bump}");
    const Json& inner = gauss ? j["gaussian"] : j["bump"];
    QVec center;
    if (inner.contains("center")) center = qvec_from_json(inner["center"]);
    int dim = j.contains("dim") ? j["dim"].get<int>()
                                : static_cast<int>(center.size());
    if (dim <= 0) throw input_error("test function needs a positive dimension");
    if (center.empty()) center = qvec_zero(dim);
    MultiPoly poly = inner.contains("poly") ? poly_from_json(inner["poly"], dim)
                                            : MultiPoly::constant(dim, Rat(1));
    if (gauss) {
        if (!inner.contains("sigma")) throw input_error("gaussian needs sigma");
        Rat sigma = rat_from_json(inner["sigma"]);
        if (sigma <= 0) throw precondition_error("Gaussian width must be positive");
        return TestFunction::gaussian(dim, sigma, center, poly);
    }
    if (!inner.contains("R")) throw input_error("bump needs R");
    Rat R = rat_from_json(inner["R"]);
    if (R <= 0) throw precondition_error("bump radius must be positive");
    return TestFunction::bump(dim, R, center, poly);
}

Json model_to_json(const ModelDescriptor& m) {
    using Kind = ModelDescriptor::Kind;
    Json j;
    switch (m.kind) {
        case Kind::Point:
            j["model"] = "point";
            j["dim"] = m.n;
            if (!m.alpha.coef.empty()) j["poly"] = poly_to_json(m.alpha);
            break;
        case Kind::CircleCotangent: j["model"] = "circle_cotangent"; break;
        case Kind::PlaneRotation: j["model"] = "plane_rotation"; break;
        case Kind::LinearTorus:
            j["model"] = "linear_torus";
            j["dim"] = m.X.dim;
            {
                Json ws = Json::array();
                for (const auto& w : m.X.weights) ws.push_back(qvec_to_json(w));
                j["weights"] = ws;
            }
            break;
        case Kind::CotangentTorus:
            j["model"] = "cotangent_torus";
            j["n"] = m.n;
            break;
        case Kind::Product:
            j["model"] = "product";
            j["a"] = model_to_json(*m.a);
            j["b"] = model_to_json(*m.b);
            break;
        case Kind::Diagonal:
            j["model"] = "diagonal";
            j["a"] = model_to_json(*m.a);
            j["b"] = model_to_json(*m.b);
            break;
    }
    return j;
}

ModelDescriptor model_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("model")) throw input_error("model needs {model}");
    std::string kind = j["model"].get<std::string>();
    if (kind == "point") {
        int n = j.value("dim", 1);
        if (n <= 0) throw input_error("point model needs positive dim");
        if (j.contains("poly")) return model_point_poly(n, poly_from_json(j["poly"], n));
        return model_point(n);
    }
    if (kind == "circle_cotangent") return model_circle();
    if (kind == "plane_rotation") return model_plane_rotation();
    if (kind == "linear_torus") {
        WeightList X = weights_from_json(j);
        return model_linear_torus(X);
    }
    if (kind == "cotangent_torus") {
        int n = j.value("n", j.value("dim", 1));
        if (n <= 0) throw input_error("cotangent torus needs positive n");
        return model_cotangent_torus(n);
    }
    if (kind == "product")
        return model_product(model_from_json(j.at("a")), model_from_json(j.at("b")));
    if (kind == "diagonal")
        return model_diagonal(model_from_json(j.at("a")), model_from_json(j.at("b")));
    throw input_error("unknown model '" + kind + "'");
}

QVec point_from_string(const std::string& s) {
    QVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim spaces
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw input_error("empty coordinate in point");
        v.push_back(rat_parse(tok.substr(b, e - b + 1)));
    }
    if (v.empty()) throw input_error("empty point");
    return v;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace infdex
