// Command-line front end. Talks to the engine exclusively through the C API
// of libinfdex; all structured data moves as JSON strings.
//
// Exit codes: 0 success, 1 verification failures, 2 malformed input,
// 3 violated mathematical precondition, 5 internal error.

#include <infdex/infdex.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

int fail(infdex_status st) {
    std::cerr << "error: " << infdex_last_error() << "\n";
    return static_cast<int>(st);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open file '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(outPath);
    if (!out) {
        std::cerr << "error: cannot write file '" << outPath << "'\n";
        std::exit(2);
    }
    out << text << "\n";
}

struct SplineHandle {
    infdex_spline* p = nullptr;
    ~SplineHandle() { infdex_spline_free(p); }
};

struct DistHandle {
    infdex_dist* p = nullptr;
    ~DistHandle() { infdex_dist_free(p); }
};

struct StrHandle {
    char* p = nullptr;
    ~StrHandle() { infdex_string_free(p); }
};

// Accepts either a raw weight-list file or an exported spline form.
infdex_status load_spline(const std::string& path, SplineHandle& h) {
    std::string text = read_file(path);
    auto j = json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.contains("chambers"))
        return infdex_spline_from_json(text.c_str(), &h.p);
    return infdex_spline_build(text.c_str(), &h.p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"infdex: exact spline distributions and infinitesimal-index oracles"};
    app.require_subcommand(1);

    std::string inFile, inFile2, outFile, pointStr, testfnFile, modelFile, mapFile,
        splittingFile, boxStr;
    uint64_t seed = 0, samples = 100000;
    unsigned steps = 0;
    double tol = 0.01, sval = 0.0;
    bool withIndexPrefactor = false;

    // spline ---------------------------------------------------------------
    auto* spline = app.add_subcommand("spline", "build / evaluate / transform splines");
    spline->require_subcommand(1);

    auto* sbuild = spline->add_subcommand("build", "build the spline of a weight list");
    sbuild->add_option("--in", inFile, "weight list JSON file")->required();
    sbuild->add_option("--out", outFile, "output file (default stdout)");

    auto* seval = spline->add_subcommand("eval", "evaluate the density at a point");
    seval->add_option("--in", inFile, "weight list or spline form JSON file")->required();
    seval->add_option("--point", pointStr, "comma-separated rational point")->required();
    seval->add_option("--out", outFile, "output file");

    auto* slap = spline->add_subcommand("laplace", "exact Laplace transform at z");
    slap->add_option("--in", inFile, "weight list or spline form JSON file")->required();
    slap->add_option("--point", pointStr, "dual-positive rational z")->required();
    slap->add_option("--out", outFile, "output file");

    auto* sgrid = spline->add_subcommand("grid", "CSV evaluation grid over a box");
    sgrid->add_option("--in", inFile, "weight list or spline form JSON file")->required();
    sgrid->add_option("--box", boxStr, "axis bounds \"x0,x1;y0,y1;...\"")->required();
    sgrid->add_option("--steps", steps, "grid steps per axis")->required();
    sgrid->add_option("--out", outFile, "output file");

    // index ----------------------------------------------------------------
    auto* index = app.add_subcommand("index", "infinitesimal indices of catalog models");
    index->require_subcommand(1);

    auto* icompute = index->add_subcommand("compute", "closed-form index of a model");
    icompute->add_option("--model", modelFile, "model descriptor JSON file")->required();
    icompute->add_option("--out", outFile, "output file");

    auto* ipair = index->add_subcommand("pair", "pair the index with a test function");
    ipair->add_option("--model", modelFile, "model descriptor JSON file")->required();
    ipair->add_option("--testfn", testfnFile, "test function JSON file")->required();
    ipair->add_option("--seed", seed, "quadrature seed (default 0)");
    ipair->add_option("--samples", samples, "Monte Carlo samples (default 100000)");
    ipair->add_option("--out", outFile, "output file");

    // dist -----------------------------------------------------------------
    auto* dist = app.add_subcommand("dist", "distribution calculus");
    dist->require_subcommand(1);

    auto* dtensor = dist->add_subcommand("tensor", "external product of two distributions");
    dtensor->add_option("--in", inFile, "first distribution JSON file")->required();
    dtensor->add_option("--in2", inFile2, "second distribution JSON file")->required();
    dtensor->add_option("--out", outFile, "output file");

    auto* dconv = dist->add_subcommand("convolve", "convolution of two distributions");
    dconv->add_option("--in", inFile, "first distribution JSON file")->required();
    dconv->add_option("--in2", inFile2, "second distribution JSON file")->required();
    dconv->add_option("--out", outFile, "output file");

    auto* dpush = dist->add_subcommand("push", "pushforward along a projection");
    dpush->add_option("--in", inFile, "distribution JSON file")->required();
    dpush->add_option("--map", mapFile, "projection matrix JSON file")->required();
    dpush->add_option("--out", outFile, "output file");

    auto* dinduce = dist->add_subcommand("induce", "induction along a surjection");
    dinduce->add_option("--in", inFile, "distribution JSON file")->required();
    dinduce->add_option("--map", mapFile, "projection matrix JSON file")->required();
    dinduce->add_option("--splitting", splittingFile, "right inverse JSON file")->required();
    dinduce->add_flag("--with-index-prefactor", withIndexPrefactor,
                      "apply the i^(dimG-dimL) induced-index factor");
    dinduce->add_option("--out", outFile, "output file");

    auto* dpair = dist->add_subcommand("pair", "pair a distribution with a test function");
    dpair->add_option("--in", inFile, "distribution JSON file")->required();
    dpair->add_option("--testfn", testfnFile, "test function JSON file")->required();
    dpair->add_option("--seed", seed, "quadrature seed (default 0)");
    dpair->add_option("--samples", samples, "Monte Carlo samples (default 100000)");
    dpair->add_option("--out", outFile, "output file");

    auto* deval = dist->add_subcommand("eval", "exact density value at a point");
    deval->add_option("--in", inFile, "distribution JSON file")->required();
    deval->add_option("--point", pointStr, "comma-separated rational point")->required();
    deval->add_option("--out", outFile, "output file");

    // oracle ----------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "finite-s defining-pairing oracles");
    auto* ofs = oracle->add_subcommand("finite-s", "finite-s pairing of a model");
    ofs->add_option("--model", modelFile, "model descriptor JSON file")->required();
    ofs->add_option("--testfn", testfnFile, "test function JSON file")->required();
    ofs->add_option("--s", sval, "pairing parameter s (default: past stabilization)");
    ofs->add_option("--seed", seed, "quadrature seed");
    ofs->add_option("--samples", samples, "Monte Carlo samples");
    ofs->add_option("--out", outFile, "output file");

    // verify ----------------------------------------------------------------
    auto* verifyCmd = app.add_subcommand("verify", "run verification suites");
    std::string suite;
    verifyCmd
        ->add_option("suite", suite,
                     "laplace|oracle|stabilize|cutoff|restriction|induction|invariants|all")
        ->required();
    verifyCmd->add_option("--seed", seed, "quadrature seed (default 0)");
    verifyCmd->add_option("--samples", samples, "Monte Carlo samples (default 100000)");
    verifyCmd->add_option("--tol", tol, "absolute noise-floor scale (default 0.01)");
    verifyCmd->add_option("--out", outFile, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    infdex_status st = INFDEX_OK;

    if (sbuild->parsed() || seval->parsed() || slap->parsed() || sgrid->parsed()) {
        SplineHandle h;
        st = load_spline(inFile, h);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        if (sbuild->parsed())
            st = infdex_spline_to_json(h.p, &out.p);
        else if (seval->parsed())
            st = infdex_spline_eval(h.p, pointStr.c_str(), &out.p);
        else if (slap->parsed())
            st = infdex_spline_laplace(h.p, pointStr.c_str(), &out.p);
        else
            st = infdex_spline_grid(h.p, boxStr.c_str(), steps, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (icompute->parsed()) {
        DistHandle d;
        st = infdex_model_index(read_file(modelFile).c_str(), &d.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_to_json(d.p, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (ipair->parsed()) {
        DistHandle d;
        st = infdex_model_index(read_file(modelFile).c_str(), &d.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_pair(d.p, read_file(testfnFile).c_str(), seed, samples, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (dtensor->parsed() || dconv->parsed()) {
        DistHandle a, b, c;
        st = infdex_dist_from_json(read_file(inFile).c_str(), &a.p);
        if (st != INFDEX_OK) return fail(st);
        st = infdex_dist_from_json(read_file(inFile2).c_str(), &b.p);
        if (st != INFDEX_OK) return fail(st);
        st = dtensor->parsed() ? infdex_dist_tensor(a.p, b.p, &c.p)
                               : infdex_dist_convolve(a.p, b.p, &c.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_to_json(c.p, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (dpush->parsed()) {
        DistHandle a, c;
        st = infdex_dist_from_json(read_file(inFile).c_str(), &a.p);
        if (st != INFDEX_OK) return fail(st);
        st = infdex_dist_pushforward(a.p, read_file(mapFile).c_str(), &c.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_to_json(c.p, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (dinduce->parsed()) {
        DistHandle a, c;
        st = infdex_dist_from_json(read_file(inFile).c_str(), &a.p);
        if (st != INFDEX_OK) return fail(st);
        st = infdex_dist_induce(a.p, read_file(mapFile).c_str(),
                                read_file(splittingFile).c_str(), withIndexPrefactor ? 1 : 0,
                                &c.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_to_json(c.p, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (dpair->parsed()) {
        DistHandle a;
        st = infdex_dist_from_json(read_file(inFile).c_str(), &a.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_pair(a.p, read_file(testfnFile).c_str(), seed, samples, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (deval->parsed()) {
        DistHandle a;
        st = infdex_dist_from_json(read_file(inFile).c_str(), &a.p);
        if (st != INFDEX_OK) return fail(st);
        StrHandle out;
        st = infdex_dist_eval_density(a.p, pointStr.c_str(), &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (ofs->parsed()) {
        StrHandle out;
        st = infdex_model_finite_s(read_file(modelFile).c_str(), read_file(testfnFile).c_str(),
                                   sval, "", "", seed, samples, &out.p);
        if (st != INFDEX_OK) return fail(st);
        emit(out.p, outFile);
        return 0;
    }

    if (verifyCmd->parsed()) {
        StrHandle out;
        st = infdex_verify(suite.c_str(), seed, samples, tol, &out.p);
        if (out.p) {
            auto report = json::parse(out.p);
            for (const auto& s : report["suites"])
                for (const auto& c : s["checks"])
                    std::cout << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
                              << c["name"].get<std::string>()
                              << (c["detail"].get<std::string>().empty()
                                      ? ""
                                      : " -- " + c["detail"].get<std::string>())
                              << "\n";
            std::cout << (report["pass"].get<bool>() ? "all checks passed"
                                                     : "some checks FAILED")
                      << "\n";
            if (!outFile.empty()) emit(out.p, outFile);
        }
        if (st != INFDEX_OK && st != INFDEX_ERR_CHECK_FAILED) return fail(st);
        return static_cast<int>(st);
    }

    std::cerr << app.help() << "\n";
    return 2;
}
