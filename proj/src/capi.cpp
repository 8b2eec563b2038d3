#include "reldiam/reldiam.h"

#include "reldiam/bounds.hpp"
#include "reldiam/constructions.hpp"
#include "reldiam/json_io.hpp"
#include "reldiam/optimizer.hpp"
#include "reldiam/repro.hpp"
#include "reldiam/svg.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace reldiam;
using nlohmann::json;

struct rd_body {
    ConvexBody value;
};
struct rd_partition {
    KPartition value;
};
struct rd_subdivision {
    KSubdivision value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs fn, translating exceptions to error codes. GeometryError marks
/// invalid input; anything else is an internal failure.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return RD_OK;
    } catch (const GeometryError& e) {
        g_last_error = e.what();
        return RD_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RD_EFAIL;
    } catch (...) {
        g_last_error = "unknown error";
        return RD_EFAIL;
    }
}

int require(bool cond, const char* msg) {
    if (!cond) {
        g_last_error = msg;
        return RD_EINVAL;
    }
    return RD_OK;
}

std::string errors_json_of(const ValidationReport& report) {
    json arr = json::array();
    for (const auto& e : report.errors) arr.push_back(e);
    return arr.dump();
}

}  // namespace

extern "C" {

const char* rd_last_error(void) { return g_last_error.c_str(); }

void rd_string_free(char* s) { std::free(s); }

void rd_set_epsilon(double eps) {
    Tolerance t = tolerance();
    t.eps_geom = eps;
    t.eps_area = eps;
    set_tolerance(t);
}

/* ---- bodies ---------------------------------------------------------- */

int rd_body_from_json(const char* json_text, rd_body** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] { *out = new rd_body{body_from_json(json_text)}; });
}

int rd_body_to_json(const rd_body* body, char** out) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(body_to_json(body->value)); });
}

void rd_body_free(rd_body* body) { delete body; }

int rd_body_make(const char* kind, int k, double param, rd_body** out) {
    if (int rc = require(kind && out, "null argument")) return rc;
    return guarded([&] {
        const std::string name = kind;
        ConvexBody b;
        if (name == "disc")
            b = make_disc(param > 0 ? param : 1.0);
        else if (name == "kgon")
            b = make_regular_kgon(k, param > 0 ? param : 1.0);
        else if (name == "reuleaux")
            b = make_reuleaux(k, param > 0 ? param : 1.0);
        else if (name == "optimal")
            b = optimal_body(k);
        else
            throw GeometryError("unknown body kind: " + name);
        *out = new rd_body{std::move(b)};
    });
}

int rd_body_metrics(const rd_body* body, char** out) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded([&] {
        const BodyMetrics m = metrics(body->value);
        const json doc = {{"area", m.area},
                          {"perimeter", m.perimeter},
                          {"inradius", m.inradius},
                          {"circumradius", m.circumradius},
                          {"diameter", m.diameter},
                          {"width", m.width}};
        *out = dup_string(doc.dump());
    });
}

int rd_body_check_symmetry(const rd_body* body, int k, int* holds) {
    if (int rc = require(body && holds, "null argument")) return rc;
    return guarded([&] { *holds = verify_symmetry(body->value, k, 1e-7) ? 1 : 0; });
}

/* ---- partitions and subdivisions ------------------------------------- */

int rd_partition_from_json(const char* json_text, rd_partition** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] { *out = new rd_partition{partition_from_json(json_text)}; });
}

int rd_partition_to_json(const rd_partition* p, char** out) {
    if (int rc = require(p && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(partition_to_json(p->value)); });
}

void rd_partition_free(rd_partition* p) { delete p; }

int rd_subdivision_from_json(const char* json_text, rd_subdivision** out) {
    if (int rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] { *out = new rd_subdivision{subdivision_from_json(json_text)}; });
}

int rd_subdivision_to_json(const rd_subdivision* s, char** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&] { *out = dup_string(subdivision_to_json(s->value)); });
}

void rd_subdivision_free(rd_subdivision* s) { delete s; }

int rd_standard_partition(const rd_body* body, int k, rd_partition** out) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded([&] { *out = new rd_partition{standard_partition(body->value, k)}; });
}

int rd_partition_to_subdivision(const rd_partition* p, rd_subdivision** out) {
    if (int rc = require(p && out, "null argument")) return rc;
    return guarded([&] { *out = new rd_subdivision{regions_of_partition(p->value)}; });
}

int rd_partition_validate(const rd_partition* p, int* ok, char** errors_json) {
    if (int rc = require(p && ok, "null argument")) return rc;
    return guarded([&] {
        const ValidationReport report = validate_partition(p->value);
        *ok = report.ok ? 1 : 0;
        if (errors_json) *errors_json = dup_string(errors_json_of(report));
    });
}

int rd_subdivision_validate(const rd_subdivision* s, int* ok, char** errors_json) {
    if (int rc = require(s && ok, "null argument")) return rc;
    return guarded([&] {
        const ValidationReport report = validate_subdivision(s->value);
        *ok = report.ok ? 1 : 0;
        if (errors_json) *errors_json = dup_string(errors_json_of(report));
    });
}

int rd_partition_eval(const rd_partition* p, char** witness_json) {
    if (int rc = require(p && witness_json, "null argument")) return rc;
    return guarded([&] {
        *witness_json = dup_string(witness_to_json(max_relative_diameter(p->value)));
    });
}

int rd_subdivision_eval(const rd_subdivision* s, char** witness_json) {
    if (int rc = require(s && witness_json, "null argument")) return rc;
    return guarded([&] {
        *witness_json = dup_string(witness_to_json(max_relative_diameter(s->value)));
    });
}

/* ---- constructions --------------------------------------------------- */

int rd_heptagon_counterexample(double rho, rd_subdivision** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new rd_subdivision{heptagon_counterexample(rho)}; });
}

int rd_heptagon_search(char** report_json, rd_subdivision** out) {
    if (int rc = require(report_json != nullptr, "null argument")) return rc;
    return guarded([&] {
        HeptagonSearchResult res = search_heptagon();
        json trace = json::array();
        for (const auto& [rho, d] : res.trace) trace.push_back({rho, d});
        const json doc = {{"rho", res.rho}, {"d_M", res.d_M}, {"trace", trace}};
        *report_json = dup_string(doc.dump());
        if (out) *out = new rd_subdivision{std::move(res.subdivision)};
    });
}

int rd_circle8_counterexample(rd_subdivision** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new rd_subdivision{circle8_counterexample()}; });
}

int rd_perturb_partition(const rd_partition* p, double magnitude, uint64_t seed,
                         rd_partition** out) {
    if (int rc = require(p && out, "null argument")) return rc;
    return guarded(
        [&] { *out = new rd_partition{perturb_partition(p->value, magnitude, seed)}; });
}

int rd_hex_subdivision(const rd_body* body, int k, rd_subdivision** out,
                       char** info_json) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded([&] {
        HexSubdivisionResult res = hex_subdivision(body->value, k);
        if (info_json) {
            const json doc = {{"d_k", res.d_k}, {"lattice_cells", res.lattice_cells}};
            *info_json = dup_string(doc.dump());
        }
        *out = new rd_subdivision{std::move(res.subdivision)};
    });
}

int rd_random_partition(const rd_body* body, int k, uint64_t seed,
                        rd_partition** out) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded(
        [&] { *out = new rd_partition{random_partition(body->value, k, seed)}; });
}

int rd_random_subdivision(const rd_body* body, int k, uint64_t seed,
                          rd_subdivision** out) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded(
        [&] { *out = new rd_subdivision{random_subdivision(body->value, k, seed)}; });
}

/* ---- bounds ---------------------------------------------------------- */

int rd_bounds_report(const rd_body* body, int k, const char* format, char** out) {
    if (int rc = require(body && out, "null argument")) return rc;
    return guarded([&] {
        const BoundReport report = bound_report(body->value, k);
        const std::string fmt = format ? format : "json";
        if (fmt == "json")
            *out = dup_string(bound_report_to_json(report));
        else if (fmt == "markdown")
            *out = dup_string(bound_report_to_markdown(report));
        else
            throw GeometryError("unknown format: " + fmt);
    });
}

int rd_lp_packing(int k, char** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] {
        const LpSolution sol = lp_packing_constant(k);
        json argmax;
        for (const auto& [name, v] : sol.argmax) argmax[name] = v;
        const json doc = {{"value", sol.value}, {"argmax", argmax}};
        *out = dup_string(doc.dump());
    });
}

/* ---- search ---------------------------------------------------------- */

int rd_search(const rd_body* body, int k, const char* mode,
              const char* config_json, char** report_json, rd_subdivision** best) {
    if (int rc = require(body && mode && report_json, "null argument")) return rc;
    return guarded([&] {
        SearchConfig cfg;
        if (config_json && *config_json) {
            const json j = json::parse(config_json);
            cfg.seed = j.value("seed", cfg.seed);
            cfg.iterations = j.value("iterations", cfg.iterations);
            cfg.move_scale = j.value("move_scale", cfg.move_scale);
            cfg.restarts = j.value("restarts", cfg.restarts);
            cfg.anneal = j.value("anneal", cfg.anneal);
            cfg.t0 = j.value("t0", cfg.t0);
            cfg.cooling = j.value("cooling", cfg.cooling);
        }
        const std::string m = mode;
        SearchResult res;
        if (m == "partition")
            res = optimize_partition(body->value, k, cfg);
        else if (m == "subdivision")
            res = optimize_subdivision(body->value, k, cfg);
        else
            throw GeometryError("unknown search mode: " + m);
        *report_json = dup_string(search_result_to_json(res));
        if (best) *best = new rd_subdivision{std::move(res.best)};
    });
}

/* ---- rendering ------------------------------------------------------- */

int rd_render_body(const rd_body* body, char** svg) {
    if (int rc = require(body && svg, "null argument")) return rc;
    return guarded([&] { *svg = dup_string(svg_body(body->value)); });
}

int rd_render_partition(const rd_partition* p, char** svg) {
    if (int rc = require(p && svg, "null argument")) return rc;
    return guarded([&] { *svg = dup_string(svg_partition(p->value)); });
}

int rd_render_subdivision(const rd_subdivision* s, char** svg) {
    if (int rc = require(s && svg, "null argument")) return rc;
    return guarded([&] { *svg = dup_string(svg_subdivision(s->value)); });
}

/* ---- reproduction experiments ---------------------------------------- */

int rd_repro_names(char** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] {
        std::string names;
        for (const auto& n : repro_names()) {
            if (!names.empty()) names += ",";
            names += n;
        }
        *out = dup_string(names);
    });
}

int rd_repro_run(const char* name, const char* outdir, int* pass) {
    if (int rc = require(name && pass, "null argument")) return rc;
    return guarded(
        [&] { *pass = run_repro(name, outdir ? outdir : ".") ? 1 : 0; });
}

}  // extern "C"
