// reldiam command-line front end. Talks to the library exclusively
// through the C API in reldiam/reldiam.h.

#include "reldiam/reldiam.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
    throw CliError{code, message};
}

/// Maps a C-API return code to an exit code, with the thread-local message.
void check(int rc) {
    if (rc == RD_OK) return;
    fail(rc == RD_EINVAL ? kExitValidation : kExitComputation, rd_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    rd_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(kExitValidation, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) fail(kExitValidation, "cannot write " + out_path);
    f << text;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

using BodyPtr = std::unique_ptr<rd_body, decltype(&rd_body_free)>;
using PartitionPtr = std::unique_ptr<rd_partition, decltype(&rd_partition_free)>;
using SubdivisionPtr = std::unique_ptr<rd_subdivision, decltype(&rd_subdivision_free)>;

BodyPtr load_body(const std::string& path) {
    rd_body* b = nullptr;
    check(rd_body_from_json(read_file(path).c_str(), &b));
    return {b, rd_body_free};
}

PartitionPtr load_partition(const std::string& path) {
    rd_partition* p = nullptr;
    check(rd_partition_from_json(read_file(path).c_str(), &p));
    return {p, rd_partition_free};
}

SubdivisionPtr load_subdivision(const std::string& path) {
    rd_subdivision* s = nullptr;
    check(rd_subdivision_from_json(read_file(path).c_str(), &s));
    return {s, rd_subdivision_free};
}

/// Pulls the d_M value out of a witness JSON without a JSON library:
/// the value field is emitted first as {"value":<number>,...}.
double witness_value(const std::string& witness_json) {
    const auto pos = witness_json.find("\"value\":");
    if (pos == std::string::npos) fail(kExitComputation, "malformed witness");
    return std::strtod(witness_json.c_str() + pos + 8, nullptr);
}

int run(int argc, char** argv) {
    CLI::App app{"Maximum relative diameter of k-subdivisions of rotationally "
                 "symmetric planar convex bodies"};
    app.require_subcommand(1);

    if (const char* eps = std::getenv("REL_DIAM_EPS")) {
        char* end = nullptr;
        const double v = std::strtod(eps, &end);
        if (end == eps || v <= 0) fail(kExitValidation, "invalid REL_DIAM_EPS");
        rd_set_epsilon(v);
    }

    // body --kind disc|kgon|reuleaux|optimal [--k K] [--param X] [--metrics]
    auto* cmd_body = app.add_subcommand("body", "Construct a body and print its JSON");
    std::string body_kind = "disc", body_out;
    int body_k = 0;
    double body_param = 1.0;
    bool body_metrics = false;
    cmd_body->add_option("--kind", body_kind, "disc | kgon | reuleaux | optimal");
    cmd_body->add_option("--k", body_k, "symmetry order (kgon/reuleaux/optimal)");
    cmd_body->add_option("--param", body_param,
                         "radius (disc), circumradius (kgon), width (reuleaux)");
    cmd_body->add_flag("--metrics", body_metrics, "print metrics instead of the body");
    cmd_body->add_option("-o,--out", body_out, "output file (default stdout)");
    cmd_body->callback([&] {
        rd_body* b = nullptr;
        check(rd_body_make(body_kind.c_str(), body_k, body_param, &b));
        BodyPtr body{b, rd_body_free};
        char* text = nullptr;
        check(body_metrics ? rd_body_metrics(body.get(), &text)
                           : rd_body_to_json(body.get(), &text));
        write_output(body_out, take(text));
    });

    // partition --body b.json --k K [--random --seed S] [--perturb M]
    auto* cmd_part = app.add_subcommand(
        "partition", "Build the standard (or a random) k-partition of a body");
    std::string part_body, part_out;
    int part_k = 0;
    bool part_random = false;
    std::uint64_t part_seed = 0;
    double part_perturb = 0.0;
    cmd_part->add_option("--body", part_body, "body JSON file")->required();
    cmd_part->add_option("--k", part_k, "number of regions")->required();
    cmd_part->add_flag("--random", part_random, "seeded random valid partition");
    cmd_part->add_option("--seed", part_seed, "RNG seed");
    cmd_part->add_option("--perturb", part_perturb,
                         "bend spokes by this magnitude, preserving d_M");
    cmd_part->add_option("-o,--out", part_out, "output file (default stdout)");
    cmd_part->callback([&] {
        const BodyPtr body = load_body(part_body);
        rd_partition* p = nullptr;
        check(part_random ? rd_random_partition(body.get(), part_k, part_seed, &p)
                          : rd_standard_partition(body.get(), part_k, &p));
        PartitionPtr part{p, rd_partition_free};
        if (part_perturb != 0.0) {
            rd_partition* q = nullptr;
            check(rd_perturb_partition(part.get(), part_perturb, part_seed, &q));
            part.reset(q);
        }
        char* text = nullptr;
        check(rd_partition_to_json(part.get(), &text));
        write_output(part_out, take(text));
    });

    // evaluate --partition p.json | --subdivision s.json [--witness]
    auto* cmd_eval = app.add_subcommand(
        "evaluate", "Validate and compute the maximum relative diameter");
    std::string eval_part, eval_sub;
    bool eval_witness = false;
    cmd_eval->add_option("--partition", eval_part, "partition JSON file");
    cmd_eval->add_option("--subdivision", eval_sub, "subdivision JSON file");
    cmd_eval->add_flag("--witness", eval_witness, "print the full witness JSON");
    cmd_eval->callback([&] {
        if (eval_part.empty() == eval_sub.empty())
            fail(kExitValidation, "give exactly one of --partition / --subdivision");
        int ok = 0;
        char* errs = nullptr;
        char* witness = nullptr;
        if (!eval_part.empty()) {
            const PartitionPtr p = load_partition(eval_part);
            check(rd_partition_validate(p.get(), &ok, &errs));
            if (ok) check(rd_partition_eval(p.get(), &witness));
        } else {
            const SubdivisionPtr s = load_subdivision(eval_sub);
            check(rd_subdivision_validate(s.get(), &ok, &errs));
            if (ok) check(rd_subdivision_eval(s.get(), &witness));
        }
        const std::string errors = take(errs);
        if (!ok) fail(kExitValidation, "invalid input: " + errors);
        const std::string w = take(witness);
        if (eval_witness)
            write_output("", w);
        else
            write_output("", "d_M = " + fmt12(witness_value(w)));
    });

    // bounds --body b.json --k K [--format json|markdown]
    auto* cmd_bounds = app.add_subcommand("bounds", "Report all bounds for (body, k)");
    std::string bounds_body, bounds_format = "markdown", bounds_out;
    int bounds_k = 0;
    cmd_bounds->add_option("--body", bounds_body, "body JSON file")->required();
    cmd_bounds->add_option("--k", bounds_k, "number of regions")->required();
    cmd_bounds->add_option("--format", bounds_format, "json | markdown");
    cmd_bounds->add_option("-o,--out", bounds_out, "output file (default stdout)");
    cmd_bounds->callback([&] {
        const BodyPtr body = load_body(bounds_body);
        char* text = nullptr;
        check(rd_bounds_report(body.get(), bounds_k, bounds_format.c_str(), &text));
        write_output(bounds_out, take(text));
    });

    // optimal --k K
    auto* cmd_opt = app.add_subcommand(
        "optimal", "Body minimizing d_M(standard partition)^2 / area");
    int opt_k = 0;
    std::string opt_out;
    cmd_opt->add_option("--k", opt_k, "symmetry order (3..)")->required();
    cmd_opt->add_option("-o,--out", opt_out, "output file (default stdout)");
    cmd_opt->callback([&] {
        rd_body* b = nullptr;
        check(rd_body_make("optimal", opt_k, 0.0, &b));
        const BodyPtr body{b, rd_body_free};
        char* text = nullptr;
        check(rd_body_to_json(body.get(), &text));
        write_output(opt_out, take(text));
    });

    // hexify --body b.json --k K
    auto* cmd_hex = app.add_subcommand(
        "hexify", "Hexagonal-lattice k-subdivision of a body");
    std::string hex_body, hex_out;
    int hex_k = 0;
    cmd_hex->add_option("--body", hex_body, "body JSON file")->required();
    cmd_hex->add_option("--k", hex_k, "number of regions (>= 5)")->required();
    cmd_hex->add_option("-o,--out", hex_out, "output file (default stdout)");
    cmd_hex->callback([&] {
        const BodyPtr body = load_body(hex_body);
        rd_subdivision* s = nullptr;
        char* info = nullptr;
        check(rd_hex_subdivision(body.get(), hex_k, &s, &info));
        const SubdivisionPtr sub{s, rd_subdivision_free};
        std::cerr << take(info) << "\n";
        char* text = nullptr;
        check(rd_subdivision_to_json(sub.get(), &text));
        write_output(hex_out, take(text));
    });

    // counterexample heptagon|circle8 [--rho R]
    auto* cmd_cx = app.add_subcommand(
        "counterexample", "Subdivisions beating the standard partition");
    std::string cx_name, cx_out;
    double cx_rho = 0.0;
    cmd_cx->add_option("name", cx_name, "heptagon | circle8")->required();
    cmd_cx->add_option("--rho", cx_rho,
                       "inner-point radius for heptagon (default: optimize)");
    cmd_cx->add_option("-o,--out", cx_out, "output file (default stdout)");
    cmd_cx->callback([&] {
        rd_subdivision* s = nullptr;
        if (cx_name == "heptagon") {
            if (cx_rho > 0.0) {
                check(rd_heptagon_counterexample(cx_rho, &s));
            } else {
                char* report = nullptr;
                check(rd_heptagon_search(&report, &s));
                std::cerr << take(report) << "\n";
            }
        } else if (cx_name == "circle8") {
            check(rd_circle8_counterexample(&s));
        } else {
            fail(kExitValidation, "unknown counterexample: " + cx_name);
        }
        const SubdivisionPtr sub{s, rd_subdivision_free};
        char* witness = nullptr;
        check(rd_subdivision_eval(sub.get(), &witness));
        std::cerr << "d_M = " << fmt12(witness_value(take(witness))) << "\n";
        char* text = nullptr;
        check(rd_subdivision_to_json(sub.get(), &text));
        write_output(cx_out, take(text));
    });

    // search --body b.json --k K [--mode partition|subdivision] [...]
    auto* cmd_search = app.add_subcommand(
        "search", "Local search minimizing d_M over partitions or subdivisions");
    std::string search_body, search_mode = "subdivision", search_out, search_trace;
    int search_k = 0, search_iters = 2000, search_restarts = 4;
    std::uint64_t search_seed = 0;
    double search_scale = 0.1;
    bool search_anneal = false;
    cmd_search->add_option("--body", search_body, "body JSON file")->required();
    cmd_search->add_option("--k", search_k, "number of regions")->required();
    cmd_search->add_option("--mode", search_mode, "partition | subdivision");
    cmd_search->add_option("--seed", search_seed, "RNG seed");
    cmd_search->add_option("--iterations", search_iters, "iterations per restart");
    cmd_search->add_option("--restarts", search_restarts, "parallel restarts");
    cmd_search->add_option("--move-scale", search_scale, "move scale");
    cmd_search->add_flag("--anneal", search_anneal, "simulated annealing acceptance");
    cmd_search->add_option("--best-out", search_out, "write best subdivision JSON here");
    cmd_search->add_option("--trace-out", search_trace, "write CSV trace here");
    cmd_search->callback([&] {
        const BodyPtr body = load_body(search_body);
        std::ostringstream cfg;
        cfg << "{\"seed\":" << search_seed << ",\"iterations\":" << search_iters
            << ",\"restarts\":" << search_restarts
            << ",\"move_scale\":" << search_scale
            << ",\"anneal\":" << (search_anneal ? "true" : "false") << "}";
        char* report = nullptr;
        rd_subdivision* best = nullptr;
        check(rd_search(body.get(), search_k, search_mode.c_str(), cfg.str().c_str(),
                        &report, &best));
        const SubdivisionPtr sub{best, rd_subdivision_free};
        const std::string report_text = take(report);
        write_output("", report_text);
        if (!search_out.empty()) {
            char* text = nullptr;
            check(rd_subdivision_to_json(sub.get(), &text));
            write_output(search_out, take(text));
        }
        if (!search_trace.empty()) {
            // The trace is [[iter, value], ...] inside the report JSON.
            auto pos = report_text.find("\"trace\":");
            std::ostringstream csv;
            csv << "iteration,d_M\n";
            if (pos != std::string::npos) {
                const char* p = report_text.c_str() + pos + 8;
                while (*p && *p != '[') ++p;  // outer array
                if (*p) ++p;
                for (;;) {
                    while (*p && (std::isspace(static_cast<unsigned char>(*p)) ||
                                  *p == ','))
                        ++p;
                    if (*p != '[') break;
                    char* end = nullptr;
                    const long it = std::strtol(p + 1, &end, 10);
                    while (*end && (*end == ',' ||
                                    std::isspace(static_cast<unsigned char>(*end))))
                        ++end;
                    const double v = std::strtod(end, &end);
                    csv << it << "," << fmt12(v) << "\n";
                    while (*end && *end != ']') ++end;
                    p = *end ? end + 1 : end;
                }
            }
            write_output(search_trace, csv.str());
        }
    });

    // render --body|--partition|--subdivision file --out f.svg
    auto* cmd_render = app.add_subcommand("render", "Emit an SVG figure");
    std::string render_body, render_part, render_sub, render_out;
    cmd_render->add_option("--body", render_body, "body JSON file");
    cmd_render->add_option("--partition", render_part, "partition JSON file");
    cmd_render->add_option("--subdivision", render_sub, "subdivision JSON file");
    cmd_render->add_option("-o,--out", render_out, "output SVG file")->required();
    cmd_render->callback([&] {
        const int given = !render_body.empty() + !render_part.empty() +
                          !render_sub.empty();
        if (given != 1)
            fail(kExitValidation,
                 "give exactly one of --body / --partition / --subdivision");
        char* svg = nullptr;
        if (!render_body.empty()) {
            const BodyPtr b = load_body(render_body);
            check(rd_render_body(b.get(), &svg));
        } else if (!render_part.empty()) {
            const PartitionPtr p = load_partition(render_part);
            check(rd_render_partition(p.get(), &svg));
        } else {
            const SubdivisionPtr s = load_subdivision(render_sub);
            check(rd_render_subdivision(s.get(), &svg));
        }
        write_output(render_out, take(svg));
    });

    // repro name|all [--outdir D]
    auto* cmd_repro = app.add_subcommand(
        "repro", "Run reproduction experiments (JSON + Markdown reports)");
    std::string repro_name = "all", repro_outdir = ".";
    cmd_repro->add_option("name", repro_name,
                          "experiment name, or 'all' (see --list)");
    cmd_repro->add_option("--outdir", repro_outdir, "report directory");
    bool repro_list = false;
    cmd_repro->add_flag("--list", repro_list, "list experiment names");
    cmd_repro->callback([&] {
        char* names_c = nullptr;
        check(rd_repro_names(&names_c));
        const std::string names = take(names_c);
        if (repro_list) {
            std::string out = names;
            for (auto& ch : out)
                if (ch == ',') ch = '\n';
            write_output("", out);
            return;
        }
        bool all_pass = true;
        std::istringstream ss(names);
        std::string n;
        bool ran = false;
        while (std::getline(ss, n, ',')) {
            if (repro_name != "all" && n != repro_name) continue;
            ran = true;
            int pass = 0;
            check(rd_repro_run(n.c_str(), repro_outdir.c_str(), &pass));
            std::cout << n << ": " << (pass ? "pass" : "fail") << "\n";
            all_pass = all_pass && pass;
        }
        if (!ran) fail(kExitValidation, "unknown experiment: " + repro_name);
        if (!all_pass) fail(kExitComputation, "experiment failure");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
