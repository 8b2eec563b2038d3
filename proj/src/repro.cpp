#include "reldiam/repro.hpp"

#include "reldiam/bounds.hpp"
#include "reldiam/constructions.hpp"
#include "reldiam/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

namespace reldiam {

namespace {

using nlohmann::json;

constexpr double kPi = 3.1415926535897932384626433832795;

struct Suite {
    json rows = json::array();
    bool pass = true;

    void row(json r, bool ok) {
        r["pass"] = ok;
        rows.push_back(std::move(r));
        pass = pass && ok;
    }
};

std::vector<std::pair<std::string, ConvexBody>> body_suite() {
    std::vector<std::pair<std::string, ConvexBody>> bodies;
    bodies.emplace_back("disc", make_disc(1.0));
    for (int k = 3; k <= 12; ++k)
        bodies.emplace_back("E" + std::to_string(k), make_regular_kgon(k, 1.0));
    for (int k : {3, 5, 7})
        bodies.emplace_back("reuleaux" + std::to_string(k), make_reuleaux(k, 1.0));
    for (int k = 3; k <= 10; ++k)
        bodies.emplace_back("optimal" + std::to_string(k), optimal_body(k));
    return bodies;
}

std::vector<int> applicable_k(const ConvexBody& body) {
    std::vector<int> ks;
    for (int k = 3; k <= 12; ++k)
        if (verify_symmetry(body, k, 1e-7)) ks.push_back(k);
    return ks;
}

bool exp_lemma_dm(Suite& s) {
    const double tol = 1e-6;
    for (const auto& [name, body] : body_suite()) {
        for (int k : applicable_k(body)) {
            const double formula = d_M_standard_formula(body, k);
            const double direct = max_relative_diameter(standard_partition(body, k)).value;
            s.row({{"body", name},
                   {"k", k},
                   {"formula", formula},
                   {"direct", direct},
                   {"tolerance", tol}},
                  std::abs(formula - direct) <= tol);
        }
    }
    return s.pass;
}

bool exp_theorem_min(Suite& s) {
    const double tol = 1e-9;
    const std::uint64_t seed = 20260826;
    const int trials = 200;
    std::vector<std::pair<std::string, ConvexBody>> bodies = {
        {"disc", make_disc(1.0)},
        {"E5", make_regular_kgon(5, 1.0)},
        {"E6", make_regular_kgon(6, 1.0)}};
    for (const auto& [name, body] : bodies) {
        for (int k : applicable_k(body)) {
            if (k > 6) continue;
            const double floor_v = d_M_standard_formula(body, k);
            int violations = 0;
            double worst = 1e300;
            for (int t = 0; t < trials; ++t) {
                const double d =
                    max_relative_diameter(random_partition(body, k, seed + t)).value;
                worst = std::min(worst, d);
                if (d < floor_v - tol) ++violations;
            }
            s.row({{"body", name},
                   {"k", k},
                   {"floor", floor_v},
                   {"min_observed", worst},
                   {"trials", trials},
                   {"violations", violations}},
                  violations == 0);
        }
    }
    return s.pass;
}

bool exp_heptagon(Suite& s) {
    const auto res = search_heptagon();
    s.row({{"rho", res.rho},
           {"d_M", res.d_M},
           {"paper_value", 0.9892},
           {"tolerance", 5e-3},
           {"probes", res.trace.size()}},
          res.d_M < 1.0 && std::abs(res.d_M - 0.9892) <= 5e-3);
    return s.pass;
}

bool exp_circle8(Suite& s) {
    const KSubdivision sub = circle8_counterexample();
    const double d1 = piece_set_diameter(sub.regions[0]);
    const double d2 = piece_set_diameter(sub.regions[1]);
    const double dm = max_relative_diameter(sub).value;
    s.row({{"D_C1", d1}, {"expected", 0.86}}, std::abs(d1 - 0.86) <= 1e-12);
    s.row({{"D_C2_computed", d2},
           {"D_C2_paper_rounded", 0.86},
           {"expected", 2.0 * std::sin(kPi / 7.0)}},
          std::abs(d2 - 2.0 * std::sin(kPi / 7.0)) <= 1e-9);
    s.row({{"d_M", dm}, {"standard_8_partition", 1.0}},
          dm >= 0.86 && dm <= 0.87 && dm < 1.0);
    s.row({{"valid", true}}, validate_subdivision(sub).ok);
    return s.pass;
}

bool exp_optimal_table(Suite& s) {
    for (int k = 3; k <= 10; ++k) {
        const ConvexBody opt = optimal_body(k);
        const double q_opt = quotient(opt, k);
        json row = {{"k", k}, {"quotient_optimal", q_opt}};
        bool ok = true;
        std::vector<std::pair<std::string, ConvexBody>> rivals;
        rivals.emplace_back("kgon", make_regular_kgon(k, 1.0));
        rivals.emplace_back("disc", make_disc(1.0));
        if (k % 2 == 1) rivals.emplace_back("reuleaux", make_reuleaux(k, 1.0));
        for (const auto& [rname, rival] : rivals) {
            const double q = quotient(rival, k);
            row["quotient_" + rname] = q;
            const bool coincides = (rname == "disc" && k >= 6) || (rname == "kgon" && k == 4);
            if (!coincides) ok = ok && (q_opt < q - 1e-6);
        }
        s.row(std::move(row), ok);
    }
    return s.pass;
}

bool exp_hex_asymptotics(Suite& s) {
    const ConvexBody disc = make_disc(1.0);
    for (int k : {50, 100, 500, 1000}) {
        const auto hex = hex_subdivision(disc, k);
        const double dm = max_relative_diameter(hex.subdivision).value;
        const double envelope =
            std::sqrt(kPi / k) * std::sqrt(8.0 / (3.0 * std::sqrt(3.0))) + 10.0 / k;
        const auto lb = bound_hexagonal_lower(disc, k);
        s.row({{"k", k},
               {"d_k", hex.d_k},
               {"d_M", dm},
               {"lattice_cells", hex.lattice_cells},
               {"envelope", envelope},
               {"lower_main", lb.main_term},
               {"lower_root", lb.rigorous_root}},
              dm <= hex.d_k + 1e-5 && dm <= envelope &&
                  validate_subdivision(hex.subdivision).ok);
    }
    return s.pass;
}

std::string markdown_of(const std::string& name, const Suite& s) {
    std::string md = "# " + name + "\n\nresult: " + (s.pass ? "pass" : "fail") + "\n\n";
    if (s.rows.empty()) return md;
    std::vector<std::string> cols;
    for (auto& [key, _] : s.rows.front().items()) cols.push_back(key);
    std::string head = "|", sep = "|";
    for (const auto& c : cols) {
        head += " " + c + " |";
        sep += "---|";
    }
    md += head + "\n" + sep + "\n";
    for (const auto& r : s.rows) {
        std::string line = "|";
        for (const auto& c : cols) {
            json v = r.contains(c) ? r.at(c) : json();
            line += " " + (v.is_string() ? v.get<std::string>() : v.dump()) + " |";
        }
        md += line + "\n";
    }
    return md;
}

}  // namespace

std::vector<std::string> repro_names() {
    return {"lemma-dm", "theorem-min", "heptagon", "circle8", "optimal-table",
            "hex-asymptotics"};
}

bool run_repro(const std::string& name, const std::string& outdir) {
    static const std::map<std::string, std::function<bool(Suite&)>> experiments = {
        {"lemma-dm", exp_lemma_dm},       {"theorem-min", exp_theorem_min},
        {"heptagon", exp_heptagon},       {"circle8", exp_circle8},
        {"optimal-table", exp_optimal_table}, {"hex-asymptotics", exp_hex_asymptotics}};
    const auto it = experiments.find(name);
    if (it == experiments.end()) throw GeometryError("unknown experiment: " + name);
    Suite s;
    it->second(s);
    json doc = {{"experiment", name}, {"pass", s.pass}, {"rows", s.rows}};
    const std::string base = outdir.empty() ? name : outdir + "/" + name;
    {
        std::ofstream f(base + ".json");
        if (!f) throw GeometryError("cannot write " + base + ".json");
        f << doc.dump(2) << "\n";
    }
    {
        std::ofstream f(base + ".md");
        if (!f) throw GeometryError("cannot write " + base + ".md");
        f << markdown_of(name, s);
    }
    return s.pass;
}

}  // namespace reldiam
