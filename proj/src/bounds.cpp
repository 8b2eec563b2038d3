#include "reldiam/bounds.hpp"

#include <array>
#include <cmath>

namespace reldiam {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kPackingConstant = 0.688452;  // (m_5 + m_7)/2, as printed
}  // namespace

PolygonAreaTable m_table() {
    PolygonAreaTable t;
    auto odd = [](int j) {
        return j / 2.0 * std::cos(kPi / j) * std::tan(kPi / (2.0 * j));
    };
    t.m[3] = odd(3);
    t.m[4] = 0.5;
    t.m[5] = odd(5);
    t.m[6] = 0.6749814429;
    t.m[7] = odd(7);
    t.m[8] = 0.7268684828;
    t.m[9] = odd(9);
    t.cap = kPi / 4.0;
    return t;
}

LpSolution lp_packing_constant(int k) {
    if (k < 1) throw GeometryError("lp_packing_constant needs k >= 1");
    const PolygonAreaTable t = m_table();
    // Variables f_3..f_9 and ftilde, objective coefficients c_i, edge
    // weights w_i (ftilde counts as 10 edges).
    std::array<double, 8> c{}, w{};
    std::array<std::string, 8> names;
    for (int j = 3; j <= 9; ++j) {
        c[j - 3] = t.m.at(j);
        w[j - 3] = j;
        names[j - 3] = "f" + std::to_string(j);
    }
    c[7] = t.cap;
    w[7] = 10.0;
    names[7] = "ftilde";

    LpSolution best;
    best.value = -1.0;
    auto consider = [&](const std::array<double, 8>& f) {
        double val = 0.0;
        for (int i = 0; i < 8; ++i) val += f[i] * c[i];
        if (val > best.value) {
            best.value = val;
            best.argmax.clear();
            for (int i = 0; i < 8; ++i)
                if (f[i] > 0.0) best.argmax[names[i]] = f[i];
        }
    };
    // Vertices with one nonzero variable (edge constraint slack).
    for (int i = 0; i < 8; ++i) {
        if (w[i] * k <= 6.0 * k + 1e-12) {
            std::array<double, 8> f{};
            f[i] = k;
            consider(f);
        }
    }
    // Vertices with two nonzero variables and the edge constraint tight:
    // f_i + f_j = k, w_i f_i + w_j f_j = 6k.
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
            const double den = w[j] - w[i];
            if (std::abs(den) < 1e-12) continue;
            const double fj = k * (6.0 - w[i]) / den;
            const double fi = k - fj;
            if (fi < -1e-12 || fj < -1e-12) continue;
            std::array<double, 8> f{};
            f[i] = std::max(fi, 0.0);
            f[j] = std::max(fj, 0.0);
            consider(f);
        }
    }
    return best;
}

double bound_isodiametric(const ConvexBody& body, int k) {
    if (k < 1) throw GeometryError("k must be positive");
    return std::sqrt(body_area(body) / k) * std::sqrt(4.0 / kPi);
}

HexBound bound_hexagonal_lower(const ConvexBody& body, int k) {
    if (k < 1) throw GeometryError("k must be positive");
    const double A = body_area(body);
    const double P = body_perimeter(body);
    HexBound b;
    b.main_term = std::sqrt(A / k) / std::sqrt(kPackingConstant);
    const double a = kPackingConstant * k;
    b.rigorous_root = (-P + std::sqrt(P * P + 4.0 * a * A)) / (2.0 * a);
    return b;
}

double bound_standard(const ConvexBody& body, int k) {
    if (!verify_symmetry(body, k, 1e-7))
        throw GeometryError("body is not k-rotationally symmetric");
    const double r = body_inradius(body);
    const double R = body_circumradius(body);
    return std::max(R, 2.0 * r * std::sin(kPi / k));
}

BoundReport bound_report(const ConvexBody& body, int k, const std::string& body_id) {
    BoundReport rep;
    rep.body_id = body_id;
    rep.k = k;
    rep.bounds["isodiametric"] = {bound_isodiametric(body, k), true, "subdivision"};
    const HexBound hb = bound_hexagonal_lower(body, k);
    rep.bounds["packing_main_term"] = {hb.main_term, true, "subdivision (asymptotic)"};
    rep.bounds["packing_root"] = {hb.rigorous_root, true, "subdivision"};
    if (k >= 3 && verify_symmetry(body, k, 1e-7)) {
        const double sb = bound_standard(body, k);
        rep.bounds["standard"] = {
            sb, true, k <= 6 ? "partition and subdivision" : "partition only"};
        rep.bounds["standard_partition_value"] = {
            std::max(body_circumradius(body),
                     2.0 * body_inradius(body) * std::sin(kPi / k)),
            false, "upper bound attained by the standard partition"};
    }
    return rep;
}

}  // namespace reldiam
