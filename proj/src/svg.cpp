#include "reldiam/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace reldiam {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

struct Mapper {
    double xmin, ymin, scale;  // world -> viewBox, y flipped

    double x(double wx) const { return (wx - xmin) * scale + 40.0; }
    double y(double wy) const { return 800.0 - ((wy - ymin) * scale + 40.0); }
};

Mapper make_mapper(const ConvexBody& body) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& p : body.pieces) {
        for (const Vec2& v : {p.a, p.b}) {
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
        if (p.kind == PieceKind::Arc) {
            xmin = std::min(xmin, p.center.x - p.radius);
            xmax = std::max(xmax, p.center.x + p.radius);
            ymin = std::min(ymin, p.center.y - p.radius);
            ymax = std::max(ymax, p.center.y + p.radius);
        }
    }
    const double span = std::max(xmax - xmin, ymax - ymin);
    // 800 px with a 5% margin on each side.
    return {xmin, ymin, span > 0.0 ? 720.0 / span : 1.0};
}

void append(std::string& s, const char* fmt, double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    s += buf;
}

std::string path_data(const std::vector<BoundaryPiece>& loop, const Mapper& m) {
    std::string d;
    if (loop.empty()) return d;
    append(d, "M %.4f %.4f ", m.x(loop.front().a.x), m.y(loop.front().a.y));
    for (const auto& p : loop) {
        if (p.kind == PieceKind::Segment) {
            append(d, "L %.4f %.4f ", m.x(p.b.x), m.y(p.b.y));
        } else {
            const double r = p.radius * m.scale;
            const double sweep = p.sweep_angle();
            const int large = std::abs(sweep) > kPi ? 1 : 0;
            // ccw in world coordinates is cw after the y flip.
            const int flag = sweep >= 0.0 ? 0 : 1;
            char buf[128];
            std::snprintf(buf, sizeof buf, "A %.4f %.4f 0 %d %d %.4f %.4f ", r, r, large,
                          flag, m.x(p.b.x), m.y(p.b.y));
            d += buf;
        }
    }
    d += "Z";
    return d;
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                          "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

std::string document(const std::string& inner) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 800 800\">\n" +
           inner + "</svg>\n";
}

}  // namespace

std::string svg_body(const ConvexBody& body) {
    const Mapper m = make_mapper(body);
    return document("  <path d=\"" + path_data(body.pieces, m) +
                    "\" fill=\"#eeeeee\" stroke=\"#333333\" stroke-width=\"2\"/>\n");
}

std::string svg_subdivision(const KSubdivision& subdivision) {
    const Mapper m = make_mapper(subdivision.body);
    std::string inner;
    for (size_t i = 0; i < subdivision.regions.size(); ++i) {
        inner += "  <path d=\"" + path_data(subdivision.regions[i], m) + "\" fill=\"" +
                 kPalette[i % 10] +
                 "\" fill-opacity=\"0.55\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    return document(inner);
}

std::string svg_partition(const KPartition& partition) {
    const Mapper m = make_mapper(partition.body);
    std::string inner = "  <path d=\"" + path_data(partition.body.pieces, m) +
                        "\" fill=\"#eeeeee\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
    for (const auto& curve : partition.curves) {
        std::string d;
        append(d, "M %.4f %.4f ", m.x(curve.front().x), m.y(curve.front().y));
        for (size_t i = 1; i < curve.size(); ++i)
            append(d, "L %.4f %.4f ", m.x(curve[i].x), m.y(curve[i].y));
        inner += "  <path d=\"" + d +
                 "\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
    }
    return document(inner);
}

}  // namespace reldiam
