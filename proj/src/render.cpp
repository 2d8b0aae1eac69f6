#include "fatpoints/render.hpp"

#include "fatpoints/cutting.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace fatpoints {

namespace {

constexpr int kPitch = 6; // lattice pitch matching the figure proportions

struct Panel {
    Diagram diagram;
    std::optional<AffineCut> cut;
    std::string label;
};

void collect_panels(const CutCertificate& cert, std::vector<Panel>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, CutNode>) {
                out.push_back({n.system.diagram, n.cut, "cut"});
                collect_panels(*n.sub2, out);
                collect_panels(*n.sub1, out);
            } else if constexpr (std::is_same_v<T, EquivLeaf>) {
                collect_panels(*n.inner, out);
            } else if constexpr (std::is_same_v<T, LemmaLeaf>) {
                collect_panels(*lemma_expand(n.name, n.params), out);
            } else {
                out.push_back({n.system.diagram, std::nullopt, "leaf"});
            }
        },
        cert.node);
}

std::string panel_ascii(const Panel& panel) {
    std::int64_t max_x = 0, max_y = 0;
    for (const auto& p : panel.diagram) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    std::ostringstream out;
    for (std::int64_t y = max_y; y >= 0; --y) {
        for (std::int64_t x = 0; x <= max_x; ++x) {
            char c = '.';
            if (panel.diagram.contains({x, y}))
                c = panel.cut && panel.cut->sign_at({x, y}) > 0 ? 'o' : '*';
            out << c << ' ';
        }
        out << '\n';
    }
    if (panel.cut)
        out << "cut: " << panel.cut->r1.str() << "*x + " << panel.cut->r2.str() << "*y + "
            << panel.cut->r0.str() << " = 0  (o: F > 0, *: F < 0)\n";
    return out.str();
}

void panel_svg(std::ostringstream& out, const Panel& panel, int ox, int oy, std::int64_t max_x,
               std::int64_t max_y) {
    auto X = [&](double x) { return ox + x * kPitch; };
    auto Y = [&](double y) { return oy + (static_cast<double>(max_y) - y) * kPitch; };
    for (std::int64_t x = 0; x <= max_x; ++x)
        for (std::int64_t y = 0; y <= max_y; ++y)
            out << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
                << "\" r=\"0.2\" fill=\"black\"/>\n";
    for (const auto& p : panel.diagram)
        out << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
            << "\" r=\"1.2\" fill=\"black\"/>\n";
    if (panel.cut) {
        // intersect r1*x + r2*y + r0 = 0 with the bounding box, in lattice
        // coordinates extended half a unit beyond the points
        double r1 = static_cast<double>(panel.cut->r1.num) / panel.cut->r1.den;
        double r2 = static_cast<double>(panel.cut->r2.num) / panel.cut->r2.den;
        double r0 = static_cast<double>(panel.cut->r0.num) / panel.cut->r0.den;
        double lo = -1, hx = static_cast<double>(max_x) + 1, hy = static_cast<double>(max_y) + 1;
        std::vector<std::pair<double, double>> pts;
        auto add = [&](double x, double y) {
            if (x >= lo - 1e-9 && x <= hx + 1e-9 && y >= lo - 1e-9 && y <= hy + 1e-9)
                pts.emplace_back(x, y);
        };
        if (r2 != 0) {
            add(lo, (-r0 - r1 * lo) / r2);
            add(hx, (-r0 - r1 * hx) / r2);
        }
        if (r1 != 0) {
            add((-r0 - r2 * lo) / r1, lo);
            add((-r0 - r2 * hy) / r1, hy);
        }
        if (pts.size() >= 2)
            out << "<line x1=\"" << X(pts[0].first) << "\" y1=\"" << Y(pts[0].second)
                << "\" x2=\"" << X(pts[1].first) << "\" y2=\"" << Y(pts[1].second)
                << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
}

std::string panels_svg(const std::vector<Panel>& panels) {
    std::int64_t max_x = 0, max_y = 0;
    for (const auto& panel : panels)
        for (const auto& p : panel.diagram) {
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
    int pw = static_cast<int>(max_x + 3) * kPitch;
    int ph = static_cast<int>(max_y + 3) * kPitch;
    int width = pw * static_cast<int>(panels.size());
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << ph
        << "\">\n";
    for (std::size_t i = 0; i < panels.size(); ++i)
        panel_svg(out, panels[i], static_cast<int>(i) * pw + kPitch, kPitch, max_x, max_y);
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string render_diagram_ascii(const Diagram& d) { return panel_ascii({d, std::nullopt, ""}); }

std::string render_diagram_svg(const Diagram& d) {
    return panels_svg({{d, std::nullopt, ""}});
}

std::string render_certificate_ascii(const CutCertificate& cert) {
    std::vector<Panel> panels;
    collect_panels(cert, panels);
    std::ostringstream out;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        out << "panel " << i + 1 << " (" << panels[i].label << ")\n";
        out << panel_ascii(panels[i]) << '\n';
    }
    return out.str();
}

std::string render_certificate_svg(const CutCertificate& cert) {
    std::vector<Panel> panels;
    collect_panels(cert, panels);
    return panels_svg(panels);
}

} // namespace fatpoints
