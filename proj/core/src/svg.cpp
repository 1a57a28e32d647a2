#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "chains/billiards.hpp"

namespace chains {

namespace {

// Doubled-coordinate layout: bead x sits at perimeter parameter 2x
// (period 2P), corner A at the origin. Half a bead-unit is kScale px,
// so every emitted coordinate is an integer.
constexpr std::int64_t kScale = 15;

struct Pt {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct RectLayout {
  std::int64_t A, B, C, D, twoP, w, h;

  explicit RectLayout(const BilliardTable& t)
      : A(t.A), B(t.B), C(t.C), D(t.D), twoP(2 * t.perimeter()),
        w(t.B - t.A), h(t.C - t.B) {}

  // t is a doubled perimeter coordinate lifted into [A, A + 2P).
  Pt at(std::int64_t tc) const {
    if (tc <= B) return {tc - A, 0};
    if (tc <= C) return {w, tc - B};
    if (tc <= D) return {w - (tc - C), h};
    return {0, h - (tc - D)};
  }

  Pt bead(std::int64_t x) const {
    std::int64_t tc = A + ((2 * x - A) % twoP + twoP) % twoP;
    return at(tc);
  }

  // Outward normal of the side bead x lies on, for label offsets.
  Pt normal(std::int64_t x) const {
    std::int64_t tc = A + ((2 * x - A) % twoP + twoP) % twoP;
    if (tc < B) return {0, -1};
    if (tc < C) return {1, 0};
    if (tc < D) return {0, 1};
    return {-1, 0};
  }
};

std::string half_label(std::int64_t doubled) {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) s += "\xC2\xBD";  // vulgar one-half
  return s;
}

void emit_header(std::ostringstream& out, std::int64_t w, std::int64_t h) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"" << -3 * kScale << " " << -3 * kScale << " "
      << w + 6 * kScale << " " << h + 6 * kScale << "\">\n"
      << "<style>\n"
      << "line.fold { stroke: #888; stroke-width: 1; }\n"
      << "line.path { stroke: #000; stroke-width: 3; }\n"
      << "circle.bead { fill: #fff; stroke: #444; }\n"
      << "circle.pocket { fill: #000; }\n"
      << "text { font-family: monospace; font-size: 12px; "
      << "text-anchor: middle; dominant-baseline: middle; }\n"
      << "</style>\n";
}

std::set<std::pair<std::int64_t, std::int64_t>> path_edges(
    const TableDecomposition& d) {
  std::set<std::pair<std::int64_t, std::int64_t>> edges;
  for (const auto& p : d.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      edges.insert(std::minmax(p[i], p[i + 1]));
  return edges;
}

}  // namespace

std::string render_svg(const BilliardTable& t, const TableDecomposition& d) {
  RectLayout lay(t);
  const std::int64_t P = t.perimeter();
  std::ostringstream out;
  emit_header(out, lay.w * kScale, lay.h * kScale);
  out << "<rect x=\"0\" y=\"0\" width=\"" << lay.w * kScale << "\" height=\""
      << lay.h * kScale << "\" fill=\"none\" stroke=\"#000\"/>\n";

  auto thick = path_edges(d);
  auto emit_fold = [&](const FoldSystem& fs) {
    for (std::int64_t x = 1; x <= P; ++x) {
      std::int64_t y = fs.apply(x);
      if (y <= x) continue;  // one line per pair; skip pockets
      Pt a = lay.bead(x);
      Pt b = lay.bead(y);
      bool on_path = thick.count(std::minmax(x, y)) > 0;
      out << "<line class=\"" << (on_path ? "path" : "fold") << "\" x1=\""
          << a.x * kScale << "\" y1=\"" << a.y * kScale << "\" x2=\""
          << b.x * kScale << "\" y2=\"" << b.y * kScale << "\"/>\n";
    }
  };
  emit_fold(t.fold_a());
  emit_fold(t.fold_b());

  std::set<std::int64_t> pockets(d.pockets.begin(), d.pockets.end());
  for (std::int64_t x = 1; x <= P; ++x) {
    Pt p = lay.bead(x);
    Pt nrm = lay.normal(x);
    out << "<circle class=\"" << (pockets.count(x) ? "pocket" : "bead")
        << "\" cx=\"" << p.x * kScale << "\" cy=\"" << p.y * kScale
        << "\" r=\"3\"/>\n";
    out << "<text x=\"" << p.x * kScale + nrm.x * 2 * kScale << "\" y=\""
        << p.y * kScale + nrm.y * 2 * kScale << "\">" << x << "</text>\n";
  }
  // Half-integer corner annotations in parentheses.
  for (std::int64_t c : {t.A, t.B, t.C, t.D}) {
    if (c % 2 == 0) continue;
    Pt p = lay.at(c);
    Pt nrm = lay.normal((c + 1) / 2);
    out << "<text x=\"" << p.x * kScale + nrm.x * 2 * kScale << "\" y=\""
        << p.y * kScale + nrm.y * 2 * kScale << "\">(" << half_label(c)
        << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const FoldSystem& f, const FoldSystem& g,
                       const TableDecomposition& d) {
  const std::int64_t n = f.n();
  const double radius = std::max<double>(120.0, 8.0 * static_cast<double>(n));
  auto pos = [&](std::int64_t x) {
    double ang = 2.0 * M_PI * static_cast<double>(x - 1) /
                 static_cast<double>(n);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f\" ", radius * std::cos(ang));
    std::string sx = buf;
    std::snprintf(buf, sizeof buf, "%.2f\" ", radius * std::sin(ang));
    return std::pair<std::string, std::string>(sx, buf);
  };
  std::ostringstream out;
  std::int64_t box = static_cast<std::int64_t>(radius) + 40;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"" << -box << " " << -box << " " << 2 * box << " "
      << 2 * box << "\">\n"
      << "<style>line.fold { stroke: #888; } line.path { stroke: #000; "
      << "stroke-width: 3; } text { font-family: monospace; font-size: 10px; "
      << "text-anchor: middle; }</style>\n";
  auto thick = path_edges(d);
  for (const FoldSystem* fs : {&f, &g}) {
    for (std::int64_t x = 1; x <= n; ++x) {
      std::int64_t y = fs->apply(x);
      if (y <= x) continue;
      auto [ax, ay] = pos(x);
      auto [bx, by] = pos(y);
      bool on_path = thick.count(std::minmax(x, y)) > 0;
      out << "<line class=\"" << (on_path ? "path" : "fold") << "\" x1=\""
          << ax << "y1=\"" << ay << "x2=\"" << bx << "y2=\"" << by << "/>\n";
    }
  }
  for (std::int64_t x = 1; x <= n; ++x) {
    auto [px, py] = pos(x);
    out << "<text x=\"" << px << "y=\"" << py << ">" << x << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chains
