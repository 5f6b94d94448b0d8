#include "bcr/svg.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace bcr::svg {

namespace {

constexpr long kSpacing = 60;
constexpr long kMargin = 40;
constexpr long kTop = 50;
constexpr long kBottom = 170;
constexpr long kHeight = 230;

}  // namespace

void emit_svg(std::ostream& out, const BipartiteGraph& g, const Drawing& d) {
  if (!is_valid_drawing(g, d)) throw std::invalid_argument("drawing does not match graph");
  const long widest = static_cast<long>(std::max<std::size_t>({g.x_count(), g.y_count(), 1}));
  const long width = 2 * kMargin + (widest - 1) * kSpacing;
  auto px = [&](Side s, std::uint32_t v) {
    const long count = static_cast<long>(g.side_count(s));
    return kMargin + (widest - count) * kSpacing / 2 + static_cast<long>(d.layout(s).rank[v]) * kSpacing;
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << width << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g stroke=\"#444\" stroke-width=\"1.5\">\n";
  for (const Edge& e : g.edges()) {
    out << "<line x1=\"" << px(Side::X, e.x) << "\" y1=\"" << kTop << "\" x2=\"" << px(Side::Y, e.y)
        << "\" y2=\"" << kBottom << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#b22\" text-anchor=\"middle\">\n";
  for (const Edge& e : g.edges()) {
    if (e.weight == 1) continue;
    // label at one third of the way down, clear of the vertex dots
    const long lx = (2 * px(Side::X, e.x) + px(Side::Y, e.y)) / 3;
    const long ly = (2 * kTop + kBottom) / 3;
    out << "<text x=\"" << lx << "\" y=\"" << ly << "\">" << e.weight << "</text>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (Side s : {Side::X, Side::Y}) {
    const long cy = s == Side::X ? kTop : kBottom;
    const long ty = s == Side::X ? kTop - 12 : kBottom + 20;
    for (std::uint32_t v = 0; v < g.side_count(s); ++v) {
      out << "<circle cx=\"" << px(s, v) << "\" cy=\"" << cy << "\" r=\"6\" fill=\""
          << (s == Side::X ? "#1f5fa8" : "#2e8b57") << "\"/>\n"
          << "<text x=\"" << px(s, v) << "\" y=\"" << ty << "\">" << side_name(s) << v << "</text>\n";
    }
  }
  out << "</g>\n";

  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 10
      << "\" font-family=\"sans-serif\" font-size=\"13\">crossings: " << crossing_number_fast(g, d)
      << "</text>\n"
      << "</svg>\n";
}

void write_svg(const std::filesystem::path& path, const BipartiteGraph& g, const Drawing& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  emit_svg(out, g, d);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace bcr::svg
