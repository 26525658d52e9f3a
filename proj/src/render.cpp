#include "mwrp/render.hpp"

#include <sstream>

namespace mwrp {

namespace {
const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#17becf"};
constexpr int kScale = 16;
constexpr int kMargin = 8;

double cx(int col) { return kMargin + kScale * (col + 0.5); }
double cy(int row) { return kMargin + kScale * (row + 0.5); }
}  // namespace

std::string render_svg(const GridMap& map, const std::vector<Cell>& starts,
                       const std::vector<std::vector<Cell>>& paths) {
  const int w = map.width() * kScale + 2 * kMargin;
  const int h = map.height() * kScale + 2 * kMargin;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << w << "\" height=\"" << h << "\">\n";
  svg << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << map.width() * kScale << "\" height=\"" << map.height() * kScale
      << "\" fill=\"none\" stroke=\"#222222\"/>\n";

  for (int r = 0; r < map.height(); ++r)
    for (int c = 0; c < map.width(); ++c)
      if (!map.is_free(r, c))
        svg << "<rect x=\"" << kMargin + c * kScale << "\" y=\""
            << kMargin + r * kScale << "\" width=\"" << kScale
            << "\" height=\"" << kScale << "\" fill=\"#404040\"/>\n";

  for (size_t k = 0; k < paths.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(*kPalette))];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"3\" stroke-opacity=\"0.8\" "
           "stroke-linejoin=\"round\" points=\"";
    for (size_t i = 0; i < paths[k].size(); ++i) {
      if (i) svg << ' ';
      svg << cx(paths[k][i].col) << ',' << cy(paths[k][i].row);
    }
    svg << "\"/>\n";
  }

  for (size_t k = 0; k < starts.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(*kPalette))];
    svg << "<circle cx=\"" << cx(starts[k].col) << "\" cy=\""
        << cy(starts[k].row) << "\" r=\"5\" fill=\"" << color
        << "\" stroke=\"#000000\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mwrp
