#include <algorithm>
#include <numeric>
#include <sstream>

#include "stick/representation.hpp"

namespace stick {

namespace {

constexpr int kUnit = 24;
constexpr int kMargin = 24;
constexpr const char* kColorA = "#1f5fbf";
constexpr int kLevel = 14;
constexpr const char* kColorB = "#c0392b";

int px(double v) { return kMargin + static_cast<int>(v * kUnit); }

void open_svg(std::ostringstream& out, int width, int height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string slope_svg(const StickRepresentation& rep) {
  const auto segments = slope_layout(rep);
  const double span = static_cast<double>(rep.size()) + 1.0;
  const int size = 2 * kMargin + static_cast<int>(span * kUnit);
  std::ostringstream out;
  open_svg(out, size, size);
  out << "<line class=\"ground\" x1=\"" << px(-0.5) << "\" y1=\"" << px(-0.5) << "\" x2=\"" << px(span - 0.5)
      << "\" y2=\"" << px(span - 0.5) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (const Segment& s : segments) {
    const bool is_a = s.vertex.side == Side::A;
    out << "<line class=\"" << (is_a ? "a-segment" : "b-segment") << "\" data-vertex=\"" << to_string(s.vertex)
        << "\" x1=\"" << px(s.x1) << "\" y1=\"" << px(s.y1) << "\" x2=\"" << px(s.x2) << "\" y2=\"" << px(s.y2)
        << "\" stroke=\"" << (is_a ? kColorA : kColorB) << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << px(s.x1) + 4 << "\" y=\"" << px(s.y1) + 14 << "\" font-size=\"10\" fill=\""
        << (is_a ? kColorA : kColorB) << "\">" << to_string(s.vertex) << "</text>\n";
  }
  for (std::size_t k = 0; k < rep.size(); ++k) {
    if (!rep[k].is_tip()) continue;
    out << "<circle class=\"tip\" cx=\"" << px(double(k)) << "\" cy=\"" << px(double(k))
        << "\" r=\"3\" fill=\"white\" stroke=\"#444\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string flat_svg(const StickRepresentation& rep) {
  const EventPositions pos(rep);
  struct Bar {
    Vertex vertex;
    int left, right, origin;
  };
  std::vector<Bar> bars;
  for (int i = 0; i < pos.a_count(); ++i)
    bars.push_back({{Side::A, i}, pos.a_tip(i), pos.a_origin(i), pos.a_origin(i)});
  for (int j = 0; j < pos.b_count(); ++j)
    bars.push_back({{Side::B, j}, pos.b_origin(j), pos.b_tip(j), pos.b_origin(j)});
  std::sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) { return x.left < y.left; });

  const double span = static_cast<double>(rep.size()) + 1.0;
  const int width = 2 * kMargin + static_cast<int>(span * kUnit);
  const int base = kMargin + kLevel * (static_cast<int>(bars.size()) + 1);
  std::ostringstream out;
  open_svg(out, width, base + kMargin);
  out << "<line class=\"ground\" x1=\"" << px(-0.5) << "\" y1=\"" << base << "\" x2=\"" << px(span - 0.5)
      << "\" y2=\"" << base << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (std::size_t level = 0; level < bars.size(); ++level) {
    const Bar& b = bars[level];
    const bool is_a = b.vertex.side == Side::A;
    const char* color = is_a ? kColorA : kColorB;
    const int y = base - kLevel * static_cast<int>(level + 1);
    const int tip = b.origin == b.left ? b.right : b.left;
    out << "<line class=\"" << (is_a ? "a-interval" : "b-interval") << "\" data-vertex=\"" << to_string(b.vertex)
        << "\" x1=\"" << px(b.left) << "\" y1=\"" << y << "\" x2=\"" << px(b.right) << "\" y2=\"" << y
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<circle cx=\"" << px(b.origin) << "\" cy=\"" << y << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    out << "<circle cx=\"" << px(tip) << "\" cy=\"" << y << "\" r=\"3\" fill=\"white\" stroke=\"" << color
        << "\"/>\n";
    out << "<text x=\"" << px(b.right) + 6 << "\" y=\"" << y + 4 << "\" font-size=\"10\" fill=\"" << color << "\">"
        << to_string(b.vertex) << "</text>\n";
  }
  for (std::size_t k = 0; k < rep.size(); ++k) {
    out << "<text x=\"" << px(double(k)) - 6 << "\" y=\"" << base + 14 << "\" font-size=\"9\" fill=\"#444\">"
        << to_string(rep[k]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::vector<Segment> slope_layout(const StickRepresentation& rep) {
  const EventPositions pos(rep);
  std::vector<Segment> out;
  for (int i = 0; i < pos.a_count(); ++i) {
    const double x = pos.a_origin(i);
    out.push_back({{Side::A, i}, x, x, x, static_cast<double>(pos.a_tip(i))});
  }
  for (int j = 0; j < pos.b_count(); ++j) {
    const double y = pos.b_origin(j);
    out.push_back({{Side::B, j}, y, y, static_cast<double>(pos.b_tip(j)), y});
  }
  return out;
}

std::string render_svg(const StickRepresentation& rep, RenderStyle style) {
  return style == RenderStyle::Slope ? slope_svg(rep) : flat_svg(rep);
}

}  // namespace stick
