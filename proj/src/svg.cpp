#include "ribbon/svg.hpp"

#include <cstdio>
#include <sstream>

namespace ribbon {

namespace {

constexpr const char* fill_color = "#9ecae1";
constexpr const char* removed_color = "#ffffff";
constexpr const char* stroke_color = "#08306b";
constexpr const char* hole_color = "#808080";
constexpr const char* filament_color = "#b30000";
constexpr double margin = 0.25;
constexpr double label_size = 0.15;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Canvas {
 public:
  void include(const Point2& p) {
    double x = to_double(p.x), y = to_double(p.y);
    if (empty_) {
      min_x_ = max_x_ = x;
      min_y_ = max_y_ = y;
      empty_ = false;
    }
    min_x_ = std::min(min_x_, x);
    max_x_ = std::max(max_x_, x);
    min_y_ = std::min(min_y_, y);
    max_y_ = std::max(max_y_, y);
  }

  void polygon(const Polygon& loop, const char* fill) {
    body_ << "<polygon points=\"";
    for (std::size_t i = 0; i < loop.size(); ++i)
      body_ << (i ? " " : "") << x(loop.vertex(i)) << "," << y(loop.vertex(i));
    body_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke_color << "\" stroke-width=\""
          << num(svg_stroke_width) << "\"/>\n";
  }

  void line(const Point2& a, const Point2& b) {
    body_ << "<line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\""
          << y(b) << "\" stroke=\"" << filament_color << "\" stroke-width=\""
          << num(svg_stroke_width) << "\"/>\n";
  }

  void dot(const Point2& p) {
    body_ << "<circle cx=\"" << x(p) << "\" cy=\"" << y(p) << "\" r=\"" << num(svg_hole_radius)
          << "\" fill=\"" << hole_color << "\"/>\n";
  }

  void label(const Point2& at, const std::string& text) {
    body_ << "<text x=\"" << x(at) << "\" y=\"" << y(at) << "\" font-size=\"" << num(label_size)
          << "\" font-family=\"sans-serif\">" << escape(text) << "</text>\n";
  }

  std::string finish() const {
    double w = max_x_ - min_x_ + 2 * margin, h = max_y_ - min_y_ + 2 * margin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << num(w)
        << " " << num(h) << "\" width=\"" << num(w * 100) << "\" height=\"" << num(h * 100)
        << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" fill=\"#ffffff\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  // y grows downward in SVG
  std::string x(const Point2& p) const { return num(to_double(p.x) - min_x_ + margin); }
  std::string y(const Point2& p) const { return num(max_y_ - to_double(p.y) + margin); }

  bool empty_ = true;
  double min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  std::ostringstream body_;
};

void draw_ribbons(Canvas& canvas, const std::vector<Ribbon>& ribbons) {
  for (const auto& rb : ribbons) {
    for (const auto& p : rb.outer().points()) canvas.include(p);
    canvas.include({rb.outer().polygon.min_corner().x,
                    rb.outer().polygon.max_corner().y + Rational(1, 4)});
  }
  for (const auto& rb : ribbons) {
    canvas.polygon(rb.outer().polygon, fill_color);
    canvas.polygon(rb.inner().polygon, removed_color);
  }
  for (const auto& rb : ribbons) {
    for (const auto& f : rb.filaments()) {
      auto [q, p] = rb.filament_segment(f);
      canvas.line(q, p);
    }
    for (const auto& h : rb.holes()) canvas.dot(h.marker);
    canvas.label({rb.outer().polygon.min_corner().x,
                  rb.outer().polygon.max_corner().y + Rational(1, 10)},
                 rb.label());
  }
}

}  // namespace

std::string render_svg(const ComplexDocument& document, std::string_view target) {
  TargetRef ref = resolve_target(document, target);
  BuiltComplex built = build_complex(ref.complex, document.complexes.at(ref.complex));
  Canvas canvas;
  switch (ref.kind) {
    case TargetKind::cycle: {
      const FilledCycle& c = built.cycles.at(ref.name);
      for (const auto& p : c.points()) canvas.include(p);
      canvas.polygon(c.polygon, fill_color);
      break;
    }
    case TargetKind::ribbon:
      draw_ribbons(canvas, {built.ribbons.at(ref.name)});
      break;
    case TargetKind::ribbon_complex:
      draw_ribbons(canvas, built.ribbon_complexes.at(ref.name).ribbons());
      break;
    case TargetKind::ribbon_nerve:
      draw_ribbons(canvas, built.ribbon_nerves.at(ref.name).ribbons);
      break;
    case TargetKind::vortex_nerve: {
      const VortexNerve& vn = built.vortex_nerves.at(ref.name);
      const auto& cycles = vn.cycles();
      for (const auto& p : cycles.back().points()) canvas.include(p);
      // outermost first so every inner cycle paints over its container
      for (std::size_t i = cycles.size(); i-- > 0;)
        canvas.polygon(cycles[i].polygon, i == 0 ? removed_color : fill_color);
      for (const auto& rb : ribbons_of_vortex_nerve(vn))
        for (const auto& f : rb.filaments()) {
          auto [q, p] = rb.filament_segment(f);
          canvas.line(q, p);
        }
      break;
    }
  }
  return canvas.finish();
}

}  // namespace ribbon
