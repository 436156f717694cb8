#include "christoffel/render.hpp"

#include <sstream>

#include "christoffel/arith.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/errors.hpp"

namespace christoffel {

namespace {

constexpr std::int64_t kMaxAsciiExtent = 400;

class AsciiCanvas {
 public:
  AsciiCanvas(std::int64_t a, std::int64_t b)
      : b_(b), grid_(static_cast<std::size_t>(2 * b + 1), std::string(static_cast<std::size_t>(2 * a + 1), ' ')) {
    for (std::int64_t y = 0; y <= b; ++y) {
      for (std::int64_t x = 0; x <= a; ++x) put(row(y), 2 * x, '.');
    }
  }

  void draw_path(const std::vector<LatticePoint>& points, char vertex, char horizontal,
                 char vertical) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      const LatticePoint& p = points[i];
      const LatticePoint& q = points[i + 1];
      if (q.x > p.x) {
        put(row(p.y), 2 * p.x + 1, horizontal);
      } else {
        put(row(p.y) - 1, 2 * p.x, vertical);
      }
    }
    for (const LatticePoint& p : points) put(row(p.y), 2 * p.x, vertex);
  }

  void mark_cell(std::int64_t x, std::int64_t y, char c) {
    char& slot = at(row(y) - 1, 2 * x + 1);
    if (slot == ' ') slot = c;
  }

  std::string str() const {
    std::string out;
    for (const std::string& line : grid_) {
      const auto end = line.find_last_not_of(' ');
      out += line.substr(0, end == std::string::npos ? 0 : end + 1);
      out += '\n';
    }
    return out;
  }

 private:
  std::int64_t row(std::int64_t y) const { return 2 * (b_ - y); }
  char& at(std::int64_t r, std::int64_t c) {
    return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  void put(std::int64_t r, std::int64_t c, char ch) { at(r, c) = ch; }

  std::int64_t b_;
  std::vector<std::string> grid_;
};

std::string points_attr(const std::vector<LatticePoint>& points, std::int64_t cell,
                        std::int64_t margin, std::int64_t height) {
  std::ostringstream os;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) os << ' ';
    os << margin + points[i].x * cell << ',' << margin + (height - points[i].y) * cell;
  }
  return os.str();
}

std::string render_ascii(const RenderSpec& spec, const ParikhVector& end) {
  if (end.zeros > kMaxAsciiExtent || end.ones > kMaxAsciiExtent) {
    throw PreconditionError("ASCII rendering is limited to " + std::to_string(kMaxAsciiExtent) +
                            " steps per axis");
  }
  AsciiCanvas canvas(end.zeros, end.ones);
  if (spec.show_bar) {
    canvas.draw_path(lattice_path(upper_christoffel(end.zeros, end.ones)), '+', '=', ':');
    canvas.draw_path(lattice_path(lower_christoffel(end.zeros, end.ones)), '+', '=', ':');
  }
  canvas.draw_path(lattice_path(spec.word), 'o', '-', '|');
  if (spec.show_segment && end.zeros > 0) {
    // Cell [x,x+1]x[y,y+1] is crossed iff b x < a (y+1) and b (x+1) > a y.
    for (std::int64_t y = 0; y < end.ones; ++y) {
      for (std::int64_t x = 0; x < end.zeros; ++x) {
        if (end.ones * x < end.zeros * (y + 1) && end.ones * (x + 1) > end.zeros * y) {
          canvas.mark_cell(x, y, '/');
        }
      }
    }
  }
  return canvas.str();
}

std::string render_svg(const RenderSpec& spec, const ParikhVector& end) {
  const std::int64_t cell = spec.cell_size;
  const std::int64_t margin = cell;
  const std::int64_t width = checked_add(checked_mul(end.zeros, cell), 2 * margin);
  const std::int64_t height = checked_add(checked_mul(end.ones, cell), 2 * margin);
  const auto x_of = [&](std::int64_t x) { return margin + x * cell; };
  const auto y_of = [&](std::int64_t y) { return margin + (end.ones - y) * cell; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <title>" << spec.word.str() << "</title>\n"
     << "  <g class=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (std::int64_t x = 0; x <= end.zeros; ++x) {
    os << "    <line x1=\"" << x_of(x) << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(x)
       << "\" y2=\"" << y_of(end.ones) << "\"/>\n";
  }
  for (std::int64_t y = 0; y <= end.ones; ++y) {
    os << "    <line x1=\"" << x_of(0) << "\" y1=\"" << y_of(y) << "\" x2=\"" << x_of(end.zeros)
       << "\" y2=\"" << y_of(y) << "\"/>\n";
  }
  os << "  </g>\n";
  if (spec.show_bar) {
    const BinaryWord lower = lower_christoffel(end.zeros, end.ones);
    os << "  <polyline class=\"lower\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"2\" "
          "stroke-dasharray=\"6 4\" points=\""
       << points_attr(lattice_path(lower), cell, margin, end.ones) << "\"/>\n";
    os << "  <polyline class=\"upper\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"2\" "
          "stroke-dasharray=\"6 4\" points=\""
       << points_attr(lattice_path(reversal(lower)), cell, margin, end.ones) << "\"/>\n";
  }
  if (spec.show_segment) {
    os << "  <line class=\"segment\" stroke=\"#c03030\" stroke-width=\"1.5\" x1=\"" << x_of(0)
       << "\" y1=\"" << y_of(0) << "\" x2=\"" << x_of(end.zeros) << "\" y2=\""
       << y_of(end.ones) << "\"/>\n";
  }
  os << "  <polyline class=\"path\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" points=\""
     << points_attr(lattice_path(spec.word), cell, margin, end.ones) << "\"/>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace

std::vector<LatticePoint> lattice_path(const BinaryWord& w) {
  std::vector<LatticePoint> out;
  out.reserve(w.size() + 1);
  LatticePoint p;
  out.push_back(p);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      ++p.x;
    } else {
      ++p.y;
    }
    out.push_back(p);
  }
  return out;
}

std::string render(const RenderSpec& spec) {
  if (spec.word.empty()) throw PreconditionError("cannot render the empty word");
  if (spec.cell_size < 1) throw PreconditionError("cell size must be >= 1");
  const ParikhVector end = parikh(spec.word);
  if (spec.show_bar && (end.zeros < 1 || end.ones < 1)) {
    throw PreconditionError("the digital bar needs both letters to occur, got Parikh vector (" +
                            std::to_string(end.zeros) + "," + std::to_string(end.ones) + ")");
  }
  return spec.format == RenderFormat::kAscii ? render_ascii(spec, end) : render_svg(spec, end);
}

}  // namespace christoffel
