#include "svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "schur_scope/error.hpp"

namespace schur_scope::cli {

namespace {

constexpr double kUnit = 80.0;  // pixels per unit
constexpr double kTop = 3.0;    // units above the baseline shown
constexpr double kBottom = 2.0;  // units below

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string root_expression(const CurveWord& curve) {
  std::string out = curve.sign < 0 ? "-" : "";
  for (std::size_t l : curve.letters) out += "s_" + std::to_string(l + 1);
  return out + "α_" + std::to_string(curve.end + 1);
}

std::string loop_expression(const LoopWord& loop) {
  if (loop.letters.empty()) return "e";
  std::string out;
  for (std::size_t l : loop.letters) out += "s_" + std::to_string(l + 1);
  return out;
}

std::string render_curve_svg(const CurveWord& curve, const CartanMatrix& cartan) {
  const std::size_t n = cartan.rank();
  if (curve.end >= n) throw Error(ErrorKind::IndexOutOfRange, "curve endpoint out of range");
  const double width = static_cast<double>(n + 1) * kUnit;
  const double legend = 4 * 22.0;
  const double height = (kTop + kBottom) * kUnit + legend;
  // Baseline y = kTop units from the top; heights are measured upward from it.
  auto x_of = [&](std::size_t puncture) { return static_cast<double>(puncture + 1) * kUnit; };
  auto y_of = [&](double h) { return (kTop - h) * kUnit; };
  // O sits between two punctures so no segment from it runs through one.
  const double ox = x_of(n / 2) - kUnit / 2;
  const double oy = y_of(-1.0);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t k = 0; k < n; ++k) {
    os << "  <line x1=\"" << num(x_of(k)) << "\" y1=\"" << num(y_of(0)) << "\" x2=\"" << num(x_of(k))
       << "\" y2=\"" << num(y_of(kTop)) << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    os << "  <text x=\"" << num(x_of(k) + 4) << "\" y=\"" << num(y_of(kTop) + 14)
       << "\" font-size=\"12\" fill=\"#666666\">ℓ_" << k + 1 << "</text>\n";
    os << "  <circle cx=\"" << num(x_of(k)) << "\" cy=\"" << num(y_of(0)) << "\" r=\"3\" fill=\"black\"/>\n";
    os << "  <text x=\"" << num(x_of(k) - 6) << "\" y=\"" << num(y_of(0) + 18)
       << "\" font-size=\"14\">p_" << k + 1 << "</text>\n";
  }
  os << "  <circle cx=\"" << num(ox) << "\" cy=\"" << num(oy) << "\" r=\"3\" fill=\"black\"/>\n"
     << "  <text x=\"" << num(ox - 5) << "\" y=\"" << num(oy + 18) << "\" font-size=\"14\">O</text>\n";

  const std::size_t m = curve.letters.size();
  os << "  <polyline fill=\"none\" stroke=\"#c00000\" stroke-width=\"2\" points=\"" << num(ox) << "," << num(oy);
  for (std::size_t k = 0; k < m; ++k) {
    const double h = 1.0 + static_cast<double>(k + 1) / static_cast<double>(m + 1);
    os << " " << num(x_of(curve.letters[k])) << "," << num(y_of(h));
  }
  os << " " << num(x_of(curve.end)) << "," << num(y_of(0)) << "\"/>\n";

  const double ly = (kTop + kBottom) * kUnit;
  const std::string lines[] = {
      "word: " + curve.to_string(),
      "root: " + root_expression(curve) + " = (" + root_of_curve(curve, cartan).to_string() + ")",
      "loop: " + loop_expression(loop_of_curve(curve)),
      "schematic — not isotopy-faithful",
  };
  for (std::size_t i = 0; i < 4; ++i) {
    os << "  <text x=\"10\" y=\"" << num(ly + 16 + 22.0 * static_cast<double>(i))
       << "\" font-size=\"14\" font-family=\"monospace\">" << escape(lines[i]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_curve_svg(const CurveWord& curve, const CartanMatrix& cartan, const std::string& path) {
  const std::string text = render_curve_svg(curve, cartan);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Precondition, "cannot write " + path);
  file << text;
  if (!file) throw Error(ErrorKind::Precondition, "cannot write " + path);
}

}  // namespace schur_scope::cli
