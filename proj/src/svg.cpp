#include "ctkit/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

constexpr double kSize = 520.0;
constexpr double kMargin = 50.0;
constexpr double kBox = kSize - 2 * kMargin;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double squash(const ExtRational& ratio) {
  if (ratio.infinite) return 1.0;
  double s = ratio.value.to_double();
  return s / (1.0 + s);
}

// Plot coordinates: x rightwards, y upwards inside the box.
std::string pt(double u, double v) {
  double x = kMargin + u * kBox;
  double y = kSize - kMargin - v * kBox;
  return num(x) + "," + num(y);
}

std::string line(double u1, double v1, double u2, double v2,
                 const std::string& style) {
  double x1 = kMargin + u1 * kBox, y1 = kSize - kMargin - v1 * kBox;
  double x2 = kMargin + u2 * kBox, y2 = kSize - kMargin - v2 * kBox;
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
         "\" y2=\"" + num(y2) + "\" " + style + "/>\n";
}

}  // namespace

std::string diagram_svg(const DiagramSpec& spec) {
  for (const auto& inv : spec.profiles) {
    inv.validate();
    if (inv.simplex.m != 2)
      throw DomainError(ErrorCode::WrongDimension,
                        "diagram needs exactly two extreme traces, got " +
                            std::to_string(inv.simplex.m));
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) +
         "\" height=\"" + num(kSize) + "\" viewBox=\"0 0 " + num(kSize) + " " +
         num(kSize) + "\">\n";
  svg += "<rect width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
         "\" fill=\"#ffffff\"/>\n";

  // Removed boundary of the quadrant: dotted axes.
  svg += line(0, 0, 1, 0,
              "stroke=\"#57606a\" stroke-width=\"1.5\" stroke-dasharray=\"3,4\"");
  svg += line(0, 0, 0, 1,
              "stroke=\"#57606a\" stroke-width=\"1.5\" stroke-dasharray=\"3,4\"");
  // Unbounded norm maps: the two bold infinity edges.
  svg += line(0, 1, 1, 1, "stroke=\"#24292f\" stroke-width=\"4\"");
  svg += line(1, 0, 1, 1, "stroke=\"#24292f\" stroke-width=\"4\"");
  // Equal-ratio locus: the solid diagonal.
  svg += line(0, 0, 1, 1, "stroke=\"#24292f\" stroke-width=\"1.5\"");

  svg += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kSize - kMargin + 24) +
         "\" font-size=\"13\" fill=\"#24292f\">0</text>\n";
  svg += "<text x=\"" + num(kSize - kMargin - 8) + "\" y=\"" +
         num(kSize - kMargin + 24) +
         "\" font-size=\"13\" fill=\"#24292f\">inf</text>\n";
  svg += "<text x=\"" + num(kSize / 2 - 18) + "\" y=\"" +
         num(kSize - kMargin + 36) +
         "\" font-size=\"13\" fill=\"#24292f\">f1/c1</text>\n";
  svg += "<text x=\"" + num(kMargin - 38) + "\" y=\"" + num(kSize / 2) +
         "\" font-size=\"13\" fill=\"#24292f\">f2/c2</text>\n";

  for (size_t i = 0; i < spec.profiles.size(); ++i) {
    const InvariantProfile& inv = spec.profiles[i];
    ExtRational r1 = inv.norm_map.f[0].infinite
                         ? ExtRational::inf()
                         : ExtRational::finite(inv.norm_map.f[0].value /
                                               inv.traces.c[0]);
    ExtRational r2 = inv.norm_map.f[1].infinite
                         ? ExtRational::inf()
                         : ExtRational::finite(inv.norm_map.f[1].value /
                                               inv.traces.c[1]);
    bool ai = is_AI(inv).ai;
    bool highlighted = std::find(spec.highlight.begin(), spec.highlight.end(),
                                 int(i)) != spec.highlight.end();
    std::string fill = ai ? "#2da44e" : "#cf222e";
    std::string extra = highlighted
                            ? " stroke=\"#bf8700\" stroke-width=\"2.5\""
                            : "";
    std::string center = pt(squash(r1), squash(r2));
    auto comma = center.find(',');
    svg += "<circle cx=\"" + center.substr(0, comma) + "\" cy=\"" +
           center.substr(comma + 1) + "\" r=\"5\" fill=\"" + fill + "\"" +
           extra + "/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace ctkit
