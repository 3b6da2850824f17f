#include "padyn/svg.hpp"

#include <array>
#include <cstdio>

namespace padyn::svg {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string palette(std::size_t index) {
  static constexpr std::array<const char*, 8> colors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                        "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  return colors[index % colors.size()];
}

std::string document(const Canvas& canvas, const std::vector<Layer>& layers, bool unit_circle) {
  const double w = canvas.xmax - canvas.xmin, h = canvas.ymax - canvas.ymin;
  const double px = static_cast<double>(canvas.pixels);
  auto sx = [&](double x) { return fixed((x - canvas.xmin) / w * px); };
  auto sy = [&](double y) { return fixed((canvas.ymax - y) / h * px); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(canvas.pixels) + "\" height=\"" +
         std::to_string(canvas.pixels) + "\" viewBox=\"0 0 " + std::to_string(canvas.pixels) + " " +
         std::to_string(canvas.pixels) + "\">\n";
  if (!canvas.title.empty()) out += "  <title>" + canvas.title + "</title>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (unit_circle) {
    out += "  <circle cx=\"" + sx(0) + "\" cy=\"" + sy(0) + "\" r=\"" + fixed(px / w) +
           "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }
  for (const auto& layer : layers) {
    out += "  <g id=\"" + layer.id + "\" stroke=\"" + layer.color + "\" fill=\"" + layer.color + "\">\n";
    if (layer.polyline && layer.points.size() > 1) {
      out += "    <polyline fill=\"none\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < layer.points.size(); ++i) {
        if (i) out += " ";
        out += sx(layer.points[i].x) + "," + sy(layer.points[i].y);
      }
      out += "\"/>\n";
    }
    if (layer.markers) {
      for (const auto& p : layer.points)
        out += "    <circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"3\"/>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace padyn::svg
