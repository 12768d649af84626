#include "mopf/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace mopf {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fixed2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void decision_values(const ProblemDef& p, const DecisionPoint& x, std::vector<double>& out) {
  out.assign(p.variables().size(), 0.0);
  for (std::size_t i = 0; i < x.integer_part.size(); ++i)
    out[p.integer_index()[i]] = static_cast<double>(x.integer_part[i]);
  for (std::size_t i = 0; i < x.continuous_part.size(); ++i)
    out[p.continuous_index()[i]] = x.continuous_part[i];
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

std::string front_to_csv(const ProblemDef& p, const FrontArchive& a) {
  if (a.empty()) throw std::invalid_argument("cannot export an empty archive");
  std::string out;
  const std::size_t n = p.variables().size();
  for (std::size_t i = 0; i < n; ++i) {
    out += "x_" + std::to_string(i + 1);
    out += ',';
  }
  for (std::size_t i = 0; i < p.num_objectives(); ++i) {
    out += "f_" + std::to_string(i + 1);
    out += (i + 1 < p.num_objectives()) ? ',' : '\n';
  }
  std::vector<double> xs;
  for (const auto& e : a.entries) {
    decision_values(p, e.x, xs);
    for (double v : xs) {
      out += num(v);
      out += ',';
    }
    for (std::size_t i = 0; i < e.f.size(); ++i) {
      out += num(e.f[i]);
      out += (i + 1 < e.f.size()) ? ',' : '\n';
    }
  }
  return out;
}

std::string front_to_json(const ProblemDef& p, const FrontArchive& a) {
  if (a.empty()) throw std::invalid_argument("cannot export an empty archive");
  std::string out = "[\n";
  std::vector<double> xs;
  for (std::size_t e = 0; e < a.entries.size(); ++e) {
    decision_values(p, a.entries[e].x, xs);
    out += "  {\"x\": [";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out += num(xs[i]);
      if (i + 1 < xs.size()) out += ", ";
    }
    out += "], \"f\": [";
    const auto& f = a.entries[e].f;
    for (std::size_t i = 0; i < f.size(); ++i) {
      out += num(f[i]);
      if (i + 1 < f.size()) out += ", ";
    }
    out += "]}";
    out += (e + 1 < a.entries.size()) ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string front_to_svg(const FrontArchive& a, const std::vector<int>& projection) {
  if (a.empty()) throw std::invalid_argument("cannot plot an empty archive");
  if (projection.size() != 2 && projection.size() != 3)
    throw std::invalid_argument("projection must name two or three objectives");
  const std::size_t ell = a.entries.front().f.size();
  for (int idx : projection)
    if (idx < 1 || static_cast<std::size_t>(idx) > ell)
      throw std::invalid_argument("projection index out of range");

  // planar coordinates per entry
  std::vector<std::pair<double, double>> pts;
  pts.reserve(a.size());
  for (const auto& e : a.entries) {
    if (projection.size() == 2) {
      pts.emplace_back(e.f[projection[0] - 1], -e.f[projection[1] - 1]);
    } else {
      // fixed-angle axonometric view of (p,q,r)
      double pa = e.f[projection[0] - 1];
      double qa = e.f[projection[1] - 1];
      double ra = e.f[projection[2] - 1];
      pts.emplace_back(0.866 * (qa - pa), -(ra - 0.5 * (pa + qa)));
    }
  }

  double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
  for (const auto& [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax - xmin < 1e-12) {
    xmin -= 1;
    xmax += 1;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 1;
    ymax += 1;
  }

  const double W = 640, H = 480, M = 50;
  auto sx = [&](double x) { return M + (x - xmin) / (xmax - xmin) * (W - 2 * M); };
  auto sy = [&](double y) { return M + (y - ymin) / (ymax - ymin) * (H - 2 * M); };

  auto text_at = [](double x, double y, const std::string& body) {
    return "<text x=\"" + fixed2(x) + "\" y=\"" + fixed2(y) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">" +
           body + "</text>\n";
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + fixed2(M) + "\" y1=\"" + fixed2(H - M) + "\" x2=\"" +
         fixed2(W - M) + "\" y2=\"" + fixed2(H - M) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fixed2(M) + "\" y1=\"" + fixed2(M) + "\" x2=\"" + fixed2(M) +
         "\" y2=\"" + fixed2(H - M) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (projection.size() == 2) {
    svg += text_at(W / 2, H - 12, "f_" + std::to_string(projection[0]));
    svg += text_at(M, M - 24 + 14, "f_" + std::to_string(projection[1]));
  } else {
    std::string label;
    for (std::size_t i = 0; i < projection.size(); ++i) {
      label += "f_" + std::to_string(projection[i]);
      if (i + 1 < projection.size()) label += " / ";
    }
    svg += text_at(W / 2, H - 12, label);
  }
  for (const auto& [x, y] : pts)
    svg += "<circle cx=\"" + fixed2(sx(x)) + "\" cy=\"" + fixed2(sy(y)) +
           "\" r=\"3\" fill=\"crimson\"/>\n";
  svg += "</svg>\n";
  return svg;
}

void export_front_csv(const ProblemDef& p, const FrontArchive& a, const std::string& path) {
  write_file(path, front_to_csv(p, a));
}

void export_front_json(const ProblemDef& p, const FrontArchive& a,
                       const std::string& path) {
  write_file(path, front_to_json(p, a));
}

void emit_plot_svg(const FrontArchive& a, const std::vector<int>& projection,
                   const std::string& path) {
  write_file(path, front_to_svg(a, projection));
}

std::string report_to_json(const RunReport& r) {
  std::string out = "{\n";
  out += "  \"problem\": \"" + r.problem + "\",\n";
  out += "  \"algorithm\": " + std::to_string(r.algorithm_id) + ",\n";
  out += "  \"grid_n\": " + std::to_string(r.grid_n) + ",\n";
  out += "  \"subproblems_attempted\": " + std::to_string(r.subproblems_attempted) + ",\n";
  out += "  \"minima_solves\": " + std::to_string(r.minima_solves) + ",\n";
  out += "  \"lp_solves\": " + std::to_string(r.lp_solves) + ",\n";
  out += "  \"front_size\": " + std::to_string(r.front_size) + ",\n";
  out += "  \"wall_seconds\": " + num(r.wall_seconds) + "\n";
  out += "}\n";
  return out;
}

void write_report_json(const RunReport& r, const std::string& path) {
  write_file(path, report_to_json(r));
}

}  // namespace mopf
