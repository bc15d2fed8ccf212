#include "netform/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netform {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  // integers up to 2^53 print as integers, not 1e+02
  if (x == std::floor(x) && std::abs(x) < 9007199254740992.0) {
    std::snprintf(buf, sizeof buf, "%.0f", x);
    return buf;
  }
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

void write_cell(std::ostream& out, const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) {
    out << cell;
    return;
  }
  out << '"';
  for (char c : cell) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out << ',';
    write_cell(out, row[k]);
  }
  out << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  write_row(out, header);
  for (const auto& row : rows) write_row(out, row);
}

void write_edges_csv(std::ostream& out, const EvolvingGraph& g) {
  out << "from,to,t\n";
  for (AgentId id = 1; id <= g.t(); ++id)
    for (const Link& l : g.agent(id).followees)
      out << id << ',' << l.peer << ',' << l.t << '\n';
}

void write_events_csv(std::ostream& out, const std::vector<StepEvent>& events) {
  out << "t,actor,met,via,linked\n";
  for (const StepEvent& e : events)
    out << e.t << ',' << e.actor << ',' << e.met << ',' << to_string(e.via) << ','
        << (e.linked ? 1 : 0) << '\n';
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec && !std::filesystem::is_directory(dir))
    throw std::runtime_error("cannot create directory " + dir.string() + ": " + ec.message());
}

void write_file(const std::filesystem::path& file, const std::string& content) {
  if (file.has_parent_path()) ensure_dir(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("short write to " + file.string());
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

constexpr const char* kPalette[] = {"#2266aa", "#cc5533", "#338855", "#8844aa",
                                    "#aa8822", "#117788", "#aa3366", "#556677"};

double tick_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  if (norm < 1.5) return mag;
  if (norm < 3.5) return 2.0 * mag;
  if (norm < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string svg_line_chart(const std::vector<SvgSeries>& series, const SvgOptions& opt) {
  const double W = opt.width, H = opt.height;
  const double ml = 70, mr = 20, mt = opt.title.empty() ? 20 : 44, mb = 52;

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool first = true;
  for (const auto& s : series)
    for (auto [x, y] : s.points) {
      if (opt.log_x && x <= 0) continue;
      if (opt.log_y && y <= 0) continue;
      if (first) { x_min = x_max = x; y_min = y_max = y; first = false; }
      x_min = std::min(x_min, x); x_max = std::max(x_max, x);
      y_min = std::min(y_min, y); y_max = std::max(y_max, y);
    }
  auto txf = [&](double v) { return opt.log_x ? std::log10(v) : v; };
  auto tyf = [&](double v) { return opt.log_y ? std::log10(v) : v; };
  double lx0 = txf(x_min), lx1 = txf(x_max), ly0 = tyf(y_min), ly1 = tyf(y_max);
  if (lx1 - lx0 < 1e-12) { lx0 -= 0.5; lx1 += 0.5; }
  if (ly1 - ly0 < 1e-12) { ly0 -= 0.5; ly1 += 0.5; }

  auto px = [&](double x) { return ml + (txf(x) - lx0) / (lx1 - lx0) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (tyf(y) - ly0) / (ly1 - ly0) * (H - mt - mb); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  if (!opt.title.empty())
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << opt.title << "</text>\n";

  // frame
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << (W - ml - mr)
      << "\" height=\"" << (H - mt - mb)
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  // ticks: decades on log axes, rounded steps otherwise
  auto emit_xtick = [&](double v) {
    const double X = px(v);
    out << "<line x1=\"" << X << "\" y1=\"" << (H - mb) << "\" x2=\"" << X << "\" y2=\""
        << (H - mb + 5) << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << X << "\" y=\"" << (H - mb + 18) << "\" text-anchor=\"middle\">"
        << tick_label(v) << "</text>\n";
  };
  auto emit_ytick = [&](double v) {
    const double Y = py(v);
    out << "<line x1=\"" << (ml - 5) << "\" y1=\"" << Y << "\" x2=\"" << ml << "\" y2=\"" << Y
        << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << (ml - 8) << "\" y=\"" << (Y + 4) << "\" text-anchor=\"end\">"
        << tick_label(v) << "</text>\n";
  };
  if (opt.log_x) {
    for (int e = static_cast<int>(std::ceil(lx0 - 1e-9)); e <= std::floor(lx1 + 1e-9); ++e)
      emit_xtick(std::pow(10.0, e));
  } else {
    const double step = tick_step(lx1 - lx0);
    for (double v = std::ceil(lx0 / step) * step; v <= lx1 + 1e-9 * step; v += step)
      emit_xtick(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }
  if (opt.log_y) {
    for (int e = static_cast<int>(std::ceil(ly0 - 1e-9)); e <= std::floor(ly1 + 1e-9); ++e)
      emit_ytick(std::pow(10.0, e));
  } else {
    const double step = tick_step(ly1 - ly0);
    for (double v = std::ceil(ly0 / step) * step; v <= ly1 + 1e-9 * step; v += step)
      emit_ytick(std::abs(v) < 1e-12 * step ? 0.0 : v);
  }

  if (!opt.x_label.empty())
    out << "<text x=\"" << (ml + (W - ml - mr) / 2) << "\" y=\"" << (H - 10)
        << "\" text-anchor=\"middle\">" << opt.x_label << "</text>\n";
  if (!opt.y_label.empty())
    out << "<text x=\"16\" y=\"" << (mt + (H - mt - mb) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (mt + (H - mt - mb) / 2)
        << ")\">" << opt.y_label << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof kPalette[0])];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
    bool any = false;
    for (auto [x, y] : series[s].points) {
      if ((opt.log_x && x <= 0) || (opt.log_y && y <= 0)) continue;
      out << px(x) << ',' << py(y) << ' ';
      any = true;
    }
    out << "\"/>\n";
    if (any && !series[s].label.empty())
      out << "<text x=\"" << (ml + 10) << "\" y=\"" << (mt + 16 + 16 * s) << "\" fill=\""
          << color << "\">" << series[s].label << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace netform
