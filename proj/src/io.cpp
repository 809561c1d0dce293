#include "mpfv/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mpfv::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return x;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string field_csv(const CellField& u) {
  const Grid& g = u.grid();
  std::string out = "i,j,x_center,y_center,value\n";
  out.reserve(out.size() + g.cell_count() * 64);
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      out += std::to_string(i);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += format_double(g.x_center(i));
      out += ',';
      out += format_double(g.y_center(j));
      out += ',';
      out += format_double(u(CellIndex{i, j}));
      out += '\n';
    }
  }
  return out;
}

CellField parse_field_csv(std::string_view text) {
  std::map<std::pair<int, int>, double> cells;
  int nx = 0;
  int ny = 0;
  bool header = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != "i,j,x_center,y_center,value") throw std::invalid_argument("unexpected field CSV header");
      header = false;
      continue;
    }
    const auto cols = split_csv(line);
    if (cols.size() != 5) throw std::invalid_argument("field CSV rows need 5 columns");
    int i = 0;
    int j = 0;
    std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), i);
    std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), j);
    if (i < 0 || j < 0) throw std::invalid_argument("negative cell index in field CSV");
    cells[{i, j}] = parse_double(cols[4]);
    nx = std::max(nx, i + 1);
    ny = std::max(ny, j + 1);
  }
  if (header) throw std::invalid_argument("empty field CSV");
  const Grid g(nx, ny);
  if (cells.size() != g.cell_count()) throw std::invalid_argument("field CSV does not cover every cell");
  CellField u(g);
  for (const auto& [ij, v] : cells) u(CellIndex{ij.first, ij.second}) = v;
  return u;
}

CellField read_field_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_field_csv(ss.str());
}

std::string report_header() {
  return "scheme,limiter,case,ic,init,ssp,nx,ny,courant_target,end_time,dt,n_steps,rel_l1,rel_l2,rel_linf,"
         "min,max,max_mp_violation,max_courant,max_mass_drift";
}

std::string report_row(const RunResult& r) {
  const ExperimentSpec& s = r.spec;
  const ErrorReport& e = r.report;
  std::ostringstream o;
  o << to_string(s.scheme) << ',' << to_string(s.limiter) << ',' << to_string(s.stream.variant) << ','
    << to_string(s.ic) << ',' << to_string(s.init) << ',' << to_string(s.ssp) << ',' << s.nx << ',' << s.ny << ','
    << format_double(s.courant_target) << ',' << format_double(s.end_time) << ',' << format_double(r.plan.dt) << ','
    << r.plan.n_steps << ',' << format_double(e.rel_l1) << ',' << format_double(e.rel_l2) << ','
    << format_double(e.rel_linf) << ',' << format_double(e.min_val) << ',' << format_double(e.max_val) << ','
    << (e.max_mp_violation ? format_double(*e.max_mp_violation) : std::string("NA")) << ','
    << format_double(e.max_courant) << ',' << format_double(e.max_mass_drift);
  return o.str();
}

std::string report_csv(const RunResult& r) { return report_header() + "\n" + report_row(r) + "\n"; }

std::string stage_log_csv(const std::vector<StageRecord>& stages) {
  std::string out = "step,stage,t,courant,mp_violation,identity_residual,min_alpha,min,max\n";
  for (const StageRecord& s : stages) {
    out += std::to_string(s.step) + ',' + std::to_string(s.stage) + ',' + format_double(s.t) + ',' +
           format_double(s.courant) + ',' + (s.mp_violation ? format_double(*s.mp_violation) : "NA") + ',' +
           format_double(s.identity_residual) + ',' + format_double(s.min_alpha) + ',' + format_double(s.min_val) +
           ',' + format_double(s.max_val) + '\n';
  }
  return out;
}

std::string spec_text(const ExperimentSpec& s) {
  std::ostringstream o;
  o << "scheme=" << to_string(s.scheme) << "\nlimiter=" << to_string(s.limiter)
    << "\ncase=" << to_string(s.stream.variant) << "\nperiod=" << format_double(s.stream.period) << "\nic=" << to_string(s.ic) << "\ninit=" << to_string(s.init)
    << "\nssp=" << to_string(s.ssp) << "\nnx=" << s.nx << "\nny=" << s.ny
    << "\ncn=" << format_double(s.courant_target) << "\nend=" << format_double(s.end_time)
    << "\nsteps=" << (s.steps ? std::to_string(*s.steps) : std::string("auto")) << "\n";
  return o.str();
}

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mpfv::io
