#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cohen/errors.hpp"
#include "cohen/numeric.hpp"

namespace cohen {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw NumericError("bad number '" + text + "' for " + what);
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw NumericError("bad integer '" + text + "' for " + what);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void write_csv(std::ostream& out, const PhaseGrid& grid) {
  out << "# q_min=" << format_double(grid.q.min) << " dq=" << format_double(grid.q.step) << " n_q=" << grid.q.size
      << " p_min=" << format_double(grid.p.min) << " dp=" << format_double(grid.p.step) << " n_p=" << grid.p.size
      << " hbar=" << format_double(grid.hbar) << " kernel=" << grid.kernel.name();
  if (grid.kernel.lambda()) out << " lambda=" << to_string(*grid.kernel.lambda());
  out << "\n# re,im interleaved row-major\n";
  for (std::size_t j = 0; j < grid.q.size; ++j) {
    for (std::size_t k = 0; k < grid.p.size; ++k) {
      const cplx v = grid.at(j, k);
      if (k) out << ',';
      out << format_double(v.real()) << ',' << format_double(v.imag());
    }
    out << '\n';
  }
}

PhaseGrid read_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || !header.starts_with("# ")) throw NumericError("missing PhaseGrid header");
  std::map<std::string, std::string> fields;
  std::istringstream hs(header.substr(2));
  std::string token;
  while (hs >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw NumericError("malformed header field '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto field = [&](const char* key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw NumericError(std::string("header lacks ") + key);
    return it->second;
  };
  GridAxis q{parse_double(field("q_min"), "q_min"), parse_double(field("dq"), "dq"), parse_size(field("n_q"), "n_q")};
  GridAxis p{parse_double(field("p_min"), "p_min"), parse_double(field("dp"), "dp"), parse_size(field("n_p"), "n_p")};
  if (!(q.step > 0) || !(p.step > 0)) throw NumericError("grid steps must be positive");
  const double hbar = parse_double(field("hbar"), "hbar");
  std::optional<Rational> lambda;
  if (auto it = fields.find("lambda"); it != fields.end()) {
    Rational r;
    if (r.set_str(it->second, 10) != 0 || r.get_den() == 0) throw NumericError("bad lambda in header");
    r.canonicalize();
    lambda = r;
  }
  PhaseGrid grid{q, p, hbar, parse_kernel(field("kernel"), lambda), std::vector<cplx>(q.size * p.size)};

  std::string line;
  if (!std::getline(in, line) || !line.starts_with("#")) throw NumericError("missing PhaseGrid column header");
  for (std::size_t j = 0; j < q.size; ++j) {
    if (!std::getline(in, line)) throw NumericError("PhaseGrid has too few rows");
    const auto cells = split(line, ',');
    if (cells.size() != 2 * p.size) throw NumericError("PhaseGrid row " + std::to_string(j) + " has wrong width");
    for (std::size_t k = 0; k < p.size; ++k) {
      grid.values[j * p.size + k] = {parse_double(cells[2 * k], "re"), parse_double(cells[2 * k + 1], "im")};
    }
  }
  return grid;
}

GridState read_state_csv(std::istream& in, double hbar) {
  std::vector<double> qs;
  std::vector<cplx> psi;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split(line, ',');
    if (cells.size() != 3) throw NumericError("state rows must be q,re,im");
    if (qs.empty() && cells[0] == "q") continue;  // optional column header
    qs.push_back(parse_double(trim(cells[0]), "q"));
    psi.emplace_back(parse_double(trim(cells[1]), "re"), parse_double(trim(cells[2]), "im"));
  }
  if (qs.size() < 2) throw NumericError("state file needs at least two samples");
  const double dq = (qs.back() - qs.front()) / static_cast<double>(qs.size() - 1);
  for (std::size_t j = 1; j < qs.size(); ++j) {
    if (std::abs(qs[j] - qs[j - 1] - dq) > 1e-9 * std::max(1.0, std::abs(dq))) {
      throw NumericError("state samples must lie on a uniform q grid");
    }
  }
  return GridState::from_samples(std::move(psi), GridAxis{qs.front(), dq, qs.size()}, hbar);
}

GridState make_state(std::string_view spec, const GridAxis& axis, double hbar) {
  auto parameters = [&](std::string_view body) {
    std::map<std::string, std::string> out;
    for (const auto& item : split(std::string(body), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw NumericError("state parameter '" + item + "' lacks '='");
      out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
    return out;
  };
  if (spec.starts_with("gaussian:")) {
    auto params = parameters(spec.substr(9));
    double sigma = 0, q0 = 0, p0 = 0;
    bool have_sigma = false;
    for (const auto& [key, value] : params) {
      if (key == "sigma") {
        sigma = parse_double(value, key);
        have_sigma = true;
      } else if (key == "q0") {
        q0 = parse_double(value, key);
      } else if (key == "p0") {
        p0 = parse_double(value, key);
      } else {
        throw NumericError("unknown gaussian parameter '" + key + "'");
      }
    }
    if (!have_sigma) throw NumericError("gaussian state needs sigma=<v>");
    return GridState::gaussian(axis, hbar, sigma, q0, p0);
  }
  if (spec.starts_with("oscillator:")) {
    auto params = parameters(spec.substr(11));
    if (params.size() != 1 || !params.contains("n")) throw NumericError("oscillator state needs exactly n=<int>");
    return GridState::oscillator(axis, hbar, static_cast<int>(parse_size(params["n"], "n")));
  }
  std::ifstream file{std::string(spec)};
  if (!file) throw NumericError("unknown state generator or unreadable file '" + std::string(spec) + "'");
  return read_state_csv(file, hbar);
}

}  // namespace cohen
