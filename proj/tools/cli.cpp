#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>

#include "cohen/errors.hpp"
#include "cohen/kernels.hpp"
#include "cohen/numeric.hpp"
#include "cohen/parser.hpp"
#include "cohen/render.hpp"
#include "cohen/transforms.hpp"

namespace cohen::cli {

namespace {

using json = nlohmann::ordered_json;

struct GoldenRow {
  const char* kernel;
  const char* image;
};

// Images of qh^2*ph^2 in canonical form.
constexpr GoldenRow kGoldenTable[] = {
    {"weyl", "q^2*p^2 + (2*i)*hbar^1*q^1*p^1 + (-1/2)*hbar^2"},
    {"cos", "q^2*p^2 + (2*i)*hbar^1*q^1*p^1"},
    {"sinc", "q^2*p^2 + (2*i)*hbar^1*q^1*p^1 + (-1/3)*hbar^2"},
    {"standard", "q^2*p^2"},
    {"antistandard", "q^2*p^2 + (4*i)*hbar^1*q^1*p^1 + (-2)*hbar^2"},
};

constexpr double kPairTolerance = 1e-6;

struct Options {
  std::string expression;
  std::string kernel;
  std::string lambda;
  int order = -1;
  std::string output = "text";
  double hbar = 1.0;
  std::string state;
  std::string op;
  std::size_t n = 256;
  double span = 8.0;
  std::string out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_complex(cplx z) {
  std::string out = format_double(z.real());
  out += z.imag() < 0 ? " - " : " + ";
  out += format_double(std::abs(z.imag())) + "*i";
  return out;
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json axis_json(const GridAxis& a) { return {{"min", a.min}, {"step", a.step}, {"size", a.size}}; }

std::optional<Rational> parse_lambda(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw UsageError("--lambda expects a rational such as 1 or 3/2");
  r.canonicalize();
  if (sgn(r) <= 0) throw UsageError("--lambda must be positive");
  return r;
}

std::optional<int> series_order(const Options& o) {
  if (o.order < 0) return std::nullopt;
  return o.order;
}

json kernel_json(const KernelSpec& k) {
  if (k.lambda()) return k.name() + "(lambda=" + to_string(*k.lambda()) + ")";
  return k.name();
}

void require_symbolic_output(const Options& o) {
  if (o.output == "csv") throw UsageError("--output csv only applies to dist");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json envelope(const std::string& subcommand, const json& kernel, const json& input, const json& result,
              json metadata) {
  return {{"subcommand", subcommand}, {"kernel", kernel}, {"input", input}, {"result", result},
          {"metadata", std::move(metadata)}};
}

template <class Poly>
json poly_json(const Poly& poly) {
  return {{"canonical", render(poly)}, {"pretty", render_pretty(poly)}};
}

template <class In, class Out>
int symbolic_map(const std::string& name, const Options& o, MapDirection direction,
                 const std::function<In(std::string_view)>& parser, std::ostream& out) {
  require_symbolic_output(o);
  const KernelSpec kernel = parse_kernel(o.kernel, parse_lambda(o.lambda));
  const In input = parser(o.expression);
  const Out image = map(input, kernel, direction, series_order(o));
  if (o.output == "json") {
    emit(out, envelope(name, kernel_json(kernel), o.expression, poly_json(image),
                       {{"hbar_symbolic", true}, {"input_canonical", render(input)}}));
  } else {
    out << render_pretty(image) << '\n';
  }
  return ok;
}

int roundtrip(const Options& o, std::ostream& out) {
  require_symbolic_output(o);
  const KernelSpec kernel = parse_kernel(o.kernel, parse_lambda(o.lambda));
  bool exact = false;
  json image;
  try {
    const OperatorPoly input = parse_operator(o.expression);
    const PhasePoly forward = map(input, kernel, MapDirection::observable_forward(), series_order(o));
    exact = map(forward, kernel, MapDirection::observable_inverse(), series_order(o)) == input;
    image = poly_json(forward);
  } catch (const ParseError& e) {
    if (e.kind() != ParseErrorKind::phase_variable_in_operator_mode) throw;
    const PhasePoly input = parse_phase(o.expression);
    const OperatorPoly forward = map(input, kernel, MapDirection::observable_inverse(), series_order(o));
    exact = map(forward, kernel, MapDirection::observable_forward(), series_order(o)) == input;
    image = poly_json(forward);
  }
  const char* status = exact ? "EXACT" : "MISMATCH";
  if (o.output == "json") {
    emit(out, envelope("roundtrip", kernel_json(kernel), o.expression, status,
                       {{"hbar_symbolic", true}, {"image", image}}));
  } else {
    out << status << '\n';
  }
  return exact ? ok : computation_error;
}

int kernels(const Options& o, std::ostream& out) {
  require_symbolic_output(o);
  if (!o.kernel.empty()) {
    const KernelSpec kernel = parse_kernel(o.kernel, parse_lambda(o.lambda));
    const int order = o.order < 0 ? 4 : o.order;
    const KernelSeries series = taylor(kernel, order);
    json rows = json::array();
    for (int d = 0; d <= order; ++d) {
      for (int k = 0; k <= d; ++k) {
        const ScalarSum& c = series.coefficient(d - k, k);
        if (!c.is_zero()) rows.push_back({{"j", d - k}, {"k", k}, {"coefficient", render(c)}});
      }
    }
    if (o.output == "json") {
      emit(out, envelope("kernels", kernel_json(kernel), nullptr, rows,
                         {{"hbar_symbolic", true}, {"order", order}, {"marginal", kernel.marginal()}}));
      return ok;
    }
    out << "taylor coefficients c_jk of theta^j tau^k through order " << order << '\n';
    for (const auto& row : rows) {
      out << row["j"].get<int>() << ' ' << row["k"].get<int>() << "  " << row["coefficient"].get<std::string>()
          << '\n';
    }
    return ok;
  }
  if (o.output == "json") {
    json rows = json::array();
    for (const auto& info : kernel_catalog()) {
      rows.push_back({{"name", info.name},
                      {"aliases", info.aliases},
                      {"distribution", info.distribution},
                      {"rule", info.rule},
                      {"f", info.formula}});
    }
    rows.push_back({{"name", "custom:<file>"},
                    {"aliases", json::array()},
                    {"distribution", ""},
                    {"rule", ""},
                    {"f", "lines 'j k re_num/re_den im_num/im_den hbar_pow'"}});
    emit(out, envelope("kernels", nullptr, nullptr, rows, {{"hbar_symbolic", true}}));
    return ok;
  }
  out << std::left << std::setw(14) << "name" << std::setw(24) << "aliases" << std::setw(32) << "distribution"
      << std::setw(26) << "rule" << "f(theta, tau)\n";
  for (const auto& info : kernel_catalog()) {
    std::string aliases;
    for (const auto& a : info.aliases) aliases += (aliases.empty() ? "" : ",") + a;
    out << std::setw(14) << info.name << std::setw(24) << (aliases.empty() ? "-" : aliases) << std::setw(32)
        << info.distribution << std::setw(26) << info.rule << info.formula << '\n';
  }
  out << std::setw(14) << "custom:<file>"
      << "lines 'j k re_num/re_den im_num/im_den hbar_pow'\n";
  return ok;
}

int table(const Options& o, std::ostream& out) {
  require_symbolic_output(o);
  const OperatorPoly monomial = OperatorPoly::monomial(2, 2);
  bool all_match = true;
  json rows = json::array();
  for (const auto& row : kGoldenTable) {
    const std::string image =
        render(map(monomial, parse_kernel(row.kernel), MapDirection::observable_forward()));
    const bool match = image == row.image;
    all_match = all_match && match;
    rows.push_back({{"kernel", row.kernel}, {"image", image}, {"expected", row.image}, {"match", match}});
  }
  if (o.output == "json") {
    emit(out, envelope("table", "all", "qh^2*ph^2", rows, {{"hbar_symbolic", true}, {"all_match", all_match}}));
  } else {
    out << "image of qh^2*ph^2\n";
    for (const auto& row : rows) {
      out << std::left << std::setw(14) << row["kernel"].get<std::string>() << row["image"].get<std::string>();
      if (row["match"].get<bool>()) {
        out << "  [match]\n";
      } else {
        out << "  [DIFF expected " << row["expected"].get<std::string>() << "]\n";
      }
    }
  }
  return all_match ? ok : golden_mismatch;
}

GridState numeric_state(const Options& o) {
  return make_state(o.state, GridAxis::centered(o.n, o.span), o.hbar);
}

json numeric_metadata(const Options& o) {
  return {{"hbar_symbolic", false}, {"hbar", o.hbar}, {"n", o.n}, {"span", o.span}};
}

int dist(const Options& o, std::ostream& out) {
  const KernelSpec kernel = parse_kernel(o.kernel, parse_lambda(o.lambda));
  const PhaseGrid grid = cohen_distribution(numeric_state(o), kernel);
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw UsageError("cannot write '" + o.out_path + "'");
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  if (o.output == "json") {
    json re = json::array();
    json im = json::array();
    for (std::size_t j = 0; j < grid.q.size; ++j) {
      json re_row = json::array();
      json im_row = json::array();
      for (std::size_t k = 0; k < grid.p.size; ++k) {
        re_row.push_back(grid.at(j, k).real());
        im_row.push_back(grid.at(j, k).imag());
      }
      re.push_back(std::move(re_row));
      im.push_back(std::move(im_row));
    }
    emit(sink, envelope("dist", kernel_json(kernel), o.state,
                        {{"q", axis_json(grid.q)}, {"p", axis_json(grid.p)}, {"re", re}, {"im", im}},
                        numeric_metadata(o)));
  } else {
    write_csv(sink, grid);
  }
  if (!o.out_path.empty() && o.output != "json") out << "wrote " << o.out_path << '\n';
  return ok;
}

int pair_command(const Options& o, std::ostream& out) {
  require_symbolic_output(o);
  const KernelSpec kernel = parse_kernel(o.kernel, parse_lambda(o.lambda));
  const OperatorPoly op = parse_operator(o.op);
  const PhasePoly g = map(op, kernel, MapDirection::observable_forward(), series_order(o));
  const GridState state = numeric_state(o);
  const cplx trace = trace_expectation(state, op);
  const cplx integral = pair(cohen_distribution(state, kernel), g);
  const double difference = std::abs(trace - integral);
  const double allowed = kPairTolerance * std::max(1.0, std::abs(trace));
  const bool agree = difference <= allowed;
  if (o.output == "json") {
    json metadata = numeric_metadata(o);
    metadata["tolerance"] = kPairTolerance;
    metadata["symbol"] = poly_json(g);
    emit(out, envelope("pair", kernel_json(kernel), {{"state", o.state}, {"op", o.op}},
                       {{"trace", complex_json(trace)},
                        {"phase_space", complex_json(integral)},
                        {"difference", difference},
                        {"agree", agree}},
                       std::move(metadata)));
  } else {
    out << "tr(rho G)      = " << format_complex(trace) << '\n'
        << "int F g dq dp  = " << format_complex(integral) << '\n'
        << "|difference|   = " << format_double(difference) << '\n'
        << "tolerance      = " << format_double(kPairTolerance) << (agree ? " (agree)" : " (DISAGREE)") << '\n';
  }
  return agree ? ok : computation_error;
}

void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (e.offset() <= text.size()) err << "  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-class phase-space maps: exact symbolic images and numeric distributions", "cohen"};
  app.require_subcommand(1);
  Options o;

  auto output_flag = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };
  auto kernel_flags = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--kernel", o.kernel, "Kernel name, alias, or custom:<file>");
    if (required) opt->required();
    sub->add_option("--lambda", o.lambda, "Scale lambda for p-function / q-function (rational)");
  };
  auto order_flag = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Series truncation order (default: degree + 2)")
        ->check(CLI::NonNegativeNumber);
  };
  auto numeric_flags = [&](CLI::App* sub) {
    sub->add_option("--state", o.state, "gaussian:sigma=<v>[,q0=<v>,p0=<v>], oscillator:n=<k>, or a q,re,im file")
        ->required();
    sub->add_option("--hbar", o.hbar, "Numeric value of hbar")->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n, "Grid points per axis (power of two)");
    sub->add_option("--span", o.span, "Grid half-width: samples cover [-span, span)")->check(CLI::PositiveNumber);
  };

  struct SymbolicCommand {
    const char* name;
    const char* help;
    const char* expression_help;
  };
  const SymbolicCommand symbolic[] = {
      {"map", "Observable image G -> g", "Operator expression in qh, ph"},
      {"quantize", "Quantization g -> G", "Phase-space expression in q, p"},
      {"state-map", "Distribution of a density operator rho -> F (carries 1/h)", "Operator expression in qh, ph"},
      {"state-unmap", "Density operator of a distribution F -> rho (carries h)", "Phase-space expression in q, p"},
      {"roundtrip", "Map forward and back; report exact equality", "Operator or phase-space expression"},
  };
  for (const auto& cmd : symbolic) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("expression", o.expression, cmd.expression_help)->required();
    kernel_flags(sub, true);
    order_flag(sub);
    output_flag(sub, {"text", "json", "csv"});
  }

  CLI::App* kernels_cmd = app.add_subcommand("kernels", "List kernels, or Taylor coefficients of one kernel");
  kernel_flags(kernels_cmd, false);
  order_flag(kernels_cmd);
  output_flag(kernels_cmd, {"text", "json", "csv"});

  CLI::App* table_cmd = app.add_subcommand("table", "Images of qh^2*ph^2 checked against stored results");
  output_flag(table_cmd, {"text", "json", "csv"});

  CLI::App* dist_cmd = app.add_subcommand("dist", "Sample the phase-space distribution of a state");
  kernel_flags(dist_cmd, true);
  numeric_flags(dist_cmd);
  output_flag(dist_cmd, {"text", "json", "csv"});
  dist_cmd->add_option("--out", o.out_path, "Write to this file instead of standard output");

  CLI::App* pair_cmd = app.add_subcommand("pair", "Compare tr(rho G) with the phase-space integral of F g");
  kernel_flags(pair_cmd, true);
  numeric_flags(pair_cmd);
  order_flag(pair_cmd);
  output_flag(pair_cmd, {"text", "json", "csv"});
  pair_cmd->add_option("--op", o.op, "Operator expression in qh, ph")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const std::string& parsed_text = name == "pair" ? o.op : o.expression;
  try {
    if (name == "map") {
      return symbolic_map<OperatorPoly, PhasePoly>(name, o, MapDirection::observable_forward(), parse_operator, out);
    }
    if (name == "quantize") {
      return symbolic_map<PhasePoly, OperatorPoly>(name, o, MapDirection::observable_inverse(), parse_phase, out);
    }
    if (name == "state-map") {
      return symbolic_map<OperatorPoly, PhasePoly>(name, o, MapDirection::state_forward(), parse_operator, out);
    }
    if (name == "state-unmap") {
      return symbolic_map<PhasePoly, OperatorPoly>(name, o, MapDirection::state_inverse(), parse_phase, out);
    }
    if (name == "roundtrip") return roundtrip(o, out);
    if (name == "kernels") return kernels(o, out);
    if (name == "table") return table(o, out);
    if (name == "dist") return dist(o, out);
    return pair_command(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ParseError& e) {
    report_parse_error(e, parsed_text, err);
    return computation_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return computation_error;
  }
}

}  // namespace cohen::cli
