#include "cohen/render.hpp"

#include <string>
#include <vector>

namespace cohen {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string power(const std::string& base, int e, bool spell_one) {
  if (e == 1 && !spell_one) return base;
  return base + "^" + std::to_string(e);
}

void grade_factors(std::vector<std::string>& parts, Grade g, bool canonical) {
  if (g.hbar != 0) parts.push_back(power("hbar", g.hbar, canonical));
  if (g.twopi != 0) {
    parts.push_back(!canonical && g.twopi == 1 ? "2*pi" : "(2*pi)^" + std::to_string(g.twopi));
  }
}

struct Names {
  const char* q;
  const char* p;
  bool p_first;
};

void monomial_factors(std::vector<std::string>& parts, Monomial mono, const Names& names, bool canonical) {
  auto q = [&] {
    if (mono.q) parts.push_back(power(names.q, mono.q, canonical));
  };
  auto p = [&] {
    if (mono.p) parts.push_back(power(names.p, mono.p, canonical));
  };
  if (names.p_first) {
    p();
    q();
  } else {
    q();
    p();
  }
}

template <class Poly>
std::string render_canonical(const Poly& poly, const Names& names) {
  if (poly.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& [mono, coeff] : poly.terms()) {
    for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
      const auto& [grade, value] = *it;
      std::vector<std::string> parts;
      if (!value.is_one()) parts.push_back("(" + render(value) + ")");
      grade_factors(parts, grade, true);
      monomial_factors(parts, mono, names, true);
      terms.push_back(parts.empty() ? "1" : join(parts, "*"));
    }
  }
  return join(terms, " + ");
}

template <class Poly>
std::string render_human(const Poly& poly, const Names& names) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : poly.terms()) {
    for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
      const auto& [grade, value] = *it;
      bool negative = false;
      std::string head;
      if (sgn(value.im()) == 0) {
        negative = sgn(value.re()) < 0;
        const Rational mag = abs(value.re());
        if (mag != 1) head = to_string(mag);
      } else if (sgn(value.re()) == 0) {
        negative = sgn(value.im()) < 0;
        const Rational mag = abs(value.im());
        head = mag == 1 ? "i" : to_string(mag) + "*i";
      } else {
        head = "(" + render(value) + ")";
      }
      std::vector<std::string> parts;
      if (!head.empty()) parts.push_back(head);
      grade_factors(parts, grade, false);
      monomial_factors(parts, mono, names, false);
      const std::string body = parts.empty() ? "1" : join(parts, "*");
      if (first) {
        out += negative ? "-" + body : body;
      } else {
        out += (negative ? " - " : " + ") + body;
      }
      first = false;
    }
  }
  return out;
}

constexpr Names phase_canonical{"q", "p", false};
constexpr Names phase_pretty{"q", "p", true};
constexpr Names operator_names{"qh", "ph", false};

}  // namespace

std::string render(const GaussianRational& value) {
  const bool has_re = sgn(value.re()) != 0;
  const bool has_im = sgn(value.im()) != 0;
  if (!has_im) return to_string(value.re());
  const std::string im = to_string(value.im()) + "*i";
  return has_re ? to_string(value.re()) + " + " + im : im;
}

std::string render(const ScalarSum& value) { return render(PhasePoly::constant(value)); }

std::string render(const PhasePoly& poly) { return render_canonical(poly, phase_canonical); }
std::string render(const OperatorPoly& poly) { return render_canonical(poly, operator_names); }
std::string render_pretty(const PhasePoly& poly) { return render_human(poly, phase_pretty); }
std::string render_pretty(const OperatorPoly& poly) { return render_human(poly, operator_names); }

}  // namespace cohen
