#pragma once

#include <string>

#include "cohen/polynomial.hpp"
#include "cohen/scalar.hpp"

namespace cohen {

/// Canonical text: terms in descending (n, m) order, each written as
/// `(coefficient)*hbar^k*(2*pi)^j*q^n*p^m` with unit factors omitted and every
/// exponent spelled out. The zero polynomial is "0". This is the golden format.
std::string render(const PhasePoly& poly);
std::string render(const OperatorPoly& poly);

/// Human-oriented text: signs folded into the separators, exponents of 1 dropped,
/// p written before q in phase space. Re-parses to the same polynomial.
std::string render_pretty(const PhasePoly& poly);
std::string render_pretty(const OperatorPoly& poly);

/// Canonical text for a standalone graded coefficient, e.g. "(1/2)*hbar^1".
std::string render(const ScalarSum& value);

/// Exact complex value: "a/b", "c/d*i" or "a/b + c/d*i".
std::string render(const GaussianRational& value);

}  // namespace cohen
