#pragma once

#include <string>
#include <vector>

#include "helbp/lbp.hpp"
#include "helbp/transforms.hpp"
#include "helbp/verify.hpp"

namespace helbp::io {

enum class Format { Json, Csv };

/// "json" or "csv"; throws Error(InvalidArgument) otherwise.
Format parse_format(const std::string& text);

/// hermite | associated:j | stieltjes-carlitz:p2
lbp::Family parse_family(const std::string& selector);

/// One RFC 4180 CSV field.
std::string csv_field(const std::string& text);

// JSON output is canonical: keys sorted, two-space indent, trailing newline.

std::string coefficients(const lbp::Family& family, int N, Format format);
std::string moments(const lbp::MomentTable& c, Format format);
std::string christoffel_report(const transforms::ChristoffelResult& r, Format format);
std::string geronimus_report(const transforms::GeronimusResult& r, Format format);
std::string sc_report(const lbp::ScReport& r, Format format);

/// kind: rho | rho-tilde | w | w-theta. Uniform grid of `points` interior
/// samples over (0, 2 pi) or (-2, 2).
std::string weight_samples(const std::string& kind, int points, Format format);

/// Convergents n = 1..N at rational z, with B_n/A_n and, for 0 < z < 1, the
/// double value next to J(sqrt z)/K(sqrt z).
std::string cfrac_table(const Rational& z, int N, Format format);

/// Reflection parameters, u_n and S_n for the associated index j.
std::string szego_report(int j, int N, Format format);

std::string gram_report(const verify::GramReport& r, Format format);
std::string suite_report(const std::vector<verify::SuiteResult>& suites, Format format);

}  // namespace helbp::io
