#include "helbp/io.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "helbp/elliptic.hpp"
#include "helbp/error.hpp"
#include "helbp/szego.hpp"

namespace helbp::io {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json poly_json(const Poly& p) {
  json a = json::array();
  for (const Rational& c : p.coefficients()) a.push_back(c.str());
  return a;
}

// Shortest round-trip representation of a double.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  void row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << csv_field(fields[i]);
    }
    out_ << "\r\n";
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string opt(const std::optional<Rational>& r) { return r ? r->str() : std::string(); }

json opt_json(const std::optional<Rational>& r) { return r ? json(r->str()) : json(nullptr); }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "format must be json or csv, got '" + text + "'");
}

lbp::Family parse_family(const std::string& selector) {
  if (selector == "hermite") return lbp::Family::hermite();
  const auto colon = selector.find(':');
  const std::string head = selector.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (head == "associated" && !arg.empty()) {
    const Rational j = Rational::parse(arg);
    if (!j.is_integer() || j.sign() < 0) throw Error(ErrorCode::InvalidArgument, "associated index must be an integer >= 0");
    return lbp::Family::associated(static_cast<int>(j.to_double()));
  }
  if (head == "stieltjes-carlitz" && !arg.empty()) return lbp::Family::stieltjes_carlitz(Rational::parse(arg));
  throw Error(ErrorCode::InvalidArgument,
              "family must be hermite, associated:j or stieltjes-carlitz:p2, got '" + selector + "'");
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string coefficients(const lbp::Family& family, int N, Format format) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  if (format == Format::Csv) {
    Csv csv({"n", "b_n", "d_n"});
    for (int n = 1; n <= N; ++n) csv.row({std::to_string(n), family.b(n).str(), family.d(n).str()});
    return csv.str();
  }
  json rows = json::array();
  for (int n = 1; n <= N; ++n) rows.push_back({{"n", n}, {"b", family.b(n).str()}, {"d", family.d(n).str()}});
  return dump({{"family", family.name()}, {"n_max", N}, {"d0", family.d(0).str()}, {"table", rows}});
}

std::string moments(const lbp::MomentTable& c, Format format) {
  if (format == Format::Csv) {
    Csv csv({"s", "c_s"});
    for (int s = c.lo(); s <= c.hi(); ++s) csv.row({std::to_string(s), c[s].str()});
    return csv.str();
  }
  json table = json::object();
  for (int s = c.lo(); s <= c.hi(); ++s) table[std::to_string(s)] = c[s].str();
  return dump({{"c", table}});
}

std::string christoffel_report(const transforms::ChristoffelResult& r, Format format) {
  const int N = static_cast<int>(r.polys.size()) - 1;
  auto b = [&](int n) { return n == 0 ? std::optional<Rational>() : std::optional<Rational>(r.family.b(n)); };
  if (format == Format::Csv) {
    Csv csv({"n", "b_n", "d_n", "U_n"});
    for (int n = 0; n <= N; ++n) csv.row({std::to_string(n), opt(b(n)), r.family.d(n).str(), r.U[n].str()});
    return csv.str();
  }
  json rows = json::array();
  for (int n = 0; n <= N; ++n) {
    rows.push_back({{"n", n}, {"b", opt_json(b(n))}, {"d", r.family.d(n).str()}, {"U", r.U[n].str()}, {"V", nullptr},
                    {"phi", nullptr}});
  }
  return dump({{"mu", r.mu.str()}, {"chi", nullptr}, {"table", rows}, {"mass", nullptr}});
}

std::string geronimus_report(const transforms::GeronimusResult& r, Format format) {
  const int N = static_cast<int>(r.polys.size()) - 1;
  auto b = [&](int n) { return n == 0 ? std::optional<Rational>() : std::optional<Rational>(r.family.b(n)); };
  if (format == Format::Csv) {
    Csv csv({"n", "b_n", "d_n", "V_n", "phi_n"});
    for (int n = 0; n <= N; ++n)
      csv.row({std::to_string(n), opt(b(n)), r.family.d(n).str(), r.V[n].str(), r.phi[n].str()});
    return csv.str();
  }
  json rows = json::array();
  for (int n = 0; n <= N; ++n) {
    rows.push_back({{"n", n}, {"b", opt_json(b(n))}, {"d", r.family.d(n).str()}, {"U", nullptr}, {"V", r.V[n].str()},
                    {"phi", r.phi[n].str()}});
  }
  return dump({{"mu", r.mu.str()}, {"chi", r.chi.str()}, {"nu", r.nu.str()}, {"table", rows}, {"mass", r.mass_text()}});
}

std::string sc_report(const lbp::ScReport& r, Format format) {
  if (format == Format::Csv) {
    Csv csv({"n", "b_n", "d_n", "b_star", "d_star", "b_star_printed", "d_star_printed", "b_star_agrees", "b_hat", "d_hat",
             "b_hat_printed", "d_hat_printed", "b_hat_agrees", "d_hat_agrees"});
    for (const auto& row : r.rows) {
      const bool has_b = row.n >= 1;
      csv.row({std::to_string(row.n), has_b ? row.b.str() : "", row.d.str(), has_b ? row.b_star.str() : "",
               row.d_star.str(), has_b ? row.b_star_printed.str() : "", row.d_star_printed.str(),
               row.b_star_agrees ? "true" : "false", has_b ? row.b_hat.str() : "", row.d_hat.str(), opt(row.b_hat_printed),
               row.d_hat_printed.str(), row.b_hat_agrees ? "true" : "false", row.d_hat_agrees ? "true" : "false"});
    }
    return csv.str();
  }
  json rows = json::array();
  for (const auto& row : r.rows) {
    const bool has_b = row.n >= 1;
    auto bj = [has_b](const Rational& v) { return has_b ? json(v.str()) : json(nullptr); };
    rows.push_back({{"n", row.n},
                    {"b", bj(row.b)},
                    {"d", row.d.str()},
                    {"reciprocal",
                     {{"b", bj(row.b_star)},
                      {"d", row.d_star.str()},
                      {"b_index_shifted", bj(row.b_star_index_shifted)},
                      {"b_printed", bj(row.b_star_printed)},
                      {"d_printed", row.d_star_printed.str()},
                      {"b_agrees", row.b_star_agrees},
                      {"d_agrees", row.d_star_agrees}}},
                    {"partner",
                     {{"b", bj(row.b_hat)},
                      {"d", row.d_hat.str()},
                      {"b_printed", opt_json(row.b_hat_printed)},
                      {"d_printed", row.d_hat_printed.str()},
                      {"b_agrees", row.b_hat_agrees},
                      {"d_agrees", row.d_hat_agrees}}}});
  }
  return dump({{"p2", r.p2.str()}, {"n_max", r.N}, {"table", rows}});
}

std::string weight_samples(const std::string& kind, int points, Format format) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "points must be >= 1");
  const bool interval = kind == "w";
  if (!interval && kind != "rho" && kind != "rho-tilde" && kind != "w-theta") {
    throw Error(ErrorCode::InvalidArgument, "weight must be rho, rho-tilde, w or w-theta, got '" + kind + "'");
  }
  const bool complex_valued = kind == "rho";
  const double lo = interval ? -2.0 : 0.0, hi = interval ? 2.0 : 2.0 * kPi;
  std::vector<double> at;
  std::vector<std::complex<double>> val;
  for (int i = 1; i <= points; ++i) {
    const double t = lo + (hi - lo) * i / (points + 1);
    at.push_back(t);
    if (kind == "rho") val.push_back(szego::rho(t));
    else if (kind == "rho-tilde") val.push_back(szego::rho_tilde(t));
    else if (kind == "w") val.push_back(szego::interval_w(t));
    else val.push_back(szego::interval_w_theta(t));
  }
  const std::string axis = interval ? "x" : "theta";
  if (format == Format::Csv) {
    Csv csv(complex_valued ? std::vector<std::string>{axis, "value_re", "value_im"} : std::vector<std::string>{axis, "value"});
    for (size_t i = 0; i < at.size(); ++i) {
      if (complex_valued) csv.row({num(at[i]), num(val[i].real()), num(val[i].imag())});
      else csv.row({num(at[i]), num(val[i].real())});
    }
    return csv.str();
  }
  json rows = json::array();
  for (size_t i = 0; i < at.size(); ++i) {
    json v = complex_valued ? json::array({val[i].real(), val[i].imag()}) : json(val[i].real());
    rows.push_back({{axis, at[i]}, {"value", v}});
  }
  return dump({{"weight", kind}, {"points", points}, {"samples", rows}});
}

std::string cfrac_table(const Rational& z, int N, Format format) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  const auto ab = lbp::ab_sequence(N, 0);
  const bool in_range = z > Rational(0) && z < Rational(1);
  const double ref = in_range ? [&] {
    const auto t = elliptic::complete_triple(std::sqrt(z.to_double()));
    return t.J / t.K;
  }()
                              : 0.0;
  struct Row {
    int n;
    Rational conv;
    bool matches;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= N; ++n) {
    const Rational c = verify::tfraction_convergent(n, z);
    const Rational a = ab.A[n](z);
    rows.push_back({n, c, !a.is_zero() && c == ab.B[n](z) / a});
  }
  if (format == Format::Csv) {
    Csv csv(in_range ? std::vector<std::string>{"n", "convergent", "equals_B_over_A", "value", "error"}
                     : std::vector<std::string>{"n", "convergent", "equals_B_over_A", "value"});
    for (const auto& r : rows) {
      std::vector<std::string> f{std::to_string(r.n), r.conv.str(), r.matches ? "true" : "false", num(r.conv.to_double())};
      if (in_range) f.push_back(num(ref - r.conv.to_double()));
      csv.row(f);
    }
    return csv.str();
  }
  json table = json::array();
  for (const auto& r : rows) {
    json row = {{"n", r.n}, {"convergent", r.conv.str()}, {"equals_B_over_A", r.matches}, {"value", r.conv.to_double()}};
    if (in_range) row["error"] = ref - r.conv.to_double();
    table.push_back(row);
  }
  json out = {{"z", z.str()}, {"n_max", N}, {"table", table}};
  out["J_over_K"] = in_range ? json(ref) : json(nullptr);
  return dump(out);
}

std::string szego_report(int j, int N, Format format) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  const auto r = szego::reflection_params(j, N);
  const auto sym = szego::symmetric_S(lbp::Family::associated(j), N);
  if (format == Format::Csv) {
    Csv csv({"n", "a_n", "u_n"});
    for (int n = 0; n <= N; ++n) csv.row({std::to_string(n), r.ratio_form[n].str(), n == 0 ? "" : sym.u[n].str()});
    return csv.str();
  }
  json a = json::array(), u = json::array(), S = json::array();
  for (const Rational& v : r.ratio_form) a.push_back(v.str());
  for (int n = 1; n <= N; ++n) u.push_back(sym.u[n].str());
  for (const Poly& p : sym.S) S.push_back(poly_json(p));
  json out = {{"j", j}, {"n_max", N}, {"a", a}, {"u", u}, {"S", S}, {"a_in_open_interval", r.in_open_interval}};
  out["closed_form_agrees"] = j == 0 ? json(r.forms_agree) : json(nullptr);
  return dump(out);
}

std::string gram_report(const verify::GramReport& r, Format format) {
  if (format == Format::Csv) {
    Csv csv({"n", "diag_ratio_error"});
    for (size_t i = 0; i < r.diag_ratio_errors.size(); ++i) csv.row({std::to_string(i + 1), num(r.diag_ratio_errors[i])});
    return csv.str();
  }
  return dump({{"kind", r.kind},
               {"n_max", r.n_max},
               {"nodes", r.nodes},
               {"max_offdiag_rel", r.max_offdiag_rel},
               {"diag_ratio_errors", r.diag_ratio_errors},
               {"pass", r.pass},
               {"tol", r.tol}});
}

std::string suite_report(const std::vector<verify::SuiteResult>& suites, Format format) {
  if (format == Format::Csv) {
    Csv csv({"suite", "check", "status", "detail"});
    for (const auto& s : suites)
      for (const auto& c : s.checks) csv.row({s.suite, c.name, c.pass ? "PASS" : "FAIL", c.detail});
    return csv.str();
  }
  json list = json::array();
  bool all = true;
  for (const auto& s : suites) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    list.push_back({{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}});
    all = all && s.pass();
  }
  return dump({{"pass", all}, {"suites", list}});
}

}  // namespace helbp::io
