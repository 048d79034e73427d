#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "helbp/helbp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string family = "hermite";
  int n_max = 20;
  bool n_max_set = false;
  std::string transform = "none";
  std::string mu = "1";
  std::string chi = "1";
  int quad_nodes = 1024;
  double tol = 1e-8;
  std::string format = "json";
  std::string output;
  std::string weight = "rho-tilde";
  int points = 64;
  std::string z = "1/2";
  int j = 0;
  std::string suite = "all";
  std::string gram;
};

struct Failure {
  helbp_status status;
};

void check(helbp_status s) {
  if (s != HELBP_OK) throw Failure{s};
}

// Owns a string returned by the C API.
class Text {
 public:
  ~Text() { helbp_string_free(p_); }
  char** out() { return &p_; }
  const char* get() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

class Family {
 public:
  explicit Family(const std::string& selector) { check(helbp_family_create(selector.c_str(), &f_)); }
  ~Family() { helbp_family_destroy(f_); }
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;
  const helbp_family* get() const { return f_; }

 private:
  helbp_family* f_ = nullptr;
};

helbp_format format_of(const Config& c) { return c.format == "csv" ? HELBP_FORMAT_CSV : HELBP_FORMAT_JSON; }

int emit(const Config& c, const Text& text) {
  if (c.output.empty()) {
    std::fputs(text.get(), stdout);
    return kExitOk;
  }
  std::ofstream f(c.output, std::ios::binary);
  f << text.get();
  if (!f) {
    std::cerr << "helbp: cannot write " << c.output << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

void add_family(CLI::App* app, Config& c) {
  app->add_option("--family", c.family, "hermite | associated:j | stieltjes-carlitz:p2")->capture_default_str();
}

void add_n_max(CLI::App* app, Config& c) {
  app->add_option_function<int>(
         "--n-max",
         [&c](const int& v) {
           c.n_max = v;
           c.n_max_set = true;
         },
         "largest index (default 20)")
      ->check(CLI::Range(1, 100000));
}

void add_output(CLI::App* app, Config& c) {
  app->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app->add_option("--output,-o", c.output, "write to a file instead of stdout");
}

int run_verify(const Config& c) {
  Text text;
  int pass = 0;
  if (!c.gram.empty()) {
    int n = c.n_max;
    if (!c.n_max_set) n = c.gram == "szego" ? 6 : c.gram == "interval" ? 8 : 5;
    check(helbp_gram(c.gram.c_str(), n, c.quad_nodes, c.tol, c.chi.c_str(), format_of(c), text.out(), &pass));
  } else {
    check(helbp_verify(c.suite.c_str(), c.quad_nodes, c.tol, format_of(c), text.out(), &pass));
  }
  const int rc = emit(c, text);
  return rc != kExitOk ? rc : pass ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite elliptic Laurent biorthogonal polynomials: tables, weights and verification"};
  app.require_subcommand(1);
  Config c;

  auto* coeffs = app.add_subcommand("coeffs", "recurrence coefficients b_n, d_n, optionally transformed");
  add_family(coeffs, c);
  add_n_max(coeffs, c);
  coeffs
      ->add_option("--transform", c.transform,
                   "none | reciprocal | partner | christoffel | christoffel0 | geronimus | sc-check")
      ->check(CLI::IsMember({"none", "reciprocal", "partner", "christoffel", "christoffel0", "geronimus", "sc-check"}))
      ->capture_default_str();
  coeffs->add_option("--mu", c.mu, "transform point, \"num/den\"")->capture_default_str();
  coeffs->add_option("--chi", c.chi, "Geronimus parameter, \"num/den\"")->capture_default_str();
  add_output(coeffs, c);

  auto* moments = app.add_subcommand("moments", "exact moment table c_{-(N-1)}..c_N");
  add_family(moments, c);
  add_n_max(moments, c);
  add_output(moments, c);

  auto* weights = app.add_subcommand("weights", "weight samples on a uniform interior grid");
  weights->add_option("--weight", c.weight, "rho | rho-tilde | w | w-theta")
      ->check(CLI::IsMember({"rho", "rho-tilde", "w", "w-theta"}))
      ->capture_default_str();
  weights->add_option("--points", c.points, "number of samples")->check(CLI::Range(1, 10000000))->capture_default_str();
  add_output(weights, c);

  auto* cfrac = app.add_subcommand("cfrac", "continued-fraction convergents at rational z");
  cfrac->add_option("--z", c.z, "evaluation point, \"num/den\"")->capture_default_str();
  add_n_max(cfrac, c);
  add_output(cfrac, c);

  auto* szego = app.add_subcommand("szego", "reflection parameters and the symmetric polynomials");
  szego->add_option("--j", c.j, "associated index")->check(CLI::Range(0, 100000))->capture_default_str();
  add_n_max(szego, c);
  add_output(szego, c);

  auto* verify = app.add_subcommand("verify", "run the invariant suites or a single Gram check");
  verify->add_option("--suite", c.suite, "exactnum | elliptic | lbp | transforms | szego | verify | all")
      ->check(CLI::IsMember({"exactnum", "elliptic", "lbp", "transforms", "szego", "verify", "all"}))
      ->capture_default_str();
  verify->add_option("--gram", c.gram, "szego | rho | geronimus | interval")
      ->check(CLI::IsMember({"szego", "rho", "geronimus", "interval"}));
  verify->add_option("--quad-nodes", c.quad_nodes, "quadrature nodes")->check(CLI::Range(16, 1 << 24))->capture_default_str();
  verify->add_option("--tol", c.tol, "off-diagonal tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--chi", c.chi, "Geronimus parameter for --gram geronimus")->capture_default_str();
  add_n_max(verify, c);
  add_output(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Text text;
    if (*coeffs) {
      Family f(c.family);
      check(helbp_coeffs(f.get(), c.n_max, c.transform.c_str(), c.mu.c_str(), c.chi.c_str(), format_of(c), text.out()));
    } else if (*moments) {
      Family f(c.family);
      check(helbp_moments(f.get(), c.n_max, format_of(c), text.out()));
    } else if (*weights) {
      check(helbp_weights(c.weight.c_str(), c.points, format_of(c), text.out()));
    } else if (*cfrac) {
      check(helbp_cfrac(c.z.c_str(), c.n_max, format_of(c), text.out()));
    } else if (*szego) {
      check(helbp_szego(c.j, c.n_max, format_of(c), text.out()));
    } else {
      return run_verify(c);
    }
    return emit(c, text);
  } catch (const Failure& f) {
    std::cerr << "helbp: " << helbp_last_error() << "\n";
    return f.status == HELBP_GRID_TOO_COARSE ? kExitFailed : kExitUsage;
  }
}
