#include "helbp/helbp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "helbp/error.hpp"
#include "helbp/io.hpp"
#include "helbp/lbp.hpp"
#include "helbp/transforms.hpp"
#include "helbp/verify.hpp"

struct helbp_family {
  helbp::lbp::Family family;
};

namespace {

using namespace helbp;

thread_local std::string last_error;

helbp_status fail(helbp_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
helbp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HELBP_OK;
  } catch (const Error& e) {
    return fail(static_cast<helbp_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HELBP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(HELBP_INTERNAL_ERROR, e.what());
  }
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

io::Format to_format(helbp_format f) {
  if (f == HELBP_FORMAT_JSON) return io::Format::Json;
  if (f == HELBP_FORMAT_CSV) return io::Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

Rational rational_or_one(const char* text) { return text ? Rational::parse(text) : Rational(1); }

}  // namespace

extern "C" {

const char* helbp_status_name(helbp_status status) {
  if (status == HELBP_OK) return "Ok";
  if (status == HELBP_INTERNAL_ERROR) return "InternalError";
  if (status >= HELBP_INVALID_ARGUMENT && status <= HELBP_PARSE_ERROR) {
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
  }
  return "Unknown";
}

const char* helbp_last_error(void) { return last_error.c_str(); }

void helbp_string_free(char* text) { std::free(text); }

helbp_status helbp_family_create(const char* selector, helbp_family** out) {
  return guarded([&] {
    require(selector, "selector");
    require(out, "out");
    *out = new helbp_family{io::parse_family(selector)};
  });
}

void helbp_family_destroy(helbp_family* family) { delete family; }

helbp_status helbp_family_name(const helbp_family* family, char** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = copy(family->family.name());
  });
}

helbp_status helbp_family_b(const helbp_family* family, int n, char** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = copy(family->family.b(n).str());
  });
}

helbp_status helbp_family_d(const helbp_family* family, int n, char** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = copy(family->family.d(n).str());
  });
}

helbp_status helbp_family_poly(const helbp_family* family, int n, char** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
    nlohmann::json a = nlohmann::json::array();
    const auto P = lbp::monic_P(family->family, n);
    for (const Rational& c : P[static_cast<size_t>(n)].coefficients()) a.push_back(c.str());
    *out = copy(a.dump());
  });
}

helbp_status helbp_coeffs(const helbp_family* family, int n_max, const char* transform, const char* mu, const char* chi,
                          helbp_format format, char** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    const auto fmt = to_format(format);
    const lbp::Family& f = family->family;
    const std::string t = transform ? transform : "none";
    if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
    std::string text;
    if (t == "none") {
      text = io::coefficients(f, n_max, fmt);
    } else if (t == "reciprocal") {
      text = io::coefficients(lbp::reciprocal_family(f), n_max, fmt);
    } else if (t == "partner") {
      text = io::coefficients(lbp::extract_family(f.name() + " partner", lbp::partner_polys(f, n_max + 1)), n_max, fmt);
    } else if (t == "christoffel0") {
      text = io::coefficients(transforms::christoffel_zero(f, n_max), n_max, fmt);
    } else if (t == "christoffel") {
      text = io::christoffel_report(transforms::christoffel(f, rational_or_one(mu), n_max), fmt);
    } else if (t == "geronimus") {
      text = io::geronimus_report(transforms::geronimus(f, rational_or_one(mu), rational_or_one(chi), n_max), fmt);
    } else if (t == "sc-check") {
      if (f.kind() != lbp::FamilyKind::StieltjesCarlitz) {
        throw Error(ErrorCode::InvalidArgument, "sc-check needs a stieltjes-carlitz family");
      }
      text = io::sc_report(lbp::sc_coefficient_tables(f.p2(), n_max), fmt);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown transform '" + t + "'");
    }
    *out = copy(text);
  });
}

helbp_status helbp_moments(const helbp_family* family, int n_max, helbp_format format, char** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = copy(io::moments(lbp::exact_moments(family->family, n_max), to_format(format)));
  });
}

helbp_status helbp_weights(const char* kind, int points, helbp_format format, char** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    *out = copy(io::weight_samples(kind, points, to_format(format)));
  });
}

helbp_status helbp_cfrac(const char* z, int n_max, helbp_format format, char** out) {
  return guarded([&] {
    require(z, "z");
    require(out, "out");
    *out = copy(io::cfrac_table(Rational::parse(z), n_max, to_format(format)));
  });
}

helbp_status helbp_szego(int j, int n_max, helbp_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy(io::szego_report(j, n_max, to_format(format)));
  });
}

helbp_status helbp_verify(const char* suite, int quad_nodes, double tol, helbp_format format, char** out,
                          int* all_pass) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    if (quad_nodes < 16) throw Error(ErrorCode::InvalidArgument, "quad_nodes must be >= 16");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
    const auto results = verify::run_suites(suite, {quad_nodes, tol});
    bool ok = true;
    for (const auto& s : results) ok = ok && s.pass();
    *out = copy(io::suite_report(results, to_format(format)));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

helbp_status helbp_gram(const char* kind, int n_max, int nodes, double tol, const char* chi, helbp_format format,
                        char** out, int* pass) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const std::string k = kind;
    verify::GramReport r;
    if (k == "szego") r = verify::circle_gram(verify::CircleWeight::Szego, n_max, nodes, tol);
    else if (k == "rho") r = verify::circle_gram(verify::CircleWeight::HermiteRho, n_max, nodes, tol);
    else if (k == "geronimus") r = verify::circle_gram(verify::CircleWeight::Geronimus, n_max, nodes, tol, rational_or_one(chi));
    else if (k == "interval") r = verify::interval_gram(n_max, nodes, tol);
    else throw Error(ErrorCode::InvalidArgument, "gram kind must be szego, rho, geronimus or interval");
    *out = copy(io::gram_report(r, to_format(format)));
    if (pass) *pass = r.pass ? 1 : 0;
  });
}

}  // extern "C"
