#include "crsym/crsym.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "crsym/classalg.hpp"
#include "crsym/decompose.hpp"
#include "crsym/suites.hpp"

struct crsym_report {
  crsym::VerificationReport rep;
};

namespace {

thread_local std::string g_last_error;

crsym_error fail(crsym_error code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

crsym_error ok() {
  g_last_error.clear();
  return CRSYM_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
crsym_error guarded(F f) {
  try {
    return f();
  } catch (const crsym::UnknownSuite& e) {
    return fail(CRSYM_ERR_UNKNOWN_SUITE, e.what());
  } catch (const crsym::ParamError& e) {
    return fail(CRSYM_ERR_INVALID_PARAMS, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CRSYM_ERR_INVALID_PARAMS, e.what());
  } catch (const std::exception& e) {
    return fail(CRSYM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CRSYM_ERR_INTERNAL, "unknown error");
  }
}

std::string render(const crsym::VerificationReport& r, const std::string& format) {
  if (format == "csv") return crsym::report_csv(r);
  return r.to_json(false).dump(2) + "\n";
}

}  // namespace

extern "C" {

void crsym_params_init(crsym_params* p) {
  if (!p) return;
  *p = crsym_params{};
  p->seed = 1;
}

crsym_error crsym_run_suite(const char* suite, const crsym_params* params, crsym_report** out) {
  if (!suite || !out) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    crsym::SuiteParams p;
    if (params) {
      auto opt = [&](unsigned bit, int v) { return (params->set & bit) ? std::optional<int>(v) : std::nullopt; };
      p.n = opt(CRSYM_HAS_N, params->n);
      p.d = opt(CRSYM_HAS_D, params->d);
      p.s = opt(CRSYM_HAS_S, params->s);
      p.k = opt(CRSYM_HAS_K, params->k);
      p.dim = opt(CRSYM_HAS_DIM, params->dim);
      p.w1 = opt(CRSYM_HAS_W1, params->w1);
      p.w2 = opt(CRSYM_HAS_W2, params->w2);
      p.deg = opt(CRSYM_HAS_DEG, params->deg);
      p.seed = params->seed;
    }
    *out = new crsym_report{crsym::run_suite(suite, p)};
    return ok();
  });
}

crsym_error crsym_report_status(const crsym_report* r, crsym_status* out) {
  if (!r || !out) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  switch (r->rep.status()) {
    case crsym::Status::pass: *out = CRSYM_PASS; break;
    case crsym::Status::fail: *out = CRSYM_FAIL; break;
    case crsym::Status::finding: *out = CRSYM_FINDING; break;
  }
  return ok();
}

crsym_error crsym_report_json(const crsym_report* r, int with_timing, char** out) {
  if (!r || !out) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(r->rep.to_json(with_timing != 0).dump(2) + "\n");
    return ok();
  });
}

crsym_error crsym_report_csv(const crsym_report* r, char** out) {
  if (!r || !out) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(crsym::report_csv(r->rep));
    return ok();
  });
}

crsym_error crsym_report_write(const crsym_report* r, const char* path, const char* format) {
  if (!r || !path || !format) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  std::string fmt = format;
  if (fmt != "json" && fmt != "csv") return fail(CRSYM_ERR_BAD_FORMAT, "unknown format: " + fmt);
  return guarded([&] {
    std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream os(p, std::ios::binary);
    if (!os) return fail(CRSYM_ERR_IO, "cannot open " + p.string());
    os << render(r->rep, fmt);
    os.close();
    if (!os) return fail(CRSYM_ERR_IO, "write failed: " + p.string());
    return ok();
  });
}

void crsym_report_free(crsym_report* r) { delete r; }

crsym_error crsym_table_classalg(int k, const char* format, char** out) {
  if (!format || !out) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  std::string fmt = format;
  if (fmt != "json" && fmt != "csv") return fail(CRSYM_ERR_BAD_FORMAT, "unknown format: " + fmt);
  if (k < 1 || k > 7) return fail(CRSYM_ERR_INVALID_PARAMS, "k must lie in [1,7]");
  return guarded([&] {
    *out = dup_string(fmt == "csv" ? crsym::structure_constants_csv(k) : crsym::class_table_json(k).dump(2) + "\n");
    return ok();
  });
}

crsym_error crsym_table_isotypic(int k, int dim, char** out) {
  if (!out) return fail(CRSYM_ERR_NULL_ARGUMENT, "null argument");
  if (k < 1 || k > 3) return fail(CRSYM_ERR_INVALID_PARAMS, "k must lie in [1,3]");
  if (dim < 2 || dim > 6) return fail(CRSYM_ERR_INVALID_PARAMS, "dim must lie in [2,6]");
  return guarded([&] {
    *out = dup_string(crsym::isotypic_table_json(k, dim).dump(2) + "\n");
    return ok();
  });
}

void crsym_string_free(char* s) { std::free(s); }

const char* crsym_last_error(void) { return g_last_error.c_str(); }

const char* crsym_version(void) { return "0.1.0"; }

const char* crsym_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : crsym::suite_names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names.c_str();
}

}  // extern "C"
