#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "crsym/crsym.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kFinding = 2, kUsage = 3, kIo = 4 };

int report_error(crsym_error code) {
  std::cerr << "error: " << crsym_last_error() << "\n";
  if (code == CRSYM_ERR_IO) return kIo;
  if (code == CRSYM_ERR_INTERNAL) return kFail;
  return kUsage;
}

std::string default_path(const std::string& stem, const std::string& format) {
  const char* dir = std::getenv("CRSYM_OUTPUT_DIR");
  if (!dir || !*dir) return "";
  return (std::filesystem::path(dir) / (stem + "." + format)).string();
}

int emit_text(char* text, const std::string& path) {
  int rc = kPass;
  if (path.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream os(path, std::ios::binary);
    if (!os || !(os << text)) {
      std::cerr << "error: cannot write " << path << "\n";
      rc = kIo;
    }
  }
  crsym_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crsym: exact verification suites"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(crsym_version()));

  std::optional<int> n, d, s, k, dim, w1, w2, deg;
  std::uint64_t seed = 1;
  std::string out, format = "json", suite;

  auto* verify = app.add_subcommand("verify", "Run a named check suite");
  verify->add_option("suite", suite, std::string("One of: ") + crsym_suite_names())->required();
  verify->add_option("--n", n, "Boundary dimension count");
  verify->add_option("--d", d, "Symmetry order");
  verify->add_option("--s", s, "Depth of the seeded symbol");
  verify->add_option("--k", k, "Symmetric power / group degree");
  verify->add_option("--dim", dim, "Dimension N of the defining representation");
  verify->add_option("--w1", w1, "First density weight");
  verify->add_option("--w2", w2, "Second density weight");
  verify->add_option("--deg", deg, "Degree or exponent bound of test monomials");
  verify->add_option("--seed", seed, "Seed for all randomized inputs");
  verify->add_option("--out", out, "Output file (default: $CRSYM_OUTPUT_DIR/<suite>.<format>, else stdout)");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* table = app.add_subcommand("table", "Print a computed table");
  table->require_subcommand(1);
  int tk = 3, tdim = 4;
  std::string tout, tformat = "json";
  auto* classalg = table->add_subcommand("classalg", "Structure constants of the class algebra");
  classalg->add_option("--k", tk, "Group degree")->required();
  classalg->add_option("--format", tformat, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  classalg->add_option("--out", tout, "Output file");
  auto* isotypic = table->add_subcommand("isotypic", "Isotypic ranks of trace-free symmetric tensors");
  isotypic->add_option("--k", tk, "Symmetric power")->required();
  isotypic->add_option("--dim", tdim, "Dimension N")->required();
  isotypic->add_option("--out", tout, "Output file");

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    crsym_params p;
    crsym_params_init(&p);
    auto put = [&](const std::optional<int>& v, unsigned bit, int& field) {
      if (v) {
        p.set |= bit;
        field = *v;
      }
    };
    put(n, CRSYM_HAS_N, p.n);
    put(d, CRSYM_HAS_D, p.d);
    put(s, CRSYM_HAS_S, p.s);
    put(k, CRSYM_HAS_K, p.k);
    put(dim, CRSYM_HAS_DIM, p.dim);
    put(w1, CRSYM_HAS_W1, p.w1);
    put(w2, CRSYM_HAS_W2, p.w2);
    put(deg, CRSYM_HAS_DEG, p.deg);
    p.seed = seed;

    crsym_report* rep = nullptr;
    crsym_error e = crsym_run_suite(suite.c_str(), &p, &rep);
    if (e != CRSYM_OK) return report_error(e);
    crsym_status st = CRSYM_FAIL;
    crsym_report_status(rep, &st);
    std::string path = out.empty() ? default_path(suite, format) : out;
    int rc = st == CRSYM_PASS ? kPass : st == CRSYM_FINDING ? kFinding : kFail;
    if (path.empty()) {
      char* text = nullptr;
      e = format == "csv" ? crsym_report_csv(rep, &text) : crsym_report_json(rep, 0, &text);
      if (e != CRSYM_OK) rc = report_error(e);
      else emit_text(text, "");
    } else {
      e = crsym_report_write(rep, path.c_str(), format.c_str());
      if (e != CRSYM_OK) rc = report_error(e);
      else std::cerr << suite << ": " << (st == CRSYM_PASS ? "pass" : st == CRSYM_FINDING ? "finding" : "fail")
                     << " -> " << path << "\n";
    }
    crsym_report_free(rep);
    return rc;
  }

  char* text = nullptr;
  std::string stem;
  crsym_error e;
  if (classalg->parsed()) {
    e = crsym_table_classalg(tk, tformat.c_str(), &text);
    stem = "classalg_k" + std::to_string(tk);
  } else {
    tformat = "json";
    e = crsym_table_isotypic(tk, tdim, &text);
    stem = "isotypic_k" + std::to_string(tk) + "_N" + std::to_string(tdim);
  }
  if (e != CRSYM_OK) return report_error(e);
  return emit_text(text, tout.empty() ? default_path(stem, tformat) : tout);
}
