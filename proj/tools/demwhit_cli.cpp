#include "demwhit/demwhit.h"

#include "CLI11.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct CommonArgs {
  std::string type;
  int rank = 0;
  std::vector<long> weight;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--type", a.type, "Cartan type: A, B, C, D, G or F")->required();
  cmd->add_option("--rank", a.rank, "rank of the root system")->required();
  cmd->add_option("--weight", a.weight, "weight coordinates c1,...,cn (default 1,...,1)")
      ->delimiter(',');
  cmd->add_option("--format", a.format, "output format: json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
}

struct SystemGuard {
  dw_system* sys = nullptr;
  SystemGuard() = default;
  SystemGuard(const SystemGuard&) = delete;
  SystemGuard& operator=(const SystemGuard&) = delete;
  ~SystemGuard() { dw_system_free(sys); }
};

int report_error() {
  std::fprintf(stderr, "error: %s\n", dw_last_error());
  return 2;
}

int make_system(const CommonArgs& a, SystemGuard& guard) {
  if (a.type.size() != 1) {
    std::fprintf(stderr, "error: --type expects a single letter, got '%s'\n", a.type.c_str());
    return 2;
  }
  if (dw_system_create(a.type[0], a.rank, 0, &guard.sys) != DW_OK) return report_error();
  return 0;
}

void print_owned(char* text) {
  if (!text) return;
  std::fputs(text, stdout);
  std::size_t n = std::char_traits<char>::length(text);
  if (n == 0 || text[n - 1] != '\n') std::fputc('\n', stdout);
  dw_string_free(text);
}

const long* weight_ptr(const CommonArgs& a) { return a.weight.empty() ? nullptr : a.weight.data(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whittaker / Demazure operator tables over finite Weyl groups"};
  app.require_subcommand(1);

  CommonArgs table_args;
  std::string basis = "X";
  std::vector<int> word;
  std::string v_at;
  CLI::App* table = app.add_subcommand("table", "print a basis-family table");
  add_common(table, table_args);
  table->add_option("--basis", basis, "basis family: X, Y, Z or demazure")
      ->check(CLI::IsMember({"X", "Y", "Z", "demazure"}));
  CLI::Option* word_opt =
      table->add_option("--word", word, "generator word i1,i2,... (Z basis only)")
          ->delimiter(',');
  CLI::Option* v_at_opt =
      table->add_option("--v-at", v_at, "evaluate coefficients at a rational v, e.g. 1 or 2/3");

  CommonArgs verify_args;
  std::string suite = "all";
  std::uint64_t seed = 0;
  int trials = 100;
  CLI::App* verify = app.add_subcommand("verify", "run a property-verification suite");
  add_common(verify, verify_args);
  verify->add_option("--suite", suite,
                     "braid, quadratic, recursion-vs-hecke, v0, v1, bernstein, fibers, "
                     "sign-rep, lusztig-conjugation, kl or all");
  verify->add_option("--seed", seed, "seed for the randomized checks");
  verify->add_option("--trials", trials, "random monomials per identity");

  CommonArgs census_args;
  CLI::App* census = app.add_subcommand("census", "correction-coefficient and smoothness census");
  add_common(census, census_args);

  CommonArgs kl_args;
  CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial table");
  add_common(kl, kl_args);

  CLI11_PARSE(app, argc, argv);

  if (table->parsed()) {
    SystemGuard g;
    if (int rc = make_system(table_args, g)) return rc;
    if (*word_opt) {
      int reduced = 0;
      if (dw_word_is_reduced(g.sys, word.data(), static_cast<int>(word.size()), &reduced) !=
          DW_OK)
        return report_error();
      if (!reduced)
        std::fprintf(stderr,
                     "warning: the word is not a reduced expression; the value depends on "
                     "the word itself, not only on the group element\n");
    }
    char* out = nullptr;
    if (dw_table(g.sys, weight_ptr(table_args), static_cast<int>(table_args.weight.size()),
                 basis.c_str(), *word_opt ? word.data() : nullptr,
                 static_cast<int>(word.size()), *v_at_opt ? v_at.c_str() : nullptr,
                 table_args.format.c_str(), &out) != DW_OK)
      return report_error();
    print_owned(out);
    return 0;
  }

  if (verify->parsed()) {
    SystemGuard g;
    if (int rc = make_system(verify_args, g)) return rc;
    char* report = nullptr;
    int failures = 0;
    if (dw_verify(g.sys, suite.c_str(), weight_ptr(verify_args),
                  static_cast<int>(verify_args.weight.size()), seed, trials, &report,
                  &failures) != DW_OK)
      return report_error();
    print_owned(report);
    return failures ? 1 : 0;
  }

  if (census->parsed()) {
    SystemGuard g;
    if (int rc = make_system(census_args, g)) return rc;
    char* out = nullptr;
    if (dw_census(g.sys, weight_ptr(census_args),
                  static_cast<int>(census_args.weight.size()), census_args.format.c_str(),
                  &out) != DW_OK)
      return report_error();
    print_owned(out);
    return 0;
  }

  if (kl->parsed()) {
    SystemGuard g;
    if (int rc = make_system(kl_args, g)) return rc;
    char* out = nullptr;
    if (dw_kl(g.sys, kl_args.format.c_str(), &out) != DW_OK) return report_error();
    print_owned(out);
    return 0;
  }
  return 2;
}
