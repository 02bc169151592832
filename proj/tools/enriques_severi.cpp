/* Apache License, Version 2.0 */

/* enriques-severi: command line front end to libenriques.
 *
 * Exit status: 0 success, 1 a verification failed, 2 usage or input error. */

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "enriques/enriques_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct RecordDeleter {
  void operator()(es_record *r) const { es_record_free(r); }
};
struct ListDeleter {
  void operator()(es_record_list *l) const { es_record_list_free(l); }
};
struct ReportDeleter {
  void operator()(es_report *r) const { es_report_free(r); }
};

int report_error(es_status status)
{
  std::cerr << "error (" << es_status_name(status) << "): " << es_last_error() << "\n";
  return kExitUsage;
}

/* "A..B" or a single "G". */
bool parse_range(const std::string &text, int64_t &lo, int64_t &hi)
{
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stoll(text, &used);
      return used == text.size();
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    lo = std::stoll(a, &used);
    if (used != a.size()) {
      return false;
    }
    hi = std::stoll(b, &used);
    return used == b.size();
  }
  catch (const std::exception &) {
    return false;
  }
}

class Output {
 public:
  explicit Output(const std::string &path)
  {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw CLI::ValidationError("--out", "cannot open " + path);
      }
    }
  }
  std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run_record(const std::string &coeffs, const std::string &format, bool with_plan)
{
  int64_t v[ES_NUM_COEFFICIENTS];
  es_status st = es_parse_coefficients(coeffs.c_str(), v);
  if (st != ES_OK) {
    return report_error(st);
  }
  es_record *raw = nullptr;
  st = with_plan ? es_plan(v, &raw) : es_classify(v, &raw);
  if (st != ES_OK) {
    return report_error(st);
  }
  std::unique_ptr<es_record, RecordDeleter> rec(raw);
  if (format == "tsv") {
    std::cout << es_tsv_header() << "\n" << es_tsv_columns() << "\n" << es_record_tsv(rec.get()) << "\n";
  }
  else {
    std::cout << es_record_json(rec.get()) << "\n";
  }
  if (with_plan && es_record_verified(rec.get()) == 0) {
    return kExitFalsified;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Divisor-class calculus and limit-curve verification for polarized Enriques surfaces"};
  app.require_subcommand(1);
  app.footer(
      "Divisor syntax: terms [n]gen joined by + or -, gen in s f e<i> (R<n>), l e<i> (P<n>),\n"
      "E<i> E<i>.<j> (E). The isotropic pair class E_{i,j} is written with a dot, e.g. E9.10.\n"
      "Put -- before an expression that starts with a minus sign.\n"
      "Coefficients: a0,a1,a2,a3,a4,a5,a6,a7,a9,a10,eps.\n"
      "Exit status: 0 ok, 1 verification failed, 2 usage error.");

  std::string range;
  std::string filter = "all";
  std::string format = "json";
  std::string out_path;
  unsigned jobs = 0;
  bool with_plans = false;

  auto *enumerate = app.add_subcommand("enumerate", "list moduli components of a genus range");
  auto *genus_opt = enumerate->add_option("--genus", range, "single genus G");
  enumerate->add_option("--genus-range", range, "genus range A..B")->excludes(genus_opt);
  enumerate->add_option("--filter", filter, "all | non_two_divisible")
      ->check(CLI::IsMember({"all", "non_two_divisible"}));
  enumerate->add_option("--format", format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
  enumerate->add_flag("--plans", with_plans, "attach limit plans to eligible components");
  enumerate->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  enumerate->add_option("--out", out_path, "write to a file instead of stdout");

  std::string coeffs;
  auto *classify = app.add_subcommand("classify", "validate a tuple, 2-divisibility and trichotomy");
  classify->add_option("coefficients", coeffs, "a0,a1..a7,a9,a10,eps")->required();
  classify->add_option("--format", format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto *plan = app.add_subcommand("plan", "limit bundle and hypothesis checklist for a tuple");
  plan->add_option("coefficients", coeffs, "a0,a1..a7,a9,a10,eps")->required();
  plan->add_option("--format", format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto *verify = app.add_subcommand("verify", "check every non 2-divisible component of a genus range");
  verify->add_option("--genus-range", range, "genus range A..B")->required();
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify->add_option("--out", out_path, "write the summary to a file");

  std::string model;
  std::string lhs;
  std::string rhs;
  auto *pair = app.add_subcommand("pair", "intersection number of two classes");
  pair->add_option("--model", model, "R<n>, P<n> or E")->required();
  pair->add_option("expr1", lhs)->required();
  pair->add_option("expr2", rhs)->required();

  auto *canonical = app.add_subcommand("canonical", "print an expression in canonical form");
  canonical->add_option("--model", model, "R<n>, P<n> or E")->required();
  canonical->add_option("expr", lhs)->required();

  auto *selftest = app.add_subcommand("selftest", "Gram table, restriction isometry and (-1)-class census");

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*enumerate || *verify) {
    if (range.empty()) {
      std::cerr << "error: --genus or --genus-range is required\n";
      return kExitUsage;
    }
  }
  int64_t lo = 0;
  int64_t hi = 0;
  if (!range.empty() && !parse_range(range, lo, hi)) {
    std::cerr << "error: malformed genus range '" << range << "' (expected A..B)\n";
    return kExitUsage;
  }

  try {
    if (*enumerate) {
      es_record_list *raw = nullptr;
      const es_filter f = filter == "all" ? ES_FILTER_ALL : ES_FILTER_NON_TWO_DIVISIBLE;
      const es_status st = es_enumerate(lo, hi, f, with_plans ? 1 : 0, jobs, &raw);
      if (st != ES_OK) {
        return report_error(st);
      }
      std::unique_ptr<es_record_list, ListDeleter> list(raw);
      Output out(out_path);
      std::ostream &os = out.stream();
      if (format == "tsv") {
        os << es_tsv_header() << "\n" << es_tsv_columns() << "\n";
      }
      for (size_t i = 0; i < es_record_list_size(list.get()); i++) {
        const es_record *r = es_record_list_at(list.get(), i);
        os << (format == "tsv" ? es_record_tsv(r) : es_record_json(r)) << "\n";
      }
      return kExitOk;
    }
    if (*classify) {
      return run_record(coeffs, format, false);
    }
    if (*plan) {
      return run_record(coeffs, format, true);
    }
    if (*verify) {
      const auto start = std::chrono::steady_clock::now();
      es_report *raw = nullptr;
      const es_status st = es_verify_range(lo, hi, jobs, &raw);
      if (st != ES_OK) {
        return report_error(st);
      }
      std::unique_ptr<es_report, ReportDeleter> report(raw);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      Output out(out_path);
      out.stream() << es_report_json(report.get()) << "\n";
      std::fprintf(stderr, "verified %lld/%lld components in %.2fs\n", static_cast<long long>(es_report_passed(report.get())),
                   static_cast<long long>(es_report_total(report.get())), secs);
      return es_report_failed(report.get()) == 0 ? kExitOk : kExitFalsified;
    }
    if (*pair) {
      int64_t value = 0;
      const es_status st = es_pair(model.c_str(), lhs.c_str(), rhs.c_str(), &value);
      if (st != ES_OK) {
        return report_error(st);
      }
      std::cout << value << "\n";
      return kExitOk;
    }
    if (*canonical) {
      char *text = nullptr;
      const es_status st = es_canonical(model.c_str(), lhs.c_str(), &text);
      if (st != ES_OK) {
        return report_error(st);
      }
      std::cout << text << "\n";
      es_string_free(text);
      return kExitOk;
    }
    if (*selftest) {
      es_report *raw = nullptr;
      const es_status st = es_selftest(&raw);
      if (st != ES_OK) {
        return report_error(st);
      }
      std::unique_ptr<es_report, ReportDeleter> report(raw);
      std::cout << es_report_json(report.get()) << "\n";
      return es_report_failed(report.get()) == 0 ? kExitOk : kExitFalsified;
    }
  }
  catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
