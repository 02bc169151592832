/* Apache License, Version 2.0 */

#include "enriques/enriques_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "enriques/divexpr.hpp"
#include "enriques/record.hpp"
#include "enriques/selftest.hpp"
#include "enriques/sweep.hpp"

struct es_record {
  enriques::ComponentRecord record;
  std::string json;
  std::string tsv;
};

struct es_record_list {
  std::vector<es_record> items;
};

struct es_report {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::string json;
};

namespace {

thread_local std::string last_error;
thread_local long last_offset = -1;

es_status to_status(enriques::ErrorCode code)
{
  using enriques::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return ES_INVALID_ARGUMENT;
    case ErrorCode::ModelMismatch:
      return ES_MODEL_MISMATCH;
    case ErrorCode::Unsupported:
      return ES_UNSUPPORTED;
    case ErrorCode::UnsupportedGenerator:
      return ES_UNSUPPORTED_GENERATOR;
    case ErrorCode::Parse:
      return ES_PARSE_ERROR;
    case ErrorCode::OutOfTheorem:
      return ES_OUT_OF_THEOREM;
    case ErrorCode::Overflow:
      return ES_OVERFLOW;
    case ErrorCode::InvariantViolation:
      return ES_INVARIANT_VIOLATION;
  }
  return ES_INTERNAL;
}

template<typename F> es_status guarded(F &&fn)
{
  last_error.clear();
  last_offset = -1;
  try {
    fn();
    return ES_OK;
  }
  catch (const enriques::ParseError &e) {
    last_error = e.what();
    last_offset = static_cast<long>(e.offset());
    return ES_PARSE_ERROR;
  }
  catch (const enriques::Error &e) {
    last_error = e.what();
    return to_status(e.code());
  }
  catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return ES_INTERNAL;
  }
  catch (const std::exception &e) {
    last_error = e.what();
    return ES_INTERNAL;
  }
}

es_status null_argument()
{
  last_error = "null argument";
  last_offset = -1;
  return ES_INVALID_ARGUMENT;
}

enriques::FundamentalCoefficients from_array(const int64_t coeffs[ES_NUM_COEFFICIENTS])
{
  std::array<std::int64_t, 11> v{};
  for (std::size_t i = 0; i < v.size(); i++) {
    v[i] = coeffs[i];
  }
  return enriques::FundamentalCoefficients::from_flat(v);
}

es_record make_record(enriques::ComponentRecord r)
{
  es_record out;
  out.json = enriques::to_json(r);
  out.tsv = enriques::to_tsv(r);
  out.record = std::move(r);
  return out;
}

}  // namespace

extern "C" {

const char *es_version(void)
{
  return "1.0.0";
}

const char *es_status_name(es_status status)
{
  switch (status) {
    case ES_OK:
      return "ok";
    case ES_INVALID_ARGUMENT:
      return "invalid_argument";
    case ES_MODEL_MISMATCH:
      return "model_mismatch";
    case ES_UNSUPPORTED:
      return "unsupported";
    case ES_UNSUPPORTED_GENERATOR:
      return "unsupported_generator";
    case ES_PARSE_ERROR:
      return "parse_error";
    case ES_OUT_OF_THEOREM:
      return "out_of_theorem";
    case ES_OVERFLOW:
      return "overflow";
    case ES_INVARIANT_VIOLATION:
      return "invariant_violation";
    case ES_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char *es_last_error(void)
{
  return last_error.c_str();
}

long es_last_error_offset(void)
{
  return last_offset;
}

const char *es_tsv_header(void)
{
  return enriques::kTsvHeader;
}

const char *es_tsv_columns(void)
{
  static const std::string columns = enriques::tsv_columns();
  return columns.c_str();
}

es_status es_pair(const char *model, const char *a, const char *b, int64_t *out)
{
  if (!model || !a || !b || !out) {
    return null_argument();
  }
  return guarded([&] {
    const enriques::SurfaceModel m = enriques::parse_model(model);
    const auto x = enriques::parse_any(a, m);
    const auto y = enriques::parse_any(b, m);
    *out = enriques::pair_any(x, y);
  });
}

es_status es_canonical(const char *model, const char *expr, char **out)
{
  if (!model || !expr || !out) {
    return null_argument();
  }
  return guarded([&] {
    const std::string text = enriques::format_any(enriques::parse_any(expr, enriques::parse_model(model)));
    char *buf = static_cast<char *>(std::malloc(text.size() + 1));
    if (!buf) {
      throw std::bad_alloc();
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void es_string_free(char *s)
{
  std::free(s);
}

es_status es_parse_coefficients(const char *text, int64_t out[ES_NUM_COEFFICIENTS])
{
  if (!text || !out) {
    return null_argument();
  }
  return guarded([&] {
    const auto flat = enriques::parse_coefficients(text).flat();
    for (std::size_t i = 0; i < flat.size(); i++) {
      out[i] = flat[i];
    }
  });
}

es_status es_classify(const int64_t coeffs[ES_NUM_COEFFICIENTS], es_record **out)
{
  if (!coeffs || !out) {
    return null_argument();
  }
  return guarded([&] { *out = new es_record(make_record(enriques::classify_record(from_array(coeffs)))); });
}

es_status es_plan(const int64_t coeffs[ES_NUM_COEFFICIENTS], es_record **out)
{
  if (!coeffs || !out) {
    return null_argument();
  }
  return guarded([&] {
    const auto fc = from_array(coeffs);
    const auto violations = enriques::validate(fc);
    if (!violations.empty()) {
      throw enriques::Error(enriques::ErrorCode::InvalidArgument, "invalid coefficients: " + violations.front());
    }
    if (fc.eps != 0 || enriques::is_two_divisible(fc)) {
      throw enriques::Error(enriques::ErrorCode::OutOfTheorem, "2-divisible components (or eps = 1) have no plan");
    }
    *out = new es_record(make_record(enriques::plan_record(fc)));
  });
}

const char *es_record_json(const es_record *r)
{
  return r ? r->json.c_str() : "";
}

const char *es_record_tsv(const es_record *r)
{
  return r ? r->tsv.c_str() : "";
}

int es_record_verified(const es_record *r)
{
  if (!r || !r->record.verified) {
    return -1;
  }
  return *r->record.verified ? 1 : 0;
}

int64_t es_record_genus(const es_record *r)
{
  return r ? r->record.genus : 0;
}

void es_record_free(es_record *r)
{
  delete r;
}

es_status es_enumerate(int64_t genus_min,
                       int64_t genus_max,
                       es_filter filter,
                       int with_plans,
                       unsigned jobs,
                       es_record_list **out)
{
  if (!out) {
    return null_argument();
  }
  return guarded([&] {
    const auto f = filter == ES_FILTER_ALL ? enriques::EnumFilter::All : enriques::EnumFilter::NonTwoDivisible;
    auto records = enriques::enumerate_records(genus_min, genus_max, f, with_plans != 0, jobs);
    auto list = std::make_unique<es_record_list>();
    list->items.resize(records.size());
    enriques::parallel_for(records.size(), jobs,
                           [&](std::size_t i) { list->items[i] = make_record(std::move(records[i])); });
    *out = list.release();
  });
}

size_t es_record_list_size(const es_record_list *list)
{
  return list ? list->items.size() : 0;
}

const es_record *es_record_list_at(const es_record_list *list, size_t i)
{
  if (!list || i >= list->items.size()) {
    return nullptr;
  }
  return &list->items[i];
}

void es_record_list_free(es_record_list *list)
{
  delete list;
}

es_status es_verify_range(int64_t genus_min, int64_t genus_max, unsigned jobs, es_report **out)
{
  if (!out) {
    return null_argument();
  }
  return guarded([&] {
    const enriques::SweepSummary s = enriques::verify_range(genus_min, genus_max, jobs);
    auto report = std::make_unique<es_report>();
    report->total = s.components;
    report->passed = s.verified;
    report->json = enriques::summary_json(s);
    *out = report.release();
  });
}

es_status es_selftest(es_report **out)
{
  if (!out) {
    return null_argument();
  }
  return guarded([&] {
    const auto checks = enriques::run_selftest();
    auto report = std::make_unique<es_report>();
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto &c : checks) {
      report->total++;
      report->passed += c.pass ? 1 : 0;
      items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    nlohmann::ordered_json j;
    j["checks"] = items;
    j["passed"] = report->passed;
    j["total"] = report->total;
    report->json = j.dump();
    *out = report.release();
  });
}

int64_t es_report_total(const es_report *r)
{
  return r ? r->total : 0;
}

int64_t es_report_passed(const es_report *r)
{
  return r ? r->passed : 0;
}

int64_t es_report_failed(const es_report *r)
{
  return r ? r->total - r->passed : 0;
}

const char *es_report_json(const es_report *r)
{
  return r ? r->json.c_str() : "";
}

void es_report_free(es_report *r)
{
  delete r;
}

}  // extern "C"
