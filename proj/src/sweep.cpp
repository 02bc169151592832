/* Apache License, Version 2.0 */

#include "enriques/sweep.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace enriques {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &fn)
{
  if (jobs == 0) {
    jobs = std::max(1u, std::thread::hardware_concurrency());
  }
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; i++) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) {
        return;
      }
      try {
        fn(i);
      }
      catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; t++) {
    threads.emplace_back(worker);
  }
  for (std::thread &t : threads) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

static std::vector<FundamentalCoefficients> collect(std::int64_t genus_min,
                                                    std::int64_t genus_max,
                                                    EnumFilter filter,
                                                    unsigned jobs)
{
  if (genus_min < 2 || genus_max < genus_min) {
    throw Error(ErrorCode::InvalidArgument, "genus range must satisfy 2 <= A <= B");
  }
  const std::size_t span = static_cast<std::size_t>(genus_max - genus_min + 1);
  std::vector<std::vector<FundamentalCoefficients>> per_genus(span);
  parallel_for(span, jobs, [&](std::size_t i) {
    per_genus[i] = enumerate_components(genus_min + static_cast<std::int64_t>(i), filter);
  });
  std::vector<FundamentalCoefficients> all;
  for (auto &v : per_genus) {
    all.insert(all.end(), v.begin(), v.end());
  }
  return all;
}

std::vector<ComponentRecord> enumerate_records(std::int64_t genus_min,
                                               std::int64_t genus_max,
                                               EnumFilter filter,
                                               bool with_plans,
                                               unsigned jobs)
{
  const auto tuples = collect(genus_min, genus_max, filter, jobs);
  std::vector<ComponentRecord> out(tuples.size());
  parallel_for(tuples.size(), jobs, [&](std::size_t i) {
    out[i] = with_plans ? plan_record(tuples[i]) : classify_record(tuples[i]);
  });
  return out;
}

SweepSummary verify_range(std::int64_t genus_min, std::int64_t genus_max, unsigned jobs)
{
  const auto tuples = collect(genus_min, genus_max, EnumFilter::NonTwoDivisible, jobs);
  std::vector<LimitPlan> plans(tuples.size());
  parallel_for(tuples.size(), jobs, [&](std::size_t i) { plans[i] = dispatch(tuples[i]); });

  SweepSummary s;
  s.genus_min = genus_min;
  s.genus_max = genus_max;
  const CaseId order[] = {CaseId::S71,
                          CaseId::S721,
                          CaseId::S722,
                          CaseId::S73,
                          CaseId::S74_L34,
                          CaseId::S74_L2,
                          CaseId::S75_C70,
                          CaseId::S75_C7P,
                          CaseId::S76};
  for (CaseId id : order) {
    s.by_case.emplace_back(case_name(id), 0);
  }
  for (const LimitPlan &plan : plans) {
    s.components++;
    s.by_case[static_cast<std::size_t>(plan.case_id)].second++;
    if (plan.verified()) {
      s.verified++;
      continue;
    }
    SweepFailure f;
    f.coefficients = plan.source;
    f.genus = plan.genus;
    f.case_id = case_name(plan.case_id);
    for (const CheckItem &c : plan.checklist) {
      if (!c.pass) {
        f.failed.push_back(c);
      }
    }
    s.failures.push_back(std::move(f));
  }
  return s;
}

std::string summary_json(const SweepSummary &s)
{
  using json = nlohmann::ordered_json;
  json j;
  j["genus_range"] = {s.genus_min, s.genus_max};
  j["components"] = s.components;
  j["verified"] = s.verified;
  json cases = json::object();
  for (const auto &[name, count] : s.by_case) {
    cases[name] = count;
  }
  j["by_case"] = cases;
  json failures = json::array();
  for (const SweepFailure &f : s.failures) {
    json checks = json::array();
    for (const CheckItem &c : f.failed) {
      checks.push_back(json{{"name", c.name}, {"detail", c.detail}});
    }
    const auto flat = f.coefficients.flat();
    failures.push_back(json{{"genus", f.genus},
                            {"coefficients", std::vector<std::int64_t>(flat.begin(), flat.end())},
                            {"case_id", f.case_id},
                            {"failed", checks}});
  }
  j["failures"] = failures;
  return j.dump();
}

}  // namespace enriques
