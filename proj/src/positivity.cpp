/* Apache License, Version 2.0 */

#include "enriques/positivity.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace enriques {

static void require_r(const DivClass &c, const char *what)
{
  if (c.model().kind != SurfaceKind::R) {
    throw Error(ErrorCode::ModelMismatch, std::string(what) + " expects a class on R(n)");
  }
}

static void require_del_pezzo(const DivClass &c, const char *what)
{
  if (c.model().kind != SurfaceKind::P) {
    throw Error(ErrorCode::ModelMismatch, std::string(what) + " expects a class on P(n)");
  }
  if (c.model().n > kMaxDelPezzoPoints) {
    throw Error(ErrorCode::Unsupported, std::string(what) + " is only available for n <= 8");
  }
}

bool is_odd(const DivClass &c)
{
  require_r(c, "is_odd");
  return c.alpha() % 2 != 0;
}

StarReport condition_star(const DivClass &c)
{
  require_r(c, "condition_star");
  StarReport r;
  const std::int64_t alpha = c.alpha();
  const std::int64_t beta = c.beta();
  std::int64_t sum_gamma = 0;
  r.cond_ii = true;
  for (int i = 1; i <= c.model().n; i++) {
    sum_gamma = checked::add(sum_gamma, c.gamma(i));
    if (alpha < c.gamma(i)) {
      r.cond_ii = false;
    }
  }
  r.cond_i = alpha >= 1 && beta >= 0;
  r.cond_iii = checked::add(alpha, beta) >= sum_gamma;
  r.cond_iv = checked::add(alpha, checked::mul(2, beta)) >= checked::add(sum_gamma, 4);
  r.minus_L_dot_K = -pair(c, canonical_class(c.model()));
  r.holds = r.cond_i && r.cond_ii && r.cond_iii && r.cond_iv;
  return r;
}

namespace {

constexpr int kMaxDegree = 6;

/* Depth-first search over m_1..m_n with the square and degree budgets
 * left for the remaining entries. */
void search(int d,
            int n,
            std::vector<std::int64_t> &m,
            std::int64_t quad_left,
            std::int64_t lin_left,
            std::vector<DivClass> &out)
{
  const int placed = static_cast<int>(m.size()) - 1;
  const int remaining = n - placed;
  if (remaining == 0) {
    if (quad_left == 0 && lin_left == 0) {
      out.emplace_back(SurfaceModel::P(n), m);
    }
    return;
  }
  if (quad_left < 0 || lin_left * lin_left > remaining * quad_left) {
    return;
  }
  for (std::int64_t mi = -1; mi <= d; mi++) {
    m.push_back(mi);
    search(d, n, m, quad_left - mi * mi, lin_left - mi, out);
    m.pop_back();
  }
}

std::vector<DivClass> compute_minus_one(int n)
{
  std::vector<DivClass> out;
  for (int d = 0; d <= kMaxDegree; d++) {
    std::vector<std::int64_t> m{d};
    search(d, n, m, static_cast<std::int64_t>(d) * d + 1, 3 * d - 1, out);
  }
  std::sort(out.begin(), out.end(), [](const DivClass &a, const DivClass &b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return out;
}

}  // namespace

const std::vector<DivClass> &minus_one_classes(int n)
{
  if (n < 0 || n > kMaxDelPezzoPoints) {
    throw Error(ErrorCode::Unsupported, "(-1)-classes are only listed for P(n) with n <= 8");
  }
  static std::array<std::vector<DivClass>, kMaxDelPezzoPoints + 1> cache;
  static std::array<std::once_flag, kMaxDelPezzoPoints + 1> once;
  std::call_once(once[n], [n] { cache[n] = compute_minus_one(n); });
  return cache[n];
}

bool is_minus_one(const DivClass &c)
{
  return square(c) == -1 && pair(c, canonical_class(c.model())) == -1;
}

static std::vector<DivClass> nef_test_classes(int n)
{
  const SurfaceModel model = SurfaceModel::P(n);
  const DivClass l = DivClass::line(n);
  switch (n) {
    case 0:
      return {l};
    case 1:
      return {DivClass::exceptional(model, 1), l - DivClass::exceptional(model, 1)};
    case 2:
      return {DivClass::exceptional(model, 1),
              DivClass::exceptional(model, 2),
              l - DivClass::exceptional(model, 1) - DivClass::exceptional(model, 2)};
    default:
      return minus_one_classes(n);
  }
}

bool is_nef_p(const DivClass &c)
{
  require_del_pezzo(c, "is_nef_p");
  for (const DivClass &e : nef_test_classes(c.model().n)) {
    if (pair(c, e) < 0) {
      return false;
    }
  }
  return true;
}

bool is_big_and_nef_p(const DivClass &c)
{
  return is_nef_p(c) && square(c) > 0;
}

bool are_pairwise_disjoint(std::span<const DivClass> cs)
{
  for (std::size_t i = 0; i < cs.size(); i++) {
    for (std::size_t j = i + 1; j < cs.size(); j++) {
      if (pair(cs[i], cs[j]) != 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace enriques
