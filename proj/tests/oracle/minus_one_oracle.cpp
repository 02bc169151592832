/* Apache License, Version 2.0 */

/* Brute-force census of (-1)-classes on the plane blown up in n <= 5
 * points: every d and m_i in [-10, 10] with d^2 - sum m_i^2 = -1
 * and 3d - sum m_i = 1. Output is the golden file read by the tests:
 *
 *   n d m_1 ... m_n
 *
 * sorted by n, then lexicographically. Run once; the result is committed. */

#include <algorithm>
#include <cstdio>
#include <vector>

int main()
{
  constexpr int kBound = 10;
  std::printf("# Apache License, Version 2.0\n");
  std::printf("# (-1)-classes on P(n), n = 0..5, brute force |d| <= %d, |m_i| <= %d\n", kBound, kBound);
  for (int n = 0; n <= 5; n++) {
    std::vector<std::vector<int>> found;
    for (int d = -kBound; d <= kBound; d++) {
      std::vector<int> m(static_cast<std::size_t>(n), -kBound);
      for (;;) {
        long sq = static_cast<long>(d) * d;
        long deg = 3L * d;
        for (int v : m) {
          sq -= static_cast<long>(v) * v;
          deg -= v;
        }
        if (sq == -1 && deg == 1) {
          std::vector<int> row{d};
          row.insert(row.end(), m.begin(), m.end());
          found.push_back(row);
        }
        std::size_t i = 0;
        while (i < m.size() && m[i] == kBound) {
          m[i] = -kBound;
          i++;
        }
        if (i == m.size()) {
          break;
        }
        m[i]++;
      }
    }
    std::sort(found.begin(), found.end());
    for (const auto &row : found) {
      std::printf("%d", n);
      for (int v : row) {
        std::printf(" %d", v);
      }
      std::printf("\n");
    }
  }
  return 0;
}
