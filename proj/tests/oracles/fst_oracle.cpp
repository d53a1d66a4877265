#include "oracles/fst_oracle.hpp"

#include <map>

namespace oracle {

std::vector<std::vector<int>> fst_matrix(const taulam::Triangulation& t,
                                         const std::vector<std::string>& order) {
  std::map<std::string, std::string> pi;
  for (const auto& a : order) pi[a] = a;
  for (const auto& tr : t.triangles)
    if (tr.self_folded) pi[tr.sides[0].id] = tr.sides[2].id;

  size_t n = order.size();
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (const auto& tr : t.triangles) {
    if (tr.self_folded) continue;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (int k = 0; k < 3; ++k) {
          const std::string& here = tr.sides[k].id;
          const std::string& next = tr.sides[(k + 1) % 3].id;
          if (pi[order[i]] == here && pi[order[j]] == next) b[i][j] += 1;
          if (pi[order[i]] == next && pi[order[j]] == here) b[i][j] -= 1;
        }
  }
  return b;
}

}  // namespace oracle
