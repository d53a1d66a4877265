#include "taulam/mutation.hpp"

#include <algorithm>

namespace taulam {

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }
int pos(int v) { return std::max(v, 0); }

void check_index(size_t n, int k) {
  if (k < 0 || static_cast<size_t>(k) >= n)
    throw MutationError("mutation index " + std::to_string(k) + " out of range");
}

bool square(const IntMatrix& b) {
  return std::all_of(b.begin(), b.end(), [&](const auto& row) { return row.size() == b.size(); });
}

}  // namespace

bool is_skew_symmetric(const IntMatrix& b) {
  if (!square(b)) return false;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

IntMatrix mutate_matrix(const IntMatrix& b, int k) {
  if (!square(b)) throw MutationError("exchange matrix is not square");
  check_index(b.size(), k);
  IntMatrix out = b;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) {
      if (static_cast<int>(i) == k || static_cast<int>(j) == k)
        out[i][j] = -b[i][j];
      else
        out[i][j] = b[i][j] + sgn(b[i][k]) * pos(b[i][k] * b[k][j]);
    }
  return out;
}

std::vector<int> gamma_k(const IntMatrix& b, int k, const std::vector<int>& g) {
  check_index(g.size(), k);
  if (b.size() != g.size()) throw MutationError("vector and matrix sizes differ");
  std::vector<int> out(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    out[i] = static_cast<int>(i) == k ? -g[k] : g[i] + sgn(g[k]) * pos(b[i][k] * g[k]);
  return out;
}

std::vector<int> mutate_row(const IntMatrix& beta, int k, const std::vector<int>& r) {
  check_index(r.size(), k);
  if (beta.size() != r.size()) throw MutationError("row and matrix sizes differ");
  std::vector<int> out(r.size());
  for (size_t j = 0; j < r.size(); ++j)
    out[j] = static_cast<int>(j) == k ? -r[k] : r[j] + sgn(r[k]) * pos(r[k] * beta[k][j]);
  return out;
}

void validate_seed(const Seed& s) {
  if (!square(s.beta) || s.beta.size() != s.index.size())
    throw MutationError("seed matrix must be square and match the index list");
  for (const auto& [name, row] : s.rows)
    if (row.size() != s.index.size())
      throw MutationError("row '" + name + "' has the wrong length");
}

IntMatrix beta_from_fst(const IntMatrix& b_fst) {
  IntMatrix out = b_fst;
  for (auto& row : out)
    for (auto& v : row) v = -v;
  return out;
}

Seed mutate_seed(const Seed& s, int k) {
  validate_seed(s);
  Seed out = s;
  out.beta = mutate_matrix(s.beta, k);
  for (auto& [name, row] : out.rows) row = mutate_row(s.beta, k, s.rows.at(name));
  return out;
}

Seed transport(const Seed& s, const std::vector<int>& path) {
  Seed cur = s;
  for (int k : path) cur = mutate_seed(cur, k);
  return cur;
}

int alternating_period(const Seed& s, int max_steps) {
  validate_seed(s);
  if (s.index.size() != 2) throw MutationError("alternating period needs rank 2");
  Seed swapped = s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) swapped.beta[i][j] = s.beta[1 - i][1 - j];
  for (auto& [name, row] : swapped.rows) std::swap(row[0], row[1]);
  Seed cur = s;
  for (int p = 1; p <= max_steps; ++p) {
    cur = mutate_seed(cur, (p - 1) % 2);
    if (cur.beta == s.beta && cur.rows == s.rows) return p;
    if (cur.beta == swapped.beta && cur.rows == swapped.rows) return p;
  }
  return 0;
}

}  // namespace taulam
