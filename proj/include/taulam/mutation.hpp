// Matrix mutation, the piecewise-linear map gamma_k^B, and seeds carrying
// coordinate rows.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace taulam {

using IntMatrix = std::vector<std::vector<int>>;

class MutationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_skew_symmetric(const IntMatrix& b);

// Fomin-Zelevinsky mutation at k (0-based).
IntMatrix mutate_matrix(const IntMatrix& b, int k);

// g'_k = -g_k and g'_i = g_i + sgn(g_k) [b_ik g_k]_+ otherwise.
std::vector<int> gamma_k(const IntMatrix& b, int k, const std::vector<int>& g);

// The extended-matrix row rule r'_j = r_j + sgn(r_k) [r_k beta_kj]_+.
std::vector<int> mutate_row(const IntMatrix& beta, int k, const std::vector<int>& r);

// beta is the top block of the extended matrix (beta = -B_FST for seeds of
// triangulations); rows are mutated together with it. beta need only be
// square: mutation is involutive for any integer matrix.
struct Seed {
  std::vector<std::string> index;
  IntMatrix beta;
  std::map<std::string, std::vector<int>> rows;

  friend bool operator==(const Seed&, const Seed&) = default;
};

void validate_seed(const Seed& s);
// B_FST and beta differ by a sign; this is the only place the sign flips.
IntMatrix beta_from_fst(const IntMatrix& b_fst);
Seed mutate_seed(const Seed& s, int k);
Seed transport(const Seed& s, const std::vector<int>& path);

// Rank 2 only: the least number of alternating mutations at indices 0, 1,
// 0, ... after which the seed equals the start, possibly with the two indices
// swapped. 0 if not reached within max_steps.
int alternating_period(const Seed& s, int max_steps = 64);

}  // namespace taulam
