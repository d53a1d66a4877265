// Self-checking suites shared by `taulam check` and the acceptance binary.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taulam/json_io.hpp"
#include "taulam/laminations.hpp"

namespace taulam {

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  bool passed() const;
};

Json report_to_json(const SuiteReport& r);

// Random ground sets of size <= 8 with random symmetric e (zero diagonal):
// axioms (s), (0), (d), (a) and unique decomposition.
SuiteReport krs_suite(std::uint64_t seed, int ground_sets = 100);

// A(w) is admissible with completion w for all strings and standard bands
// of length <= max_len, and every admissible word is some A(w)^{+-1}.
SuiteReport hansper_suite(const SkewedQuiver& sq, int max_len);

// Involution of matrix and seed mutation on the integer grid, agreement of
// the gamma_k and row forms, and the rank-2 alternating periods.
SuiteReport mutation_suite();

// Unit shear vectors of the arcs, single and double flips against the
// unraveled recursion, and krs_isomorphism_check.
SuiteReport shear_suite(const LaminationBase& base, int max_len);

// Alternating period of the rank-2 seed [[0,1],[b21,0]] with principal rows.
int rank2_period(int b21);

}  // namespace taulam
