// Combinatorial E-invariant, g-vectors and dimension vectors of decorated
// admissible words, with the sets A, P and Diag_b they are built from.
#pragma once

#include <utility>
#include <vector>

#include "taulam/admissible.hpp"

namespace taulam {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vectors over gabriel_vertices(base), in that order.
using IntVector = std::vector<int>;

// d2 on {-1, 1, 0}, with 0 standing for *.
int d2(int a, int b);
int d3(const Decoration& s, const Decoration& t);

// |K(tau_f x, tau_f y)_A| + |K(tau_f y, tau_f x)_A|.
int set_A(const FringedQuiver& fq, const Word& x, const Word& y);

// Pairs (j, i) of end loops eta_j of H(y) and eta_i of H(x) over the same
// special loop, with the diagonal correction removed.
std::vector<std::pair<int, int>> set_P(const SkewedQuiver& sq, const Word& x, const Word& y);

int diag_b(const SkewedQuiver& sq, const Word& x, const Word& y);

// Zero for negative simples.
IntVector dim_vector(const SkewedQuiver& sq, const DecoratedWord& d);

int e_Q(const FringedQuiver& fq, const DecoratedWord& a, const DecoratedWord& b);
IntVector g_Q(const FringedQuiver& fq, const DecoratedWord& d);
bool is_tau_generic(const FringedQuiver& fq, const DecoratedWord& d);

// The sets A_i^{+-} and D_i^{+-} of tau_f(x), as counts per base vertex i.
struct SourceSinkData {
  std::vector<int> a_plus, a_minus;
  // Loop indices j in {0, 1} lying over eps_i.
  std::vector<std::vector<int>> d_plus, d_minus;
};
SourceSinkData source_sink_data(const FringedQuiver& fq, const Word& x);

}  // namespace taulam
