#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qf/free_quandle.hpp"

namespace qf {

/// Cayley table of a binary operation on {0..n-1}; entry (x, y) is x*y.
/// Nothing beyond entry range is assumed until a checker says so.
class FiniteBinaryTable {
 public:
  FiniteBinaryTable(int n, std::vector<int> entries);
  static FiniteBinaryTable from_function(int n, const std::function<int(int, int)>& f);

  int size() const { return n_; }
  int at(int x, int y) const { return entries_[static_cast<std::size_t>(x) * n_ + y]; }

  /// Text format: first line n, then n rows of n space-separated entries.
  static FiniteBinaryTable load(std::istream& in);
  static FiniteBinaryTable load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  bool operator==(const FiniteBinaryTable& rhs) const {
    return n_ == rhs.n_ && entries_ == rhs.entries_;
  }

 private:
  int n_;
  std::vector<int> entries_;
};

struct AxiomReport {
  bool idempotent = false;
  bool left_quasigroup = false;
  bool left_distributive = false;
  bool medial = false;

  bool is_quandle() const { return idempotent && left_quasigroup && left_distributive; }
  bool is_medial_quandle() const { return is_quandle() && medial; }
};

/// Exhaustive loops: O(n) idempotency, O(n^2) row bijectivity, O(n^3) left
/// distributivity, O(n^4) mediality. The mediality loop may be split over
/// threads; the outcome does not depend on the split.
AxiomReport check_axioms(const FiniteBinaryTable& Q, unsigned threads = 1);

/// L_x^n = id for all x.
bool check_symmetry(const FiniteBinaryTable& Q, unsigned n);

/// R_y^m(x) = y for all x, y; m = 1 means the right projection table.
bool check_reductivity(const FiniteBinaryTable& Q, unsigned m);

/// Aff(Z_k1 + ... + Z_kd, h): a*b = a - h(a) + h(b). The matrix must define
/// a bijective endomorphism of the direct sum (well-definedness requires
/// k_i | A[i][j]*k_j; bijectivity is checked exhaustively), otherwise
/// NotAutomorphism. Elements are mixed-radix encoded, last order fastest.
FiniteBinaryTable affine_quandle(const std::vector<int>& orders,
                                 const std::vector<std::vector<Int>>& aut);
FiniteBinaryTable affine_quandle(int k, Int u);  // cyclic case, h = multiplication by u

/// The free 2-reductive n-symmetric quandle on the generator set, realized on
/// Z_n^{g-1} x X with (a,i)*(b,j) = (b + e_i - e_j, j). Element index is
/// gen_index * n^{g-1} + mixed-radix(a). SizeLimit above max_elements.
FiniteBinaryTable free_2reductive_symmetric(int n, const GeneratorSet& gens,
                                            std::size_t max_elements = 10000);

/// y -> y*x. Requires a medial table with every R injective (NotMedial /
/// NotCancellative); the homomorphism property is re-verified exhaustively.
std::vector<int> right_translation_embedding(const FiniteBinaryTable& Q, int x);

struct NonMedialSearchResult {
  std::optional<FiniteBinaryTable> witness;  // idempotent left-quasigroup
                                             // left-distributive, not medial
  std::uint64_t nodes_visited = 0;
  int sizes_tried = 0;
};

/// Backtracking over rows (permutations fixing the diagonal) with incremental
/// left-distributivity pruning. Deterministic for a fixed seed.
NonMedialSearchResult search_nonmedial_quandle(int max_n, std::uint64_t seed = 0,
                                               std::uint64_t node_budget = 2'000'000);

}  // namespace qf
