#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qf/finite_table.hpp"
#include "qf/normalize.hpp"

namespace qf {

/// A finite quandle with the data the structural checks need: a generating
/// subset (greedily chosen, smallest-first), its base point, and the degree
/// bound of the smallest known f-quandle modulus.
struct CorpusEntry {
  std::string name;
  FiniteBinaryTable table;
  std::vector<int> gens;
  int z = 0;
  std::optional<unsigned> degree_bound;
};

/// Affine quandles over Z_k for k <= max_k (every unit multiplier), plus the
/// free 2-reductive n-symmetric tables for n <= max_n and up to max_gens
/// generators.
std::vector<CorpusEntry> build_corpus(int max_k = 8, int max_n = 4, int max_gens = 3);

/// Smallest-first greedy generating subset: repeatedly add the least element
/// outside the current subalgebra closure.
std::vector<int> greedy_generators(const FiniteBinaryTable& Q);

/// Random canonical element: each coordinate independently gets up to
/// max_terms monomials with exponent in [-max_deg, max_deg] and coefficient
/// in [-max_coeff, max_coeff]. Uses only modulo arithmetic on the raw stream,
/// so sequences are identical across platforms.
FreeElement random_element(const ContextPtr& ctx, std::mt19937_64& rng,
                           int max_deg = 4, int max_coeff = 9, int max_terms = 4);

/// Exhaustive truth of lhs = rhs over all assignments of its variables into
/// the table; backslash is interpreted through row inverses
/// (NotLeftQuasigroup if a row is not a bijection).
bool identity_holds_in_table(const FiniteBinaryTable& Q, const Term& lhs, const Term& rhs);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct JoyceCheckReport {
  bool passed = false;
  std::size_t distinct_values = 0;
  std::string detail;
};

/// Evaluate all terms with at most max_leaves leaves over num_gens generators
/// in the free involutory quandle, then check that the Joyce map is
/// parity-correct, injective, and intertwines star with 2a - b on every pair
/// of values.
JoyceCheckReport joyce_word_check(unsigned max_leaves = 6, unsigned num_gens = 3);

struct WorkedExampleReport {
  bool passed = false;
  std::vector<std::string> lines;
};

/// Round trip of the worked three-generator example: evaluation at t = 1,
/// unembedding, basis decomposition, reconstruction, re-embedding.
WorkedExampleReport verify_worked_example();

/// All eight acceptance checks in order. Each runs independently; a failure
/// is reported, never thrown.
std::vector<CriterionResult> run_acceptance_suite(unsigned threads = 1);

}  // namespace qf
