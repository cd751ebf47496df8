#pragma once

#include <optional>

#include "qf/permutation.hpp"

namespace qf {

struct MedialityReport {
  bool medial = false;        // syntactic O(n^4) check
  bool dis_abelian = false;   // abelianness of the computed Dis(Q)
  bool agree() const { return medial == dis_abelian; }
};

/// Both sides of the mediality criterion, computed independently.
MedialityReport medial_iff_dis_abelian(const FiniteBinaryTable& Q,
                                       std::size_t cap = default_closure_cap());

/// Dis-orbits (= LMlt-orbits; L_x fixes x, so reachability under rows and
/// inverse rows gives exactly the displacement orbits). Each orbit is sorted;
/// orbits are listed by smallest member.
std::vector<std::vector<int>> orbits(const FiniteBinaryTable& Q);

struct OrbitGroup {
  std::vector<int> elements;  // orbit members; elements[0] is the base point
  FiniteBinaryTable add;      // group table on orbit indices
};

/// The abelian group on the orbit of x given by a(x) + b(x) = (ab)(x).
/// Needs a medial table (NotMedial): well-definedness of the rule is
/// re-verified against every displacement during construction.
OrbitGroup orbit_group(const FiniteBinaryTable& Q, int x,
                       std::size_t cap = default_closure_cap());

/// alpha^{f(L)} = id for every alpha in Dis(Q)? Computed on a generating set
/// only: the solutions form a submodule (closed under products and
/// conjugation), so generators suffice. Conjugation base point is immaterial
/// in a medial quandle; NotMedial otherwise.
bool check_I_quandle(const FiniteBinaryTable& Q, const LaurentPoly& f,
                     std::size_t cap = default_closure_cap());

/// Does the conjugate family {(L_x L_z^-1)^{L^r}} over x in gens generate
/// Dis(Q)? Without a bound, r runs over the whole conjugation orbit; with
/// degree_bound s, only 0 <= r < s is allowed. The subset must generate Q as
/// a subalgebra under * and \ (NotGenerating), and z must be listed in it.
bool dis_generator_check(const FiniteBinaryTable& Q, const std::vector<int>& gens,
                         int z, std::optional<unsigned> degree_bound = std::nullopt,
                         std::size_t cap = default_closure_cap());

}  // namespace qf
