#include "qf/finite_analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qf/errors.hpp"

namespace qf {

MedialityReport medial_iff_dis_abelian(const FiniteBinaryTable& Q, std::size_t cap) {
  MedialityReport rep;
  rep.medial = check_axioms(Q).medial;
  rep.dis_abelian = dis(Q, cap).is_abelian();
  return rep;
}

std::vector<std::vector<int>> orbits(const FiniteBinaryTable& Q) {
  const int n = Q.size();
  std::vector<Permutation> moves;
  for (int x = 0; x < n; ++x) {
    Permutation l = left_translation(Q, x);
    moves.push_back(l.inverse());
    moves.push_back(std::move(l));
  }
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (owner[start] != -1) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> orbit;
    std::deque<int> frontier{start};
    owner[start] = id;
    while (!frontier.empty()) {
      int y = frontier.front();
      frontier.pop_front();
      orbit.push_back(y);
      for (const auto& m : moves) {
        int v = m(y);
        if (owner[v] == -1) {
          owner[v] = id;
          frontier.push_back(v);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

OrbitGroup orbit_group(const FiniteBinaryTable& Q, int x, std::size_t cap) {
  if (x < 0 || x >= Q.size()) raise(Errc::SpecMismatch, "base point out of range");
  if (!check_axioms(Q).is_medial_quandle())
    raise(Errc::NotMedial, "orbit groups need a medial quandle");
  PermGroup D = dis(Q, cap);

  // orbit of x under Dis, base point first, the rest ascending
  std::set<int> seen;
  for (const auto& a : D.elements()) seen.insert(a(x));
  std::vector<int> elements{x};
  for (int y : seen)
    if (y != x) elements.push_back(y);

  // one representative per point; elements() is sorted, so the pick is
  // deterministic
  std::vector<const Permutation*> rep(Q.size(), nullptr);
  for (const auto& a : D.elements()) {
    int y = a(x);
    if (rep[y] == nullptr) rep[y] = &a;
  }

  // a(x) + b(x) = ab(x) is well defined iff a(x) = a'(x) forces
  // a(w) = a'(w) for every w in the orbit; checked against all of Dis
  for (const auto& a : D.elements()) {
    const Permutation& pick = *rep[a(x)];
    for (int w : elements)
      if (a(w) != pick(w))
        raise(Errc::SpecMismatch, "orbit group rule is not well defined");
  }

  std::vector<int> pos(Q.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elements.size());
  FiniteBinaryTable add = FiniteBinaryTable::from_function(k, [&](int i, int j) {
    int v = (*rep[elements[i]])(elements[j]);
    return pos[v];
  });
  return OrbitGroup{std::move(elements), std::move(add)};
}

bool check_I_quandle(const FiniteBinaryTable& Q, const LaurentPoly& f, std::size_t cap) {
  if (!check_axioms(Q).is_medial_quandle())
    raise(Errc::NotMedial, "the exponent action needs a medial quandle");
  PermGroup D = dis(Q, cap);
  const Permutation base = left_translation(Q, 0);

  for (const auto& alpha : D.generators()) {
    // alpha^{f(L)} = prod over terms c_r t^r of (alpha^{L^r})^{c_r}
    Permutation acc = Permutation::identity(Q.size());
    for (const auto& [r, c] : f.terms()) {
      Permutation conj = alpha.conjugated_by(base.power(static_cast<std::int64_t>(r)));
      acc = acc * conj.power(c);
    }
    if (!acc.is_identity()) return false;
  }
  return true;
}

bool dis_generator_check(const FiniteBinaryTable& Q, const std::vector<int>& gens, int z,
                         std::optional<unsigned> degree_bound, std::size_t cap) {
  const int n = Q.size();
  if (gens.empty()) raise(Errc::SpecMismatch, "empty generating subset");
  for (int g : gens)
    if (g < 0 || g >= n) raise(Errc::SpecMismatch, "generator out of range");
  if (std::find(gens.begin(), gens.end(), z) == gens.end())
    raise(Errc::SpecMismatch, "base generator must be listed in the subset");

  // subalgebra closure under both operations
  std::vector<Permutation> rows, inv_rows;
  for (int x = 0; x < n; ++x) {
    rows.push_back(left_translation(Q, x));
    inv_rows.push_back(rows.back().inverse());
  }
  std::vector<bool> in_sub(n, false);
  std::deque<int> frontier;
  std::size_t count = 0;
  for (int g : gens)
    if (!in_sub[g]) {
      in_sub[g] = true;
      ++count;
      frontier.push_back(g);
    }
  std::vector<int> members(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    int a = frontier.front();
    frontier.pop_front();
    // close under a*b, b*a, a\b, b\a for existing members b
    for (std::size_t i = 0; i < members.size(); ++i) {
      int b = members[i];
      for (int v : {Q.at(a, b), Q.at(b, a), static_cast<int>(inv_rows[a](b)),
                    static_cast<int>(inv_rows[b](a))}) {
        if (!in_sub[v]) {
          in_sub[v] = true;
          ++count;
          members.push_back(v);
          frontier.push_back(v);
        }
      }
    }
  }
  if (count != static_cast<std::size_t>(n))
    raise(Errc::NotGenerating, "subset does not generate the quandle");

  PermGroup D = dis(Q, cap);
  const Permutation& lz = rows[z];

  std::vector<Permutation> conjugates;
  for (int x : gens) {
    Permutation d = rows[x] * inv_rows[z];
    if (d.is_identity()) continue;
    if (degree_bound) {
      Permutation cur = d;
      for (unsigned r = 0; r < *degree_bound; ++r) {
        conjugates.push_back(cur);
        cur = cur.conjugated_by(lz);
      }
    } else {
      // conjugation by lz permutes the finite group, so the forward orbit is
      // purely periodic and already contains every integer power
      Permutation cur = d;
      do {
        conjugates.push_back(cur);
        cur = cur.conjugated_by(lz);
      } while (cur != d);
    }
  }

  PermGroup C = PermGroup::closure(n, std::move(conjugates), cap);
  return C.size() == D.size() && C.is_subgroup_of(D);
}

}  // namespace qf
