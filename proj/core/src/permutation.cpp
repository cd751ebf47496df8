#include "qf/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>

#include "qf/errors.hpp"

namespace qf {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
      raise(Errc::SpecMismatch, "image array is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) raise(Errc::SpecMismatch, "permutation degrees differ");
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[x] = img_[rhs.img_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<int>(x);
  return Permutation(std::move(img));
}

Permutation Permutation::conjugated_by(const Permutation& b) const {
  return b * (*this) * b.inverse();
}

Permutation Permutation::power(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation acc = identity(degree());
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

Permutation Permutation::power(const Int& c) const {
  Int o = order();
  Int r = c % o;
  if (r < 0) r += o;
  return power(r.convert_to<std::int64_t>());
}

std::int64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::int64_t ord = 1;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::int64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t default_closure_cap() {
  if (const char* env = std::getenv("QF_CLOSURE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

PermGroup PermGroup::closure(int degree, std::vector<Permutation> gens, std::size_t cap) {
  std::vector<Permutation> step;
  for (const auto& g : gens) {
    if (g.degree() != degree) raise(Errc::SpecMismatch, "generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(step.begin(), step.end(), g) == step.end()) step.push_back(g);
    Permutation inv = g.inverse();
    if (std::find(step.begin(), step.end(), inv) == step.end()) step.push_back(inv);
  }

  std::set<std::vector<int>> visited;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(degree);
  visited.insert(id.image());
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : step) {
      Permutation next = g * cur;
      if (visited.insert(next.image()).second) {
        if (visited.size() > cap)
          raise(Errc::ClosureLimitExceeded,
                "group closure exceeded " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }

  PermGroup out;
  out.gens_ = std::move(gens);
  out.elems_.reserve(visited.size());
  for (const auto& img : visited) out.elems_.emplace_back(img);
  out.abelian_ = true;
  for (std::size_t i = 0; i < step.size() && out.abelian_; ++i)
    for (std::size_t j = i + 1; j < step.size(); ++j)
      if (step[i] * step[j] != step[j] * step[i]) {
        out.abelian_ = false;
        break;
      }
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  return it != elems_.end() && *it == p;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  for (const auto& e : elems_)
    if (!g.contains(e)) return false;
  return true;
}

Permutation left_translation(const FiniteBinaryTable& Q, int x) {
  std::vector<int> img(Q.size());
  std::vector<bool> seen(Q.size(), false);
  for (int y = 0; y < Q.size(); ++y) {
    int v = Q.at(x, y);
    if (seen[v])
      raise(Errc::NotLeftQuasigroup, "row " + std::to_string(x) + " is not a bijection");
    seen[v] = true;
    img[y] = v;
  }
  return Permutation(std::move(img));
}

namespace {
std::vector<Permutation> dedup(std::vector<Permutation> perms) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return perms;
}
}  // namespace

PermGroup lmlt(const FiniteBinaryTable& Q, std::size_t cap) {
  std::vector<Permutation> gens;
  for (int x = 0; x < Q.size(); ++x) gens.push_back(left_translation(Q, x));
  return PermGroup::closure(Q.size(), dedup(std::move(gens)), cap);
}

PermGroup dis(const FiniteBinaryTable& Q, std::size_t cap) {
  // L_x L_y^-1 = (L_x L_0^-1)(L_y L_0^-1)^-1, so the x-indexed family is
  // enough to generate.
  std::vector<Permutation> gens;
  if (Q.size() > 0) {
    Permutation base_inv = left_translation(Q, 0).inverse();
    for (int x = 1; x < Q.size(); ++x) gens.push_back(left_translation(Q, x) * base_inv);
  }
  return PermGroup::closure(Q.size(), dedup(std::move(gens)), cap);
}

Permutation word_product(const FiniteBinaryTable& Q,
                         const std::vector<std::pair<int, int>>& word) {
  Permutation acc = Permutation::identity(Q.size());
  for (const auto& [x, eps] : word) {
    if (eps != 1 && eps != -1) raise(Errc::SpecMismatch, "word exponents must be +1 or -1");
    Permutation l = left_translation(Q, x);
    acc = acc * (eps == 1 ? l : l.inverse());
  }
  return acc;
}

}  // namespace qf
