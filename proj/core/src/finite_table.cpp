#include "qf/finite_table.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "qf/errors.hpp"

namespace qf {

FiniteBinaryTable::FiniteBinaryTable(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) raise(Errc::SpecMismatch, "table size must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    raise(Errc::SpecMismatch, "table entry count does not match size");
  for (int v : entries_)
    if (v < 0 || v >= n_) raise(Errc::SpecMismatch, "table entry out of range");
}

FiniteBinaryTable FiniteBinaryTable::from_function(int n,
                                                  const std::function<int(int, int)>& f) {
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) entries.push_back(f(x, y));
  return FiniteBinaryTable(n, std::move(entries));
}

FiniteBinaryTable FiniteBinaryTable::load(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 1) raise(Errc::SyntaxError, "table file: bad size line");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n) * n; ++k) {
    int v;
    if (!(in >> v)) raise(Errc::SyntaxError, "table file: too few entries");
    entries.push_back(v);
  }
  return FiniteBinaryTable(n, std::move(entries));
}

FiniteBinaryTable FiniteBinaryTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::SyntaxError, "cannot open '" + path + "'");
  return load(in);
}

void FiniteBinaryTable::save(std::ostream& out) const {
  out << n_ << '\n';
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (y) out << ' ';
      out << at(x, y);
    }
    out << '\n';
  }
}

void FiniteBinaryTable::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) raise(Errc::SyntaxError, "cannot open '" + path + "' for writing");
  save(out);
  if (!out) raise(Errc::SyntaxError, "write to '" + path + "' failed");
}

namespace {

bool medial_slice(const FiniteBinaryTable& Q, int x_begin, int x_end) {
  const int n = Q.size();
  for (int x = x_begin; x < x_end; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (Q.at(Q.at(x, y), Q.at(u, v)) != Q.at(Q.at(x, u), Q.at(y, v))) return false;
  return true;
}

}  // namespace

AxiomReport check_axioms(const FiniteBinaryTable& Q, unsigned threads) {
  const int n = Q.size();
  AxiomReport rep;

  rep.idempotent = true;
  for (int x = 0; x < n; ++x)
    if (Q.at(x, x) != x) {
      rep.idempotent = false;
      break;
    }

  rep.left_quasigroup = true;
  for (int x = 0; x < n && rep.left_quasigroup; ++x) {
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
      int v = Q.at(x, y);
      if (seen[v]) {
        rep.left_quasigroup = false;
        break;
      }
      seen[v] = true;
    }
  }

  rep.left_distributive = true;
  for (int x = 0; x < n && rep.left_distributive; ++x)
    for (int y = 0; y < n && rep.left_distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (Q.at(x, Q.at(y, z)) != Q.at(Q.at(x, y), Q.at(x, z))) {
          rep.left_distributive = false;
          break;
        }

  unsigned workers = std::min<unsigned>(std::max(threads, 1u), static_cast<unsigned>(n));
  if (workers <= 1) {
    rep.medial = medial_slice(Q, 0, n);
  } else {
    std::vector<char> ok(workers, 1);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      int begin = static_cast<int>(static_cast<std::int64_t>(n) * w / workers);
      int end = static_cast<int>(static_cast<std::int64_t>(n) * (w + 1) / workers);
      pool.emplace_back([&Q, begin, end, &ok, w] { ok[w] = medial_slice(Q, begin, end); });
    }
    for (auto& th : pool) th.join();
    rep.medial = true;
    for (char f : ok) rep.medial = rep.medial && f;
  }
  return rep;
}

bool check_symmetry(const FiniteBinaryTable& Q, unsigned n) {
  for (int x = 0; x < Q.size(); ++x)
    for (int y = 0; y < Q.size(); ++y) {
      int v = y;
      for (unsigned k = 0; k < n; ++k) v = Q.at(x, v);
      if (v != y) return false;
    }
  return true;
}

bool check_reductivity(const FiniteBinaryTable& Q, unsigned m) {
  for (int x = 0; x < Q.size(); ++x)
    for (int y = 0; y < Q.size(); ++y) {
      int v = x;
      for (unsigned k = 0; k < m; ++k) v = Q.at(v, y);
      if (v != y) return false;
    }
  return true;
}

namespace {

struct MixedRadix {
  std::vector<int> orders;
  std::vector<std::int64_t> strides;  // last coordinate fastest
  std::int64_t total = 1;

  explicit MixedRadix(const std::vector<int>& ks) : orders(ks) {
    strides.assign(ks.size(), 1);
    for (std::size_t i = ks.size(); i-- > 0;) {
      if (orders[i] < 1) raise(Errc::SpecMismatch, "cyclic order must be >= 1");
      if (i + 1 < ks.size()) strides[i] = strides[i + 1] * orders[i + 1];
    }
    for (int k : orders) {
      total *= k;
      if (total > 1'000'000) raise(Errc::SizeLimit, "direct sum too large");
    }
  }

  std::vector<int> decode(std::int64_t idx) const {
    std::vector<int> v(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      v[i] = static_cast<int>(idx / strides[i] % orders[i]);
    }
    return v;
  }

  std::int64_t encode(const std::vector<int>& v) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      int c = v[i] % orders[i];
      if (c < 0) c += orders[i];
      idx += c * strides[i];
    }
    return idx;
  }
};

}  // namespace

FiniteBinaryTable affine_quandle(const std::vector<int>& orders,
                                 const std::vector<std::vector<Int>>& aut) {
  const std::size_t d = orders.size();
  if (d == 0) raise(Errc::SpecMismatch, "empty order list");
  if (aut.size() != d) raise(Errc::NotAutomorphism, "matrix size does not match order list");
  for (const auto& row : aut)
    if (row.size() != d) raise(Errc::NotAutomorphism, "matrix is not square");

  // well-definedness on the direct sum: changing coordinate j by k_j must not
  // change row i modulo k_i
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if ((aut[i][j] * orders[j]) % orders[i] != 0)
        raise(Errc::NotAutomorphism, "matrix does not act on the direct sum");

  MixedRadix radix(orders);
  auto apply = [&](const std::vector<int>& v) {
    std::vector<int> out(d);
    for (std::size_t i = 0; i < d; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += aut[i][j] * v[j];
      Int r = acc % orders[i];
      if (r < 0) r += orders[i];
      out[i] = r.convert_to<int>();
    }
    return out;
  };

  const std::int64_t N = radix.total;
  std::vector<std::int64_t> image(N);
  std::vector<bool> hit(N, false);
  for (std::int64_t idx = 0; idx < N; ++idx) {
    std::int64_t h = radix.encode(apply(radix.decode(idx)));
    image[idx] = h;
    if (hit[h]) raise(Errc::NotAutomorphism, "matrix is not injective on the direct sum");
    hit[h] = true;
  }

  // a*b = a - h(a) + h(b)
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(N) * N);
  std::vector<std::vector<int>> tuples(N), images(N);
  for (std::int64_t idx = 0; idx < N; ++idx) {
    tuples[idx] = radix.decode(idx);
    images[idx] = radix.decode(image[idx]);
  }
  for (std::int64_t a = 0; a < N; ++a)
    for (std::int64_t b = 0; b < N; ++b) {
      std::vector<int> v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = tuples[a][i] - images[a][i] + images[b][i];
      entries.push_back(static_cast<int>(radix.encode(v)));
    }
  return FiniteBinaryTable(static_cast<int>(N), std::move(entries));
}

FiniteBinaryTable affine_quandle(int k, Int u) {
  return affine_quandle(std::vector<int>{k}, {{std::move(u)}});
}

FiniteBinaryTable free_2reductive_symmetric(int n, const GeneratorSet& gens,
                                            std::size_t max_elements) {
  if (n < 1) raise(Errc::SpecMismatch, "symmetric order must be >= 1");
  const std::size_t g = gens.size();
  std::size_t module = 1;
  for (std::size_t i = 0; i + 1 < g; ++i) {
    module *= static_cast<std::size_t>(n);
    if (module * g > max_elements) raise(Errc::SizeLimit, "table would exceed the size limit");
  }
  const std::size_t total = module * g;
  if (total > max_elements) raise(Errc::SizeLimit, "table would exceed the size limit");

  // index = gen_index * n^{g-1} + sum a_c n^c over X^- in declaration order
  auto digits = [&](std::size_t idx) {
    std::size_t gi = idx / module;
    std::size_t a = idx % module;
    std::vector<int> v(g - 1);
    for (std::size_t c = 0; c + 1 < g; ++c) {
      v[c] = static_cast<int>(a % n);
      a /= n;
    }
    return std::pair{static_cast<int>(gi), v};
  };
  auto index = [&](int gi, const std::vector<int>& v) {
    std::size_t a = 0;
    for (std::size_t c = v.size(); c-- > 0;) a = a * n + static_cast<std::size_t>(v[c]);
    return static_cast<int>(gi * module + a);
  };

  return FiniteBinaryTable::from_function(static_cast<int>(total), [&](int xa, int xb) {
    auto [i, a] = digits(static_cast<std::size_t>(xa));
    auto [j, b] = digits(static_cast<std::size_t>(xb));
    // (a,i)*(b,j) = (b + e_i - e_j, j); coordinate c corresponds to
    // generator c+1, the base generator contributes nothing
    std::vector<int> v = b;
    if (i > 0) v[i - 1] = (v[i - 1] + 1) % n;
    if (j > 0) v[j - 1] = (v[j - 1] + n - 1) % n;
    return index(j, v);
  });
}

std::vector<int> right_translation_embedding(const FiniteBinaryTable& Q, int x) {
  if (x < 0 || x >= Q.size()) raise(Errc::SpecMismatch, "base point out of range");
  AxiomReport rep = check_axioms(Q);
  if (!rep.is_medial_quandle())
    raise(Errc::NotMedial, "right translations are homomorphisms only in medial quandles");
  const int n = Q.size();
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
      int v = Q.at(a, y);
      if (seen[v])
        raise(Errc::NotCancellative, "column " + std::to_string(y) + " is not injective");
      seen[v] = true;
    }
  }
  std::vector<int> phi(n);
  for (int y = 0; y < n; ++y) phi[y] = Q.at(y, x);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[Q.at(a, b)] != Q.at(phi[a], phi[b]))
        raise(Errc::SpecMismatch, "right translation failed the homomorphism check");
  return phi;
}

namespace {

// candidate rows for position x: permutations fixing x, generated in
// lexicographic order
std::vector<std::vector<int>> rows_fixing(int n, int x) {
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != x) rest.push_back(v);
  std::vector<std::vector<int>> out;
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> row(n);
    row[x] = x;
    std::size_t k = 0;
    for (int y = 0; y < n; ++y)
      if (y != x) row[y] = rest[k++];
    out.push_back(std::move(row));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

struct NonMedialSearch {
  int n;
  std::uint64_t budget;
  std::uint64_t& nodes;
  std::vector<std::vector<std::vector<int>>> candidates;  // per level
  std::vector<std::vector<int>> rows;                     // assigned so far

  bool distributivity_ok(int just_assigned) const {
    // check every (x,y,z) triple whose three involved rows x, y, x*y are all
    // assigned and include the new one
    int r = just_assigned;
    int assigned = r + 1;
    for (int x = 0; x < assigned; ++x)
      for (int y = 0; y < assigned; ++y) {
        int xy = rows[x][y];
        if (xy >= assigned) continue;
        if (x != r && y != r && xy != r) continue;
        for (int z = 0; z < n; ++z)
          if (rows[x][rows[y][z]] != rows[xy][rows[x][z]]) return false;
      }
    return true;
  }

  bool search(int level, FiniteBinaryTable* out) {
    if (level == n) {
      std::vector<int> flat;
      flat.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
      FiniteBinaryTable table(n, std::move(flat));
      if (!check_axioms(table).medial) {
        *out = table;
        return true;
      }
      return false;
    }
    for (const auto& row : candidates[level]) {
      if (nodes >= budget) return false;
      ++nodes;
      rows.push_back(row);
      if (distributivity_ok(level) && search(level + 1, out)) return true;
      rows.pop_back();
    }
    return false;
  }
};

}  // namespace

NonMedialSearchResult search_nonmedial_quandle(int max_n, std::uint64_t seed,
                                               std::uint64_t node_budget) {
  NonMedialSearchResult result;
  std::mt19937_64 rng(seed);
  for (int n = 2; n <= max_n; ++n) {
    ++result.sizes_tried;
    std::vector<std::vector<std::vector<int>>> candidates;
    for (int x = 0; x < n; ++x) {
      auto rows = rows_fixing(n, x);
      if (seed != 0) {
        // Fisher-Yates with the shared stream, stable across platforms
        for (std::size_t k = rows.size(); k > 1; --k)
          std::swap(rows[k - 1], rows[rng() % k]);
      }
      candidates.push_back(std::move(rows));
    }
    FiniteBinaryTable found(1, {0});
    NonMedialSearch search{n, node_budget, result.nodes_visited, std::move(candidates), {}};
    search.rows.reserve(n);
    if (search.search(0, &found)) {
      result.witness = found;
      return result;
    }
    if (result.nodes_visited >= node_budget) return result;
  }
  return result;
}

}  // namespace qf
