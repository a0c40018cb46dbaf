#include "einflag/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace einflag {

std::string family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

LieKind LieKind::make(Family f, int rank) {
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  switch (f) {
    case Family::B: need(rank >= 2, "B requires rank >= 2"); break;
    case Family::C: need(rank >= 3, "C requires rank >= 3"); break;
    case Family::D: need(rank >= 4, "D requires rank >= 4"); break;
    case Family::E6: need(rank == 6, "E6 has rank 6"); break;
    case Family::E7: need(rank == 7, "E7 has rank 7"); break;
    case Family::E8: need(rank == 8, "E8 has rank 8"); break;
    case Family::F4: need(rank == 4, "F4 has rank 4"); break;
    case Family::G2: need(rank == 2, "G2 has rank 2"); break;
  }
  return LieKind{f, rank};
}

LieKind LieKind::parse(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty group name");
  if (name == "E6") return make(Family::E6, 6);
  if (name == "E7") return make(Family::E7, 7);
  if (name == "E8") return make(Family::E8, 8);
  if (name == "F4") return make(Family::F4, 4);
  if (name == "G2") return make(Family::G2, 2);
  char fam = name[0];
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw std::invalid_argument("cannot parse group name: " + name);
  }
  switch (fam) {
    case 'B': return make(Family::B, rank);
    case 'C': return make(Family::C, rank);
    case 'D': return make(Family::D, rank);
  }
  throw std::invalid_argument("unknown family in group name: " + name);
}

long LieKind::dim() const {
  long n = rank;
  switch (family) {
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    case Family::F4: return 52;
    case Family::G2: return 14;
  }
  return 0;
}

std::string LieKind::name() const {
  switch (family) {
    case Family::B:
    case Family::C:
    case Family::D: return family_name(family) + std::to_string(rank);
    default: return family_name(family);
  }
}

int Root::height() const {
  int h = 0;
  for (int m : coeffs) h += m;
  return h;
}

namespace {

// cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i), plus eps = (a_i,a_i)/2 scaled to
// integers. Chains are encoded via helper `bond`.
struct CartanBuilder {
  int n;
  std::vector<std::vector<int>> a;
  std::vector<long> eps;

  explicit CartanBuilder(int rank) : n(rank), a(rank, std::vector<int>(rank, 0)), eps(rank, 1) {
    for (int i = 0; i < n; ++i) a[i][i] = 2;
  }
  void single(int i, int j) {  // 0-based, equal lengths
    a[i][j] = a[j][i] = -1;
  }
};

std::vector<std::vector<int>> build_cartan(const LieKind& k, std::vector<long>& eps) {
  int n = k.rank;
  CartanBuilder cb(n);
  switch (k.family) {
    case Family::B:
      for (int i = 0; i + 1 < n - 1; ++i) cb.single(i, i + 1);
      // a_{n-1} long, a_n short: <a_{n-1}, a_n^vee> = -2.
      cb.a[n - 1][n - 2] = -2;
      cb.a[n - 2][n - 1] = -1;
      for (int i = 0; i < n - 1; ++i) cb.eps[i] = 2;
      cb.eps[n - 1] = 1;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n - 1; ++i) cb.single(i, i + 1);
      // a_{n-1} short, a_n long: <a_n, a_{n-1}^vee> = -2.
      cb.a[n - 2][n - 1] = -2;
      cb.a[n - 1][n - 2] = -1;
      for (int i = 0; i < n - 1; ++i) cb.eps[i] = 1;
      cb.eps[n - 1] = 2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) cb.single(i, i + 1);
      cb.single(n - 3, n - 1);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      // Chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4 (1-based).
      cb.single(0, 2);
      cb.single(2, 3);
      cb.single(1, 3);
      for (int i = 4; i < n; ++i) cb.single(i - 1, i);
      break;
    }
    case Family::F4:
      cb.single(0, 1);
      // a2 long, a3 short: <a_2, a_3^vee> = -2.
      cb.a[2][1] = -2;
      cb.a[1][2] = -1;
      cb.single(2, 3);
      cb.eps = {2, 2, 1, 1};
      break;
    case Family::G2:
      // a1 short, a2 long: <a_2, a_1^vee> = -3.
      cb.a[0][1] = -3;
      cb.a[1][0] = -1;
      cb.eps = {1, 3};
      break;
  }
  eps = cb.eps;
  return cb.a;
}

}  // namespace

long RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      s += static_cast<long>(a[i]) * b[j] * simple_inner(i, j);
    }
  }
  return s;
}

std::vector<int> RootSystem::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank(); ++j)
    if (j != i && cartan[i][j] != 0) out.push_back(j);
  return out;
}

RootSystem enumerate_positive_roots(LieKind kind) {
  LieKind k = LieKind::make(kind.family, kind.rank);  // re-validate
  int n = k.rank;
  RootSystem rs;
  rs.kind = k;
  rs.cartan = build_cartan(k, rs.eps);
  // Pairing must come out symmetric; guards the per-family length tables.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      assert(rs.cartan[i][j] * rs.eps[i] == rs.cartan[j][i] * rs.eps[j]);

  // Closure from the simple roots, breadth-first by height. alpha + alpha_i is
  // a root iff q = p - <alpha, alpha_i^vee> > 0, where p is the number of
  // steps the alpha_i-string continues below alpha.
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& m : frontier) {
      for (int i = 0; i < n; ++i) {
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += static_cast<long>(m[j]) * rs.cartan[i][j];
        int p = 0;
        std::vector<int> down = m;
        while (down[i] > 0) {
          down[i] -= 1;
          bool is_zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (is_zero || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = m;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  rs.root_set = roots;
  rs.positive_roots.reserve(roots.size());
  for (const auto& m : roots) rs.positive_roots.push_back(Root{m});
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

  if (static_cast<int>(rs.positive_roots.size()) != k.num_positive_roots())
    throw std::logic_error("root closure produced wrong count for " + k.name());

  // Highest root: maximal height, and it must dominate coefficient-wise.
  const Root* best = &rs.positive_roots.front();
  for (const Root& r : rs.positive_roots)
    if (r.height() > best->height()) best = &r;
  rs.highest_root = *best;
  for (const Root& r : rs.positive_roots)
    for (int i = 0; i < n; ++i)
      if (r.coeffs[i] > rs.highest_root.coeffs[i])
        throw std::logic_error("highest root fails to dominate in " + k.name());

  rs.extended_adjacency.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> ei(n, 0);
    ei[i] = 1;
    rs.extended_adjacency[i] = rs.inner(ei, rs.highest_root.coeffs) != 0;
  }
  return rs;
}

std::vector<int> extended_neighbors(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.extended_adjacency[i]) out.push_back(i);
  return out;
}

}  // namespace einflag
