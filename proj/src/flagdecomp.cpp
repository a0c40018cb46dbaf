#include "einflag/flagdecomp.hpp"

#include <algorithm>
#include <numeric>

namespace einflag {

std::string dtype_name(DType t) {
  switch (t) {
    case DType::Ia: return "Ia";
    case DType::Ib: return "Ib";
    case DType::IIa: return "IIa";
    case DType::IIb: return "IIb";
  }
  return "?";
}

std::vector<std::vector<Root>> grade_roots(const RootSystem& rs, int i0) {
  if (i0 < 0 || i0 >= rs.rank()) throw std::invalid_argument("painted node out of range");
  int t = rs.highest_root.coeffs[i0];
  std::vector<std::vector<Root>> levels(t + 1);
  for (const Root& r : rs.positive_roots) levels[r.coeffs[i0]].push_back(r);
  return levels;
}

std::vector<int> Decomposition::blocks() const {
  switch (dtype) {
    case DType::IIa:
    case DType::IIb: return {0, 1, 2, 3, 4};
    case DType::Ib: return {0, 1, 3, 4};
    case DType::Ia: return {0, 2, 3, 4};
  }
  return {};
}

long Decomposition::dim_of_block(int id) const {
  switch (id) {
    case 0: return d0;
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
    case 4: return d4;
  }
  throw std::invalid_argument("bad block id");
}

std::vector<long> Decomposition::block_dims() const {
  std::vector<long> out;
  for (int b : blocks()) out.push_back(dim_of_block(b));
  return out;
}

namespace {

std::vector<std::vector<int>> diagram_components(const RootSystem& rs, int removed) {
  int n = rs.rank();
  std::vector<bool> seen(n, false);
  seen[removed] = true;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : rs.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Positive roots supported entirely on the given node set.
std::vector<Root> supported_roots(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<bool> in(rs.rank(), false);
  for (int v : nodes) in[v] = true;
  std::vector<Root> out;
  for (const Root& r : rs.positive_roots) {
    bool ok = true;
    for (int i = 0; i < rs.rank() && ok; ++i)
      if (r.coeffs[i] != 0 && !in[i]) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

long ideal_dim(const RootSystem& rs, const std::vector<int>& nodes) {
  return static_cast<long>(nodes.size()) + 2 * static_cast<long>(supported_roots(rs, nodes).size());
}

// True when the ideal built on `nodes` commutes with m2, i.e. no root of the
// component can be added to or subtracted from a level-2 root.
bool commutes_with_m2(const RootSystem& rs, const std::vector<int>& nodes,
                      const std::vector<Root>& level2) {
  std::vector<Root> comp_roots = supported_roots(rs, nodes);
  int n = rs.rank();
  std::vector<int> v(n);
  for (const Root& beta : level2) {
    for (const Root& alpha : comp_roots) {
      bool sum_ok = true, diff_ok = true;
      for (int i = 0; i < n; ++i) {
        v[i] = beta.coeffs[i] + alpha.coeffs[i];
        if (v[i] < 0) sum_ok = false;
      }
      if (sum_ok && rs.contains(v)) return false;
      for (int i = 0; i < n; ++i) {
        v[i] = beta.coeffs[i] - alpha.coeffs[i];
        if (v[i] < 0) diff_ok = false;
      }
      if (diff_ok && rs.contains(v)) return false;
    }
  }
  return true;
}

}  // namespace

Rat killing_ratio(const RootSystem& rs, const std::vector<int>& component_nodes) {
  // Any Cartan direction of the component will do; take its first simple root.
  std::vector<int> v(rs.rank(), 0);
  v[component_nodes.front()] = 1;
  long amb = 0, sub = 0;
  for (const Root& r : rs.positive_roots) {
    long p = rs.inner(r.coeffs, v);
    amb += p * p;
  }
  for (const Root& r : supported_roots(rs, component_nodes)) {
    long p = rs.inner(r.coeffs, v);
    sub += p * p;
  }
  Rat ratio{Int(amb), Int(sub)};
  ratio.canonicalize();
  return ratio;
}

Decomposition decompose(const RootSystem& rs, int i0) {
  auto levels = grade_roots(rs, i0);
  int t = static_cast<int>(levels.size()) - 1;
  if (t != 2)
    throw NotTwoSummands(rs.kind.name() + " node " + std::to_string(i0 + 1) + ": grading has " +
                         std::to_string(t) + " isotropy summands, need 2");

  Decomposition d;
  d.kind = rs.kind;
  d.i0 = i0;
  d.q = 2;
  d.d0 = 1;
  d.d3 = 2 * static_cast<long>(levels[1].size());
  d.d4 = 2 * static_cast<long>(levels[2].size());
  d.pi0_components = diagram_components(rs, i0);
  bool next_to_lowest = rs.extended_adjacency[i0];

  if (d.pi0_components.size() <= 1) {
    d.dtype = next_to_lowest ? DType::Ia : DType::Ib;
    long dim = d.pi0_components.empty() ? 0 : ideal_dim(rs, d.pi0_components.front());
    if (d.dtype == DType::Ia) {
      d.d2 = dim;  // table convention: the single ideal sits in the h2 slot
      if (!d.pi0_components.empty()) d.h2_nodes = d.pi0_components.front();
    } else {
      d.d1 = dim;
      if (!d.pi0_components.empty()) d.h1_nodes = d.pi0_components.front();
    }
  } else {
    d.dtype = next_to_lowest ? DType::IIa : DType::IIb;
    std::vector<int> acting;  // components with [h_C, m2] != 0
    for (size_t c = 0; c < d.pi0_components.size(); ++c)
      if (!commutes_with_m2(rs, d.pi0_components[c], levels[2])) acting.push_back((int)c);

    int h1_index = -1;
    if (acting.size() == 1) {
      h1_index = acting.front();
    } else if (acting.empty()) {
      // Every component commutes with m2 (the type-a cases). Pick h1 as the
      // component whose internal bracket sum matches the closed form
      // [1;11] = 2 d4 (2 d1 + 2 - d4) / (d3 + 4 d4), i.e. d1 / lambda_C.
      for (size_t c = 0; c < d.pi0_components.size() && h1_index < 0; ++c) {
        Rat lam = killing_ratio(rs, d.pi0_components[c]);
        Rat dim_c(ideal_dim(rs, d.pi0_components[c]));
        Rat closed = Rat(2 * d.d4) * (2 * dim_c + 2 - d.d4) / Rat(d.d3 + 4 * d.d4);
        if (dim_c / lam == closed) h1_index = static_cast<int>(c);
      }
      if (h1_index < 0)
        throw std::logic_error("no consistent ideal assignment for " + rs.kind.name() +
                               " node " + std::to_string(i0 + 1));
    } else {
      throw std::logic_error("more than one component acts on m2 at " + rs.kind.name() +
                             " node " + std::to_string(i0 + 1));
    }

    d.h1_nodes = d.pi0_components[h1_index];
    d.d1 = ideal_dim(rs, d.h1_nodes);
    for (size_t c = 0; c < d.pi0_components.size(); ++c) {
      if ((int)c == h1_index) continue;
      d.d2 += ideal_dim(rs, d.pi0_components[c]);
      d.h2_nodes.insert(d.h2_nodes.end(), d.pi0_components[c].begin(),
                        d.pi0_components[c].end());
    }
    std::sort(d.h2_nodes.begin(), d.h2_nodes.end());
  }

  if (d.d0 + d.d1 + d.d2 + d.d3 + d.d4 != d.dim_g())
    throw std::logic_error("block dimensions do not sum to dim g at " + rs.kind.name() +
                           " node " + std::to_string(i0 + 1));
  return d;
}

std::vector<Decomposition> find_nodes_with_q2(const RootSystem& rs) {
  std::vector<Decomposition> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.highest_root.coeffs[i] == 2) out.push_back(decompose(rs, i));
  return out;
}

}  // namespace einflag
