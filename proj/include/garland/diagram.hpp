#pragma once

// Coxeter diagrams as labelled graphs, their cosine (Gram) matrices, and the
// spherical / affine / compact-hyperbolic classification via the Gram
// signature. Includes the enumeration of the compact hyperbolic simplex
// diagrams with edge labels in {2,3,4,6}: triangles with angle sum < pi,
// the two labelled 4-cycles and the labelled 5-cycle.
//
// Non-adjacent nodes carry label 2 (commuting generators), so the squares
// and pentagons are stored as cycles with label-2 diagonals.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "garland/eigen.hpp"
#include "garland/quadratic_field.hpp"

namespace garland {

struct CoxeterDiagram {
  int rank = 0;
  std::vector<int> labels;  // rank*rank symmetric, m_ii = 1, m_ij >= 2

  int label(int i, int j) const { return labels[static_cast<size_t>(i) * rank + j]; }
  int& label(int i, int j) { return labels[static_cast<size_t>(i) * rank + j]; }

  static CoxeterDiagram all_commuting(int rank) {
    CoxeterDiagram d;
    d.rank = rank;
    d.labels.assign(static_cast<size_t>(rank) * rank, 2);
    for (int i = 0; i < rank; ++i) d.label(i, i) = 1;
    return d;
  }

  void set_edge(int i, int j, int m) {
    label(i, j) = m;
    label(j, i) = m;
  }

  void validate() const {
    if (rank < 1 || labels.size() != static_cast<size_t>(rank) * rank)
      throw std::invalid_argument("diagram: bad rank/labels size");
    for (int i = 0; i < rank; ++i) {
      if (label(i, i) != 1) throw std::invalid_argument("diagram: diagonal must be 1");
      for (int j = i + 1; j < rank; ++j) {
        if (label(i, j) != label(j, i)) throw std::invalid_argument("diagram: labels not symmetric");
        if (label(i, j) < 2) throw std::invalid_argument("diagram: off-diagonal labels must be >= 2");
      }
    }
  }

  bool operator==(const CoxeterDiagram& o) const { return rank == o.rank && labels == o.labels; }
};

// ---------------------------------------------------------------------------
// Gram (cosine) matrix
// ---------------------------------------------------------------------------

// -cos(pi/m), exact algebraic values for the labels that occur in the
// enumerated diagrams, transcendental cosine otherwise.
inline double gram_entry(int m) {
  switch (m) {
    case 1: return 1.0;  // diagonal convention: -cos(pi/1) = 1
    case 2: return 0.0;
    case 3: return -0.5;
    case 4: return -std::sqrt(2.0) / 2.0;
    case 6: return -std::sqrt(3.0) / 2.0;
    default: return -std::cos(M_PI / m);
  }
}

inline std::vector<double> gram_matrix(const CoxeterDiagram& d) {
  d.validate();
  std::vector<double> b(static_cast<size_t>(d.rank) * d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      b[static_cast<size_t>(i) * d.rank + j] = (i == j) ? 1.0 : gram_entry(d.label(i, j));
  return b;
}

// Exact Gram entry in Q(sqrt2, sqrt3); only labels {1,2,3,4,6} have one.
inline std::optional<QuadExt> gram_entry_exact(int m) {
  switch (m) {
    case 1: return QuadExt(Rat(1));
    case 2: return QuadExt(Rat(0));
    case 3: return QuadExt(Rat(-1, 2));
    case 4: return QuadExt::sqrt2_times(Rat(-1, 2));
    case 6: return QuadExt::sqrt3_times(Rat(-1, 2));
    default: return std::nullopt;
  }
}

inline bool has_exact_gram(const CoxeterDiagram& d) {
  for (int i = 0; i < d.rank; ++i)
    for (int j = i + 1; j < d.rank; ++j)
      if (!gram_entry_exact(d.label(i, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

enum class DiagramClass { Spherical, Affine, CompactHyperbolic, Other };

inline const char* to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::Spherical: return "spherical";
    case DiagramClass::Affine: return "affine";
    case DiagramClass::CompactHyperbolic: return "compact_hyperbolic";
    default: return "other";
  }
}

struct Signature {
  int positive = 0, zero = 0, negative = 0;
};

inline Signature gram_signature(const CoxeterDiagram& d, double zero_tol = 1e-9) {
  auto eig = dense_eigensolve(gram_matrix(d), d.rank, false);
  Signature s;
  for (double v : eig.values) {
    if (std::fabs(v) < zero_tol)
      ++s.zero;
    else if (v > 0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s;
}

namespace detail {

inline CoxeterDiagram restrict_to(const CoxeterDiagram& d, const std::vector<int>& nodes) {
  CoxeterDiagram r = CoxeterDiagram::all_commuting(static_cast<int>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j)
      r.label(static_cast<int>(i), static_cast<int>(j)) = d.label(nodes[i], nodes[j]);
  return r;
}

// connected components of the diagram graph (edges where label >= 3)
inline std::vector<std::vector<int>> diagram_components(const CoxeterDiagram& d) {
  std::vector<int> comp(d.rank, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < d.rank; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w = 0; w < d.rank; ++w)
        if (w != v && d.label(v, w) >= 3 && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

inline bool positive_definite(const CoxeterDiagram& d, double zero_tol = 1e-9) {
  Signature s = gram_signature(d, zero_tol);
  return s.positive == d.rank;
}

// exact principal-minor determinants for diagrams whose Gram entries live in
// Q(sqrt2,sqrt3); subset given as node list
inline QuadExt exact_principal_det(const CoxeterDiagram& d, const std::vector<int>& nodes) {
  std::vector<std::vector<QuadExt>> m(nodes.size(), std::vector<QuadExt>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j) {
      int lbl = (nodes[i] == nodes[j]) ? 1 : d.label(nodes[i], nodes[j]);
      m[i][j] = *gram_entry_exact(lbl);
    }
  return quadext_det(m);
}

inline void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

struct Classification {
  DiagramClass cls;
  Signature signature;
  bool exact_checked = false;  // exact symbolic cross-check ran (rank<=5, labels in {2,3,4,6})
};

// Signature-based classification with an exact symbolic cross-check where the
// Gram entries are algebraic over {2,3,4,6} and the rank is small. Exact zeros
// (affine boundaries) are certified symbolically, not by the float tolerance.
inline Classification classify(const CoxeterDiagram& d, double zero_tol = 1e-9) {
  d.validate();
  Classification out;
  out.signature = gram_signature(d, zero_tol);
  const Signature& s = out.signature;
  const int n = d.rank;

  auto proper_principal_pd = [&]() {
    for (int k = 1; k < n; ++k) {
      std::vector<std::vector<int>> subs;
      detail::subsets_of_size(n, k, subs);
      for (auto& sub : subs)
        if (!detail::positive_definite(detail::restrict_to(d, sub), zero_tol)) return false;
    }
    return true;
  };

  if (s.positive == n) {
    out.cls = DiagramClass::Spherical;
  } else if (s.negative == 0 && s.zero >= 1) {
    // affine: PSD with kernel, every proper connected subdiagram spherical
    bool proper_spherical = true;
    for (auto& comp : detail::diagram_components(d)) {
      for (int drop : comp) {
        std::vector<int> rest;
        for (int v : comp)
          if (v != drop) rest.push_back(v);
        if (!rest.empty() && !detail::positive_definite(detail::restrict_to(d, rest), zero_tol)) {
          proper_spherical = false;
          break;
        }
      }
      if (!proper_spherical) break;
    }
    out.cls = proper_spherical ? DiagramClass::Affine : DiagramClass::Other;
  } else if (s.positive == n - 1 && s.zero == 0 && s.negative == 1 && proper_principal_pd()) {
    out.cls = DiagramClass::CompactHyperbolic;
  } else {
    out.cls = DiagramClass::Other;
  }

  // exact cross-check: determinant signs of all principal minors
  if (n <= 5 && has_exact_gram(d)) {
    out.exact_checked = true;
    int all_pd_depth = 0;  // largest k with all k x k principal minors > 0
    bool all_proper_pd = true;
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<int>> subs;
      detail::subsets_of_size(n, k, subs);
      int sign_min = 2;
      for (auto& sub : subs) sign_min = std::min(sign_min, detail::exact_principal_det(d, sub).sign());
      if (k < n && sign_min <= 0) all_proper_pd = false;
      if (sign_min > 0 && all_pd_depth == k - 1) all_pd_depth = k;
      if (k == n) {
        int full_sign = sign_min;  // min over the single full determinant
        // certify class against exact data
        bool exact_spherical = all_proper_pd && full_sign > 0 && all_pd_depth == n;
        bool exact_hyperbolic = all_proper_pd && full_sign < 0;
        if (out.cls == DiagramClass::Spherical && !exact_spherical)
          throw std::logic_error("classify: float signature disagrees with exact minors (spherical)");
        if (out.cls == DiagramClass::CompactHyperbolic && !exact_hyperbolic)
          throw std::logic_error("classify: float signature disagrees with exact minors (hyperbolic)");
        if (out.cls == DiagramClass::Affine && full_sign != 0)
          throw std::logic_error("classify: affine determinant not exactly zero");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// enumeration of the compact hyperbolic simplex diagrams, labels in {2,3,4,6}
// ---------------------------------------------------------------------------

inline CoxeterDiagram make_triangle(int a, int b, int c) {
  // sorted triple (a,b,c); edge (0,1)=a, (1,2)=b, (0,2)=c
  CoxeterDiagram d = CoxeterDiagram::all_commuting(3);
  d.set_edge(0, 1, a);
  d.set_edge(1, 2, b);
  d.set_edge(0, 2, c);
  return d;
}

inline CoxeterDiagram make_cycle(const std::vector<int>& cycle_labels) {
  int n = static_cast<int>(cycle_labels.size());
  CoxeterDiagram d = CoxeterDiagram::all_commuting(n);
  for (int i = 0; i < n; ++i) d.set_edge(i, (i + 1) % n, cycle_labels[i]);
  return d;
}

inline CoxeterDiagram make_path(const std::vector<int>& path_labels) {
  int n = static_cast<int>(path_labels.size()) + 1;
  CoxeterDiagram d = CoxeterDiagram::all_commuting(n);
  for (int i = 0; i + 1 < n; ++i) d.set_edge(i, i + 1, path_labels[i]);
  return d;
}

// lexicographically minimal rotation/reflection of a cycle label sequence
inline std::vector<int> canonical_cycle(std::vector<int> labels) {
  std::vector<int> best;
  int n = static_cast<int>(labels.size());
  for (int rev = 0; rev < 2; ++rev) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = labels[(s + i) % n];
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(labels.begin(), labels.end());
  }
  return best;
}

// All compact hyperbolic simplex diagrams of dimension dim (rank dim+1) with
// labels in {2,3,4,6}, canonical form, ascending order. Every result is
// cross-checked to classify CompactHyperbolic.
inline std::vector<CoxeterDiagram> enumerate_hyperbolic(int dim) {
  std::vector<CoxeterDiagram> out;
  if (dim == 2) {
    const int alphabet[4] = {2, 3, 4, 6};
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j)
        for (int k = j; k < 4; ++k) {
          int a = alphabet[i], b = alphabet[j], c = alphabet[k];
          // 1/a + 1/b + 1/c < 1 via integer cross multiplication
          if (b * c + a * c + a * b < a * b * c) out.push_back(make_triangle(a, b, c));
        }
  } else if (dim == 3) {
    out.push_back(make_cycle(canonical_cycle({4, 3, 3, 3})));
    out.push_back(make_cycle(canonical_cycle({4, 3, 4, 3})));
  } else if (dim == 4) {
    out.push_back(make_cycle(canonical_cycle({4, 3, 3, 3, 3})));
  } else {
    throw std::invalid_argument("enumerate_hyperbolic: dim must be 2, 3 or 4");
  }
  for (const auto& d : out)
    if (classify(d).cls != DiagramClass::CompactHyperbolic)
      throw std::logic_error("enumerate_hyperbolic: produced a non-hyperbolic diagram");
  return out;
}

// ---------------------------------------------------------------------------
// link subdiagrams and spherical type identification
// ---------------------------------------------------------------------------

// diagram of the link of a simplex whose vertex types are `cotype`:
// restriction to the complementary nodes
inline CoxeterDiagram link_subdiagram(const CoxeterDiagram& d, const std::vector<int>& cotype) {
  if (cotype.empty() || static_cast<int>(cotype.size()) >= d.rank)
    throw std::invalid_argument("link_subdiagram: cotype must be a proper nonempty node subset");
  std::vector<bool> drop(d.rank, false);
  for (int v : cotype) {
    if (v < 0 || v >= d.rank) throw std::invalid_argument("link_subdiagram: node out of range");
    drop[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < d.rank; ++v)
    if (!drop[v]) keep.push_back(v);
  return detail::restrict_to(d, keep);
}

struct SphericalType {
  // one tag per connected component, sorted; "A1", "A3", "B3", "I2(6)", "F4", "Unknown"
  std::vector<std::string> components;

  bool reducible() const { return components.size() > 1; }
  bool known() const {
    for (auto& c : components)
      if (c == "Unknown") return false;
    return true;
  }
  std::string tag() const {
    std::string s;
    for (size_t i = 0; i < components.size(); ++i) {
      if (i) s += "x";
      s += components[i];
    }
    return s;
  }
};

namespace detail {

// order the nodes of a connected component as a path, or empty if not a path
inline std::vector<int> path_order(const CoxeterDiagram& d, const std::vector<int>& comp) {
  if (comp.size() == 1) return comp;
  std::vector<int> deg(comp.size(), 0);
  for (size_t i = 0; i < comp.size(); ++i)
    for (size_t j = 0; j < comp.size(); ++j)
      if (i != j && d.label(comp[i], comp[j]) >= 3) ++deg[i];
  std::vector<int> ends;
  for (size_t i = 0; i < comp.size(); ++i) {
    if (deg[i] > 2) return {};
    if (deg[i] == 1) ends.push_back(static_cast<int>(i));
  }
  if (ends.size() != 2) return {};  // cycle or worse
  std::vector<int> order{comp[ends[0]]};
  std::vector<bool> used(comp.size(), false);
  used[ends[0]] = true;
  while (order.size() < comp.size()) {
    bool advanced = false;
    for (size_t j = 0; j < comp.size(); ++j)
      if (!used[j] && d.label(order.back(), comp[j]) >= 3) {
        order.push_back(comp[j]);
        used[j] = true;
        advanced = true;
        break;
      }
    if (!advanced) return {};
  }
  return order;
}

inline std::string component_type(const CoxeterDiagram& d, const std::vector<int>& comp) {
  const size_t r = comp.size();
  if (r == 1) return "A1";
  if (r == 2) {
    int m = d.label(comp[0], comp[1]);
    return "I2(" + std::to_string(m) + ")";
  }
  std::vector<int> order = path_order(d, comp);
  if (order.empty()) return "Unknown";
  std::vector<int> edge_labels;
  for (size_t i = 0; i + 1 < order.size(); ++i) edge_labels.push_back(d.label(order[i], order[i + 1]));
  auto rev = edge_labels;
  std::reverse(rev.begin(), rev.end());
  if (rev < edge_labels) edge_labels = rev;
  bool all3 = std::all_of(edge_labels.begin(), edge_labels.end(), [](int m) { return m == 3; });
  if (all3) return "A" + std::to_string(r);
  // one terminal 4, rest 3
  if (edge_labels.front() == 4 || edge_labels.back() == 4) {
    std::vector<int> inner(edge_labels.begin() + (edge_labels.front() == 4 ? 1 : 0),
                           edge_labels.end() - (edge_labels.back() == 4 ? 1 : 0));
    if (edge_labels.front() == 4 && edge_labels.back() == 4) return "Unknown";
    if (std::all_of(inner.begin(), inner.end(), [](int m) { return m == 3; }))
      return "B" + std::to_string(r);
  }
  if (r == 4 && edge_labels == std::vector<int>{3, 4, 3}) return "F4";
  return "Unknown";
}

}  // namespace detail

// Pattern-match a spherical diagram against the path shapes; throws on
// non-spherical input.
inline SphericalType identify_spherical_type(const CoxeterDiagram& d) {
  if (classify(d).cls != DiagramClass::Spherical)
    throw std::invalid_argument("identify_spherical_type: diagram is not spherical");
  SphericalType t;
  if (d.rank == 2) {
    // rank-2 diagrams are the gons I2(m), label 2 = digon
    t.components = {"I2(" + std::to_string(d.label(0, 1)) + ")"};
    return t;
  }
  for (auto& comp : detail::diagram_components(d)) t.components.push_back(detail::component_type(d, comp));
  std::sort(t.components.begin(), t.components.end());
  return t;
}

// ---------------------------------------------------------------------------
// text format: triangle:3,3,4  cycle:4,3,3,3  path:3,4,3
// ---------------------------------------------------------------------------

inline std::string diagram_to_text(const CoxeterDiagram& d) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  // recognise triangle / cycle / path shapes in the stored diagram
  int n = d.rank;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.label(i, j) >= 3) edges.emplace_back(i, j);
  if (n == 3) {
    return "triangle:" + join({d.label(0, 1), d.label(1, 2), d.label(0, 2)});
  }
  std::vector<int> deg(n, 0);
  for (auto& e : edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  bool cycle = static_cast<int>(edges.size()) == n && std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; });
  if (cycle) {
    std::vector<int> seq;
    int prev = -1, cur = 0;
    for (int step = 0; step < n; ++step) {
      for (int w = 0; w < n; ++w)
        if (w != cur && w != prev && d.label(cur, w) >= 3) {
          seq.push_back(d.label(cur, w));
          prev = cur;
          cur = w;
          break;
        }
    }
    return "cycle:" + join(canonical_cycle(seq));
  }
  // fall back to a path rendering when the diagram is one
  for (auto& comp : detail::diagram_components(d)) {
    if (static_cast<int>(comp.size()) == n) {
      auto order = detail::path_order(d, comp);
      if (!order.empty()) {
        std::vector<int> seq;
        for (size_t i = 0; i + 1 < order.size(); ++i) seq.push_back(d.label(order[i], order[i + 1]));
        auto rev = seq;
        std::reverse(rev.begin(), rev.end());
        if (rev < seq) seq = rev;
        return "path:" + join(seq);
      }
    }
  }
  // generic: full label matrix
  std::string s = "matrix:";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += std::to_string(d.label(i, j)) + ((i == n - 2 && j == n - 1) ? "" : ",");
  return s;
}

inline CoxeterDiagram parse_diagram(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("diagram text: expected shape:labels");
  std::string shape = text.substr(0, colon);
  std::vector<int> labels;
  {
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      labels.push_back(std::stoi(tok));
    }
  }
  for (int m : labels)
    if (m < 2) throw std::invalid_argument("diagram text: labels must be >= 2");
  if (shape == "triangle") {
    if (labels.size() != 3) throw std::invalid_argument("triangle: expected 3 labels");
    return make_triangle(labels[0], labels[1], labels[2]);
  }
  if (shape == "cycle") {
    if (labels.size() < 3) throw std::invalid_argument("cycle: expected >= 3 labels");
    return make_cycle(labels);
  }
  if (shape == "path") {
    if (labels.empty()) throw std::invalid_argument("path: expected >= 1 label");
    return make_path(labels);
  }
  throw std::invalid_argument("diagram text: unknown shape '" + shape + "'");
}

// canonical text form: triangles get sorted labels, cycles the minimal
// rotation/reflection
inline std::string canonical_text(const CoxeterDiagram& d) {
  std::string t = diagram_to_text(d);
  if (t.rfind("triangle:", 0) == 0) {
    std::vector<int> l{d.label(0, 1), d.label(1, 2), d.label(0, 2)};
    std::sort(l.begin(), l.end());
    return "triangle:" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]);
  }
  return t;
}

}  // namespace garland
