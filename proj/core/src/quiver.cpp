#include "qhom/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qhom {

int Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  fail(ErrorKind::Input, "unknown vertex '" + name + "'");
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  fail(ErrorKind::Input, "unknown arrow '" + name + "'");
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) fail(ErrorKind::Input, "duplicate vertex '" + v + "'");
  std::set<std::string> aseen;
  for (const auto& a : arrows) {
    if (!aseen.insert(a.name).second) fail(ErrorKind::Input, "duplicate arrow '" + a.name + "'");
    if (a.src < 0 || a.src >= static_cast<int>(vertices.size()) ||
        a.tgt < 0 || a.tgt >= static_cast<int>(vertices.size()))
      fail(ErrorKind::Input, "arrow '" + a.name + "' has a missing endpoint");
  }
}

MonomialAlgebra::MonomialAlgebra(std::string name, Quiver q, Field f,
                                 std::vector<std::vector<std::string>> relations)
    : name_(std::move(name)), quiver_(std::move(q)), field_(f) {
  quiver_.validate();
  for (const auto& rel : relations) {
    if (rel.size() < 2)
      fail(ErrorKind::Input, "relation paths must have length >= 2");
    std::vector<int> idx;
    for (const auto& an : rel) idx.push_back(quiver_.arrow_index(an));
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (quiver_.arrows[idx[i]].tgt != quiver_.arrows[idx[i + 1]].src)
        fail(ErrorKind::Input, "relation path is not composable (traversal order expected)");
    relations_.push_back(std::move(idx));
  }
  check_finite_dimensional();
  build_basis();
}

bool MonomialAlgebra::path_is_zero(const std::vector<int>& arrows) const {
  for (const auto& rel : relations_) {
    if (rel.size() > arrows.size()) continue;
    for (std::size_t off = 0; off + rel.size() <= arrows.size(); ++off) {
      bool match = true;
      for (std::size_t i = 0; i < rel.size(); ++i)
        if (arrows[off + i] != rel[i]) { match = false; break; }
      if (match) return true;
    }
  }
  return false;
}

// Finite dimensionality is equivalent to the absence of a cycle in the
// factor-avoidance automaton whose states are (vertex, longest proper suffix
// of the walk that is a proper prefix of some relation).
void MonomialAlgebra::check_finite_dimensional() const {
  using State = std::pair<int, std::vector<int>>;
  std::map<State, int> ids;
  std::vector<State> states;
  std::vector<std::vector<int>> succ;

  auto intern = [&](const State& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(states.size());
    ids.emplace(s, id);
    states.push_back(s);
    succ.emplace_back();
    return id;
  };

  std::size_t max_rel = 0;
  for (const auto& r : relations_) max_rel = std::max(max_rel, r.size());

  auto longest_tracked_suffix = [&](std::vector<int> w) {
    if (max_rel > 0 && w.size() > max_rel - 1)
      w.erase(w.begin(), w.end() - static_cast<long>(max_rel - 1));
    // longest suffix that is a proper prefix of some relation
    for (std::size_t len = w.size(); len > 0; --len) {
      std::vector<int> suf(w.end() - static_cast<long>(len), w.end());
      for (const auto& r : relations_) {
        if (len >= r.size()) continue;
        if (std::equal(suf.begin(), suf.end(), r.begin())) return suf;
      }
    }
    return std::vector<int>{};
  };

  for (int v = 0; v < n_vertices(); ++v) intern({v, {}});
  for (std::size_t i = 0; i < states.size(); ++i) {
    State s = states[i];
    for (int a = 0; a < n_arrows(); ++a) {
      if (quiver_.arrows[a].src != s.first) continue;
      std::vector<int> walk = s.second;
      walk.push_back(a);
      if (path_is_zero(walk)) continue;
      int to = intern({quiver_.arrows[a].tgt, longest_tracked_suffix(walk)});
      succ[i].push_back(to);
    }
  }

  // cycle detection by coloring
  std::vector<int> color(states.size(), 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (std::size_t root = 0; root < states.size(); ++root) {
    if (color[root] != 0) continue;
    stack.push_back({static_cast<int>(root), 0});
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < succ[node].size()) {
        int to = succ[node][next++];
        if (color[to] == 1)
          fail(ErrorKind::NotFiniteDimensional,
               "algebra '" + name_ + "' is infinite dimensional (relation-free cycle)");
        if (color[to] == 0) {
          color[to] = 1;
          stack.push_back({to, 0});
        }
      } else {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
}

void MonomialAlgebra::build_basis() {
  basis_.clear();
  for (int v = 0; v < n_vertices(); ++v) basis_.push_back(Path{v, v, {}});

  std::vector<int> arrow_order(n_arrows());
  for (int i = 0; i < n_arrows(); ++i) arrow_order[i] = i;
  std::sort(arrow_order.begin(), arrow_order.end(), [&](int a, int b) {
    return quiver_.arrows[a].name < quiver_.arrows[b].name;
  });

  // BFS by length; layers kept lexicographic by arrow-name sequence.
  std::size_t layer_begin = 0, layer_end = basis_.size();
  const std::size_t hard_cap = 1u << 20;
  while (layer_begin < layer_end) {
    std::vector<Path> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      Path base = basis_[i];
      for (int a : arrow_order) {
        if (quiver_.arrows[a].src != base.tgt) continue;
        Path ext = base;
        ext.arrows.push_back(a);
        ext.tgt = quiver_.arrows[a].tgt;
        if (!path_is_zero(ext.arrows)) next.push_back(std::move(ext));
      }
    }
    // lexicographic order within the layer: sort by name sequence
    std::stable_sort(next.begin(), next.end(), [&](const Path& x, const Path& y) {
      for (std::size_t i = 0; i < std::min(x.arrows.size(), y.arrows.size()); ++i) {
        const std::string& xn = quiver_.arrows[x.arrows[i]].name;
        const std::string& yn = quiver_.arrows[y.arrows[i]].name;
        if (xn != yn) return xn < yn;
      }
      return x.arrows.size() < y.arrows.size();
    });
    layer_begin = basis_.size();
    for (auto& p : next) basis_.push_back(std::move(p));
    layer_end = basis_.size();
    if (basis_.size() > hard_cap)
      fail(ErrorKind::NotFiniteDimensional, "path enumeration exceeded the cap");
  }
}

int MonomialAlgebra::basis_index(const Path& p) const {
  if (path_is_zero(p.arrows)) return -1;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == p) return static_cast<int>(i);
  return -1;
}

int MonomialAlgebra::multiply(int p_idx, int q_idx) const {
  const Path& p = basis_[p_idx];
  const Path& q = basis_[q_idx];
  if (q.tgt != p.src) return -1;
  Path r{q.src, p.tgt, q.arrows};
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return basis_index(r);
}

MonomialAlgebra MonomialAlgebra::opposite_algebra() const {
  Quiver q;
  q.vertices = quiver_.vertices;
  for (const auto& a : quiver_.arrows) q.arrows.push_back({a.name, a.tgt, a.src});
  std::vector<std::vector<std::string>> rels;
  for (const auto& rel : relations_) {
    std::vector<std::string> rev;
    for (auto it = rel.rbegin(); it != rel.rend(); ++it)
      rev.push_back(quiver_.arrows[*it].name);
    rels.push_back(std::move(rev));
  }
  return MonomialAlgebra(name_ + "^op", std::move(q), field_, std::move(rels));
}

std::string MonomialAlgebra::path_str(const Path& p) const {
  if (p.arrows.empty()) return "e_" + quiver_.vertices[p.src];
  std::ostringstream os;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) os << ".";
    os << quiver_.arrows[p.arrows[i]].name;
  }
  return os.str();
}

}  // namespace qhom
