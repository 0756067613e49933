#include "qhom/classes.hpp"

#include <algorithm>

namespace qhom {

void sort_members(std::vector<Rep>& members) {
  std::stable_sort(members.begin(), members.end(), [](const Rep& a, const Rep& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims < b.dims;
  });
}

ObjectClass canonical_class(std::string name, CatPtr ambient, const std::vector<Rep>& raw) {
  ObjectClass c;
  c.name = std::move(name);
  c.ambient = std::move(ambient);
  for (const auto& r : raw) {
    if (r.total_dim() == 0) continue;
    Decomposition d = decompose(r);
    for (const auto& s : d.summands)
      if (find_in_list(s.rep, c.members) < 0) c.members.push_back(s.rep);
  }
  sort_members(c.members);
  return c;
}

std::vector<Rep> syzygy_summand_closure(const std::vector<Rep>& seeds, int closure_cap) {
  std::vector<Rep> found;
  std::vector<Rep> work;
  auto push = [&](const Rep& r) {
    if (r.total_dim() == 0) return;
    Decomposition d = decompose(r);
    for (const auto& s : d.summands)
      if (find_in_list(s.rep, found) < 0) {
        found.push_back(s.rep);
        work.push_back(s.rep);
      }
  };
  for (const auto& s : seeds) push(s);
  int rounds = 0;
  while (!work.empty()) {
    if (++rounds > closure_cap * 1024)
      fail(ErrorKind::ClosureBudgetExceeded, "syzygy closure did not stabilize");
    Rep cur = work.back();
    work.pop_back();
    Cover c = projective_cover(cur);
    push(kernel(c.epi).rep);
    if (static_cast<int>(found.size()) > closure_cap * 16)
      fail(ErrorKind::ClosureBudgetExceeded, "syzygy closure exceeded the class budget");
  }
  sort_members(found);
  return found;
}

bool ext_vanishes_all_degrees(const Rep& x, const Rep& y, int closure_cap) {
  for (const auto& s : syzygy_summand_closure({x}, closure_cap))
    if (ext_dim(s, y, 1) != 0) return false;
  return true;
}

namespace {

bool perp_right_ok(const Rep& x, const Rep& n, PerpDegree deg) {
  if (deg == PerpDegree::ExtOne) return ext_dim(x, n, 1) == 0;
  return ext_vanishes_all_degrees(x, n);
}

}  // namespace

ObjectClass perp_right(const ObjectClass& c, const std::vector<Rep>& ambient_list, PerpDegree deg) {
  ObjectClass out;
  out.name = c.name + "^perp";
  out.ambient = c.ambient;
  for (const auto& n : ambient_list) {
    bool ok = true;
    for (const auto& x : c.members)
      if (!perp_right_ok(x, n, deg)) { ok = false; break; }
    if (ok) out.members.push_back(n);
  }
  sort_members(out.members);
  out.asserted_extension_closed = true;  // right orthogonals are extension closed
  return out;
}

ObjectClass perp_left(const ObjectClass& c, const std::vector<Rep>& ambient_list, PerpDegree deg) {
  ObjectClass out;
  out.name = "perp^" + c.name;
  out.ambient = c.ambient;
  for (const auto& m : ambient_list) {
    bool ok = true;
    for (const auto& x : c.members)
      if (!perp_right_ok(m, x, deg)) { ok = false; break; }
    if (ok) out.members.push_back(m);
  }
  sort_members(out.members);
  out.asserted_extension_closed = true;
  return out;
}

ObjectClass smd_closure(const ObjectClass& c) {
  ObjectClass out = canonical_class("Smd(" + c.name + ")", c.ambient, c.members);
  out.asserted_smd_closed = true;
  out.asserted_extension_closed = c.asserted_extension_closed;
  return out;
}

std::vector<ShortExact> all_extensions(const Rep& c, const Rep& a, bool with_split,
                                       std::uint64_t max_combos) {
  ExtGroup e = ext_group(c, a, 1);
  Field f = c.cat->field();
  std::vector<ShortExact> out;
  if (e.dim == 0) {
    if (with_split) out.push_back(realize_extension(e, zero_morph(e.syzygy, a)));
    return out;
  }
  if (!f.is_finite())
    fail(ErrorKind::ClosureBudgetExceeded, "cannot enumerate extension classes over Q");
  double combos = 1;
  for (int i = 0; i < e.dim; ++i) combos *= static_cast<double>(f.p());
  if (combos > static_cast<double>(max_combos))
    fail(ErrorKind::ClosureBudgetExceeded,
         "too many extension classes (" + std::to_string(e.dim) + " over F" +
             std::to_string(f.p()) + ")");

  std::vector<std::int64_t> coeff(e.dim, 0);
  while (true) {
    bool zero = std::all_of(coeff.begin(), coeff.end(), [](std::int64_t v) { return v == 0; });
    if (!zero || with_split) {
      Morph coc = zero_morph(e.syzygy, a);
      for (int i = 0; i < e.dim; ++i)
        if (coeff[i] != 0)
          coc = add(coc, scale(e.cocycles[i], mpq_class(static_cast<long>(coeff[i]))));
      out.push_back(realize_extension(e, coc));
    }
    int i = 0;
    while (i < e.dim && ++coeff[i] == f.p()) coeff[i++] = 0;
    if (i == e.dim) break;
  }
  return out;
}

ObjectClass extension_closure(const ObjectClass& c, const ClosureBudget& budget) {
  ObjectClass cur = canonical_class("<" + c.name + ">", c.ambient, c.members);
  for (int round = 0; round < budget.max_rounds; ++round) {
    bool grew = false;
    std::vector<Rep> snapshot = cur.members;
    for (const auto& e_end : snapshot) {
      for (const auto& a_end : snapshot) {
        for (const auto& s : all_extensions(e_end, a_end, false, budget.max_combos)) {
          Decomposition d = decompose(s.i.tgt);
          for (const auto& sm : d.summands)
            if (find_in_list(sm.rep, cur.members) < 0) {
              cur.members.push_back(sm.rep);
              grew = true;
              if (static_cast<int>(cur.members.size()) > budget.max_classes)
                fail(ErrorKind::ClosureBudgetExceeded, "extension closure exceeded the class budget");
            }
        }
      }
    }
    if (!grew) {
      sort_members(cur.members);
      cur.asserted_extension_closed = true;
      return cur;
    }
  }
  fail(ErrorKind::ClosureBudgetExceeded, "extension closure did not stabilize");
}

std::string standard_name(const Rep& x) {
  const CatPtr& cat = x.cat;
  std::vector<std::string> labels;
  for (int v = 0; v < cat->n_vertices(); ++v) {
    Rep p = projective_rep(cat, v);
    if (x.dims == p.dims && is_iso(x, p)) labels.push_back("P(" + cat->vertex_names()[v] + ")");
  }
  for (int v = 0; v < cat->n_vertices(); ++v)
    if (x.dims == simple_rep(cat, v).dims && is_iso(x, simple_rep(cat, v)))
      labels.push_back("S(" + cat->vertex_names()[v] + ")");
  for (int v = 0; v < cat->n_vertices(); ++v) {
    Rep i = injective_rep(cat, v);
    if (x.dims == i.dims && is_iso(x, i)) labels.push_back("I(" + cat->vertex_names()[v] + ")");
  }
  if (labels.empty()) return "X" + x.dims_str();
  std::string out = labels[0];
  for (std::size_t k = 1; k < labels.size(); ++k) out += "=" + labels[k];
  return out;
}

std::vector<Rep> projective_list(const CatPtr& cat) {
  std::vector<Rep> out;
  for (int v = 0; v < cat->n_vertices(); ++v) out.push_back(projective_rep(cat, v));
  return out;
}

std::vector<Rep> injective_list(const CatPtr& cat) {
  std::vector<Rep> out;
  for (int v = 0; v < cat->n_vertices(); ++v) {
    Rep i = injective_rep(cat, v);
    if (find_in_list(i, out) < 0) out.push_back(i);
  }
  sort_members(out);
  return out;
}

std::vector<Rep> simple_list(const CatPtr& cat) {
  std::vector<Rep> out;
  for (int v = 0; v < cat->n_vertices(); ++v) out.push_back(simple_rep(cat, v));
  return out;
}

}  // namespace qhom
