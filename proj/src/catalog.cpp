#include "rootfold/catalog.hpp"

#include <algorithm>

namespace rootfold {

SimpleSystem bourbaki_base(const RootDatum& d) {
  SimpleSystem delta;
  for (const Component& c : irreducible_components(d))
    for (int i : c.bourbaki_simple) delta.push_back(i);
  return delta;
}

namespace {

// position map delta -> 0..m-1 and back
std::vector<int> identity_perm(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return p;
}

}  // namespace

std::vector<IntMatrix> named_action(const RootDatum& d, const std::string& name) {
  if (name == "trivial") return {};
  if (name == "minus1") {
    IntMatrix m = IntMatrix::identity(d.rank);
    for (int i = 0; i < d.rank; ++i) m.at(i, i) = -1;
    return {m};
  }
  auto comps = irreducible_components(d);
  SimpleSystem delta = bourbaki_base(d);
  std::vector<int> offset;  // start of each component inside delta
  {
    int off = 0;
    for (const Component& c : comps) {
      offset.push_back(off);
      off += int(c.bourbaki_simple.size());
    }
  }
  int m = int(delta.size());

  if (name == "swap" || name == "flip") {
    // canonical order-2 diagram automorphism on each component admitting one
    std::vector<int> p = identity_perm(m);
    bool moved = false;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      const Component& c = comps[ci];
      int n = c.type_rank, off = offset[ci];
      if (c.family == Family::A && n >= 2) {
        for (int i = 0; i < n; ++i) p[off + i] = off + (n - 1 - i);
        moved = true;
      } else if (c.family == Family::D) {
        p[off + n - 2] = off + n - 1;
        p[off + n - 1] = off + n - 2;
        moved = true;
      } else if (c.family == Family::E && n == 6) {
        p[off + 0] = off + 5;
        p[off + 5] = off + 0;
        p[off + 2] = off + 4;
        p[off + 4] = off + 2;
        moved = true;
      }
    }
    if (!moved) throw Failure("BadInput", "no order-2 diagram automorphism for " + name);
    return {lift_delta_permutation(d, delta, p)};
  }
  if (name == "triality" || name == "s3") {
    if (comps.size() != 1 || comps[0].family != Family::D || comps[0].type_rank != 4)
      throw Failure("BadInput", name + " requires type D4");
    std::vector<int> tri = identity_perm(m);
    tri[0] = 2;  // alpha1 -> alpha3 -> alpha4 -> alpha1, alpha2 fixed
    tri[2] = 3;
    tri[3] = 0;
    if (name == "triality") return {lift_delta_permutation(d, delta, tri)};
    std::vector<int> sw = identity_perm(m);
    sw[2] = 3;
    sw[3] = 2;
    return {lift_delta_permutation(d, delta, tri), lift_delta_permutation(d, delta, sw)};
  }
  if (name == "copyswap") {
    if (comps.size() < 2) throw Failure("BadInput", "copyswap requires at least two components");
    // swap the first two components of equal type, matching Bourbaki order
    if (comps[0].family != comps[1].family || comps[0].type_rank != comps[1].type_rank)
      throw Failure("BadInput", "copyswap requires two components of equal type");
    std::vector<int> p = identity_perm(m);
    int n = int(comps[0].bourbaki_simple.size());
    for (int i = 0; i < n; ++i) {
      p[offset[0] + i] = offset[1] + i;
      p[offset[1] + i] = offset[0] + i;
    }
    return {lift_delta_permutation(d, delta, p)};
  }
  throw Failure("BadInput", "unknown action name: " + name);
}

const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    auto add = [&out](const std::string& type, const std::string& action) {
      RootDatum d = make_named(type);
      ActionGroup g = close_group(d, named_action(d, action));
      PositiveSystem p = positive_system_of_simple(d, bourbaki_base(d));
      if (!preserves_positive_system(g, p))
        throw Failure("InternalAxiomFailure", "catalog action does not fix the Bourbaki chamber");
      out.push_back({type + "/" + action, std::move(d), std::move(g), std::move(p)});
    };
    add("A2", "swap");
    add("A3", "swap");
    add("A4", "swap");
    add("A5", "swap");
    add("A6", "swap");
    add("D4", "triality");
    add("D4", "s3");
    add("D4", "swap");
    add("D5", "swap");
    add("E6", "flip");
    add("A2", "trivial");
    add("BC2", "trivial");
    add("A2+A2", "copyswap");
    add("A1+A1", "copyswap");
    return out;
  }();
  return catalog;
}

}  // namespace rootfold
