#ifndef ROOTFOLD_CATALOG_HPP
#define ROOTFOLD_CATALOG_HPP

#include <string>
#include <vector>

#include "rootfold/action.hpp"
#include "rootfold/rootdata.hpp"

namespace rootfold {

// Generator matrices for a named action on a named datum:
//   trivial | swap (canonical order-2 diagram automorphism) | flip (alias)
//   triality (D4) | s3 (D4) | copyswap (equal blocks of a product) | minus1
std::vector<IntMatrix> named_action(const RootDatum& d, const std::string& name);

// Union of the components' Bourbaki simple systems (the canonical base).
SimpleSystem bourbaki_base(const RootDatum& d);

struct CatalogEntry {
  std::string name;  // "A4/swap"
  RootDatum datum;
  ActionGroup group;
  PositiveSystem stable;
};

// Fixed test catalog of quasisemisimple foldings; includes E6/flip and
// D4/triality.
const std::vector<CatalogEntry>& standard_catalog();

}  // namespace rootfold

#endif
