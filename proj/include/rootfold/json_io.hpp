#ifndef ROOTFOLD_JSON_IO_HPP
#define ROOTFOLD_JSON_IO_HPP

#include <json.hpp>

#include "rootfold/bds.hpp"
#include "rootfold/coxfix.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/formlab.hpp"
#include "rootfold/induce.hpp"
#include "rootfold/rootdata.hpp"

namespace rootfold {

using nlohmann::json;

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json to_json(const RootDatum& d);
// accepts {"rank", "roots", "coroots"} or {"type": "E6"}
RootDatum datum_from_json(const json& j);

// {"generators": [{"matrix": [[...]]}], "geometric": [generator indices]}
struct ActionSpec {
  std::vector<IntMatrix> generators;
  std::vector<int> geometric;
  bool has_geometric = false;
};
ActionSpec action_from_json(const json& j);

json folding_to_json(const FoldingResult& f);
json two_stage_to_json(const TwoStageResult& t, int p);
json bds_to_json(const RootDatum& d, const BdSData& b);
json induced_to_json(const InducedDatum& ind);

// matrices of fraction strings over the named generators
FMat fmat_from_json(const json& j, const TowerField& field);
json fmat_to_json(const FMat& m, const TowerField& field);

}  // namespace rootfold

#endif
