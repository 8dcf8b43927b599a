#ifndef WM_JSON_IO_HPP
#define WM_JSON_IO_HPP

#include <json.hpp>

#include "wm/building.hpp"
#include "wm/cohomology.hpp"
#include "wm/forests.hpp"
#include "wm/partition.hpp"
#include "wm/qpoly.hpp"
#include "wm/series.hpp"

namespace wm {

using Json = nlohmann::ordered_json;

// Documented schemas (docs/schemas.md). Every *_from_json inverts the
// matching *_to_json and throws Error{kParse} on malformed input.

/// [[1,2],[3]]
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"block":[0,1,2],"kind":"TYPE2"}
Json element_to_json(const BuildingElement& e);
BuildingElement element_from_json(const Json& j);

/// {"q_coeffs":[1,5,1]}
Json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

/// {"q_coeffs_num":[...],"q_coeffs_den":[...]}
Json rational_qpoly_to_json(const RationalQPoly& p);
RationalQPoly rational_qpoly_from_json(const Json& j);

/// {"support":[element...],"exponents":[...],"degree":d}
Json admissible_to_json(const AdmissibleFunction& f);

/// leaf = integer; internal = {"e":i,"children":[...]}
Json tree_to_json(const AdmissibleTree& t);
AdmissibleTree tree_from_json(const Json& j);
Json forest_to_json(const AdmissibleForest& f);
AdmissibleForest forest_from_json(const Json& j);

/// {"n":n,"m":m,"forest":[...]}
Json special_forest_to_json(const SpecialForest& s);
SpecialForest special_forest_from_json(const Json& j);

/// {"f1":[...],"f2":[...],"sigma":[...]}
Json triple_to_json(const ForestTriple& t);
ForestTriple triple_from_json(const Json& j);

/// {"orders":[Nx,Ny],"max_total":T,"cells":{"n,m":{...}}}; zero cells are omitted.
Json series_to_json(const Egf2& s);
Egf2 series_from_json(const Json& j);

/// {"order":N,"coeffs":[{...},...]} with coeffs[k] = c_k.
Json series_to_json(const Egf1& s);

}  // namespace wm

#endif  // WM_JSON_IO_HPP
