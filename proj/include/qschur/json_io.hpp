#pragma once

// JSON encodings of the core value types, and CSV emission for censuses and
// structure-constant tables.

#include <json.hpp>

#include <string>

#include "qschur/hecke.hpp"
#include "qschur/matcomb.hpp"
#include "qschur/schur.hpp"
#include "qschur/sweeps.hpp"

namespace qschur {

using nlohmann::json;

json to_json(const PolyQ& p);          // ascending coefficient array
PolyQ polyq_from_json(const json& j);

json to_json(const SignedPerm& w);     // one-line image array
json to_json(const Composition& c);
json to_json(const SignedComposition& c);

json to_json(const MatB& A);           // {n, r, entries}
MatB matb_from_json(const json& j);
json to_json(const MatD& A);           // adds "tag"
MatD matd_from_json(const json& j);

json to_json(const HeckeElt& x);       // [[images, poly], ...]
json to_json(const SchurB& x);
json to_json(const SchurD& x);
json to_json(const SweepReport& rep);

std::string censuses_csv(const SweepReport& rep);

}  // namespace qschur
