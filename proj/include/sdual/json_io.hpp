#pragma once

#include <json.hpp>

#include "sdual/az.hpp"
#include "sdual/greens.hpp"

namespace sdual {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Json to_json(const TailSeq& t);
Json to_json(const MarkedPartition& m);
Json to_json(const Bipartition& b);
Json to_json(const FamilyKey& k);
Json to_json(const Symbol& s);
Json to_json(const DualOrbit& d);
Json to_json(const VerifyReport& r);

Partition partition_from_json(const Json& j);
MarkedPartition marked_from_json(const Json& j);
Bipartition bipartition_from_json(const Json& j);
UnipotentParam unipotent_from_json(const Json& j);

}  // namespace sdual
