#pragma once

#include "dtopo/contractibility.hpp"
#include "dtopo/cubical.hpp"
#include "dtopo/graph_io.hpp"
#include "dtopo/invariants.hpp"
#include "dtopo/thinning.hpp"
#include "dtopo/transforms.hpp"
#include "json.hpp"

namespace dtopo {

/// {"deletion_order":[...]}
nlohmann::ordered_json certificate_to_json(const ContractionCertificate& c);
ContractionCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::ordered_json transformation_to_json(const Transformation& t);
Transformation transformation_from_json(const nlohmann::json& j);

/// {"initial_digest":"<hex>","steps":[{"kind":...}, ...]}
nlohmann::ordered_json trace_to_json(const Trace& t);
Trace trace_from_json(const nlohmann::json& j);

/// {"skeleton":<graph>,"trace":<trace>,"stats":{...}}
nlohmann::ordered_json report_to_json(const ThinningReport& r);

/// {"n":2,"L":1.0,"cubes":[[-1,0],...]}
nlohmann::ordered_json model_to_json(const CubicalModel& m);
CubicalModel model_from_json(const nlohmann::json& j);

/// {"euler":2,"betti":[1,0,1],"clique_counts":[6,12,8]}
nlohmann::ordered_json invariants_to_json(const InvariantSummary& s);

}  // namespace dtopo
