#pragma once

#include "toric/duals.hpp"

#include "json.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

std::string rat_str(const Rat& q);  // "p/q", "p" when integral
Rat parse_rat(const Json& j);       // "p/q", "p" or an integer
std::string real_str(const Real& x, int digits = 30);
Json cx_json(const Cx& z, int digits = 30);  // {"re": "...", "im": "..."}

Json ivec_json(const IVec& v);
IVec ivec_from_json(const Json& j);
Json qvec_json(const QVec& v);
QVec qvec_from_json(const Json& j);

// {"rays": [[..]], "max_cones": [[indices]]}
Json fan_to_json(const Fan& F);
Fan fan_from_json(const Json& j);
// {"vertices": [[..]]}
Json polytope_to_json(const LatticePolytope& P);
LatticePolytope polytope_from_json(const Json& j);
// fan fields plus "lambda" and "polarisation": {"ray_coeffs": [..]}
Json tc_to_json(const ToricTestConfiguration& tc);
ToricTestConfiguration tc_from_json(const Json& j);

// {"terms": [{"exp": [..], "mult": "p/q", "log_coeff": "p/q"}], "k": "p/q"}
Json potential_to_json(const LGPotential& W);
Json df_report_to_json(const DFReport& r);
Json critical_to_json(const CriticalSearch& s, const StationaryPhaseReport& sp, int digits = 30);
Json residue_report_to_json(const ResidueReport& r);
Json vanishing_to_json(const VanishingReport& r);
Json rank_to_json(const RankInequalityReport& r);
Json theorem1_to_json(const Theorem1Report& r, const std::vector<DualTestConfiguration>& duals, int digits = 30);
Json orbifold_to_json(const std::vector<OrbifoldDual>& q);

// [[indices], ..]
Grouping grouping_from_json(const Json& j);

int exit_code(ErrorKind kind);  // 2, 3, 4
Json error_to_json(const Error& e);

}  // namespace toric
