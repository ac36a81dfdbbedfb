#include "toric/json_io.hpp"

namespace toric {

namespace {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Validation: return "validation";
        case ErrorKind::SolverIncomplete: return "solver-incomplete";
        case ErrorKind::HypothesisFailed: return "hypothesis-failed";
    }
    return "validation";
}

Json cxvec_json(const CxVec& v, int digits) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(cx_json(z, digits));
    return a;
}

}  // namespace

std::string rat_str(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rat parse_rat(const Json& j) {
    try {
        if (j.is_number_integer()) return Rat(j.get<long long>());
        if (j.is_string()) return Rat(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw Error("BadNumber", "expected an exact rational, got " + j.dump());
}

std::string real_str(const Real& x, int digits) { return to_decimal(x, digits); }

Json cx_json(const Cx& z, int digits) { return Json{{"re", real_str(z.re, digits)}, {"im", real_str(z.im, digits)}}; }

Json ivec_json(const IVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(static_cast<long long>(x));
    return a;
}

IVec ivec_from_json(const Json& j) {
    if (!j.is_array()) throw Error("BadJson", "expected an integer vector");
    IVec v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error("BadJson", "expected an integer vector");
        v.push_back(Int(x.get<long long>()));
    }
    return v;
}

Json qvec_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

QVec qvec_from_json(const Json& j) {
    if (!j.is_array()) throw Error("BadJson", "expected a rational vector");
    QVec v;
    for (const auto& x : j) v.push_back(parse_rat(x));
    return v;
}

Json fan_to_json(const Fan& F) {
    Json rays = Json::array(), cones = Json::array();
    for (const auto& r : F.rays) rays.push_back(ivec_json(r));
    for (const auto& c : F.max_cones) cones.push_back(c);
    return Json{{"rays", rays}, {"max_cones", cones}};
}

Fan fan_from_json(const Json& j) {
    if (!j.contains("rays")) throw Error("BadJson", "fan needs rays");
    std::vector<IVec> rays;
    for (const auto& r : j.at("rays")) rays.push_back(ivec_from_json(r));
    if (!j.contains("max_cones")) {
        if (!rays.empty() && rays[0].size() == 2) return fan_from_cyclic_rays(rays);
        throw Error("BadJson", "fan needs max_cones");
    }
    std::vector<ConeIdx> cones;
    for (const auto& c : j.at("max_cones")) {
        ConeIdx idx;
        for (const auto& x : c) idx.push_back(x.get<std::size_t>());
        std::sort(idx.begin(), idx.end());
        cones.push_back(idx);
    }
    return make_fan(rays, cones);
}

Json polytope_to_json(const LatticePolytope& P) {
    Json v = Json::array();
    for (const auto& x : P.vertices) {
        if (is_integral(x))
            v.push_back(ivec_json(to_int(x)));
        else
            v.push_back(qvec_json(x));
    }
    return Json{{"vertices", v}};
}

LatticePolytope polytope_from_json(const Json& j) {
    if (!j.contains("vertices")) throw Error("BadJson", "polytope needs vertices");
    std::vector<IVec> pts;
    for (const auto& v : j.at("vertices")) pts.push_back(ivec_from_json(v));
    if (pts.empty()) throw Error("BadJson", "polytope has no vertices");
    return convex_hull(pts);
}

Json tc_to_json(const ToricTestConfiguration& tc) {
    Json j = fan_to_json(tc.total_fan);
    j["lambda"] = ivec_json(tc.lambda());
    Json c = Json::array();
    for (const auto& a : tc.polarisation.coeffs) c.push_back(rat_str(a));
    j["polarisation"] = Json{{"ray_coeffs", c}};
    return j;
}

ToricTestConfiguration tc_from_json(const Json& j) {
    Fan F = fan_from_json(j);
    if (!j.contains("lambda") || !j.contains("polarisation")) throw Error("BadJson", "test configuration needs lambda and polarisation");
    const Json& p = j.at("polarisation");
    const Json& c = p.is_object() ? p.at("ray_coeffs") : p;
    if (c.size() != F.rays.size()) throw Error("BadJson", "one polarisation coefficient per ray");
    ToricDivisor L{std::vector<Rat>(F.rays.size())};
    // coefficients follow the input ray order; the fan may have normalised it
    std::vector<IVec> input;
    for (const auto& r : j.at("rays")) input.push_back(primitive(ivec_from_json(r)));
    for (std::size_t i = 0; i < input.size(); ++i) {
        auto k = F.ray_index(input[i]);
        if (!k) throw Error("BadJson", "ray not in fan");
        L.coeffs[*k] = parse_rat(c[i]);
    }
    return make_test_configuration(F, ivec_from_json(j.at("lambda")), L);
}

Json potential_to_json(const LGPotential& W) {
    Json terms = Json::array();
    for (const auto& [b, c] : W.terms)
        terms.push_back(Json{{"exp", ivec_json(b)}, {"mult", rat_str(c.mult)}, {"log_coeff", rat_str(c.log)}});
    return Json{{"terms", terms}, {"k", rat_str(W.k)}};
}

Json df_report_to_json(const DFReport& r) {
    Json j{{"intersection", rat_str(r.value_intersection)},
           {"localised", rat_str(r.value_localised)},
           {"slope", rat_str(r.slope)}};
    j["polytope"] = r.polytope_defined ? Json(rat_str(r.value_polytope)) : Json(nullptr);
    return j;
}

Json critical_to_json(const CriticalSearch& s, const StationaryPhaseReport& sp, int digits) {
    Json pts = Json::array();
    for (const auto& p : s.points)
        pts.push_back(Json{{"log_coords", cxvec_json(p.log_coords, digits)},
                           {"value", cx_json(p.value, digits)},
                           {"hessian_det", cx_json(p.hessian_det, digits)},
                           {"multiplicity", p.multiplicity},
                           {"degenerate", p.degenerate},
                           {"residual", real_str(p.residual, 6)}});
    return Json{{"count", s.points.size()},
                {"bkk", s.bkk},
                {"complete", s.complete},
                {"starts_used", s.starts_used},
                {"condition_m",
                 Json{{"milnor_sum", sp.milnor_sum},
                      {"euler_characteristic", sp.euler_characteristic},
                      {"euler_from_newton_polytope", sp.euler_from_newton_polytope},
                      {"degenerate_points", sp.degenerate_points},
                      {"holds", sp.holds}}},
                {"points", pts}};
}

Json residue_report_to_json(const ResidueReport& r) {
    Json rows = Json::array();
    for (const auto& p : r.points) {
        Json cone = Json::array();
        for (auto i : p.cone) cone.push_back(i);
        rows.push_back(Json{{"cone", cone},
                            {"vertex", qvec_json(p.vertex)},
                            {"theta", rat_str(p.theta)},
                            {"psi", rat_str(p.psi)},
                            {"omega0", p.omega0},
                            {"connection", rat_str(p.connection)},
                            {"f", rat_str(p.f)},
                            {"term", rat_str(p.term)},
                            {"group", p.group}});
    }
    Json totals = Json::array();
    for (const auto& t : r.group_totals) totals.push_back(rat_str(t));
    Json flags = Json::array();
    for (const auto& b : r.nonpositive_integer_residues) flags.push_back(ivec_json(b));
    return Json{{"points", rows},
                {"group_totals", totals},
                {"total", rat_str(r.total)},
                {"df", rat_str(r.df)},
                {"boundary_remainder", rat_str(r.boundary_remainder)},
                {"nonpositive_integer_residues", flags}};
}

Json vanishing_to_json(const VanishingReport& r) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.ks.size(); ++i)
        rows.push_back(Json{{"k", rat_str(r.ks[i])}, {"residual", rat_str(r.residuals[i])}});
    return Json{{"df", rat_str(r.df)}, {"rows", rows}, {"non_increasing", r.non_increasing}, {"holds", r.holds}};
}

Json rank_to_json(const RankInequalityReport& r) {
    return Json{{"h11", r.h11},     {"dim_d_perp", r.dim_d_perp}, {"n_plus_1", r.n_plus_1},
                {"z_count", r.z_count}, {"f_d", r.f_d},           {"lhs", r.lhs},
                {"rhs", r.rhs},     {"holds", r.holds},           {"comparison", r.comparison}};
}

Json theorem1_to_json(const Theorem1Report& r, const std::vector<DualTestConfiguration>& duals, int digits) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        const auto& s = row.solution;
        Json j{{"dual", row.id}};
        if (row.id < duals.size()) {
            j["fan"] = fan_to_json(duals[row.id].fan());
            j["functional"] = ivec_json(duals[row.id].functional);
        }
        j["rank_inequality"] = rank_to_json(row.rank);
        j["v"] = cxvec_json(s.v, digits);
        j["eta"] = cxvec_json(s.eta, digits);
        j["xi"] = cxvec_json(s.xi, digits);
        j["divisor"] = s.divisor ? Json(*s.divisor) : Json(nullptr);
        j["xi_divisor_constraint"] = s.xi_divisor_constraint;
        j["slope_gauge"] = s.slope_gauge;
        j["relaxations"] = row.relaxations;
        j["dual_slope"] = s.dual_slope ? cx_json(*s.dual_slope, digits) : Json(nullptr);
        j["df"] = cx_json(row.df, digits);
        j["residue_group_total"] = rat_str(row.residue_group_total);
        j["residual"] = real_str(s.residual, 6);
        j["grid_points_tried"] = s.grid_points_tried;
        rows.push_back(j);
    }
    return Json{{"k", rat_str(r.k)},
                {"df", rat_str(r.df)},
                {"residue_total", rat_str(r.residue_total)},
                {"rows", rows},
                {"duals_total", cx_json(r.duals_total, digits)},
                {"defect", cx_json(r.defect, digits)}};
}

Json orbifold_to_json(const std::vector<OrbifoldDual>& q) {
    Json a = Json::array();
    for (const auto& d : q) {
        Json j = polytope_to_json(d.polytope);
        j["name"] = d.name;
        j["rays"] = d.rays;
        j["class_group_rank"] = d.class_group_rank;
        j["picard_rank"] = d.picard_rank;
        j["central_fixed_points"] = d.central_fixed_points;
        a.push_back(j);
    }
    return a;
}

Grouping grouping_from_json(const Json& j) {
    if (!j.is_array()) throw Error("InvalidGrouping", "grouping must be a list of index lists");
    Grouping g;
    for (const auto& part : j) {
        if (!part.is_array()) throw Error("InvalidGrouping", "grouping must be a list of index lists");
        std::vector<std::size_t> idx;
        for (const auto& x : part) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
                throw Error("InvalidGrouping", "indices must be nonnegative integers");
            idx.push_back(x.get<std::size_t>());
        }
        g.push_back(idx);
    }
    return g;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Validation: return 2;
        case ErrorKind::SolverIncomplete: return 3;
        case ErrorKind::HypothesisFailed: return 4;
    }
    return 2;
}

Json error_to_json(const Error& e) {
    return Json{{"error", Json{{"code", e.code()}, {"kind", kind_name(e.kind())}, {"message", e.what()}}}};
}

}  // namespace toric
