#include "gpc/json_io.hpp"

#include <stdexcept>

namespace gpc {

using nlohmann::json;

namespace {

std::string ordering_name(Ordering o) {
    switch (o) {
        case Ordering::none: return "none";
        case Ordering::sorted: return "sorted";
        case Ordering::sorted_plus_extra: return "sorted+lambda4";
    }
    return "?";
}

}  // namespace

json to_json(const SurdValue& s) {
    return json{{"coeff", to_fraction_string(s.coeff())}, {"radicand", s.radicand().get_ui()}};
}

json to_json(const AffineExpr& e) {
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(to_fraction_string(c));
    return json{{"constant", to_fraction_string(e.constant)}, {"coeffs", coeffs}};
}

json to_json(const BoundChain& c) {
    json bounds = json::array();
    for (const auto& b : c.bounds) bounds.push_back(json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}});
    json j{{"label", c.label}, {"var_count", c.var_count}, {"bounds", bounds}};
    j["extra_slot"] = c.extra_slot ? json(*c.extra_slot) : json(nullptr);
    return j;
}

json to_json(const ChamberSet& s) {
    json chains = json::array();
    for (const auto& c : s.chains) chains.push_back(to_json(c));
    return json{{"class", to_string(s.class_tag)},
                {"d", s.d},
                {"N", s.n_bases},
                {"symmetry_factor", s.symmetry_factor},
                {"ordering", ordering_name(s.ordering)},
                {"chains", chains}};
}

json to_json(const VolumeResult& v) {
    json chains = json::array();
    for (size_t i = 0; i < v.raw_chain_volumes.size(); ++i)
        chains.push_back(json{{"label", v.chain_labels.at(i)}, {"volume", to_fraction_string(v.raw_chain_volumes[i])}});
    return json{{"class", to_string(v.class_tag)},
                {"d", v.d},
                {"N", v.n_bases},
                {"symmetry_factor", v.symmetry_factor},
                {"raw_chain_volumes", chains},
                {"lambda_volume", to_fraction_string(v.lambda_volume)},
                {"lambda_volume_decimal", to_decimal_string(v.lambda_volume)},
                {"hs_volume", to_json(v.hs_volume)},
                {"hs_volume_decimal", v.hs_volume.to_decimal()},
                {"sufficiency", to_string(v.sufficiency)}};
}

json to_json(const RatioRow& r) {
    json j{{"d", r.d}, {"N", r.n_bases}};
    auto put = [&j](const std::string& key, const Rational& q) {
        j[key] = to_fraction_string(q);
        j[key + "_decimal"] = to_decimal_string(q);
    };
    put("cp/p", r.cp_over_p);
    put("g/cp", r.g_over_cp);
    put("eb/g", r.eb_over_g);
    return j;
}

json to_json(const ConjectureReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json checks = json::array();
        for (const auto& c : row.ratios)
            checks.push_back(json{{"ratio", c.name},
                                  {"computed", to_fraction_string(c.computed)},
                                  {"expected", to_fraction_string(c.expected)},
                                  {"decimal", to_decimal_string(c.computed)},
                                  {"holds", c.holds}});
        rows.push_back(json{{"d", row.d},
                            {"N", row.n_bases},
                            {"ratios", checks},
                            {"vp_computed", to_json(row.vp_computed)},
                            {"vp_expected", to_json(row.vp_expected)},
                            {"vp_holds", row.vp_holds},
                            {"extrapolated", row.extrapolated},
                            {"holds", row.all_hold()}});
    }
    return json{{"n_mode", to_string(r.mode)}, {"rows", rows}, {"all_hold", r.all_hold()}};
}

json to_json(const McEstimate& e, const SurdValue& exact) {
    const double exact_value = exact.to_double();
    const double z = e.std_error > 0 ? (e.estimate - exact_value) / e.std_error : 0.0;
    return json{{"d", e.d},
                {"N", e.n_bases},
                {"class", to_string(e.class_tag)},
                {"samples", e.samples},
                {"seed", e.seed},
                {"hits", e.hits},
                {"estimate", e.estimate},
                {"std_error", e.std_error},
                {"exact", to_json(exact)},
                {"exact_decimal", exact.to_decimal()},
                {"z", z},
                {"consistent", e.consistent_with(exact_value)}};
}

json to_json(const UnbiasedReport& r) {
    return json{{"max_deviation", r.max_deviation},
                {"max_orthonormal_error", r.max_orthonormal_error},
                {"pair_deviation", r.pair_deviation},
                {"pass", r.pass}};
}

json classification_json(const ChannelSpec& c) {
    json lambdas = json::array();
    for (const auto& l : c.lambdas) lambdas.push_back(to_fraction_string(l));
    const EbVerdict eb = is_eb_necessary(c);
    return json{{"d", c.d},
                {"N", c.n_bases},
                {"lambdas", lambdas},
                {"p_necessary", is_positive_necessary(c)},
                {"cp", is_cp(c)},
                {"g", is_generator_achievable(c)},
                {"eb_necessary", eb.holds},
                {"eb_known_sufficient", eb.known_sufficient},
                {"min_output_overlap", to_fraction_string(min_output_overlap(c))}};
}

SurdValue surd_from_json(const json& j) {
    return SurdValue(parse_rational(j.at("coeff").get<std::string>()), Integer(j.at("radicand").get<unsigned long>()));
}

std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.push_back(Rational(x.get<long>()));
        else
            throw std::invalid_argument("rational entries must be \"p/q\" strings or integers");
    }
    return out;
}

}  // namespace gpc
