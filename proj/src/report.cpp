#include "attlab/report.hpp"

#include <charconv>

namespace attlab {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string csv_series(const std::string& value_name,
                       const std::vector<std::pair<double, double>>& rows) {
    std::string out = "t," + value_name + "\n";
    for (const auto& [t, v] : rows) out += format_double(t) + "," + format_double(v) + "\n";
    return out;
}

Json universe_to_json(const FiniteUniverse& u) {
    Json j;
    j["weights"] = u.weights();
    j["shift"] = u.shift();
    j["blocks"] = u.blocks();
    return j;
}

FiniteUniverse universe_from_json(const Json& j) {
    return FiniteUniverse(j.at("weights").get<std::vector<double>>(),
                          j.at("shift").get<std::vector<int>>(),
                          j.at("blocks").get<std::vector<std::vector<int>>>());
}

Json random_set_to_json(const RandomSet& s) {
    Json j;
    Json sections = Json::array();
    for (const auto& sec : s.sections) sections.push_back(sec.to_indices());
    j["sections"] = std::move(sections);
    return j;
}

RandomSet random_set_from_json(const Json& j, int universe_size, int carrier_size) {
    RandomSet s(universe_size, carrier_size);
    const auto& sections = j.at("sections");
    if (int(sections.size()) != universe_size)
        throw std::invalid_argument("random set: one section per sample point required");
    for (int w = 0; w < universe_size; ++w)
        for (int x : sections[w].get<std::vector<int>>()) s.sections[w].set(x);
    return s;
}

Json instance_to_json(const FiniteInstance& inst) {
    Json j;
    j["universe"] = universe_to_json(inst.rds.universe);
    j["carrier"] = Json{{"type", "discrete"}, {"size", inst.rds.carrier_size()}};
    j["generators"] = inst.rds.gens;
    j["two_sided"] = inst.rds.two_sided;
    Json family = Json::array();
    for (const auto& B : inst.family) family.push_back(random_set_to_json(B));
    j["family"] = std::move(family);
    Json hulls = Json::array();
    for (const auto& K : inst.hull_inputs) hulls.push_back(random_set_to_json(K));
    j["hull_inputs"] = std::move(hulls);
    return j;
}

FiniteInstance instance_from_json(const Json& j) {
    FiniteUniverse u = universe_from_json(j.at("universe"));
    const auto& carrier = j.at("carrier");
    if (carrier.at("type") != "discrete")
        throw std::invalid_argument("instance: only discrete carriers are serialized");
    int n = carrier.at("size").get<int>();
    FiniteSpace sp = FiniteSpace::discrete(n);
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    bool two_sided = j.value("two_sided", false);

    FiniteInstance inst{make_finite_rds(std::move(u), std::move(sp), std::move(gens), two_sided),
                        {},
                        {}};
    int m = inst.rds.universe.size();
    for (const auto& b : j.value("family", Json::array()))
        inst.family.push_back(random_set_from_json(b, m, n));
    for (const auto& k : j.value("hull_inputs", Json::array()))
        inst.hull_inputs.push_back(random_set_from_json(k, m, n));
    return inst;
}

namespace {
const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Converges: return "converges";
        case Verdict::Diverges: return "diverges";
        default: return "undetermined";
    }
}
const char* mode_name(AttractionMode m) {
    switch (m) {
        case AttractionMode::Pullback: return "pullback";
        case AttractionMode::Forward: return "forward";
        default: return "weak";
    }
}
}  // namespace

Json attraction_report_to_json(const AttractionReport& rep) {
    Json j;
    j["mode"] = mode_name(rep.mode);
    j["verdict"] = verdict_name(rep.verdict);
    j["exact"] = rep.exact;
    Json per_omega = Json::array();
    for (const auto& s : rep.per_omega) {
        Json e;
        e["omega"] = s.omega;
        Json vals = Json::array();
        for (auto [t, d] : s.values) vals.push_back(Json{{"t", t}, {"distance", d}});
        e["series"] = std::move(vals);
        e["tail_sup"] = s.tail_sup;
        per_omega.push_back(std::move(e));
    }
    j["per_omega"] = std::move(per_omega);
    if (rep.mode == AttractionMode::Weak) {
        j["eps"] = rep.eps;
        Json ex = Json::array();
        for (auto [t, p] : rep.exceedance) ex.push_back(Json{{"t", t}, {"probability", p}});
        j["exceedance"] = std::move(ex);
    }
    return j;
}

Json invariance_report_to_json(const InvarianceReport& rep) {
    Json j;
    j["holds"] = rep.holds;
    Json v = Json::array();
    for (const auto& viol : rep.violations)
        v.push_back(Json{{"omega", viol.omega},
                         {"t", viol.t},
                         {"witness", viol.witness},
                         {"missing", viol.missing}});
    j["violations"] = std::move(v);
    return j;
}

Json cocycle_violations_to_json(const std::vector<CocycleViolation>& violations) {
    Json v = Json::array();
    for (const auto& viol : violations)
        v.push_back(Json{{"omega", viol.omega}, {"s", viol.s}, {"t", viol.t}, {"x", viol.x}});
    return v;
}

}  // namespace attlab
