#include "orbitlr/serialize.hpp"

#include "orbitlr/error.hpp"

namespace orbitlr {

void to_json(json& j, const Partition& p) {
    j = p.parts();
}

void from_json(const json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

void to_json(json& j, const SchurExpansion& e) {
    j = json::object();
    for (const auto& [gamma, c] : e.terms())
        j[gamma.to_key()] = c;
}

void from_json(const json& j, SchurExpansion& e) {
    e = SchurExpansion{};
    for (const auto& [key, value] : j.items())
        e.add(Partition::parse(key), value.get<std::int64_t>());
}

void to_json(json& j, const OrbitPoset& poset) {
    json covers = json::array();
    for (const auto& c : poset.covers)
        covers.push_back(json::array({c.low, c.high}));
    j = json{{"alpha", poset.alpha},
             {"beta", poset.beta},
             {"nodes", poset.nodes},
             {"covers", covers},
             {"excluded", poset.excluded}};
}

void from_json(const json& j, OrbitPoset& poset) {
    poset.alpha = j.at("alpha").get<Partition>();
    poset.beta = j.at("beta").get<Partition>();
    poset.nodes = j.at("nodes").get<std::vector<Partition>>();
    poset.excluded = j.at("excluded").get<std::vector<Partition>>();
    poset.covers.clear();
    for (const auto& pair : j.at("covers"))
        poset.covers.push_back(Cover{pair.at(0).get<Partition>(), pair.at(1).get<Partition>()});
}

void to_json(json& j, const Strategy& s) {
    if (const auto* ex = std::get_if<ExhaustiveStrategy>(&s)) {
        j = json{{"kind", "exhaustive"}, {"q", ex->q}};
    } else {
        const auto& r = std::get<RandomStrategy>(s);
        j = json{{"kind", "random"}, {"p", r.p}, {"samples", r.samples}, {"seed", r.seed}};
    }
}

void from_json(const json& j, Strategy& s) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "exhaustive")
        s = ExhaustiveStrategy{j.at("q").get<std::uint64_t>()};
    else if (kind == "random")
        s = RandomStrategy{j.at("p").get<std::uint64_t>(), j.at("samples").get<std::uint64_t>(),
                           j.at("seed").get<std::uint64_t>()};
    else
        throw Error(ErrorKind::InvalidArgument, "unknown strategy kind '" + kind + "'");
}

void to_json(json& j, const MembershipReport& r) {
    j = json{{"alpha", r.alpha},
             {"beta", r.beta},
             {"strategies", r.strategies},
             {"observed", r.observed},
             {"allowed", r.allowed},
             {"missing", r.missing},
             {"violations", r.violations},
             {"verdict", std::string(to_string(r.verdict()))}};
}

void from_json(const json& j, MembershipReport& r) {
    r.alpha = j.at("alpha").get<Partition>();
    r.beta = j.at("beta").get<Partition>();
    r.strategies = j.at("strategies").get<std::vector<Strategy>>();
    r.observed = j.at("observed").get<std::vector<Partition>>();
    r.allowed = j.at("allowed").get<std::vector<Partition>>();
    r.missing = j.at("missing").get<std::vector<Partition>>();
    r.violations = j.at("violations").get<std::vector<Partition>>();
}

void to_json(json& j, const HallPolynomial& h) {
    j = json{{"alpha", h.alpha}, {"beta", h.beta}, {"gamma", h.gamma}, {"coeffs", h.coeffs}};
}

void from_json(const json& j, HallPolynomial& h) {
    h.alpha = j.at("alpha").get<Partition>();
    h.beta = j.at("beta").get<Partition>();
    h.gamma = j.at("gamma").get<Partition>();
    h.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
}

}  // namespace orbitlr

namespace nlohmann {

void adl_serializer<orbitlr::SkewTableau>::to_json(json& j, const orbitlr::SkewTableau& t) {
    j = json{{"outer", t.shape.outer()}, {"inner", t.shape.inner()}, {"rows", t.rows}};
}

orbitlr::SkewTableau adl_serializer<orbitlr::SkewTableau>::from_json(const json& j) {
    return orbitlr::SkewTableau{
        orbitlr::SkewShape(j.at("outer").get<orbitlr::Partition>(), j.at("inner").get<orbitlr::Partition>()),
        j.at("rows").get<std::vector<std::vector<int>>>()};
}

}  // namespace nlohmann
