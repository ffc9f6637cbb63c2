#pragma once

#include "json.hpp"

#include "orbitlr/hall.hpp"
#include "orbitlr/lr.hpp"
#include "orbitlr/matrixlab.hpp"
#include "orbitlr/orbit.hpp"
#include "orbitlr/partition.hpp"
#include "orbitlr/tableaux.hpp"

// JSON forms:
//   Partition        [3,2,1]
//   SkewTableau      {"outer":[...],"inner":[...],"rows":[[...],...]}
//   SchurExpansion   {"3,2,1": 2, ...}
//   OrbitPoset       {"alpha","beta","nodes","covers":[[low,high],...],"excluded"}
//   MembershipReport {"alpha","beta","strategies","observed","allowed","missing","violations","verdict"}
//   HallPolynomial   {"alpha","beta","gamma","coeffs":[c0,c1,...]}

namespace orbitlr {

using json = nlohmann::json;

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

void to_json(json& j, const SchurExpansion& e);
void from_json(const json& j, SchurExpansion& e);

void to_json(json& j, const OrbitPoset& poset);
void from_json(const json& j, OrbitPoset& poset);

void to_json(json& j, const Strategy& s);
void from_json(const json& j, Strategy& s);

void to_json(json& j, const MembershipReport& r);
void from_json(const json& j, MembershipReport& r);

void to_json(json& j, const HallPolynomial& h);
void from_json(const json& j, HallPolynomial& h);

}  // namespace orbitlr

namespace nlohmann {

// SkewShape has no empty state, so tableaux deserialize by value.
template <>
struct adl_serializer<orbitlr::SkewTableau> {
    static void to_json(json& j, const orbitlr::SkewTableau& t);
    static orbitlr::SkewTableau from_json(const json& j);
};

}  // namespace nlohmann
