#pragma once

#include <nlohmann/json.hpp>

#include "specht/carry_lattice.hpp"
#include "specht/combinatorics.hpp"
#include "specht/criteria.hpp"
#include "specht/fp_oracle.hpp"
#include "specht/weights.hpp"

// JSON encodings; the field layout is documented in docs/json-schema.md.
// Every to_json has a matching decoder and decode(encode(x)) == x.

namespace specht {

using Json = nlohmann::json;

void to_json(Json& j, const Partition& lambda);
void from_json(const Json& j, Partition& lambda);

void to_json(Json& j, const CarryPattern& c);
void from_json(const Json& j, CarryPattern& c);

void to_json(Json& j, const Weight& w);
void from_json(const Json& j, Weight& w);

void to_json(Json& j, const OracleRow& row);
void from_json(const Json& j, OracleRow& row);

void to_json(Json& j, const CohomologyResult& r);
void to_json(Json& j, const CarryPoset& poset);
void to_json(Json& j, const SubmoduleLattice& lattice);

bool operator==(const CarryPoset& a, const CarryPoset& b);
bool operator==(const SubmoduleLattice& a, const SubmoduleLattice& b);
bool operator==(const CohomologyResult& a, const CohomologyResult& b);
bool operator==(const OracleRow& a, const OracleRow& b);

} // namespace specht

// Types holding a Prime have no default state, so they decode by value.
namespace nlohmann {

template <>
struct adl_serializer<specht::Prime> {
    static specht::Prime from_json(const json& j) { return specht::Prime(j.get<std::uint64_t>()); }
    static void to_json(json& j, specht::Prime p) { j = p.value(); }
};

template <>
struct adl_serializer<specht::CohomologyResult> {
    static specht::CohomologyResult from_json(const json& j);
    static void to_json(json& j, const specht::CohomologyResult& r) { specht::to_json(j, r); }
};

template <>
struct adl_serializer<specht::CarryPoset> {
    static specht::CarryPoset from_json(const json& j);
    static void to_json(json& j, const specht::CarryPoset& p) { specht::to_json(j, p); }
};

template <>
struct adl_serializer<specht::SubmoduleLattice> {
    static specht::SubmoduleLattice from_json(const json& j);
    static void to_json(json& j, const specht::SubmoduleLattice& l) { specht::to_json(j, l); }
};

} // namespace nlohmann
