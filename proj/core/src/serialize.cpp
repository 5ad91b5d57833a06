#include "specht/serialize.hpp"

#include "specht/error.hpp"

namespace specht {

void to_json(Json& j, const Partition& lambda) { j = lambda.parts(); }
void from_json(const Json& j, Partition& lambda) { lambda = Partition(j.get<std::vector<std::uint64_t>>()); }

void to_json(Json& j, const CarryPattern& c) { j = c.carries(); }
void from_json(const Json& j, CarryPattern& c) { c = CarryPattern(j.get<std::vector<std::uint64_t>>()); }

void to_json(Json& j, const Weight& w) { j = w.coords(); }
void from_json(const Json& j, Weight& w) { w = Weight(j.get<std::vector<std::int64_t>>()); }

namespace {

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

Source source_from(const std::string& s)
{
    if (s == "criterion")
        return Source::Criterion;
    if (s == "oracle")
        return Source::Oracle;
    throw Error(ErrorKind::Parse, "unknown source '" + s + "'");
}

} // namespace

void to_json(Json& j, const OracleRow& row)
{
    j = Json{{"p", row.p},
             {"lambda", row.lambda},
             {"dim", row.dim},
             {"h0_oracle", optional_json(row.h0_oracle)},
             {"h0_criterion", optional_json(row.h0_criterion)},
             {"h1_oracle", optional_json(row.h1_oracle)},
             {"h1_criterion", optional_json(row.h1_criterion)},
             {"match", row.match}};
    if (!row.error.empty())
        j["error"] = row.error;
}

void from_json(const Json& j, OracleRow& row)
{
    row.p = j.at("p").get<std::uint64_t>();
    row.lambda = j.at("lambda").get<Partition>();
    row.dim = j.at("dim").get<std::size_t>();
    row.h0_oracle = optional_from<std::uint64_t>(j, "h0_oracle");
    row.h0_criterion = optional_from<int>(j, "h0_criterion");
    row.h1_oracle = optional_from<std::uint64_t>(j, "h1_oracle");
    row.h1_criterion = optional_from<int>(j, "h1_criterion");
    row.match = j.at("match").get<bool>();
    row.error = j.value("error", std::string{});
}

void to_json(Json& j, const CohomologyResult& r)
{
    j = Json{{"degree", r.degree},
             {"dim", r.dim},
             {"source", std::string(to_string(r.source))},
             {"p", r.p.value()},
             {"lambda", r.lambda}};
}

void to_json(Json& j, const CarryPoset& poset)
{
    Json patterns = Json::array();
    for (std::size_t i = 0; i < poset.patterns.size(); ++i)
        patterns.push_back({{"carries", poset.patterns[i]},
                            {"weight_count", poset.weight_counts[i]},
                            {"factor", poset.factors[i]}});
    Json edges = Json::array();
    for (const auto& [lo, hi] : poset.cover_edges)
        edges.push_back({lo, hi});
    j = Json{{"p", poset.p.value()}, {"d", poset.d}, {"n", poset.n}, {"patterns", patterns}, {"cover_edges", edges}};
}

void to_json(Json& j, const SubmoduleLattice& lattice)
{
    Json nodes = Json::array();
    for (const auto& node : lattice.nodes)
        nodes.push_back({{"members", node.members}, {"dimension", node.dimension}, {"labels", node.labels}});
    Json edges = Json::array();
    for (const auto& e : lattice.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"added_pattern", e.added_pattern}, {"factor", e.factor}});
    j = Json{{"poset", lattice.poset}, {"nodes", nodes}, {"edges", edges}};
}

bool operator==(const CarryPoset& a, const CarryPoset& b)
{
    return a.p == b.p && a.d == b.d && a.n == b.n && a.patterns == b.patterns && a.weight_counts == b.weight_counts
           && a.factors == b.factors && a.cover_edges == b.cover_edges;
}

bool operator==(const SubmoduleLattice& a, const SubmoduleLattice& b)
{
    if (!(a.poset == b.poset) || a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size())
        return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
        if (a.nodes[i].members != b.nodes[i].members || a.nodes[i].dimension != b.nodes[i].dimension
            || a.nodes[i].labels != b.nodes[i].labels)
            return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (a.edges[i].from != b.edges[i].from || a.edges[i].to != b.edges[i].to
            || a.edges[i].added_pattern != b.edges[i].added_pattern || a.edges[i].factor != b.edges[i].factor)
            return false;
    return true;
}

bool operator==(const CohomologyResult& a, const CohomologyResult& b)
{
    return a.degree == b.degree && a.dim == b.dim && a.source == b.source && a.p == b.p && a.lambda == b.lambda;
}

bool operator==(const OracleRow& a, const OracleRow& b)
{
    return a.p == b.p && a.lambda == b.lambda && a.dim == b.dim && a.h0_oracle == b.h0_oracle
           && a.h0_criterion == b.h0_criterion && a.h1_oracle == b.h1_oracle && a.h1_criterion == b.h1_criterion
           && a.match == b.match && a.error == b.error;
}

} // namespace specht

namespace nlohmann {

specht::CohomologyResult adl_serializer<specht::CohomologyResult>::from_json(const json& j)
{
    return {j.at("degree").get<int>(), j.at("dim").get<std::uint64_t>(),
            specht::source_from(j.at("source").get<std::string>()), j.at("p").get<specht::Prime>(),
            j.at("lambda").get<specht::Partition>()};
}

specht::CarryPoset adl_serializer<specht::CarryPoset>::from_json(const json& j)
{
    specht::CarryPoset poset{j.at("p").get<specht::Prime>(), j.at("d").get<std::uint64_t>(),
                             j.at("n").get<std::uint64_t>(), {}, {}, {}, {}};
    for (const auto& entry : j.at("patterns")) {
        poset.patterns.push_back(entry.at("carries").get<specht::CarryPattern>());
        poset.weight_counts.push_back(entry.at("weight_count").get<std::uint64_t>());
        poset.factors.push_back(entry.at("factor").get<specht::Partition>());
    }
    for (const auto& e : j.at("cover_edges"))
        poset.cover_edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return poset;
}

specht::SubmoduleLattice adl_serializer<specht::SubmoduleLattice>::from_json(const json& j)
{
    specht::SubmoduleLattice lattice{j.at("poset").get<specht::CarryPoset>(), {}, {}};
    for (const auto& n : j.at("nodes"))
        lattice.nodes.push_back({n.at("members").get<std::vector<std::size_t>>(),
                                 n.at("dimension").get<std::uint64_t>(),
                                 n.at("labels").get<std::vector<specht::Partition>>()});
    for (const auto& e : j.at("edges"))
        lattice.edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                                 e.at("added_pattern").get<std::size_t>(), e.at("factor").get<specht::Partition>()});
    return lattice;
}

} // namespace nlohmann
