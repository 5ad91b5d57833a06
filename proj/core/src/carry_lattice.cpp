#include "specht/carry_lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "specht/error.hpp"

namespace specht {

CarryPattern::CarryPattern(std::vector<std::uint64_t> carries) : carries_(std::move(carries))
{
    while (!carries_.empty() && carries_.back() == 0)
        carries_.pop_back();
}

bool CarryPattern::leq(const CarryPattern& other) const noexcept
{
    const std::size_t n = std::max(carries_.size(), other.carries_.size());
    for (std::size_t i = 0; i < n; ++i)
        if ((*this)[i] > other[i])
            return false;
    return true;
}

std::string CarryPattern::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < carries_.size(); ++i)
        os << (i ? "," : "") << carries_[i];
    os << ')';
    return os.str();
}

CarryPattern carry_pattern(std::span<const std::uint64_t> parts, Prime p)
{
    const std::uint64_t base = p.value();
    std::vector<std::uint64_t> rest(parts.begin(), parts.end());
    std::vector<std::uint64_t> carries;
    std::uint64_t carry = 0;
    for (;;) {
        bool more = false;
        std::uint64_t column = carry;
        for (auto& x : rest) {
            column = checked_add(column, x % base);
            x /= base;
            more = more || x != 0;
        }
        carry = column / base;
        if (!more && carry == 0)
            break;
        carries.push_back(carry);
    }
    return CarryPattern(std::move(carries));
}

bool is_h0_factor(const Partition& lambda, Prime p)
{
    const std::uint64_t top = p.value() - 1;
    std::vector<PAdicDigits> rows;
    rows.reserve(lambda.length());
    std::size_t columns = 0;
    for (std::uint64_t x : lambda.parts()) {
        rows.push_back(p_adic_digits(x, p));
        columns = std::max(columns, rows.back().digits.size());
    }
    for (std::size_t j = 0; j < columns; ++j) {
        bool must_vanish = false;
        for (const auto& row : rows) {
            const std::uint64_t a = row.digit(j);
            if (must_vanish && a != 0)
                return false;
            if (a != top)
                must_vanish = true;
        }
    }
    return true;
}

bool twist_multiplicity_equal(const Partition& lambda, Prime p)
{
    return is_h0_factor(scale_partition(lambda, p.value()), p) == is_h0_factor(lambda, p);
}

namespace {

void check_parts(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorKind::PreconditionFailed, "the symmetric power needs n >= 1 variables");
}

// Number of distinct length-n compositions that sort to lambda.
std::uint64_t rearrangements(const Partition& lambda, std::uint64_t n)
{
    std::uint64_t slots = n;
    std::uint64_t count = 1;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        count = checked_mul(count, binomial(slots, j - i));
        slots -= j - i;
        i = j;
    }
    return count;
}

struct PatternGroup {
    std::vector<Partition> members;  // decreasing lexicographic order
    std::uint64_t weight_count = 0;
};

std::map<CarryPattern, PatternGroup> group_by_pattern(std::uint64_t d, std::uint64_t n, Prime p,
                                                      const Bounds& bounds)
{
    check_parts(n);
    std::map<CarryPattern, PatternGroup> groups;
    for_each_partition(d, n, bounds, [&](const Partition& lambda) {
        auto& g = groups[carry_pattern(lambda, p)];
        g.members.push_back(lambda);
        g.weight_count = checked_add(g.weight_count, rearrangements(lambda, n));
    });
    return groups;
}

// The lexicographically largest member is the only candidate for a dominance
// maximum; it is the maximum iff it dominates every other member.
const Partition& unique_maximum(const CarryPattern& c, const PatternGroup& g)
{
    const Partition& top = g.members.front();
    for (const auto& other : g.members)
        if (!dominates(top, other))
            throw Error(ErrorKind::NonUniqueMaximum,
                        "carry pattern " + c.to_string() + ": " + top.to_string() + " and "
                            + other.to_string() + " are incomparable candidates");
    return top;
}

} // namespace

FactorMap h0_composition_factors(std::uint64_t d, std::uint64_t n, Prime p, const Bounds& bounds)
{
    FactorMap out;
    for (const auto& [c, g] : group_by_pattern(d, n, p, bounds))
        out.emplace(c, unique_maximum(c, g));
    return out;
}

std::size_t CarryPoset::index_of(const CarryPattern& c) const
{
    auto it = std::lower_bound(patterns.begin(), patterns.end(), c);
    if (it == patterns.end() || *it != c)
        throw Error(ErrorKind::PreconditionFailed, "pattern " + c.to_string() + " not in C(d)");
    return static_cast<std::size_t>(it - patterns.begin());
}

CarryPoset carry_poset(std::uint64_t d, std::uint64_t n, Prime p, const Bounds& bounds)
{
    CarryPoset poset{p, d, n, {}, {}, {}, {}};
    for (const auto& [c, g] : group_by_pattern(d, n, p, bounds)) {
        poset.patterns.push_back(c);
        poset.weight_counts.push_back(g.weight_count);
        poset.factors.push_back(unique_maximum(c, g));
    }
    const std::size_t m = poset.patterns.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!poset.patterns[a].strictly_below(poset.patterns[b]))
                continue;
            bool cover = true;
            for (std::size_t c = 0; c < m && cover; ++c)
                cover = !(poset.patterns[a].strictly_below(poset.patterns[c])
                          && poset.patterns[c].strictly_below(poset.patterns[b]));
            if (cover)
                poset.cover_edges.emplace_back(a, b);
        }
    return poset;
}

std::size_t SubmoduleLattice::index_of(const std::vector<std::size_t>& members) const
{
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].members == members)
            return i;
    throw Error(ErrorKind::PreconditionFailed, "not an order ideal of this poset");
}

namespace {

using Bitset = std::vector<std::uint64_t>;

bool test(const Bitset& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1U; }
void set(Bitset& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }
bool subset(const Bitset& a, const Bitset& b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w])
            return false;
    return true;
}

std::vector<std::size_t> members_of(const Bitset& s, std::size_t m)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i)
        if (test(s, i))
            out.push_back(i);
    return out;
}

} // namespace

SubmoduleLattice submodule_lattice(std::uint64_t d, std::uint64_t n, Prime p, const Bounds& bounds)
{
    SubmoduleLattice lattice{carry_poset(d, n, p, bounds), {}, {}};
    const auto& poset = lattice.poset;
    const std::size_t m = poset.patterns.size();
    const std::size_t words = (m + 63) / 64;

    std::vector<Bitset> below(m, Bitset(words, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (poset.patterns[b].strictly_below(poset.patterns[a]))
                set(below[a], b);

    // Depth-first closure from the empty ideal; an element may join an ideal
    // once everything below it is present.
    std::set<Bitset> seen;
    std::vector<Bitset> stack{Bitset(words, 0)};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Bitset ideal = std::move(stack.back());
        stack.pop_back();
        for (std::size_t x = 0; x < m; ++x) {
            if (test(ideal, x) || !subset(below[x], ideal))
                continue;
            Bitset next = ideal;
            set(next, x);
            if (seen.insert(next).second) {
                if (seen.size() > bounds.max_ideals)
                    throw Error(ErrorKind::BoundExceeded,
                                "more than max_ideals = " + std::to_string(bounds.max_ideals)
                                    + " submodules");
                stack.push_back(std::move(next));
            }
        }
    }

    std::vector<std::vector<std::size_t>> ideals;
    ideals.reserve(seen.size());
    for (const auto& s : seen)
        ideals.push_back(members_of(s, m));
    std::sort(ideals.begin(), ideals.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::map<std::vector<std::size_t>, std::size_t> position;
    for (auto& members : ideals) {
        SubmoduleLattice::Node node{members, 0, {}};
        for (std::size_t i : members) {
            node.dimension = checked_add(node.dimension, poset.weight_counts[i]);
            node.labels.push_back(poset.factors[i]);
        }
        position.emplace(members, lattice.nodes.size());
        lattice.nodes.push_back(std::move(node));
    }
    for (std::size_t from = 0; from < lattice.nodes.size(); ++from) {
        const auto& members = lattice.nodes[from].members;
        for (std::size_t x = 0; x < m; ++x) {
            if (std::binary_search(members.begin(), members.end(), x))
                continue;
            auto grown = members;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
            auto it = position.find(grown);
            if (it != position.end())
                lattice.edges.push_back({from, it->second, x, poset.factors[x]});
        }
    }
    return lattice;
}

int hom_b_via_carry(const Partition& lambda, Prime p, const Bounds& bounds)
{
    if (!is_h0_factor(lambda, p))
        return 0;
    const CarryPattern own = carry_pattern(lambda, p);
    bool blocked = false;
    for_each_partition(lambda.size(), std::nullopt, bounds, [&](const Partition& mu) {
        if (blocked || !strictly_dominates(mu, lambda) || !is_h0_factor(mu, p))
            return;
        blocked = own.strictly_below(carry_pattern(mu, p));
    });
    return blocked ? 0 : 1;
}

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

} // namespace

std::string to_dot(const CarryPoset& poset)
{
    std::ostringstream os;
    os << "digraph carry_poset {\n";
    for (std::size_t i = 0; i < poset.patterns.size(); ++i)
        os << "  c" << i << " [label=\"" << dot_escape(poset.patterns[i].to_string()) << "\\n"
           << dot_escape(poset.factors[i].to_string()) << "\"];\n";
    for (const auto& [a, b] : poset.cover_edges)
        os << "  c" << a << " -> c" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const SubmoduleLattice& lattice)
{
    std::ostringstream os;
    os << "digraph submodule_lattice {\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        os << "  n" << i << " [label=\"dim=" << lattice.nodes[i].dimension << "\"];\n";
    for (const auto& e : lattice.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(e.factor.to_string())
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace specht
