#include "specht/fp_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "specht/error.hpp"
#include "specht/parallel.hpp"

namespace specht {

Tabloid tabloid_of(const Tableau& t, std::size_t d)
{
    Tabloid out{std::vector<std::uint8_t>(d, 0)};
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::uint32_t e : t[r])
            out.row_of[e - 1] = static_cast<std::uint8_t>(r);
    return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda)
{
    const std::size_t d = lambda.size();
    std::vector<Tableau> out;
    Tableau t(lambda.length());
    auto place = [&](auto& self, std::uint32_t next) -> void {
        if (next > d) {
            out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (t[r].size() >= lambda[r])
                continue;
            if (r > 0 && t[r - 1].size() <= t[r].size())
                continue;
            t[r].push_back(next);
            self(self, next + 1);
            t[r].pop_back();
        }
    };
    place(place, 1);
    auto reading_word = [](const Tableau& x) {
        std::vector<std::uint32_t> w;
        for (const auto& row : x)
            w.insert(w.end(), row.begin(), row.end());
        return w;
    };
    std::sort(out.begin(), out.end(),
              [&](const Tableau& a, const Tableau& b) { return reading_word(a) < reading_word(b); });
    return out;
}

std::uint64_t tabloid_count(const Partition& lambda)
{
    // Product of binomials C(remaining, lambda_i); saturate instead of throwing.
    std::uint64_t remaining = lambda.size();
    std::uint64_t count = 1;
    for (std::uint64_t part : lambda.parts()) {
        std::uint64_t b;
        try {
            b = binomial(remaining, part);
            count = checked_mul(count, b);
        } catch (const Error&) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        remaining -= part;
    }
    return count;
}

namespace {

using SparseVector = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (tabloid, coefficient)

struct SignedPermutation {
    std::vector<std::uint32_t> image;
    bool odd;
};

std::vector<SignedPermutation> all_permutations(std::size_t k)
{
    std::vector<SignedPermutation> out;
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                inversions += perm[i] > perm[j];
        out.push_back({perm, inversions % 2 == 1});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::string key_of(const std::vector<std::uint8_t>& row_of)
{
    return {row_of.begin(), row_of.end()};
}

class TabloidSpace {
public:
    TabloidSpace(const Partition& lambda, std::uint32_t p) : lambda_(lambda), p_(p)
    {
        d_ = lambda.size();
        std::vector<std::uint8_t> labels;
        for (std::size_t r = 0; r < lambda.length(); ++r)
            labels.insert(labels.end(), lambda[r], static_cast<std::uint8_t>(r));
        do {
            index_.emplace(key_of(labels), static_cast<std::uint32_t>(index_.size()));
        } while (std::next_permutation(labels.begin(), labels.end()));

        const std::size_t width = lambda.empty() ? 0 : lambda[0];
        column_lengths_.assign(width, 0);
        for (std::size_t c = 0; c < width; ++c)
            for (std::size_t r = 0; r < lambda.length(); ++r)
                column_lengths_[c] += lambda[r] > c;
        for (std::size_t k : column_lengths_)
            if (perms_.size() <= k)
                perms_.resize(k + 1);
        for (std::size_t k = 0; k < perms_.size(); ++k)
            perms_[k] = all_permutations(k);
    }

    std::size_t size() const noexcept { return index_.size(); }

    std::uint32_t index(const std::vector<std::uint8_t>& row_of) const
    {
        auto it = index_.find(key_of(row_of));
        if (it == index_.end())
            throw Error(ErrorKind::RelationCheckFailed, "tabloid outside the permutation module");
        return it->second;
    }

    /// e_t = sum over the column group of sgn(sigma) {sigma t}.
    SparseVector polytabloid(const Tableau& t) const
    {
        SparseVector out;
        std::vector<std::uint8_t> row_of = tabloid_of(t, d_).row_of;
        auto rec = [&](auto& self, std::size_t column, bool odd) -> void {
            if (column == column_lengths_.size()) {
                out.emplace_back(index(row_of), odd ? p_ - 1 : 1U);
                return;
            }
            const std::size_t k = column_lengths_[column];
            for (const auto& sigma : perms_[k]) {
                for (std::size_t r = 0; r < k; ++r)
                    row_of[t[sigma.image[r]][column] - 1] = static_cast<std::uint8_t>(r);
                self(self, column + 1, odd != sigma.odd);
            }
            for (std::size_t r = 0; r < k; ++r)
                row_of[t[r][column] - 1] = static_cast<std::uint8_t>(r);
        };
        rec(rec, 0, false);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    Partition lambda_;
    std::uint32_t p_;
    std::size_t d_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::size_t> column_lengths_;
    std::vector<std::vector<SignedPermutation>> perms_;
};

bool is_standard(const Tableau& t)
{
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1])
                return false;
            if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c])
                return false;
        }
    return true;
}

Tableau swap_entries(Tableau t, std::uint32_t a, std::uint32_t b)
{
    for (auto& row : t)
        for (auto& e : row) {
            if (e == a)
                e = b;
            else if (e == b)
                e = a;
        }
    return t;
}

} // namespace

SpechtRep build_specht_rep(const Partition& lambda, Prime prime, const Bounds& bounds)
{
    const std::size_t d = lambda.size();
    if (prime.value() >= (1U << 16))
        throw Error(ErrorKind::PreconditionFailed, "the oracle needs p < 2^16");
    if (d > 255)
        throw Error(ErrorKind::BoundExceeded, "the oracle supports d <= 255");
    const std::uint64_t tabloids = tabloid_count(lambda);
    if (tabloids > bounds.max_tabloids)
        throw Error(ErrorKind::BoundExceeded, lambda.to_string() + " has " + std::to_string(tabloids)
                                                  + " tabloids, above max_tabloids = "
                                                  + std::to_string(bounds.max_tabloids));
    const auto p = static_cast<std::uint32_t>(prime.value());

    TabloidSpace space(lambda, p);
    SpechtRep rep{prime, lambda, 0, {}, standard_tableaux(lambda)};
    const std::size_t dim = rep.basis.size();
    rep.dim = dim;

    std::vector<SparseVector> polys;
    polys.reserve(dim);
    for (const auto& t : rep.basis)
        polys.push_back(space.polytabloid(t));

    // Coordinates at the tabloids {t} of the standard tableaux suffice to
    // solve for a vector of S^lambda in the polytabloid basis.
    std::unordered_map<std::uint32_t, std::size_t> coordinate;
    for (std::size_t a = 0; a < dim; ++a)
        coordinate.emplace(space.index(tabloid_of(rep.basis[a], d).row_of), a);
    auto restrict = [&](const SparseVector& v) {
        std::vector<std::uint32_t> out(dim, 0);
        for (const auto& [tab, coef] : v)
            if (auto it = coordinate.find(tab); it != coordinate.end())
                out[it->second] = coef;
        return out;
    };
    FpMatrix sub(dim, dim, p);
    for (std::size_t b = 0; b < dim; ++b) {
        const auto col = restrict(polys[b]);
        for (std::size_t a = 0; a < dim; ++a)
            sub.set(a, b, col[a]);
    }
    const FpMatrix sub_inverse = inverse(sub);

    std::vector<std::uint64_t> check(space.size());
    for (std::uint32_t i = 1; i < d; ++i) {
        FpMatrix g(dim, dim, p);
        for (std::size_t b = 0; b < dim; ++b) {
            const Tableau moved = swap_entries(rep.basis[b], i, i + 1);
            if (is_standard(moved)) {
                g.set(coordinate.at(space.index(tabloid_of(moved, d).row_of)), b, 1);
                continue;
            }
            const SparseVector target = space.polytabloid(moved);
            const auto rhs = restrict(target);
            std::vector<std::uint64_t> x(dim, 0);
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t k = 0; k < dim; ++k)
                    x[a] += std::uint64_t{sub_inverse(a, k)} * rhs[k];
            // The solve must reproduce e_{s_i t} in every tabloid coordinate.
            std::fill(check.begin(), check.end(), 0);
            for (std::size_t a = 0; a < dim; ++a) {
                x[a] %= p;
                g.set(a, b, x[a]);
                if (x[a] == 0)
                    continue;
                for (const auto& [tab, coef] : polys[a])
                    check[tab] += x[a] * coef;
            }
            std::size_t pos = 0;
            for (std::uint32_t tab = 0; tab < check.size(); ++tab) {
                const std::uint64_t want = pos < target.size() && target[pos].first == tab ? target[pos++].second : 0;
                if (check[tab] % p != want)
                    throw Error(ErrorKind::RelationCheckFailed,
                                "s_" + std::to_string(i) + " e_t leaves the span of standard polytabloids");
            }
        }
        rep.generators.push_back(std::move(g));
    }
    check_coxeter_relations(rep);
    return rep;
}

void check_coxeter_relations(const SpechtRep& rep)
{
    const auto& g = rep.generators;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::RelationCheckFailed, what + " fails for " + rep.lambda.to_string());
    };
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(g[i] * g[i]).is_identity())
            fail("s_" + std::to_string(i + 1) + "^2");
        if (i + 1 < g.size()) {
            const FpMatrix ab = g[i] * g[i + 1];
            if (!(ab * ab * ab).is_identity())
                fail("braid relation at " + std::to_string(i + 1));
        }
        for (std::size_t j = i + 2; j < g.size(); ++j)
            if (g[i] * g[j] != g[j] * g[i])
                fail("commuting relation s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1));
    }
}

std::uint64_t h0_dim(const SpechtRep& rep)
{
    const auto p = static_cast<std::uint32_t>(rep.p.value());
    EchelonBasis basis(rep.dim, p);
    for (const auto& g : rep.generators) {
        for (std::size_t r = 0; r < rep.dim && basis.rank() < rep.dim; ++r) {
            std::vector<std::uint32_t> row(g.row(r).begin(), g.row(r).end());
            row[r] = (row[r] + p - 1) % p;
            basis.insert(std::move(row));
        }
    }
    return rep.dim - basis.rank();
}

namespace {

struct Relation {
    std::size_t a;
    std::size_t b;
    int half_length;  // word (s_a s_b)^half_length
};

std::vector<Relation> coxeter_relations(std::size_t generators, bool include_squares)
{
    std::vector<Relation> out;
    for (std::size_t i = 0; i < generators; ++i) {
        if (include_squares)
            out.push_back({i, i, 1});
        if (i + 1 < generators)
            out.push_back({i, i + 1, 3});
        for (std::size_t j = i + 2; j < generators; ++j)
            out.push_back({i, j, 2});
    }
    return out;
}

// Fox derivative of (x_a x_b)^k: coefficients of f(x_a) and f(x_b) in
// f(w) = sum_t rho(prefix_t) f(letter_t).
std::pair<FpMatrix, FpMatrix> fox_coefficients(const SpechtRep& rep, const Relation& rel)
{
    const auto p = static_cast<std::uint32_t>(rep.p.value());
    FpMatrix prefix = FpMatrix::identity(rep.dim, p);
    FpMatrix ca(rep.dim, rep.dim, p);
    FpMatrix cb(rep.dim, rep.dim, p);
    for (int t = 0; t < 2 * rel.half_length; ++t) {
        const bool first = t % 2 == 0;
        if (first)
            ca = ca + prefix;
        else
            cb = cb + prefix;
        prefix = prefix * rep.generators[first ? rel.a : rel.b];
    }
    return {ca, cb};
}

void check_cocycle_bound(const SpechtRep& rep, const Bounds& bounds)
{
    const std::uint64_t unknowns = checked_mul(rep.generators.size(), rep.dim);
    if (unknowns > bounds.max_cocycle_unknowns)
        throw Error(ErrorKind::BoundExceeded, std::to_string(unknowns) + " cocycle unknowns exceed "
                                                  + std::to_string(bounds.max_cocycle_unknowns));
}

std::uint64_t cohomology_from_cocycles(std::uint64_t cocycles, std::uint64_t coboundaries)
{
    if (cocycles < coboundaries)
        throw Error(ErrorKind::RelationCheckFailed, "coboundaries exceed cocycles");
    return cocycles - coboundaries;
}

} // namespace

std::uint64_t h1_dim(const SpechtRep& rep, const Bounds& bounds)
{
    if (rep.generators.empty())
        return 0;
    check_cocycle_bound(rep, bounds);
    const auto p = static_cast<std::uint32_t>(rep.p.value());
    const std::size_t n = rep.dim;
    const std::uint64_t coboundaries = n - h0_dim(rep);

    // f(s_i) = P_i y_i with the columns of P_i spanning ker(1 + s_i).
    std::vector<FpMatrix> param;
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& g : rep.generators) {
        const auto kernel = rank_and_nullspace(g + FpMatrix::identity(n, p)).nullspace;
        FpMatrix basis(n, kernel.size(), p);
        for (std::size_t c = 0; c < kernel.size(); ++c)
            for (std::size_t r = 0; r < n; ++r)
                basis.set(r, c, kernel[c][r]);
        offset.push_back(unknowns);
        unknowns += kernel.size();
        param.push_back(std::move(basis));
    }
    if (unknowns < coboundaries)
        throw Error(ErrorKind::RelationCheckFailed, "eigenspaces too small to hold the coboundaries");

    // The cocycle space contains the coboundaries, so rank never exceeds
    // unknowns - coboundaries; reaching it means H^1 = 0.
    const std::size_t max_rank = unknowns - coboundaries;
    EchelonBasis system(unknowns, p);
    for (const auto& rel : coxeter_relations(rep.generators.size(), false)) {
        if (system.rank() == max_rank)
            break;
        const auto [ca, cb] = fox_coefficients(rep, rel);
        const FpMatrix ma = ca * param[rel.a];
        const FpMatrix mb = cb * param[rel.b];
        for (std::size_t r = 0; r < n && system.rank() < max_rank; ++r) {
            std::vector<std::uint32_t> row(unknowns, 0);
            std::copy(ma.row(r).begin(), ma.row(r).end(), row.begin() + offset[rel.a]);
            std::copy(mb.row(r).begin(), mb.row(r).end(), row.begin() + offset[rel.b]);
            system.insert(std::move(row));
        }
    }
    return cohomology_from_cocycles(unknowns - system.rank(), coboundaries);
}

std::uint64_t h1_dim_full_presentation(const SpechtRep& rep, const Bounds& bounds)
{
    if (rep.generators.empty())
        return 0;
    check_cocycle_bound(rep, bounds);
    const auto p = static_cast<std::uint32_t>(rep.p.value());
    const std::size_t n = rep.dim;
    const std::size_t unknowns = rep.generators.size() * n;
    EchelonBasis system(unknowns, p);
    for (const auto& rel : coxeter_relations(rep.generators.size(), true)) {
        const auto [ca, cb] = fox_coefficients(rep, rel);
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<std::uint32_t> row(unknowns, 0);
            for (std::size_t c = 0; c < n; ++c) {
                row[rel.a * n + c] = ca(r, c);
                row[rel.b * n + c] = (row[rel.b * n + c] + cb(r, c)) % p;
            }
            system.insert(std::move(row));
        }
    }
    return cohomology_from_cocycles(unknowns - system.rank(), n - h0_dim(rep));
}

OracleRow oracle_row(const Partition& lambda, Prime p, const std::set<int>& degrees, const Bounds& bounds)
{
    OracleRow row;
    row.p = p.value();
    row.lambda = lambda;
    try {
        const SpechtRep rep = build_specht_rep(lambda, p, bounds);
        row.dim = rep.dim;
        if (degrees.contains(0)) {
            row.h0_oracle = h0_dim(rep);
            row.h0_criterion = james_h0(lambda, p);
            row.match = row.match && *row.h0_oracle == static_cast<std::uint64_t>(*row.h0_criterion);
        }
        if (degrees.contains(1)) {
            row.h1_oracle = h1_dim(rep, bounds);
            if (lambda.is_two_part()) {
                row.h1_criterion = h1_twopart_psi(lambda[0], lambda[1], p);
                row.match = row.match && *row.h1_oracle == static_cast<std::uint64_t>(*row.h1_criterion);
            }
        }
    } catch (const Error& e) {
        row.error = e.what();
        row.match = false;
    }
    return row;
}

std::vector<OracleRow> oracle_sweep(std::uint64_t d_min, std::uint64_t d_max, Prime p,
                                    const std::set<int>& degrees, const Bounds& bounds, unsigned threads)
{
    std::vector<Partition> shapes;
    for (std::uint64_t d = d_min; d <= d_max; ++d)
        for_each_partition(d, std::nullopt, bounds, [&](const Partition& l) { shapes.push_back(l); });
    std::vector<OracleRow> rows(shapes.size());
    parallel_for(shapes.size(), threads,
                 [&](std::size_t i) { rows[i] = oracle_row(shapes[i], p, degrees, bounds); });
    return rows;
}

} // namespace specht
