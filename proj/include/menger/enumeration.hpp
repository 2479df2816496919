#pragma once

// Generates the test universe: closes generator sets into concrete
// algebras, enumerates all closed subalgebras at tiny parameters, and
// abstractifies concrete algebras into table form.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "menger/abstract.hpp"
#include "menger/errors.hpp"
#include "menger/nfun.hpp"

#include <json.hpp>

namespace menger {

inline constexpr std::size_t kDefaultMemberCap = 512;
inline constexpr std::size_t kDefaultUniverseCap = 4096;

/// A finite set of n-place functions closed under Menger composition,
/// intersection and every R_i.  Members are kept in canonical (table-byte)
/// order, so member indices are reproducible.
struct ConcreteAlgebra {
    BaseSet base{1};
    int arity = 1;
    std::vector<NPlaceFunction> members;

    int size() const { return static_cast<int>(members.size()); }

    /// Index of f in the canonical member list, or -1.
    int index_of(const NPlaceFunction& f) const {
        auto it = std::lower_bound(members.begin(), members.end(), f);
        if (it != members.end() && *it == f)
            return static_cast<int>(it - members.begin());
        return -1;
    }

    bool operator==(const ConcreteAlgebra&) const = default;
    friend bool operator<(const ConcreteAlgebra& a, const ConcreteAlgebra& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    }
};

/// Least superset of the generators closed under compose, intersect and
/// R_i.  Fixpoint iteration; refuses (with the size reached) past the cap.
inline ConcreteAlgebra close(const std::vector<NPlaceFunction>& generators,
                             std::size_t member_cap = kDefaultMemberCap) {
    ConcreteAlgebra out;
    if (generators.empty()) return out;
    out.base = generators.front().base();
    out.arity = generators.front().arity();
    const int n = out.arity;

    std::set<NPlaceFunction> seen;
    std::vector<NPlaceFunction> list;
    auto add = [&](const NPlaceFunction& f) {
        if (seen.insert(f).second) {
            if (seen.size() > member_cap)
                throw CapError("closure exceeded member cap " +
                               std::to_string(member_cap) + " (reached " +
                               std::to_string(seen.size()) + " members)");
            list.push_back(f);
        }
    };
    for (const auto& g : generators) {
        require_compatible(generators.front(), g);
        add(g);
    }

    std::size_t old_count = 0;
    std::vector<NPlaceFunction> gs(static_cast<std::size_t>(n),
                                   empty_function(n, out.base));
    std::vector<std::size_t> sel(static_cast<std::size_t>(n), 0);
    while (old_count < list.size()) {
        std::size_t cur = list.size();
        // R_i and pairwise intersections touching a new element.
        for (std::size_t a = old_count; a < cur; ++a) {
            for (int i = 1; i <= n; ++i) add(proj_restrict(i, list[a]));
            for (std::size_t b = 0; b < cur; ++b)
                add(intersect(list[a], list[b]));
        }
        // Compositions f[g_1..g_n] with at least one index new.
        for (std::size_t f = 0; f < cur; ++f) {
            std::fill(sel.begin(), sel.end(), 0);
            while (true) {
                std::size_t hi = f;
                for (std::size_t v : sel) hi = std::max(hi, v);
                if (hi >= old_count) {
                    for (int i = 0; i < n; ++i)
                        gs[static_cast<std::size_t>(i)] =
                            list[sel[static_cast<std::size_t>(i)]];
                    add(compose(list[f], gs));
                }
                int i = n - 1;
                for (; i >= 0; --i) {
                    if (++sel[static_cast<std::size_t>(i)] < cur) break;
                    sel[static_cast<std::size_t>(i)] = 0;
                }
                if (i < 0) break;
            }
        }
        old_count = cur;
    }

    out.members.assign(seen.begin(), seen.end());
    return out;
}

/// All (m+1)^(m^n) partial functions A^n -> A, in table-lex order.
inline std::vector<NPlaceFunction> all_partial_functions(
    int m, int n, std::size_t universe_cap = kDefaultUniverseCap) {
    std::size_t slots = table_slots(m, n);
    double count = 1.0;
    for (std::size_t i = 0; i < slots; ++i) {
        count *= static_cast<double>(m + 1);
        if (count > static_cast<double>(universe_cap))
            throw CapError("function universe (m+1)^(m^n) exceeds cap " +
                           std::to_string(universe_cap));
    }
    std::vector<NPlaceFunction> out;
    std::vector<int> table(slots, kUndefined);
    BaseSet base{m};
    while (true) {
        out.emplace_back(n, base, table);
        int i = static_cast<int>(slots) - 1;
        for (; i >= 0; --i) {
            if (++table[static_cast<std::size_t>(i)] < m) break;
            table[static_cast<std::size_t>(i)] = kUndefined;
        }
        if (i < 0) break;
    }
    return out;
}

/// Distinct closures of all generator sets of size <= 2, deduplicated and
/// sorted canonically (by size, then member tables).
inline std::vector<ConcreteAlgebra> enumerate_closed(
    int m, int n, std::size_t member_cap = kDefaultMemberCap,
    std::size_t universe_cap = kDefaultUniverseCap) {
    std::vector<NPlaceFunction> universe =
        all_partial_functions(m, n, universe_cap);
    std::set<ConcreteAlgebra> distinct;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        distinct.insert(close({universe[i]}, member_cap));
        for (std::size_t j = i + 1; j < universe.size(); ++j)
            distinct.insert(close({universe[i], universe[j]}, member_cap));
    }
    return {distinct.begin(), distinct.end()};
}

/// Table image of the concrete operations.  Member index i of the result
/// corresponds to phi.members[i]; the zero slot is filled via find_zero.
/// Every table entry is produced by a concrete evaluation followed by a
/// member lookup, so construction doubles as the isomorphism check.
inline AbstractAlgebra abstractify(const ConcreteAlgebra& phi) {
    if (phi.members.empty())
        throw ContractError("cannot abstractify an empty algebra");
    const int s = phi.size(), n = phi.arity;
    AbstractAlgebra g;
    g.size = s;
    g.rank = n;
    g.sup.resize(static_cast<std::size_t>(s) * [&] {
        std::size_t tc = 1;
        for (int i = 0; i < n; ++i) tc *= static_cast<std::size_t>(s);
        return tc;
    }());
    g.meet.resize(static_cast<std::size_t>(s) * static_cast<std::size_t>(s));
    g.r.assign(static_cast<std::size_t>(n),
               std::vector<int>(static_cast<std::size_t>(s)));

    auto lookup = [&](const NPlaceFunction& f, const char* op) {
        int idx = phi.index_of(f);
        if (idx < 0)
            throw ClosureViolationError(std::string(op) +
                                        " result escapes the member list");
        return idx;
    };

    std::vector<NPlaceFunction> gs(static_cast<std::size_t>(n),
                                   empty_function(n, phi.base));
    std::vector<int> ys(static_cast<std::size_t>(n));
    std::size_t pos = 0;
    const std::size_t tc = g.tuple_count();
    for (int x = 0; x < s; ++x) {
        std::fill(ys.begin(), ys.end(), 0);
        do {
            for (int i = 0; i < n; ++i)
                gs[static_cast<std::size_t>(i)] =
                    phi.members[static_cast<std::size_t>(
                        ys[static_cast<std::size_t>(i)])];
            g.sup[pos++] = lookup(
                compose(phi.members[static_cast<std::size_t>(x)], gs), "compose");
        } while (next_tuple(ys, s));
    }
    (void)tc;

    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            g.meet[static_cast<std::size_t>(x) * static_cast<std::size_t>(s) +
                   static_cast<std::size_t>(y)] =
                lookup(intersect(phi.members[static_cast<std::size_t>(x)],
                                 phi.members[static_cast<std::size_t>(y)]),
                       "intersect");

    for (int i = 1; i <= n; ++i)
        for (int x = 0; x < s; ++x)
            g.r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x)] =
                lookup(proj_restrict(i, phi.members[static_cast<std::size_t>(x)]),
                       "proj_restrict");

    g.zero = find_zero(g);
    return g;
}

// Corpus file form: JSON array of these objects.
inline void to_json(nlohmann::json& j, const ConcreteAlgebra& phi) {
    j = nlohmann::json{{"base", phi.base.size},
                       {"arity", phi.arity},
                       {"members", phi.members}};
}

inline void from_json(const nlohmann::json& j, ConcreteAlgebra& phi) {
    phi.base.size = j.at("base").get<int>();
    phi.arity = j.at("arity").get<int>();
    phi.members = j.at("members").get<std::vector<NPlaceFunction>>();
    if (!std::is_sorted(phi.members.begin(), phi.members.end()))
        throw StructuralError("member list is not in canonical order");
    for (const auto& f : phi.members)
        if (f.arity() != phi.arity || !(f.base() == phi.base))
            throw StructuralError("member has mismatched arity or base");
}

} // namespace menger
