#pragma once

// Table-form algebras (G, o, meet, R_1..R_n) of type (n+1, 2, 1, ..., 1):
// axiom checking, the zeta/chi relations, zero detection and the
// subset/relation predicates.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "menger/errors.hpp"
#include "menger/nfun.hpp"

#include <json.hpp>

namespace menger {

/// Advances an n-digit base-s counter in lexicographic order.
/// Returns false after the last tuple.
inline bool next_tuple(std::span<int> tuple, int radix) {
    for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
        if (++tuple[static_cast<std::size_t>(i)] < radix) return true;
        tuple[static_cast<std::size_t>(i)] = 0;
    }
    return false;
}

struct AbstractAlgebra {
    int size = 1;
    int rank = 1;
    std::vector<int> sup;               // size^(rank+1), row-major, x first
    std::vector<int> meet;              // size^2
    std::vector<std::vector<int>> r;    // rank tables of length size
    std::optional<int> zero;

    std::size_t tuple_count() const {
        std::size_t c = 1;
        for (int i = 0; i < rank; ++i) c *= static_cast<std::size_t>(size);
        return c;
    }

    std::size_t encode_tuple(std::span<const int> ys) const {
        std::size_t idx = 0;
        for (int y : ys) idx = idx * static_cast<std::size_t>(size) +
                               static_cast<std::size_t>(y);
        return idx;
    }

    int sup_at(int x, std::size_t tuple_idx) const {
        return sup[static_cast<std::size_t>(x) * tuple_count() + tuple_idx];
    }

    int sup_at(int x, std::span<const int> ys) const {
        return sup_at(x, encode_tuple(ys));
    }

    /// x[y ... y] with all inner arguments equal.
    int sup_diag(int x, int y) const {
        std::size_t idx = 0;
        for (int i = 0; i < rank; ++i) idx = idx * static_cast<std::size_t>(size) +
                                             static_cast<std::size_t>(y);
        return sup_at(x, idx);
    }

    int meet_at(int x, int y) const {
        return meet[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
                    static_cast<std::size_t>(y)];
    }

    /// R_i x, i is 1-based.
    int r_at(int i, int x) const {
        return r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x)];
    }

    /// Encoded tuple (R_1 x, ..., R_n x).
    std::size_t r_tuple(int x) const {
        std::size_t idx = 0;
        for (int i = 0; i < rank; ++i)
            idx = idx * static_cast<std::size_t>(size) +
                  static_cast<std::size_t>(r[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(x)]);
        return idx;
    }

    void validate() const {
        if (size < 1 || rank < 1)
            throw StructuralError("algebra must have positive size and rank");
        std::size_t tc = tuple_count();
        if (sup.size() != tc * static_cast<std::size_t>(size))
            throw StructuralError("sup table has wrong length");
        if (meet.size() != static_cast<std::size_t>(size) *
                               static_cast<std::size_t>(size))
            throw StructuralError("meet table has wrong length");
        if (r.size() != static_cast<std::size_t>(rank))
            throw StructuralError("wrong number of R tables");
        auto in_range = [&](int v) { return v >= 0 && v < size; };
        for (int v : sup)
            if (!in_range(v)) throw StructuralError("sup entry out of range");
        for (int v : meet)
            if (!in_range(v)) throw StructuralError("meet entry out of range");
        for (const auto& ri : r) {
            if (ri.size() != static_cast<std::size_t>(size))
                throw StructuralError("R table has wrong length");
            for (int v : ri)
                if (!in_range(v)) throw StructuralError("R entry out of range");
        }
        if (zero && !in_range(*zero))
            throw StructuralError("zero index out of range");
    }
};

struct BinaryRelation {
    int size = 0;
    std::vector<char> mem;  // size^2, row-major

    BinaryRelation() = default;
    explicit BinaryRelation(int s)
        : size(s), mem(static_cast<std::size_t>(s) * static_cast<std::size_t>(s), 0) {}

    bool contains(int x, int y) const {
        return mem[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
                   static_cast<std::size_t>(y)] != 0;
    }
    void insert(int x, int y) {
        mem[static_cast<std::size_t>(x) * static_cast<std::size_t>(size) +
            static_cast<std::size_t>(y)] = 1;
    }

    bool operator==(const BinaryRelation&) const = default;
};

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomCheck {
    bool pass = true;
    std::vector<int> counterexample;  // lexicographically first violating tuple
};

struct AxiomReport {
    AxiomCheck semilattice;
    std::array<AxiomCheck, 10> axiom;  // A1 .. A10

    bool all_pass() const {
        if (!semilattice.pass) return false;
        return std::all_of(axiom.begin(), axiom.end(),
                           [](const AxiomCheck& c) { return c.pass; });
    }
};

namespace detail {

// Lexicographic re-scan used when the fast sweep of A1/A3 reports a
// violation; finds the first violating tuple in quantifier order.
inline AxiomCheck lex_scan_a1(const AbstractAlgebra& g) {
    const int s = g.size, n = g.rank;
    std::vector<int> ys(static_cast<std::size_t>(n)),
        zs(static_cast<std::size_t>(n)), mapped(static_cast<std::size_t>(n));
    for (int x = 0; x < s; ++x) {
        std::fill(ys.begin(), ys.end(), 0);
        do {
            int xy = g.sup_at(x, ys);
            std::fill(zs.begin(), zs.end(), 0);
            do {
                std::size_t zIdx = g.encode_tuple(zs);
                for (int i = 0; i < n; ++i)
                    mapped[static_cast<std::size_t>(i)] =
                        g.sup_at(ys[static_cast<std::size_t>(i)], zIdx);
                if (g.sup_at(xy, zIdx) != g.sup_at(x, mapped)) {
                    AxiomCheck c;
                    c.pass = false;
                    c.counterexample.push_back(x);
                    c.counterexample.insert(c.counterexample.end(), ys.begin(),
                                            ys.end());
                    c.counterexample.insert(c.counterexample.end(), zs.begin(),
                                            zs.end());
                    return c;
                }
            } while (next_tuple(zs, s));
        } while (next_tuple(ys, s));
    }
    return {};
}

inline AxiomCheck lex_scan_a3(const AbstractAlgebra& g) {
    const int s = g.size, n = g.rank;
    std::vector<int> us(static_cast<std::size_t>(n));
    for (int x = 0; x < s; ++x) {
        std::fill(us.begin(), us.end(), 0);
        do {
            for (int i = 1; i <= n; ++i) {
                for (int z = 0; z < s; ++z) {
                    int saved = us[static_cast<std::size_t>(i - 1)];
                    us[static_cast<std::size_t>(i - 1)] = z;
                    int xuz = g.sup_at(x, us);
                    for (int y = 0; y < s; ++y) {
                        std::size_t ry = g.r_tuple(y);
                        int lhs = g.sup_at(xuz, ry);
                        us[static_cast<std::size_t>(i - 1)] = g.sup_at(z, ry);
                        int rhs = g.sup_at(x, us);
                        us[static_cast<std::size_t>(i - 1)] = z;
                        if (lhs != rhs) {
                            AxiomCheck c;
                            c.pass = false;
                            c.counterexample.push_back(x);
                            us[static_cast<std::size_t>(i - 1)] = saved;
                            c.counterexample.insert(c.counterexample.end(),
                                                    us.begin(), us.end());
                            c.counterexample.push_back(i);
                            c.counterexample.push_back(z);
                            c.counterexample.push_back(y);
                            return c;
                        }
                    }
                    us[static_cast<std::size_t>(i - 1)] = saved;
                }
            }
        } while (next_tuple(us, s));
    }
    return {};
}

} // namespace detail

/// Semilattice laws for meet, then A1..A10, each by exhaustive sweep.
/// Later checks still run after a failure; counterexamples are the
/// lexicographically first violating tuples in quantifier order.
inline AxiomReport check_axioms(const AbstractAlgebra& g) {
    g.validate();
    AxiomReport rep;
    const int s = g.size, n = g.rank;
    const std::size_t tc = g.tuple_count();

    auto fail = [](AxiomCheck& c, std::initializer_list<int> tup) {
        if (!c.pass) return;
        c.pass = false;
        c.counterexample.assign(tup);
    };

    // Semilattice: idempotent, commutative, associative.
    for (int x = 0; x < s && rep.semilattice.pass; ++x) {
        if (g.meet_at(x, x) != x) fail(rep.semilattice, {x});
        for (int y = 0; y < s && rep.semilattice.pass; ++y) {
            if (g.meet_at(x, y) != g.meet_at(y, x)) fail(rep.semilattice, {x, y});
            for (int z = 0; z < s && rep.semilattice.pass; ++z)
                if (g.meet_at(g.meet_at(x, y), z) != g.meet_at(x, g.meet_at(y, z)))
                    fail(rep.semilattice, {x, y, z});
        }
    }

    // A1: x[y1..yn][z1..zn] = x[y1[z1..zn] .. yn[z1..zn]].
    // The z-tuple enters only through the map u -> u[z], so equal maps are
    // swept once; on violation a lexicographic re-scan names the witness.
    {
        std::vector<int> zs(static_cast<std::size_t>(n)),
            uz(static_cast<std::size_t>(s));
        std::vector<std::size_t> mapped(tc);
        std::set<std::vector<int>> seen;
        bool violated = false;
        std::fill(zs.begin(), zs.end(), 0);
        do {
            std::size_t zIdx = g.encode_tuple(zs);
            for (int u = 0; u < s; ++u)
                uz[static_cast<std::size_t>(u)] = g.sup_at(u, zIdx);
            if (!seen.insert(uz).second) continue;
            // mapped[yIdx] = encoded tuple (y1[z], .., yn[z])
            {
                std::vector<int> ys(static_cast<std::size_t>(n), 0);
                std::size_t yIdx = 0;
                do {
                    std::size_t m = 0;
                    for (int i = 0; i < n; ++i)
                        m = m * static_cast<std::size_t>(s) +
                            static_cast<std::size_t>(
                                uz[static_cast<std::size_t>(
                                    ys[static_cast<std::size_t>(i)])]);
                    mapped[yIdx++] = m;
                } while (next_tuple(ys, s));
            }
            for (int x = 0; x < s && !violated; ++x) {
                const int* row = g.sup.data() + static_cast<std::size_t>(x) * tc;
                for (std::size_t yIdx = 0; yIdx < tc; ++yIdx) {
                    if (uz[static_cast<std::size_t>(row[yIdx])] !=
                        g.sup_at(x, mapped[yIdx])) {
                        violated = true;
                        break;
                    }
                }
            }
        } while (!violated && next_tuple(zs, s));
        rep.axiom[0] = violated ? detail::lex_scan_a1(g) : AxiomCheck{};
    }

    // A2: x[R1x .. Rnx] = x.
    for (int x = 0; x < s && rep.axiom[1].pass; ++x)
        if (g.sup_at(x, g.r_tuple(x)) != x) fail(rep.axiom[1], {x});

    // A3: x[u|_i z][R1y..Rny] = x[u|_i z[R1y..Rny]].  The y enters only
    // through the tuple (R1y..Rny); equal tuples are swept once.
    {
        std::vector<std::size_t> rys;
        std::vector<char> seen(tc, 0);
        std::vector<int> y_for;
        for (int y = 0; y < s; ++y) {
            std::size_t ry = g.r_tuple(y);
            if (!seen[ry]) {
                seen[ry] = 1;
                rys.push_back(ry);
            }
        }
        std::vector<int> rz(static_cast<std::size_t>(s));
        std::vector<int> us(static_cast<std::size_t>(n));
        bool violated = false;
        for (std::size_t ryi = 0; ryi < rys.size() && !violated; ++ryi) {
            std::size_t ry = rys[ryi];
            for (int u = 0; u < s; ++u)
                rz[static_cast<std::size_t>(u)] = g.sup_at(u, ry);
            for (int x = 0; x < s && !violated; ++x) {
                std::fill(us.begin(), us.end(), 0);
                do {
                    std::size_t uIdx = g.encode_tuple(us);
                    std::size_t stride = 1;
                    for (int i = n; i >= 1 && !violated; --i) {
                        std::size_t base = uIdx -
                            static_cast<std::size_t>(
                                us[static_cast<std::size_t>(i - 1)]) * stride;
                        for (int z = 0; z < s; ++z) {
                            int lhs = rz[static_cast<std::size_t>(g.sup_at(
                                x, base + static_cast<std::size_t>(z) * stride))];
                            int rhs = g.sup_at(
                                x, base + static_cast<std::size_t>(
                                              rz[static_cast<std::size_t>(z)]) *
                                              stride);
                            if (lhs != rhs) {
                                violated = true;
                                break;
                            }
                        }
                        stride *= static_cast<std::size_t>(s);
                    }
                } while (!violated && next_tuple(us, s));
            }
        }
        rep.axiom[2] = violated ? detail::lex_scan_a3(g) : AxiomCheck{};
    }

    // A4: R_i(x[R1y..Rny]) = (R_ix)[R1y..Rny].
    for (int i = 1; i <= n && rep.axiom[3].pass; ++i)
        for (int x = 0; x < s && rep.axiom[3].pass; ++x)
            for (int y = 0; y < s; ++y) {
                std::size_t ry = g.r_tuple(y);
                if (g.r_at(i, g.sup_at(x, ry)) != g.sup_at(g.r_at(i, x), ry)) {
                    fail(rep.axiom[3], {i, x, y});
                    break;
                }
            }

    // A5: x[R1y..Rny][R1z..Rnz] = x[R1z..Rnz][R1y..Rny].
    for (int x = 0; x < s && rep.axiom[4].pass; ++x)
        for (int y = 0; y < s && rep.axiom[4].pass; ++y) {
            std::size_t ry = g.r_tuple(y);
            for (int z = 0; z < s; ++z) {
                std::size_t rz = g.r_tuple(z);
                if (g.sup_at(g.sup_at(x, ry), rz) !=
                    g.sup_at(g.sup_at(x, rz), ry)) {
                    fail(rep.axiom[4], {x, y, z});
                    break;
                }
            }
        }

    // A6: R_i(x[y1..yn]) = R_i((R_kx)[y1..yn]), all pairs (i, k).
    {
        std::vector<int> ys(static_cast<std::size_t>(n));
        for (int i = 1; i <= n && rep.axiom[5].pass; ++i)
            for (int k = 1; k <= n && rep.axiom[5].pass; ++k)
                for (int x = 0; x < s && rep.axiom[5].pass; ++x) {
                    std::fill(ys.begin(), ys.end(), 0);
                    do {
                        std::size_t yIdx = g.encode_tuple(ys);
                        if (g.r_at(i, g.sup_at(x, yIdx)) !=
                            g.r_at(i, g.sup_at(g.r_at(k, x), yIdx))) {
                            std::vector<int> tup = {i, k, x};
                            tup.insert(tup.end(), ys.begin(), ys.end());
                            rep.axiom[5].pass = false;
                            rep.axiom[5].counterexample = tup;
                            break;
                        }
                    } while (next_tuple(ys, s));
                }
    }

    // A7: (R_ix)[y1..yn] = y_i[R1(x[y1..yn]) .. Rn(x[y1..yn])].
    {
        std::vector<int> ys(static_cast<std::size_t>(n));
        for (int i = 1; i <= n && rep.axiom[6].pass; ++i)
            for (int x = 0; x < s && rep.axiom[6].pass; ++x) {
                std::fill(ys.begin(), ys.end(), 0);
                do {
                    std::size_t yIdx = g.encode_tuple(ys);
                    std::size_t rw = g.r_tuple(g.sup_at(x, yIdx));
                    if (g.sup_at(g.r_at(i, x), yIdx) !=
                        g.sup_at(ys[static_cast<std::size_t>(i - 1)], rw)) {
                        std::vector<int> tup = {i, x};
                        tup.insert(tup.end(), ys.begin(), ys.end());
                        rep.axiom[6].pass = false;
                        rep.axiom[6].counterexample = tup;
                        break;
                    }
                } while (next_tuple(ys, s));
            }
    }

    // A8: x meet (y[R1z..Rnz]) = (x meet y)[R1z..Rnz].
    for (int x = 0; x < s && rep.axiom[7].pass; ++x)
        for (int y = 0; y < s && rep.axiom[7].pass; ++y)
            for (int z = 0; z < s; ++z) {
                std::size_t rz = g.r_tuple(z);
                if (g.meet_at(x, g.sup_at(y, rz)) !=
                    g.sup_at(g.meet_at(x, y), rz)) {
                    fail(rep.axiom[7], {x, y, z});
                    break;
                }
            }

    // A9: x meet y = x[R1(x meet y) .. Rn(x meet y)].
    for (int x = 0; x < s && rep.axiom[8].pass; ++x)
        for (int y = 0; y < s; ++y) {
            int m = g.meet_at(x, y);
            if (m != g.sup_at(x, g.r_tuple(m))) {
                fail(rep.axiom[8], {x, y});
                break;
            }
        }

    // A10: (x meet y)[z1..zn] = x[z1..zn] meet y[z1..zn].
    {
        std::vector<int> zs(static_cast<std::size_t>(n));
        for (int x = 0; x < s && rep.axiom[9].pass; ++x)
            for (int y = 0; y < s && rep.axiom[9].pass; ++y) {
                int m = g.meet_at(x, y);
                std::fill(zs.begin(), zs.end(), 0);
                do {
                    std::size_t zIdx = g.encode_tuple(zs);
                    if (g.sup_at(m, zIdx) !=
                        g.meet_at(g.sup_at(x, zIdx), g.sup_at(y, zIdx))) {
                        std::vector<int> tup = {x, y};
                        tup.insert(tup.end(), zs.begin(), zs.end());
                        rep.axiom[9].pass = false;
                        rep.axiom[9].counterexample = tup;
                        break;
                    }
                } while (next_tuple(zs, s));
            }
    }

    return rep;
}

// ---------------------------------------------------------------------------
// The relations zeta (graph order) and chi (domain quasi-order)

struct ZetaRelation {
    BinaryRelation rel;
    bool partial_order = false;  // reflexive, antisymmetric, transitive
};

struct ChiRelation {
    BinaryRelation rel;
    bool quasi_order = false;   // reflexive, transitive
    bool routes_agree = false;  // (R1x,R1y) in zeta  <->  x[R1y..Rny] = x
};

/// (x,y) in zeta  <->  x = y[R1x .. Rnx].
inline ZetaRelation zeta(const AbstractAlgebra& g) {
    ZetaRelation out;
    out.rel = BinaryRelation(g.size);
    for (int x = 0; x < g.size; ++x) {
        std::size_t rx = g.r_tuple(x);
        for (int y = 0; y < g.size; ++y)
            if (g.sup_at(y, rx) == x) out.rel.insert(x, y);
    }
    bool ok = true;
    for (int x = 0; x < g.size && ok; ++x) {
        if (!out.rel.contains(x, x)) ok = false;
        for (int y = 0; y < g.size && ok; ++y) {
            if (x != y && out.rel.contains(x, y) && out.rel.contains(y, x))
                ok = false;
            if (!out.rel.contains(x, y)) continue;
            for (int z = 0; z < g.size; ++z)
                if (out.rel.contains(y, z) && !out.rel.contains(x, z)) {
                    ok = false;
                    break;
                }
        }
    }
    out.partial_order = ok;
    return out;
}

/// (x,y) in chi  <->  (R1x, R1y) in zeta.
inline ChiRelation chi(const AbstractAlgebra& g, const ZetaRelation& z) {
    ChiRelation out;
    out.rel = BinaryRelation(g.size);
    for (int x = 0; x < g.size; ++x)
        for (int y = 0; y < g.size; ++y)
            if (z.rel.contains(g.r_at(1, x), g.r_at(1, y))) out.rel.insert(x, y);
    out.routes_agree = true;
    for (int y = 0; y < g.size && out.routes_agree; ++y) {
        std::size_t ry = g.r_tuple(y);
        for (int x = 0; x < g.size; ++x)
            if ((g.sup_at(x, ry) == x) != out.rel.contains(x, y)) {
                out.routes_agree = false;
                break;
            }
    }
    bool ok = true;
    for (int x = 0; x < g.size && ok; ++x) {
        if (!out.rel.contains(x, x)) ok = false;
        for (int y = 0; y < g.size && ok; ++y) {
            if (!out.rel.contains(x, y)) continue;
            for (int z = 0; z < g.size; ++z)
                if (out.rel.contains(y, z) && !out.rel.contains(x, z)) {
                    ok = false;
                    break;
                }
        }
    }
    out.quasi_order = ok;
    return out;
}

inline ChiRelation chi(const AbstractAlgebra& g) { return chi(g, zeta(g)); }

/// The unique two-sided absorbing element, if any: z[y1..yn] = z for all
/// inner tuples and x[z..z] = z for all x.
inline std::optional<int> find_zero(const AbstractAlgebra& g) {
    const std::size_t tc = g.tuple_count();
    for (int z = 0; z < g.size; ++z) {
        bool absorbing = true;
        const int* row = g.sup.data() + static_cast<std::size_t>(z) * tc;
        for (std::size_t t = 0; t < tc; ++t)
            if (row[t] != z) {
                absorbing = false;
                break;
            }
        if (!absorbing) continue;
        for (int x = 0; x < g.size; ++x)
            if (g.sup_diag(x, z) != z) {
                absorbing = false;
                break;
            }
        if (absorbing) return z;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subset predicates

/// Subset of the carrier as a membership vector of length |G|.
using Subset = std::vector<char>;

inline int subset_count(const Subset& h) {
    int c = 0;
    for (char b : h) c += (b != 0);
    return c;
}

/// For every x in H:  x[x..x] meet x  is in H.
inline bool is_meet_quasi_stable(const AbstractAlgebra& g, const Subset& h) {
    if (subset_count(h) == 0)
        throw ContractError("meet-quasi-stability is defined for nonempty subsets");
    for (int x = 0; x < g.size; ++x) {
        if (!h[static_cast<std::size_t>(x)]) continue;
        if (!h[static_cast<std::size_t>(g.meet_at(g.sup_diag(x, x), x))])
            return false;
    }
    return true;
}

/// Whenever at least one y_i lies in H, x[y1..yn] lies in H.  The empty
/// set qualifies.
inline bool is_l_ideal(const AbstractAlgebra& g, const Subset& h) {
    std::vector<int> ys(static_cast<std::size_t>(g.rank));
    for (int x = 0; x < g.size; ++x) {
        std::fill(ys.begin(), ys.end(), 0);
        do {
            bool touches = false;
            for (int y : ys)
                if (h[static_cast<std::size_t>(y)]) {
                    touches = true;
                    break;
                }
            if (touches &&
                !h[static_cast<std::size_t>(g.sup_at(x, g.encode_tuple(ys)))])
                return false;
        } while (next_tuple(ys, g.size));
    }
    return true;
}

// ---------------------------------------------------------------------------
// Relation property flags

struct RelationProperties {
    bool stable = true;
    bool l_regular = true;
    bool v_regular = true;
    std::vector<bool> i_regular;  // per i, 1-based at index i-1
    bool v_negative = true;
};

/// Exhaustive definition sweeps with short-circuit on first failure.
inline RelationProperties relation_properties(const AbstractAlgebra& g,
                                              const BinaryRelation& rho) {
    if (rho.size != g.size)
        throw StructuralError("relation carrier does not match algebra");
    const int s = g.size, n = g.rank;
    RelationProperties out;
    out.i_regular.assign(static_cast<std::size_t>(n), true);

    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            if (rho.contains(x, y)) pairs.emplace_back(x, y);

    // stable: pairs (x,y) and (x_i,y_i) all in rho -> (x[xs], y[ys]) in rho
    {
        std::vector<std::size_t> sel(static_cast<std::size_t>(n), 0);
        std::vector<int> xs(static_cast<std::size_t>(n)),
            ys(static_cast<std::size_t>(n));
        bool done = false;
        for (const auto& [x, y] : pairs) {
            if (done) break;
            std::fill(sel.begin(), sel.end(), 0);
            while (true) {
                for (int i = 0; i < n; ++i) {
                    xs[static_cast<std::size_t>(i)] =
                        pairs[sel[static_cast<std::size_t>(i)]].first;
                    ys[static_cast<std::size_t>(i)] =
                        pairs[sel[static_cast<std::size_t>(i)]].second;
                }
                if (!rho.contains(g.sup_at(x, xs), g.sup_at(y, ys))) {
                    out.stable = false;
                    done = true;
                    break;
                }
                int i = n - 1;
                for (; i >= 0; --i) {
                    if (++sel[static_cast<std::size_t>(i)] < pairs.size()) break;
                    sel[static_cast<std::size_t>(i)] = 0;
                }
                if (i < 0) break;
            }
        }
    }

    // l-regular: (x,y) in rho -> (x[zs], y[zs]) in rho for all zs
    {
        std::vector<int> zs(static_cast<std::size_t>(n));
        for (const auto& [x, y] : pairs) {
            if (!out.l_regular) break;
            std::fill(zs.begin(), zs.end(), 0);
            do {
                std::size_t zIdx = g.encode_tuple(zs);
                if (!rho.contains(g.sup_at(x, zIdx), g.sup_at(y, zIdx))) {
                    out.l_regular = false;
                    break;
                }
            } while (next_tuple(zs, s));
        }
    }

    // v-regular: pairwise related tuples -> (z[xs], z[ys]) in rho
    {
        std::vector<std::size_t> sel(static_cast<std::size_t>(n), 0);
        std::vector<int> xs(static_cast<std::size_t>(n)),
            ys(static_cast<std::size_t>(n));
        bool done = pairs.empty();
        while (!done) {
            for (int i = 0; i < n; ++i) {
                xs[static_cast<std::size_t>(i)] =
                    pairs[sel[static_cast<std::size_t>(i)]].first;
                ys[static_cast<std::size_t>(i)] =
                    pairs[sel[static_cast<std::size_t>(i)]].second;
            }
            std::size_t xIdx = g.encode_tuple(xs), yIdx = g.encode_tuple(ys);
            for (int z = 0; z < s; ++z)
                if (!rho.contains(g.sup_at(z, xIdx), g.sup_at(z, yIdx))) {
                    out.v_regular = false;
                    done = true;
                    break;
                }
            if (done) break;
            int i = n - 1;
            for (; i >= 0; --i) {
                if (++sel[static_cast<std::size_t>(i)] < pairs.size()) break;
                sel[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) break;
        }
    }

    // i-regular per position: (x,y) in rho -> (u[w|_ix], u[w|_iy]) in rho
    {
        std::vector<int> ws(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            bool ok = true;
            for (const auto& [x, y] : pairs) {
                if (!ok) break;
                for (int u = 0; u < s && ok; ++u) {
                    std::fill(ws.begin(), ws.end(), 0);
                    do {
                        int saved = ws[static_cast<std::size_t>(i - 1)];
                        ws[static_cast<std::size_t>(i - 1)] = x;
                        int a = g.sup_at(u, ws);
                        ws[static_cast<std::size_t>(i - 1)] = y;
                        int b = g.sup_at(u, ws);
                        ws[static_cast<std::size_t>(i - 1)] = saved;
                        if (!rho.contains(a, b)) {
                            ok = false;
                            break;
                        }
                    } while (next_tuple(ws, s));
                }
            }
            out.i_regular[static_cast<std::size_t>(i - 1)] = ok;
        }
    }

    // v-negative: (x[y1..yn], y_i) in rho for all x, ys, i
    {
        std::vector<int> ys(static_cast<std::size_t>(n));
        for (int x = 0; x < s && out.v_negative; ++x) {
            std::fill(ys.begin(), ys.end(), 0);
            do {
                int w = g.sup_at(x, ys);
                for (int i = 0; i < n; ++i)
                    if (!rho.contains(w, ys[static_cast<std::size_t>(i)])) {
                        out.v_negative = false;
                        break;
                    }
            } while (out.v_negative && next_tuple(ys, s));
        }
    }

    return out;
}

// ---------------------------------------------------------------------------
// The six displayed order laws plus chi containing zeta

struct RelationLawReport {
    struct Law {
        std::string name;
        bool pass = true;
        std::vector<int> counterexample;
    };
    std::vector<Law> laws;

    bool all_pass() const {
        return std::all_of(laws.begin(), laws.end(),
                           [](const Law& l) { return l.pass; });
    }
};

inline RelationLawReport check_relation_laws(const AbstractAlgebra& g) {
    const int s = g.size, n = g.rank;
    ZetaRelation z = zeta(g);
    ChiRelation c = chi(g, z);
    RelationLawReport rep;
    auto add = [&rep](std::string name) -> RelationLawReport::Law& {
        rep.laws.push_back({std::move(name), true, {}});
        return rep.laws.back();
    };

    {
        auto& law = add("x<=y implies R_ix<=R_iy");
        for (int x = 0; x < s && law.pass; ++x)
            for (int y = 0; y < s && law.pass; ++y) {
                if (!z.rel.contains(x, y)) continue;
                for (int i = 1; i <= n; ++i)
                    if (!z.rel.contains(g.r_at(i, x), g.r_at(i, y))) {
                        law.pass = false;
                        law.counterexample = {x, y, i};
                        break;
                    }
            }
    }
    {
        auto& law = add("x<<y iff R_ix<=R_iy for every i");
        for (int x = 0; x < s && law.pass; ++x)
            for (int y = 0; y < s && law.pass; ++y) {
                bool all = true;
                for (int i = 1; i <= n; ++i)
                    if (!z.rel.contains(g.r_at(i, x), g.r_at(i, y))) {
                        all = false;
                        break;
                    }
                if (all != c.rel.contains(x, y)) {
                    law.pass = false;
                    law.counterexample = {x, y};
                }
            }
    }
    {
        auto& law = add("x<<y iff x[R_1y..R_ny]=x");
        for (int y = 0; y < s && law.pass; ++y) {
            std::size_t ry = g.r_tuple(y);
            for (int x = 0; x < s; ++x)
                if ((g.sup_at(x, ry) == x) != c.rel.contains(x, y)) {
                    law.pass = false;
                    law.counterexample = {x, y};
                    break;
                }
        }
    }
    {
        auto& law = add("(R_ix)[y1..yn] <= y_i");
        std::vector<int> ys(static_cast<std::size_t>(n));
        for (int i = 1; i <= n && law.pass; ++i)
            for (int x = 0; x < s && law.pass; ++x) {
                std::fill(ys.begin(), ys.end(), 0);
                do {
                    std::size_t yIdx = g.encode_tuple(ys);
                    if (!z.rel.contains(g.sup_at(g.r_at(i, x), yIdx),
                                        ys[static_cast<std::size_t>(i - 1)])) {
                        law.pass = false;
                        law.counterexample = {i, x};
                        law.counterexample.insert(law.counterexample.end(),
                                                  ys.begin(), ys.end());
                        break;
                    }
                } while (next_tuple(ys, s));
            }
    }
    {
        auto& law = add("x[R_1y_1..R_ny_n] <= x");
        std::vector<int> ys(static_cast<std::size_t>(n)),
            rys(static_cast<std::size_t>(n));
        for (int x = 0; x < s && law.pass; ++x) {
            std::fill(ys.begin(), ys.end(), 0);
            do {
                for (int i = 1; i <= n; ++i)
                    rys[static_cast<std::size_t>(i - 1)] =
                        g.r_at(i, ys[static_cast<std::size_t>(i - 1)]);
                if (!z.rel.contains(g.sup_at(x, rys), x)) {
                    law.pass = false;
                    law.counterexample = {x};
                    law.counterexample.insert(law.counterexample.end(), ys.begin(),
                                              ys.end());
                    break;
                }
            } while (next_tuple(ys, s));
        }
    }
    {
        auto& law = add("R_ix = R_iR_kx");
        for (int i = 1; i <= n && law.pass; ++i)
            for (int k = 1; k <= n && law.pass; ++k)
                for (int x = 0; x < s; ++x)
                    if (g.r_at(i, x) != g.r_at(i, g.r_at(k, x))) {
                        law.pass = false;
                        law.counterexample = {i, k, x};
                        break;
                    }
    }
    {
        auto& law = add("chi contains zeta");
        for (int x = 0; x < s && law.pass; ++x)
            for (int y = 0; y < s; ++y)
                if (z.rel.contains(x, y) && !c.rel.contains(x, y)) {
                    law.pass = false;
                    law.counterexample = {x, y};
                    break;
                }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON form: {"rank": n, "size": |G|, "sup": [...], "meet": [...],
// "r": [[...], ...], "zero": index|null}.  Flat sup index:
// ((x*|G| + y1)*|G| + y2)...

inline void to_json(nlohmann::json& j, const AbstractAlgebra& g) {
    j = nlohmann::json{{"rank", g.rank}, {"size", g.size}, {"sup", g.sup},
                       {"meet", g.meet}, {"r", g.r}};
    j["zero"] = g.zero ? nlohmann::json(*g.zero) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, AbstractAlgebra& g) {
    g.rank = j.at("rank").get<int>();
    g.size = j.at("size").get<int>();
    g.sup = j.at("sup").get<std::vector<int>>();
    g.meet = j.at("meet").get<std::vector<int>>();
    g.r = j.at("r").get<std::vector<std::vector<int>>>();
    const auto& z = j.at("zero");
    g.zero = z.is_null() ? std::nullopt : std::optional<int>(z.get<int>());
    g.validate();
}

} // namespace menger
