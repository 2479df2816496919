#pragma once

// St(Phi) on concrete algebras, the syntactic stationary-subset conditions
// on abstract algebras, and machine verification of the fixed-point
// characterization: the eight concrete implications, the null equivalence,
// the two-sided subset theorem and the derived-property theorem.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "menger/abstract.hpp"
#include "menger/enumeration.hpp"
#include "menger/errors.hpp"
#include "menger/nfun.hpp"
#include "menger/representation.hpp"

namespace menger {

enum class Verdict { Pass, Fail, Skipped };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

struct ImplicationCheck {
    Verdict verdict = Verdict::Pass;
    std::vector<int> counterexample;
};

/// A nonempty candidate subset H of the carrier.
struct SubsetCandidate {
    int carrier = 0;
    Subset members;

    SubsetCandidate() = default;
    SubsetCandidate(int carrier_, Subset members_)
        : carrier(carrier_), members(std::move(members_)) {
        if (subset_count(members) == 0)
            throw ContractError("subset candidate must be nonempty");
    }
};

// ---------------------------------------------------------------------------
// Concrete side

/// Members of Phi possessing a diagonal fixed point.
inline Subset stationary_subset(const ConcreteAlgebra& phi) {
    Subset st(phi.members.size(), 0);
    for (std::size_t i = 0; i < phi.members.size(); ++i)
        st[i] = has_fixed_point(phi.members[i]) ? 1 : 0;
    return st;
}

/// The two-sided absorbing member of (Phi, O), if any.
inline std::optional<int> concrete_zero(const ConcreteAlgebra& phi) {
    const int n = phi.arity;
    for (int z = 0; z < phi.size(); ++z) {
        const auto& zf = phi.members[static_cast<std::size_t>(z)];
        std::vector<NPlaceFunction> diag(static_cast<std::size_t>(n), zf);
        bool ok = true;
        for (const auto& f : phi.members)
            if (!(compose(f, diag) == zf)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::vector<std::size_t> sel(static_cast<std::size_t>(n), 0);
        std::vector<NPlaceFunction> gs(static_cast<std::size_t>(n), zf);
        while (ok) {
            for (int i = 0; i < n; ++i)
                gs[static_cast<std::size_t>(i)] =
                    phi.members[sel[static_cast<std::size_t>(i)]];
            if (!(compose(zf, gs) == zf)) ok = false;
            int i = n - 1;
            for (; i >= 0; --i) {
                if (++sel[static_cast<std::size_t>(i)] <
                    phi.members.size())
                    break;
                sel[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) break;
        }
        if (ok) return z;
    }
    return std::nullopt;
}

/// The eight concrete implications about St(Phi).  The four referencing
/// the zero are Skipped when none exists.
struct Prop1Report {
    std::array<ImplicationCheck, 8> implication;  // display order (5)..(12)

    bool ok() const {
        return std::all_of(implication.begin(), implication.end(),
                           [](const ImplicationCheck& c) {
                               return c.verdict != Verdict::Fail;
                           });
    }
};

inline Prop1Report check_proposition1(const ConcreteAlgebra& phi,
                                      std::optional<int> zero) {
    Prop1Report rep;
    const int s = phi.size(), n = phi.arity;
    Subset st = stationary_subset(phi);
    auto member = [&](const NPlaceFunction& f) {
        int idx = phi.index_of(f);
        if (idx < 0)
            throw ClosureViolationError("operation result escapes the algebra");
        return idx;
    };
    auto fail = [](ImplicationCheck& c, std::vector<int> tup) {
        if (c.verdict == Verdict::Fail) return;
        c.verdict = Verdict::Fail;
        c.counterexample = std::move(tup);
    };
    for (int k = 4; k < 8; ++k)
        if (!zero) rep.implication[static_cast<std::size_t>(k)].verdict =
            Verdict::Skipped;

    // Tables of f[g..g] and R_i f by member index.
    std::vector<std::vector<int>> diag(static_cast<std::size_t>(s),
                                       std::vector<int>(static_cast<std::size_t>(s)));
    for (int f = 0; f < s; ++f)
        for (int g = 0; g < s; ++g) {
            std::vector<NPlaceFunction> gs(
                static_cast<std::size_t>(n),
                phi.members[static_cast<std::size_t>(g)]);
            diag[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] =
                member(compose(phi.members[static_cast<std::size_t>(f)], gs));
        }
    std::vector<std::vector<int>> rmap(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(s)));
    for (int i = 1; i <= n; ++i)
        for (int f = 0; f < s; ++f)
            rmap[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(f)] =
                member(proj_restrict(i, phi.members[static_cast<std::size_t>(f)]));

    for (int f = 0; f < s; ++f) {
        // (6): f in St -> f[f..f] in St      (7): f in St -> R_i f in St
        if (st[static_cast<std::size_t>(f)]) {
            if (!st[static_cast<std::size_t>(
                    diag[static_cast<std::size_t>(f)][static_cast<std::size_t>(f)])])
                fail(rep.implication[1], {f});
            for (int i = 1; i <= n; ++i)
                if (!st[static_cast<std::size_t>(
                        rmap[static_cast<std::size_t>(i - 1)]
                            [static_cast<std::size_t>(f)])])
                    fail(rep.implication[2], {f, i});
        }
        for (int g = 0; g < s; ++g) {
            int fgg = diag[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
            // (5): f subset g and f in St -> g in St
            if (is_subfunction(phi.members[static_cast<std::size_t>(f)],
                               phi.members[static_cast<std::size_t>(g)]) &&
                st[static_cast<std::size_t>(f)] &&
                !st[static_cast<std::size_t>(g)])
                fail(rep.implication[0], {f, g});
            // (8): f[g..g]=g and g in St -> f in St
            if (fgg == g && st[static_cast<std::size_t>(g)] &&
                !st[static_cast<std::size_t>(f)])
                fail(rep.implication[3], {f, g});
            if (zero) {
                // (9): f[g..g]=g != 0 -> f in St
                if (fgg == g && g != *zero && !st[static_cast<std::size_t>(f)])
                    fail(rep.implication[4], {f, g});
                // (10): f[g..g] != 0 -> R_i f in St
                if (fgg != *zero)
                    for (int i = 1; i <= n; ++i)
                        if (!st[static_cast<std::size_t>(
                                rmap[static_cast<std::size_t>(i - 1)]
                                    [static_cast<std::size_t>(f)])])
                            fail(rep.implication[5], {f, g, i});
                // (11): f[g..g] meet g != 0 -> f in St
                int m = member(
                    intersect(phi.members[static_cast<std::size_t>(fgg)],
                              phi.members[static_cast<std::size_t>(g)]));
                if (m != *zero && !st[static_cast<std::size_t>(f)])
                    fail(rep.implication[6], {f, g});
            }
        }
    }
    // (12): 0 not in St -> R_i 0 = 0
    if (zero && !st[static_cast<std::size_t>(*zero)])
        for (int i = 1; i <= n; ++i)
            if (rmap[static_cast<std::size_t>(i - 1)]
                    [static_cast<std::size_t>(*zero)] != *zero)
                fail(rep.implication[7], {i});
    return rep;
}

/// The null equivalence: zero differs from the empty function iff St = Phi.
/// Skipped when no zero exists.
inline ImplicationCheck check_null_equivalence(const ConcreteAlgebra& phi,
                                               std::optional<int> zero) {
    ImplicationCheck c;
    if (!zero) {
        c.verdict = Verdict::Skipped;
        return c;
    }
    bool zero_nonempty = !phi.members[static_cast<std::size_t>(*zero)].empty();
    Subset st = stationary_subset(phi);
    bool st_is_all = subset_count(st) == phi.size();
    if (zero_nonempty != st_is_all) {
        c.verdict = Verdict::Fail;
        c.counterexample = {*zero};
    }
    return c;
}

// ---------------------------------------------------------------------------
// Abstract side

struct SyntacticVerdict {
    bool pass = true;
    std::string failing_condition;  // "quasi-stable", "15", "16", "17"
    std::vector<int> witness;
};

struct SemanticVerdict {
    bool pass = true;
    bool representation_ok = false;
    bool faithful = false;
    bool condition14_ok = false;
    // One (origin, global index) fixed-point witness per member of H.
    std::vector<std::array<int, 3>> fixed_point_witnesses;  // {g, origin, index}
    std::vector<int> condition14_mismatch;                  // offending g, if any
};

struct TheoremVerdict {
    Subset h;
    SyntacticVerdict syntactic;
    std::optional<SemanticVerdict> semantic;  // absent when syntactic fails

    /// Theorem consistency: a syntactic pass must come with a semantic pass.
    bool consistent() const {
        return !syntactic.pass || (semantic && semantic->pass);
    }
};

/// Per-algebra precomputation shared by the subset sweeps: the order
/// relations, the data driving the syntactic conditions, and (built on
/// first use) the per-element simplest representations with their
/// fixed-point tables.
class StationaryAnalyzer {
public:
    explicit StationaryAnalyzer(const AbstractAlgebra& alg)
        : g_(alg), zeta_(zeta(alg)), chi_(chi(alg, zeta_)) {
        const int s = g_.size;
        quasi_image_.resize(static_cast<std::size_t>(s));
        for (int x = 0; x < s; ++x)
            quasi_image_[static_cast<std::size_t>(x)] =
                g_.meet_at(g_.sup_diag(x, x), x);
        if (g_.zero) {
            r0_fixed_ = true;
            for (int i = 1; i <= g_.rank; ++i)
                if (g_.r_at(i, *g_.zero) != *g_.zero) r0_fixed_ = false;
            // (16): edges y -> x with x[y..y] = y.
            cond16_.resize(static_cast<std::size_t>(s));
            // (17): x with x[y..y] meet y != 0 for some y must lie in H.
            cond17_required_.assign(static_cast<std::size_t>(s), 0);
            cond17_witness_.assign(static_cast<std::size_t>(s), -1);
            for (int x = 0; x < s; ++x)
                for (int y = 0; y < s; ++y) {
                    int d = g_.sup_diag(x, y);
                    if (d == y) cond16_[static_cast<std::size_t>(y)].push_back(x);
                    if (g_.meet_at(d, y) != *g_.zero &&
                        !cond17_required_[static_cast<std::size_t>(x)]) {
                        cond17_required_[static_cast<std::size_t>(x)] = 1;
                        cond17_witness_[static_cast<std::size_t>(x)] = y;
                    }
                }
        }
    }

    const AbstractAlgebra& algebra() const { return g_; }
    const ZetaRelation& zeta_rel() const { return zeta_; }
    const ChiRelation& chi_rel() const { return chi_; }

    /// Meet-quasi-stability plus conditions (15)-(17), in that order.
    /// Requires a zero.
    SyntacticVerdict syntactic(const Subset& h) const {
        if (!g_.zero)
            throw ContractError(
                "syntactic conditions require a zero; zero-free concrete "
                "algebras have St(Phi) = Phi");
        if (subset_count(h) == 0)
            throw ContractError("candidate subset must be nonempty");
        SyntacticVerdict v;
        const int s = g_.size;
        for (int x = 0; x < s; ++x)
            if (h[static_cast<std::size_t>(x)] &&
                !h[static_cast<std::size_t>(
                    quasi_image_[static_cast<std::size_t>(x)])]) {
                v.pass = false;
                v.failing_condition = "quasi-stable";
                v.witness = {x};
                return v;
            }
        if (!h[static_cast<std::size_t>(*g_.zero)] && !r0_fixed_) {
            v.pass = false;
            v.failing_condition = "15";
            v.witness = {*g_.zero};
            return v;
        }
        for (int y = 0; y < s; ++y) {
            if (!h[static_cast<std::size_t>(y)]) continue;
            for (int x : cond16_[static_cast<std::size_t>(y)])
                if (!h[static_cast<std::size_t>(x)]) {
                    v.pass = false;
                    v.failing_condition = "16";
                    v.witness = {x, y};
                    return v;
                }
        }
        for (int x = 0; x < s; ++x)
            if (cond17_required_[static_cast<std::size_t>(x)] &&
                !h[static_cast<std::size_t>(x)]) {
                v.pass = false;
                v.failing_condition = "17";
                v.witness = {x, cond17_witness_[static_cast<std::size_t>(x)]};
                return v;
            }
        return v;
    }

    /// Builds G_0 from zero membership, takes the precomputed sum of
    /// simplest representations over it, and verifies Eq.-(14)-style
    /// pullback together with the representation and faithfulness verdicts.
    SemanticVerdict semantic(const Subset& h) {
        if (!g_.zero) throw ContractError("semantic check requires a zero");
        ensure_parts();
        bool zero_in_h = h[static_cast<std::size_t>(*g_.zero)] != 0;
        SemanticVerdict v;
        v.representation_ok = zero_in_h ? parts_ok_full_ : parts_ok_minus_;
        v.faithful = zero_in_h ? faithful_full_ : faithful_minus_;
        v.condition14_ok = true;
        for (int el = 0; el < g_.size; ++el) {
            bool fp = zero_in_h ? fp_full_[static_cast<std::size_t>(el)]
                                : fp_minus_[static_cast<std::size_t>(el)];
            if (fp != (h[static_cast<std::size_t>(el)] != 0)) {
                v.condition14_ok = false;
                v.condition14_mismatch = {el};
                break;
            }
            if (h[static_cast<std::size_t>(el)]) {
                const auto& w = fp_witness_[static_cast<std::size_t>(el)];
                if ((zero_in_h || w[0] != *g_.zero) && w[0] >= 0)
                    v.fixed_point_witnesses.push_back({el, w[0], w[1]});
                else if (!zero_in_h) {
                    // witness from a non-zero part
                    for (std::size_t p = 0; p < parts_.size(); ++p) {
                        if (static_cast<int>(p) == *g_.zero) continue;
                        auto fps = fixed_points(
                            parts_[p].map[static_cast<std::size_t>(el)]);
                        if (!fps.empty()) {
                            v.fixed_point_witnesses.push_back(
                                {el, static_cast<int>(p), fps.front()});
                            break;
                        }
                    }
                }
            }
        }
        v.pass = v.representation_ok && v.faithful && v.condition14_ok;
        return v;
    }

    /// The constructed sum over G_0; zero_in_h selects G_0 = G versus
    /// G minus the zero.
    SumRepresentation sum_for(bool zero_in_h) {
        ensure_parts();
        std::vector<Representation> sel;
        for (std::size_t p = 0; p < parts_.size(); ++p)
            if (zero_in_h || static_cast<int>(p) != *g_.zero)
                sel.push_back(parts_[p]);
        return sum_representations(std::move(sel));
    }

    const Representation& part(int origin) {
        ensure_parts();
        return parts_[static_cast<std::size_t>(origin)];
    }

    const ClassPartition& partition(int origin) {
        ensure_parts();
        return partitions_[static_cast<std::size_t>(origin)];
    }

private:
    void ensure_parts() {
        if (!parts_.empty()) return;
        const int s = g_.size;
        parts_ok_full_ = parts_ok_minus_ = true;
        fp_full_.assign(static_cast<std::size_t>(s), 0);
        fp_minus_.assign(static_cast<std::size_t>(s), 0);
        fp_witness_.assign(static_cast<std::size_t>(s), {-1, -1});
        for (int hgen = 0; hgen < s; ++hgen) {
            ClassPartition p = build_Eg_Wg(g_, hgen, chi_.rel);
            Representation rep = simplest_representation(g_, p);
            rep.origin = hgen;
            bool ok = verify_representation(g_, rep).pass;
            parts_ok_full_ = parts_ok_full_ && ok;
            if (!g_.zero || hgen != *g_.zero)
                parts_ok_minus_ = parts_ok_minus_ && ok;
            for (int el = 0; el < s; ++el) {
                auto fps =
                    fixed_points(rep.map[static_cast<std::size_t>(el)]);
                if (fps.empty()) continue;
                fp_full_[static_cast<std::size_t>(el)] = 1;
                if (!g_.zero || hgen != *g_.zero)
                    fp_minus_[static_cast<std::size_t>(el)] = 1;
                if (fp_witness_[static_cast<std::size_t>(el)][0] < 0)
                    fp_witness_[static_cast<std::size_t>(el)] = {hgen,
                                                                 fps.front()};
            }
            partitions_.push_back(std::move(p));
            parts_.push_back(std::move(rep));
        }
        // Faithfulness via per-part table identity.
        faithful_full_ = distinct_under(true);
        faithful_minus_ = distinct_under(false);
    }

    bool distinct_under(bool include_zero) const {
        const int s = g_.size;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) {
                bool same = true;
                for (std::size_t p = 0; p < parts_.size(); ++p) {
                    if (!include_zero && g_.zero &&
                        static_cast<int>(p) == *g_.zero)
                        continue;
                    if (!(parts_[p].map[static_cast<std::size_t>(a)] ==
                          parts_[p].map[static_cast<std::size_t>(b)])) {
                        same = false;
                        break;
                    }
                }
                if (same) return false;
            }
        return true;
    }

    const AbstractAlgebra& g_;
    ZetaRelation zeta_;
    ChiRelation chi_;
    std::vector<int> quasi_image_;
    bool r0_fixed_ = false;
    std::vector<std::vector<int>> cond16_;
    Subset cond17_required_;
    std::vector<int> cond17_witness_;

    std::vector<ClassPartition> partitions_;
    std::vector<Representation> parts_;
    bool parts_ok_full_ = false, parts_ok_minus_ = false;
    bool faithful_full_ = false, faithful_minus_ = false;
    Subset fp_full_, fp_minus_;
    std::vector<std::array<int, 2>> fp_witness_;
};

// ---------------------------------------------------------------------------
// Subset sweeps

inline constexpr int kDefaultExhaustiveCap = 12;
inline constexpr int kDefaultSampleCount = 10000;

/// Bitmask order: element 0 is the least significant bit.
inline bool subset_less(const Subset& a, const Subset& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/// Hex bitmask (element 0 least significant), e.g. "0x5".
inline std::string subset_bitmask(const Subset& h) {
    std::string hex;
    for (std::size_t i = 0; i < h.size(); i += 4) {
        int nibble = 0;
        for (std::size_t b = 0; b < 4 && i + b < h.size(); ++b)
            if (h[i + b]) nibble |= 1 << b;
        hex += "0123456789abcdef"[nibble];
    }
    while (hex.size() > 1 && hex.back() == '0') hex.pop_back();
    std::reverse(hex.begin(), hex.end());
    return "0x" + hex;
}

/// The nonempty subsets to sweep: exhaustive up to the cap, otherwise a
/// seeded sample of distinct subsets, always sorted by bitmask.
inline std::vector<Subset> subsets_to_sweep(int carrier,
                                            int exhaustive_cap = kDefaultExhaustiveCap,
                                            int sample_count = kDefaultSampleCount,
                                            std::uint64_t seed = 0) {
    std::vector<Subset> out;
    double total = std::pow(2.0, carrier) - 1.0;
    if (carrier <= exhaustive_cap ||
        total <= static_cast<double>(sample_count)) {
        std::uint64_t n = (1ull << carrier) - 1ull;
        for (std::uint64_t mask = 1; mask <= n; ++mask) {
            Subset h(static_cast<std::size_t>(carrier), 0);
            for (int i = 0; i < carrier; ++i)
                if (mask & (1ull << i)) h[static_cast<std::size_t>(i)] = 1;
            out.push_back(std::move(h));
        }
        return out;
    }
    std::mt19937_64 rng(seed);
    std::set<Subset, decltype(&subset_less)> distinct(&subset_less);
    while (static_cast<int>(distinct.size()) < sample_count) {
        Subset h(static_cast<std::size_t>(carrier), 0);
        bool any = false;
        for (int i = 0; i < carrier; ++i) {
            h[static_cast<std::size_t>(i)] = (rng() >> 32) & 1;
            any = any || h[static_cast<std::size_t>(i)];
        }
        if (any) distinct.insert(std::move(h));
    }
    return {distinct.begin(), distinct.end()};
}

/// Both theorem directions over the swept subsets: the syntactic verdict
/// always, the semantic verdict whenever syntax passes.  Mismatches are
/// findings recorded in the verdicts, never errors.
inline std::vector<TheoremVerdict> verify_theorem_T5a(
    StationaryAnalyzer& an, int exhaustive_cap = kDefaultExhaustiveCap,
    int sample_count = kDefaultSampleCount, std::uint64_t seed = 0) {
    std::vector<TheoremVerdict> out;
    for (Subset& h : subsets_to_sweep(an.algebra().size, exhaustive_cap,
                                      sample_count, seed)) {
        TheoremVerdict tv;
        tv.h = std::move(h);
        tv.syntactic = an.syntactic(tv.h);
        if (tv.syntactic.pass) tv.semantic = an.semantic(tv.h);
        out.push_back(std::move(tv));
    }
    return out;
}

/// Zero in H implies H is everything.
inline ImplicationCheck check_corollary_18(const AbstractAlgebra& g,
                                           const Subset& h) {
    ImplicationCheck c;
    if (!g.zero) {
        c.verdict = Verdict::Skipped;
        return c;
    }
    if (!h[static_cast<std::size_t>(*g.zero)]) return c;
    for (int x = 0; x < g.size; ++x)
        if (!h[static_cast<std::size_t>(x)]) {
            c.verdict = Verdict::Fail;
            c.counterexample = {x};
            return c;
        }
    return c;
}

/// The eight derived properties of a stationary subset, in display order
/// (19)..(26).  Precondition: H passed both theorem directions.
struct TpropReport {
    std::array<ImplicationCheck, 8> implication;

    bool ok() const {
        return std::all_of(implication.begin(), implication.end(),
                           [](const ImplicationCheck& c) {
                               return c.verdict != Verdict::Fail;
                           });
    }
};

inline TpropReport check_theorem_Tprop(const StationaryAnalyzer& an,
                                       const Subset& h) {
    const AbstractAlgebra& g = an.algebra();
    if (!g.zero) throw ContractError("the derived-property theorem needs a zero");
    const int s = g.size, n = g.rank;
    const auto& zl = an.zeta_rel().rel;
    const auto& cl = an.chi_rel().rel;
    const int zero = *g.zero;
    TpropReport rep;
    auto fail = [](ImplicationCheck& c, std::vector<int> tup) {
        if (c.verdict == Verdict::Fail) return;
        c.verdict = Verdict::Fail;
        c.counterexample = std::move(tup);
    };
    bool zero_in_h = h[static_cast<std::size_t>(zero)] != 0;

    // (19): 0 not in H -> 0 <= x
    if (!zero_in_h)
        for (int x = 0; x < s; ++x)
            if (!zl.contains(zero, x)) fail(rep.implication[0], {x});

    for (int x = 0; x < s; ++x) {
        bool xh = h[static_cast<std::size_t>(x)] != 0;
        // (21): x in H -> x[x..x] in H
        if (xh && !h[static_cast<std::size_t>(g.sup_diag(x, x))])
            fail(rep.implication[2], {x});
        // (22): x in H -> R_i x in H
        if (xh)
            for (int i = 1; i <= n; ++i)
                if (!h[static_cast<std::size_t>(g.r_at(i, x))])
                    fail(rep.implication[3], {x, i});
        for (int y = 0; y < s; ++y) {
            // (20): x <= y and x in H -> y in H
            if (zl.contains(x, y) && xh && !h[static_cast<std::size_t>(y)])
                fail(rep.implication[1], {x, y});
            int d = g.sup_diag(x, y);
            // (23): x[y..y] != 0 -> R_i x in H
            if (d != zero)
                for (int i = 1; i <= n; ++i)
                    if (!h[static_cast<std::size_t>(g.r_at(i, x))])
                        fail(rep.implication[4], {x, y, i});
            // (24): x[y..y] = y != 0 -> x in H
            if (d == y && y != zero && !xh) fail(rep.implication[5], {x, y});
            // (25): x in H and x << y -> R_i y in H
            if (xh && cl.contains(x, y))
                for (int i = 1; i <= n; ++i)
                    if (!h[static_cast<std::size_t>(g.r_at(i, y))])
                        fail(rep.implication[6], {x, y, i});
        }
        // (26): 0 not in H and x << 0 -> x = 0
        if (!zero_in_h && cl.contains(x, zero) && x != zero)
            fail(rep.implication[7], {x});
    }
    return rep;
}

} // namespace menger
