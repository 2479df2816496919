#pragma once

// Finite partial n-place functions A^n -> A over an indexed base set,
// with Menger composition, projection-restriction and intersection.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "menger/errors.hpp"

#include <json.hpp>

namespace menger {

/// Marks an undefined table slot.
inline constexpr int kUndefined = -1;

/// Default cap on the number of table slots m^n of a single function.
inline constexpr std::size_t kDefaultSlotCap = 4096;

/// The finite base set A; elements are the indices 0..size-1.
struct BaseSet {
    int size = 1;

    bool operator==(const BaseSet&) const = default;
};

/// m^n with overflow/cap checking.
inline std::size_t table_slots(int base, int arity,
                               std::size_t slot_cap = kDefaultSlotCap) {
    if (base < 1) throw StructuralError("base set must be nonempty");
    if (arity < 1) throw StructuralError("arity must be positive");
    std::size_t slots = 1;
    for (int i = 0; i < arity; ++i) {
        if (slots > slot_cap / static_cast<std::size_t>(base))
            throw CapError("table size " + std::to_string(base) + "^" +
                           std::to_string(arity) + " exceeds slot cap " +
                           std::to_string(slot_cap));
        slots *= static_cast<std::size_t>(base);
    }
    return slots;
}

/// A partial map A^n -> A stored as a dense table over the mixed-radix
/// encoding of A^n (first coordinate most significant).  Equality of
/// tables is equality of functions.
class NPlaceFunction {
public:
    /// Default: the empty unary function over a one-element base.
    NPlaceFunction() : NPlaceFunction(1, BaseSet{1}) {}

    NPlaceFunction(int arity, BaseSet base,
                   std::size_t slot_cap = kDefaultSlotCap)
        : arity_(arity), base_(base),
          table_(table_slots(base.size, arity, slot_cap), kUndefined) {}

    NPlaceFunction(int arity, BaseSet base, std::vector<int> table)
        : arity_(arity), base_(base), table_(std::move(table)) {
        if (table_.size() != table_slots(base.size, arity))
            throw StructuralError("table length is not base^arity");
        for (int v : table_)
            if (v != kUndefined && (v < 0 || v >= base_.size))
                throw StructuralError("table value out of range");
    }

    int arity() const { return arity_; }
    BaseSet base() const { return base_; }
    int base_size() const { return base_.size; }
    std::size_t slots() const { return table_.size(); }
    const std::vector<int>& table() const { return table_; }

    std::size_t encode(std::span<const int> tuple) const {
        std::size_t idx = 0;
        for (int a : tuple) idx = idx * static_cast<std::size_t>(base_.size) +
                                  static_cast<std::size_t>(a);
        return idx;
    }

    /// Inverse of encode; writes arity() coordinates.
    void decode(std::size_t idx, std::span<int> tuple) const {
        for (int i = arity_ - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(idx % static_cast<std::size_t>(base_.size));
            idx /= static_cast<std::size_t>(base_.size);
        }
    }

    int value_at(std::size_t idx) const { return table_[idx]; }
    bool defined_at(std::size_t idx) const { return table_[idx] != kUndefined; }

    int operator()(std::span<const int> tuple) const {
        return table_[encode(tuple)];
    }

    void set(std::size_t idx, int value) {
        if (value != kUndefined && (value < 0 || value >= base_.size))
            throw StructuralError("value out of range");
        table_[idx] = value;
    }

    void set(std::span<const int> tuple, int value) { set(encode(tuple), value); }

    bool empty() const {
        for (int v : table_)
            if (v != kUndefined) return false;
        return true;
    }

    std::size_t domain_size() const {
        std::size_t k = 0;
        for (int v : table_)
            if (v != kUndefined) ++k;
        return k;
    }

    bool operator==(const NPlaceFunction&) const = default;

    /// Total order: by (arity, base, table bytes).  Canonical ordering for
    /// member lists.
    friend bool operator<(const NPlaceFunction& a, const NPlaceFunction& b) {
        if (a.arity_ != b.arity_) return a.arity_ < b.arity_;
        if (a.base_.size != b.base_.size) return a.base_.size < b.base_.size;
        return a.table_ < b.table_;
    }

private:
    int arity_;
    BaseSet base_;
    std::vector<int> table_;
};

inline void require_compatible(const NPlaceFunction& f, const NPlaceFunction& g) {
    if (f.arity() != g.arity() || !(f.base() == g.base()))
        throw StructuralError("functions have mismatched arity or base set");
}

/// The nowhere-defined function.
inline NPlaceFunction empty_function(int arity, BaseSet base) {
    return NPlaceFunction(arity, base);
}

/// The total i-th projection (i is 1-based).
inline NPlaceFunction projection(int i, int arity, BaseSet base) {
    if (i < 1 || i > arity) throw StructuralError("projection index out of range");
    NPlaceFunction p(arity, base);
    std::vector<int> tuple(static_cast<std::size_t>(arity));
    for (std::size_t idx = 0; idx < p.slots(); ++idx) {
        p.decode(idx, tuple);
        p.set(idx, tuple[static_cast<std::size_t>(i - 1)]);
    }
    return p;
}

/// Menger composition f[g_1 ... g_n], strict on undefinedness: the result
/// is defined at a tuple iff every g_i is defined there and f is defined at
/// the tuple of their values.
inline NPlaceFunction compose(const NPlaceFunction& f,
                              std::span<const NPlaceFunction> gs) {
    if (gs.size() != static_cast<std::size_t>(f.arity()))
        throw StructuralError("compose needs exactly arity inner functions");
    for (const auto& g : gs) require_compatible(f, g);
    NPlaceFunction out(f.arity(), f.base());
    std::vector<int> values(gs.size());
    for (std::size_t idx = 0; idx < out.slots(); ++idx) {
        bool defined = true;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            values[i] = gs[i].value_at(idx);
            if (values[i] == kUndefined) { defined = false; break; }
        }
        if (defined) out.set(idx, f(values));
    }
    return out;
}

inline NPlaceFunction compose(const NPlaceFunction& f,
                              const std::vector<NPlaceFunction>& gs) {
    return compose(f, std::span<const NPlaceFunction>(gs));
}

/// R_i f: the i-th projection restricted to the domain of f (i is 1-based).
inline NPlaceFunction proj_restrict(int i, const NPlaceFunction& f) {
    if (i < 1 || i > f.arity())
        throw StructuralError("proj_restrict index out of range");
    NPlaceFunction out(f.arity(), f.base());
    std::vector<int> tuple(static_cast<std::size_t>(f.arity()));
    for (std::size_t idx = 0; idx < out.slots(); ++idx) {
        if (!f.defined_at(idx)) continue;
        out.decode(idx, tuple);
        out.set(idx, tuple[static_cast<std::size_t>(i - 1)]);
    }
    return out;
}

/// Set-theoretic intersection of graphs.
inline NPlaceFunction intersect(const NPlaceFunction& f, const NPlaceFunction& g) {
    require_compatible(f, g);
    NPlaceFunction out(f.arity(), f.base());
    for (std::size_t idx = 0; idx < out.slots(); ++idx) {
        int v = f.value_at(idx);
        if (v != kUndefined && v == g.value_at(idx)) out.set(idx, v);
    }
    return out;
}

/// graph(f) subset of graph(g).
inline bool is_subfunction(const NPlaceFunction& f, const NPlaceFunction& g) {
    require_compatible(f, g);
    for (std::size_t idx = 0; idx < f.slots(); ++idx) {
        int v = f.value_at(idx);
        if (v != kUndefined && g.value_at(idx) != v) return false;
    }
    return true;
}

/// domain(f) subset of domain(g).
inline bool is_subdomain(const NPlaceFunction& f, const NPlaceFunction& g) {
    require_compatible(f, g);
    for (std::size_t idx = 0; idx < f.slots(); ++idx)
        if (f.defined_at(idx) && !g.defined_at(idx)) return false;
    return true;
}

/// All a with f(a,...,a) = a.
inline std::vector<int> fixed_points(const NPlaceFunction& f) {
    std::vector<int> fps;
    std::vector<int> tuple(static_cast<std::size_t>(f.arity()));
    for (int a = 0; a < f.base_size(); ++a) {
        std::fill(tuple.begin(), tuple.end(), a);
        if (f(tuple) == a) fps.push_back(a);
    }
    return fps;
}

inline bool has_fixed_point(const NPlaceFunction& f) {
    std::vector<int> tuple(static_cast<std::size_t>(f.arity()));
    for (int a = 0; a < f.base_size(); ++a) {
        std::fill(tuple.begin(), tuple.end(), a);
        if (f(tuple) == a) return true;
    }
    return false;
}

// JSON form: {"arity": n, "base": m, "table": [v_0, ..., v_{m^n-1}]} with
// null for undefined slots.
inline void to_json(nlohmann::json& j, const NPlaceFunction& f) {
    nlohmann::json table = nlohmann::json::array();
    for (int v : f.table())
        table.push_back(v == kUndefined ? nlohmann::json(nullptr)
                                        : nlohmann::json(v));
    j = nlohmann::json{{"arity", f.arity()},
                       {"base", f.base_size()},
                       {"table", std::move(table)}};
}

inline void from_json(const nlohmann::json& j, NPlaceFunction& f) {
    int arity = j.at("arity").get<int>();
    int base = j.at("base").get<int>();
    std::vector<int> table;
    for (const auto& v : j.at("table"))
        table.push_back(v.is_null() ? kUndefined : v.get<int>());
    f = NPlaceFunction(arity, BaseSet{base}, std::move(table));
}

} // namespace menger
