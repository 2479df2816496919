#pragma once

// Simplest representations from (E, W) pairs, the per-element E_g/W_g
// construction, sums of representations over disjoint index sets, and
// faithfulness/homomorphism verdicts.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "menger/abstract.hpp"
#include "menger/errors.hpp"
#include "menger/nfun.hpp"

#include <json.hpp>

namespace menger {

/// A partition of the carrier by an equivalence relation, with an optional
/// distinguished W class.  Class ids are canonical: ordered by minimal
/// member, so builds are reproducible byte for byte.  `indexing` lists the
/// non-W class ids; its positions are the index set of the simplest
/// representation.
struct ClassPartition {
    int carrier = 0;
    int num_classes = 0;
    std::vector<int> class_of;             // element -> class id
    std::optional<int> w_class;
    std::vector<int> indexing;             // non-W class ids, increasing
    std::vector<std::vector<int>> members; // per class id, increasing elements

    int index_count() const { return static_cast<int>(indexing.size()); }

    /// Position of a class id within `indexing`, or -1 for the W class.
    int position_of_class(int cls) const {
        auto it = std::lower_bound(indexing.begin(), indexing.end(), cls);
        if (it != indexing.end() && *it == cls)
            return static_cast<int>(it - indexing.begin());
        return -1;
    }
};

namespace detail {

/// Relabels a raw class assignment so ids appear in order of minimal
/// member, and fills the member lists.
inline void canonicalize_partition(ClassPartition& p,
                                   const std::vector<int>& raw) {
    std::vector<int> relabel(raw.size(), -1);
    int next = 0;
    p.class_of.assign(raw.size(), -1);
    for (std::size_t x = 0; x < raw.size(); ++x) {
        int& id = relabel[static_cast<std::size_t>(raw[x])];
        if (id < 0) id = next++;
        p.class_of[x] = id;
    }
    p.num_classes = next;
    p.members.assign(static_cast<std::size_t>(next), {});
    for (std::size_t x = 0; x < raw.size(); ++x)
        p.members[static_cast<std::size_t>(p.class_of[x])].push_back(
            static_cast<int>(x));
}

/// v-regularity of the induced equivalence, checked at the quotient: the
/// class of z[y1..yn] must depend only on z and the classes of the y_i.
/// Returns a witness tuple (z, y1..yn, z, y1'..yn') on failure.
inline std::optional<std::vector<int>> v_regularity_witness(
    const AbstractAlgebra& g, const ClassPartition& p) {
    const int s = g.size, n = g.rank;
    std::size_t keys = static_cast<std::size_t>(s);
    for (int i = 0; i < n; ++i) keys *= static_cast<std::size_t>(p.num_classes);
    std::vector<int> result_class(keys, -1);
    std::vector<std::vector<int>> first_tuple(keys);
    std::vector<int> ys(static_cast<std::size_t>(n));
    for (int z = 0; z < s; ++z) {
        std::fill(ys.begin(), ys.end(), 0);
        do {
            std::size_t key = static_cast<std::size_t>(z);
            for (int y : ys)
                key = key * static_cast<std::size_t>(p.num_classes) +
                      static_cast<std::size_t>(p.class_of[static_cast<std::size_t>(y)]);
            int cls = p.class_of[static_cast<std::size_t>(
                g.sup_at(z, g.encode_tuple(ys)))];
            if (result_class[key] < 0) {
                result_class[key] = cls;
                first_tuple[key].assign(1, z);
                first_tuple[key].insert(first_tuple[key].end(), ys.begin(),
                                        ys.end());
            } else if (result_class[key] != cls) {
                std::vector<int> witness = first_tuple[key];
                witness.push_back(z);
                witness.insert(witness.end(), ys.begin(), ys.end());
                return witness;
            }
        } while (next_tuple(ys, s));
    }
    return std::nullopt;
}

} // namespace detail

/// The partition induced by E_g (x ~ y iff g << x meet y, or both x and y
/// lie outside chi<g>) with W_g = complement of chi<g>.  chi<g> is the
/// forward image { x : (g,x) in chi }.  The relation is verified to be an
/// equivalence and v-regular, and nonempty W_g to be an l-ideal; failures
/// raise IntegrityError naming the witness.
inline ClassPartition build_Eg_Wg(const AbstractAlgebra& g, int elem,
                                  const BinaryRelation& chi_rel) {
    const int s = g.size;
    std::vector<char> in_chi(static_cast<std::size_t>(s), 0);
    for (int x = 0; x < s; ++x)
        if (chi_rel.contains(elem, x)) in_chi[static_cast<std::size_t>(x)] = 1;

    auto related = [&](int x, int y) {
        if (!in_chi[static_cast<std::size_t>(x)] &&
            !in_chi[static_cast<std::size_t>(y)])
            return true;
        return chi_rel.contains(elem, g.meet_at(x, y)) != 0;
    };

    // Equivalence verification: reflexivity and transitivity (the defining
    // condition is symmetric in x, y already).
    for (int x = 0; x < s; ++x)
        if (!related(x, x))
            throw IntegrityError("E_" + std::to_string(elem) +
                                 " is not reflexive at " + std::to_string(x));
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y) {
            if (!related(x, y)) continue;
            for (int z = 0; z < s; ++z)
                if (related(y, z) && !related(x, z))
                    throw IntegrityError(
                        "E_" + std::to_string(elem) + " is not transitive at (" +
                        std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + ")");
        }

    std::vector<int> raw(static_cast<std::size_t>(s), -1);
    for (int x = 0; x < s; ++x) {
        if (raw[static_cast<std::size_t>(x)] >= 0) continue;
        raw[static_cast<std::size_t>(x)] = x;
        for (int y = x + 1; y < s; ++y)
            if (related(x, y)) raw[static_cast<std::size_t>(y)] = x;
    }

    ClassPartition p;
    p.carrier = s;
    detail::canonicalize_partition(p, raw);

    bool w_nonempty = false;
    for (int x = 0; x < s; ++x)
        if (!in_chi[static_cast<std::size_t>(x)]) {
            p.w_class = p.class_of[static_cast<std::size_t>(x)];
            w_nonempty = true;
            break;
        }
    if (w_nonempty) {
        // W must be exactly one class.
        for (int x = 0; x < s; ++x)
            if ((p.class_of[static_cast<std::size_t>(x)] == *p.w_class) !=
                !in_chi[static_cast<std::size_t>(x)])
                throw IntegrityError("W_" + std::to_string(elem) +
                                     " is not a single class (element " +
                                     std::to_string(x) + ")");
        Subset w(static_cast<std::size_t>(s), 0);
        for (int x = 0; x < s; ++x)
            w[static_cast<std::size_t>(x)] = !in_chi[static_cast<std::size_t>(x)];
        if (!is_l_ideal(g, w))
            throw IntegrityError("W_" + std::to_string(elem) +
                                 " is not an l-ideal");
    }
    for (int c = 0; c < p.num_classes; ++c)
        if (!p.w_class || c != *p.w_class) p.indexing.push_back(c);

    if (auto w = detail::v_regularity_witness(g, p)) {
        std::string msg = "E_" + std::to_string(elem) +
                          " is not v-regular; witness (";
        for (std::size_t i = 0; i < w->size(); ++i)
            msg += (i ? "," : "") + std::to_string((*w)[i]);
        throw IntegrityError(msg + ")");
    }
    return p;
}

/// A representation of the algebra by n-place functions over an index set
/// of partition classes.
struct Representation {
    int rank = 1;
    int index_count = 0;
    std::optional<int> origin;        // element whose (E_g, W_g) was used
    std::vector<int> indices;         // class ids per index position
    std::vector<NPlaceFunction> map;  // per element of the carrier

    bool operator==(const Representation&) const = default;
};

/// Which preservation law a representation verdict violated.
struct RepresentationVerdict {
    bool pass = true;
    std::string violated;         // "composition", "meet" or "r"
    std::vector<int> witness;     // the violating element tuple
};

/// P(g) per Eq.-style image rule: defined at (a_1..a_n) iff the image set
/// g[H_{a_1}..H_{a_n}] misses W; its value is the position of the class
/// containing the whole image.  An image straddling classes means the
/// partition was not v-regular after all and raises IntegrityError.
inline Representation simplest_representation(const AbstractAlgebra& g,
                                              const ClassPartition& p) {
    if (p.carrier != g.size)
        throw StructuralError("partition carrier does not match algebra");
    const int n = g.rank, k = p.index_count();
    Representation rep;
    rep.rank = n;
    rep.index_count = k;
    rep.indices = p.indexing;
    std::size_t slots = 1;
    for (int i = 0; i < n; ++i) slots *= static_cast<std::size_t>(std::max(k, 1));

    for (int el = 0; el < g.size; ++el) {
        NPlaceFunction f(n, BaseSet{std::max(k, 1)},
                         std::max(slots, kDefaultSlotCap));
        std::vector<int> pos(static_cast<std::size_t>(n), 0);
        if (k > 0) {
            do {
                // Image g[H_{a_1} .. H_{a_n}] over all member tuples.
                std::vector<std::size_t> sel(static_cast<std::size_t>(n), 0);
                std::vector<int> ys(static_cast<std::size_t>(n));
                int image_class = -2;  // -2 unset, -1 inconsistent
                bool hits_w = false;
                while (true) {
                    for (int i = 0; i < n; ++i) {
                        const auto& cls = p.members[static_cast<std::size_t>(
                            p.indexing[static_cast<std::size_t>(
                                pos[static_cast<std::size_t>(i)])])];
                        ys[static_cast<std::size_t>(i)] =
                            cls[sel[static_cast<std::size_t>(i)]];
                    }
                    int c = p.class_of[static_cast<std::size_t>(
                        g.sup_at(el, g.encode_tuple(ys)))];
                    if (p.w_class && c == *p.w_class) hits_w = true;
                    if (image_class == -2)
                        image_class = c;
                    else if (image_class != c)
                        throw IntegrityError(
                            "image of element " + std::to_string(el) +
                            " straddles classes; the partition is not v-regular");
                    int i = n - 1;
                    for (; i >= 0; --i) {
                        const auto& cls = p.members[static_cast<std::size_t>(
                            p.indexing[static_cast<std::size_t>(
                                pos[static_cast<std::size_t>(i)])])];
                        if (++sel[static_cast<std::size_t>(i)] < cls.size()) break;
                        sel[static_cast<std::size_t>(i)] = 0;
                    }
                    if (i < 0) break;
                }
                if (!hits_w)
                    f.set(f.encode(pos), p.position_of_class(image_class));
            } while (next_tuple(pos, k));
        }
        rep.map.push_back(std::move(f));
    }
    return rep;
}

/// Exhaustive preservation verdict: composition (over all argument
/// tuples), meet and every R_i.  Elements sharing an image table are swept
/// once.
inline RepresentationVerdict verify_representation(const AbstractAlgebra& g,
                                                   const Representation& rep) {
    RepresentationVerdict v;
    const int s = g.size, n = g.rank;
    if (static_cast<int>(rep.map.size()) != s)
        throw StructuralError("representation map does not cover the carrier");

    std::map<const std::vector<int>*, int,
             decltype([](const std::vector<int>* a, const std::vector<int>* b) {
                 return *a < *b;
             })>
        table_id;
    std::vector<int> id_of(static_cast<std::size_t>(s));
    std::vector<const NPlaceFunction*> distinct;
    for (int el = 0; el < s; ++el) {
        auto [it, inserted] = table_id.try_emplace(
            &rep.map[static_cast<std::size_t>(el)].table(),
            static_cast<int>(distinct.size()));
        if (inserted) distinct.push_back(&rep.map[static_cast<std::size_t>(el)]);
        id_of[static_cast<std::size_t>(el)] = it->second;
    }
    const std::size_t d = distinct.size();

    // composition: precompute composite ids over distinct-table tuples,
    // then check every element tuple in O(1).
    {
        std::size_t combos = d;
        for (int i = 0; i < n; ++i) combos *= d;
        std::vector<int> comp_id(combos, -2);
        std::vector<NPlaceFunction> gs;
        std::vector<int> ys(static_cast<std::size_t>(n));
        for (int x = 0; x < s && v.pass; ++x) {
            std::fill(ys.begin(), ys.end(), 0);
            do {
                std::size_t key = static_cast<std::size_t>(
                    id_of[static_cast<std::size_t>(x)]);
                for (int y : ys)
                    key = key * d + static_cast<std::size_t>(
                                        id_of[static_cast<std::size_t>(y)]);
                if (comp_id[key] == -2) {
                    gs.clear();
                    for (int y : ys)
                        gs.push_back(rep.map[static_cast<std::size_t>(y)]);
                    NPlaceFunction composed =
                        compose(rep.map[static_cast<std::size_t>(x)], gs);
                    auto it = table_id.find(&composed.table());
                    comp_id[key] = (it == table_id.end()) ? -1 : it->second;
                }
                int want = id_of[static_cast<std::size_t>(
                    g.sup_at(x, g.encode_tuple(ys)))];
                if (comp_id[key] != want) {
                    v.pass = false;
                    v.violated = "composition";
                    v.witness.assign(1, x);
                    v.witness.insert(v.witness.end(), ys.begin(), ys.end());
                    break;
                }
            } while (next_tuple(ys, s));
        }
    }

    // meet
    if (v.pass) {
        std::vector<int> meet_id(d * d, -2);
        for (int x = 0; x < s && v.pass; ++x)
            for (int y = 0; y < s; ++y) {
                std::size_t key =
                    static_cast<std::size_t>(id_of[static_cast<std::size_t>(x)]) *
                        d +
                    static_cast<std::size_t>(id_of[static_cast<std::size_t>(y)]);
                if (meet_id[key] == -2) {
                    NPlaceFunction m =
                        intersect(rep.map[static_cast<std::size_t>(x)],
                                  rep.map[static_cast<std::size_t>(y)]);
                    auto it = table_id.find(&m.table());
                    meet_id[key] = (it == table_id.end()) ? -1 : it->second;
                }
                if (meet_id[key] !=
                    id_of[static_cast<std::size_t>(g.meet_at(x, y))]) {
                    v.pass = false;
                    v.violated = "meet";
                    v.witness = {x, y};
                    break;
                }
            }
    }

    // R_i
    if (v.pass)
        for (int i = 1; i <= n && v.pass; ++i)
            for (int x = 0; x < s; ++x)
                if (proj_restrict(i, rep.map[static_cast<std::size_t>(x)]) !=
                    rep.map[static_cast<std::size_t>(g.r_at(i, x))]) {
                    v.pass = false;
                    v.violated = "r";
                    v.witness = {i, x};
                    break;
                }

    return v;
}

/// Injectivity of the map.
inline bool is_faithful(const Representation& rep) {
    for (std::size_t a = 0; a < rep.map.size(); ++a)
        for (std::size_t b = a + 1; b < rep.map.size(); ++b)
            if (rep.map[a] == rep.map[b]) return false;
    return true;
}

/// Sum of representations over disjoint index sets.  Index tags are pairs
/// (origin, local position) flattened to consecutive integers in part
/// order; disjointness holds by construction.
struct SumRepresentation {
    int rank = 1;
    std::vector<Representation> parts;  // in canonical origin order
    std::vector<int> offset;            // first global index per part
    int total_indices = 0;

    std::pair<int, int> tag(int global_index) const {
        for (std::size_t i = parts.size(); i-- > 0;)
            if (global_index >= offset[i])
                return {parts[i].origin.value_or(static_cast<int>(i)),
                        global_index - offset[i]};
        throw StructuralError("index out of range");
    }

    /// A diagonal fixed point of the union lies inside a single part.
    bool has_fixed_point(int el) const {
        for (const auto& part : parts)
            if (has_fixed_point_in(part, el)) return true;
        return false;
    }

    static bool has_fixed_point_in(const Representation& part, int el) {
        return menger::has_fixed_point(part.map[static_cast<std::size_t>(el)]);
    }

    /// Global fixed-point indices of the union function for el.
    std::vector<int> fixed_point_indices(int el) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int a :
                 fixed_points(parts[i].map[static_cast<std::size_t>(el)]))
                out.push_back(offset[i] + a);
        return out;
    }

    /// Injectivity of g -> union function: elements are equal iff equal in
    /// every part.
    bool faithful() const {
        if (parts.empty()) return false;
        std::size_t s = parts.front().map.size();
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = a + 1; b < s; ++b) {
                bool same = true;
                for (const auto& part : parts)
                    if (!(part.map[a] == part.map[b])) {
                        same = false;
                        break;
                    }
                if (same) return false;
            }
        return true;
    }

    /// Dense union function for el over the combined index set.  Mixed
    /// tuples (coordinates from different parts) are undefined.  Refuses
    /// past the slot cap.
    NPlaceFunction materialize(int el,
                               std::size_t slot_cap = kDefaultSlotCap) const {
        int m = std::max(total_indices, 1);
        NPlaceFunction out(rank, BaseSet{m}, slot_cap);
        std::vector<int> tuple(static_cast<std::size_t>(rank));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& f = parts[i].map[static_cast<std::size_t>(el)];
            std::vector<int> local(static_cast<std::size_t>(rank));
            for (std::size_t idx = 0; idx < f.slots(); ++idx) {
                int vloc = f.value_at(idx);
                if (vloc == kUndefined) continue;
                f.decode(idx, local);
                for (int c = 0; c < rank; ++c)
                    tuple[static_cast<std::size_t>(c)] =
                        local[static_cast<std::size_t>(c)] + offset[i];
                out.set(out.encode(tuple), vloc + offset[i]);
            }
        }
        return out;
    }
};

/// Folds parts in the given order; parts must share the carrier size.
inline SumRepresentation sum_representations(std::vector<Representation> parts) {
    SumRepresentation sum;
    if (!parts.empty()) sum.rank = parts.front().rank;
    const std::size_t carrier = parts.empty() ? 0 : parts.front().map.size();
    int off = 0;
    for (auto& p : parts) {
        if (p.rank != sum.rank)
            throw StructuralError("summed parts must share the rank");
        if (p.map.size() != carrier)
            throw StructuralError("summed parts must share the carrier");
        sum.offset.push_back(off);
        off += p.index_count;
        sum.parts.push_back(std::move(p));
    }
    sum.total_indices = off;
    return sum;
}

// Serialization: {"origin": element|null, "indices": [...], "map":
// {"0": fn-json, ...}} keyed by carrier element.
inline void to_json(nlohmann::json& j, const Representation& rep) {
    j = nlohmann::json::object();
    j["origin"] = rep.origin ? nlohmann::json(*rep.origin) : nlohmann::json(nullptr);
    j["indices"] = rep.indices;
    nlohmann::json m = nlohmann::json::object();
    for (std::size_t el = 0; el < rep.map.size(); ++el)
        m[std::to_string(el)] = rep.map[el];
    j["map"] = std::move(m);
}

} // namespace menger
