#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qklab/digraph.hpp"

/// Finite marked groups and their actions on finite point sets, given by
/// explicit lookup tables. Everything is validated on construction: the
/// multiplication table must be a group, and the action table must satisfy
/// the action axioms.

namespace qklab {

struct Group {
    int order = 0;
    std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
    int identity = 0;
};

/// Validates shape, closure, a two-sided identity, inverses and
/// associativity (cubic in the order; the groups here are tiny).
inline Group make_group(std::vector<std::vector<int>> mult) {
    const int n = static_cast<int>(mult.size());
    if (n == 0) throw argument_error("group must be non-empty");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != n)
            throw argument_error("multiplication table must be square");
        for (int e : row)
            if (e < 0 || e >= n) throw argument_error("multiplication table entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool two_sided = true;
        for (int g = 0; g < n && two_sided; ++g)
            two_sided = mult[static_cast<std::size_t>(e)][static_cast<std::size_t>(g)] == g &&
                        mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(e)] == g;
        if (two_sided) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw argument_error("multiplication table has no identity");
    for (int g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n && !has_inverse; ++h)
            has_inverse = mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == identity &&
                          mult[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)] == identity;
        if (!has_inverse)
            throw argument_error("group element " + std::to_string(g) + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int ab_c = mult[static_cast<std::size_t>(
                    mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])][static_cast<std::size_t>(c)];
                const int a_bc = mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                    mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])];
                if (ab_c != a_bc) throw argument_error("multiplication table is not associative");
            }
    return Group{n, std::move(mult), identity};
}

inline Group cyclic_group(int n) {
    if (n <= 0) throw argument_error("cyclic group order must be positive");
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return make_group(std::move(mult));
}

/// Componentwise product; element (a, b) has index a + |G| * b, so the
/// first factor runs fastest and the identity stays at index 0.
inline Group direct_product(const Group& g, const Group& h) {
    const int n = g.order * h.order;
    std::vector<std::vector<int>> mult(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ga = a % g.order, ha = a / g.order;
            const int gb = b % g.order, hb = b / g.order;
            const int gp = g.mult[static_cast<std::size_t>(ga)][static_cast<std::size_t>(gb)];
            const int hp = h.mult[static_cast<std::size_t>(ha)][static_cast<std::size_t>(hb)];
            mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = gp + g.order * hp;
        }
    return make_group(std::move(mult));
}

/// A marked group acting on points 0..point_count-1 through a full lookup
/// table. Construction checks that the identity acts trivially, that
/// apply(g, apply(h, x)) == apply(g*h, x) for the whole (g, h, x) cube, and
/// that the identity is not among the generators.
class GroupAction {
public:
    GroupAction(Group group, std::vector<int> generators, std::vector<std::vector<int>> table)
        : group_(std::move(group)), generators_(std::move(generators)), table_(std::move(table)) {
        if (static_cast<int>(table_.size()) != group_.order)
            throw argument_error("action table must have one row per group element");
        const int points = point_count();
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != points)
                throw argument_error("action table rows must agree on the point count");
            for (int p : row)
                if (p < 0 || p >= points) throw argument_error("action table entry out of range");
        }
        for (int s : generators_) {
            if (s < 0 || s >= group_.order)
                throw argument_error("generator " + std::to_string(s) + " is not a group element");
            if (s == group_.identity)
                throw argument_error("the identity may not be a generator");
        }
        for (int x = 0; x < points; ++x)
            if (apply(group_.identity, x) != x)
                throw argument_error("identity does not act trivially");
        for (int g = 0; g < group_.order; ++g)
            for (int h = 0; h < group_.order; ++h) {
                const int gh = group_.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
                for (int x = 0; x < points; ++x)
                    if (apply(g, apply(h, x)) != apply(gh, x))
                        throw argument_error("action table violates the action axiom");
            }
    }

    const Group& group() const { return group_; }
    const std::vector<int>& generators() const { return generators_; }

    int point_count() const {
        return table_.empty() ? 0 : static_cast<int>(table_.front().size());
    }

    int apply(int g, int x) const {
        if (g < 0 || g >= group_.order) throw argument_error("apply: not a group element");
        if (x < 0 || x >= point_count()) throw argument_error("apply: not a point");
        return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
    }

private:
    Group group_;
    std::vector<int> generators_;
    std::vector<std::vector<int>> table_;
};

/// Arcs x -> s.x for every generator s, fixed points dropped.
inline Digraph schreier_digraph(const GroupAction& action) {
    std::vector<std::pair<int, int>> arcs;
    for (int s : action.generators())
        for (int x = 0; x < action.point_count(); ++x) {
            const int y = action.apply(s, x);
            if (y != x) arcs.emplace_back(x, y);
        }
    return Digraph(action.point_count(), arcs);
}

/// Points with trivial stabilizer; invariant under the action.
inline VertexSet free_part(const GroupAction& action) {
    VertexSet out(action.point_count());
    for (int x = 0; x < action.point_count(); ++x) {
        bool free = true;
        for (int g = 0; g < action.group().order && free; ++g) {
            if (g == action.group().identity) continue;
            free = action.apply(g, x) != x;
        }
        if (free) out.insert(x);
    }
    return out;
}

}  // namespace qklab
