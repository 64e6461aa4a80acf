#include "sgpa/connections.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sgpa {

namespace {

void require_support_label(const StarTable& table, LabelId l) {
    if (l < 0 || l >= table.label_count()) throw std::invalid_argument("label id out of range");
    if (table.zero_label() && l == *table.zero_label())
        throw std::invalid_argument("connections are defined away from the zero label");
}

}  // namespace

ReachableSet reachable(const StarTable& table, LabelId lambda) {
    require_support_label(table, lambda);

    ReachableSet r;
    r.origin = lambda;
    r.closure = {plain(lambda), tilde(lambda)};

    std::deque<ExtLabel> queue{plain(lambda), tilde(lambda)};
    while (!queue.empty()) {
        const ExtLabel x = queue.front();
        queue.pop_front();
        for (bool step_tilded : {false, true}) {
            for (LabelId l = 0; l < table.label_count(); ++l) {
                const ExtLabel step{l, step_tilded};
                for (const ExtLabel& y : propagate(table, {x}, step)) {
                    if (r.closure.insert(y).second) {
                        r.parent.emplace(y, std::make_pair(x, step));
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    return r;
}

std::optional<ConnectionFamily> connection_family(const StarTable& table, LabelId from,
                                                  LabelId to) {
    require_support_label(table, from);
    require_support_label(table, to);
    if (from == to) return ConnectionFamily{plain(from)};

    const ReachableSet r = reachable(table, from);
    if (!r.reaches(to)) return std::nullopt;

    ConnectionFamily steps;
    ExtLabel cursor = plain(to);
    while (r.parent.count(cursor)) {
        const auto& [source, step] = r.parent.at(cursor);
        steps.push_back(step);
        cursor = source;
    }
    // cursor is now a parentless seed, i.e. plain(from) or tilde(from).
    ConnectionFamily family{cursor};
    family.insert(family.end(), steps.rbegin(), steps.rend());
    return family;
}

bool replay_family(const StarTable& table, const ConnectionFamily& family, LabelId from,
                   LabelId to) {
    if (family.empty()) return false;
    if (family.front().base != from) return false;
    if (family.size() == 1) return !family.front().tilded && from == to;

    std::set<ExtLabel> omega{family.front()};
    for (std::size_t i = 1; i < family.size(); ++i) {
        omega = propagate(table, omega, family[i]);
        if (omega.empty()) return false;
    }
    return omega.count(plain(to)) > 0;
}

ConnectionPartition connection_classes(const StarTable& table) {
    ConnectionPartition partition;
    partition.class_index.assign(table.label_count(), -1);

    for (LabelId l = 0; l < table.label_count(); ++l) {
        if (table.zero_label() && l == *table.zero_label()) continue;
        if (partition.class_index[l] >= 0) continue;

        const ReachableSet r = reachable(table, l);
        std::vector<LabelId> cls;
        for (LabelId m = 0; m < table.label_count(); ++m) {
            if (table.zero_label() && m == *table.zero_label()) continue;
            if (r.reaches(m)) cls.push_back(m);
        }
        const int index = static_cast<int>(partition.classes.size());
        for (LabelId m : cls) {
            if (partition.class_index[m] >= 0)
                throw std::logic_error("connection closure produced overlapping classes");
            partition.class_index[m] = index;
        }
        partition.classes.push_back(std::move(cls));
    }

    // Witnesses from every member, so each stored family starts over its
    // own pair as the definition demands.
    for (LabelId l = 0; l < table.label_count(); ++l) {
        if (partition.class_index[l] < 0) continue;
        for (LabelId m : partition.classes[partition.class_index[l]]) {
            auto family = connection_family(table, l, m);
            if (!family) throw std::logic_error("class member lost its witness");
            partition.witness.emplace(std::make_pair(l, m), std::move(*family));
        }
    }
    return partition;
}

}  // namespace sgpa
