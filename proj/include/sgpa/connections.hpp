#pragma once

#include "sgpa/star.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace sgpa {

// A finite family of extended labels witnessing that two support elements
// are connected: the first entry seeds the walk, each following entry is
// one propagation step.
using ConnectionFamily = std::vector<ExtLabel>;

// Closure of {lambda, tilde(lambda)} under single-element propagation steps,
// with breadcrumbs for witness reconstruction.
struct ReachableSet {
    LabelId origin = -1;
    std::set<ExtLabel> closure;
    // discovered element -> (element it was reached from, step label)
    std::map<ExtLabel, std::pair<ExtLabel, ExtLabel>> parent;

    bool reaches(LabelId l) const { return closure.count(plain(l)) > 0; }
};

ReachableSet reachable(const StarTable& table, LabelId lambda);

// Witness family for a connection from `from` to `to`, or nullopt when the
// two labels are not connected. from == to yields the one-element family.
std::optional<ConnectionFamily> connection_family(const StarTable& table, LabelId from,
                                                  LabelId to);

// Re-runs a family through the propagation map: the seed must sit over
// `from`, every intermediate set must be nonempty, and `to` must lie in the
// final set.
bool replay_family(const StarTable& table, const ConnectionFamily& family, LabelId from,
                   LabelId to);

// The partition of the support (without the zero label) into connection
// classes, with witness families for every connected ordered pair.
struct ConnectionPartition {
    std::vector<std::vector<LabelId>> classes;  // sorted within and across
    std::map<std::pair<LabelId, LabelId>, ConnectionFamily> witness;
    std::vector<int> class_index;               // per label; -1 for the zero label

    int class_of(LabelId l) const { return class_index.at(l); }
};

ConnectionPartition connection_classes(const StarTable& table);

}  // namespace sgpa
