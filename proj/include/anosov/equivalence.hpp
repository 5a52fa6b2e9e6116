#ifndef ANOSOV_EQUIVALENCE_HPP
#define ANOSOV_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "anosov/graph.hpp"

namespace anosov {

// Two vertices are similar when they have the same open neighborhood or the
// same closed neighborhood. This is an equivalence relation on any simple
// graph, and each class of size >= 2 induces either an edgeless or a
// complete subgraph, never a mix.
bool similar(const SimpleGraph& g, int x, int y);

enum class ClassKind { edgeless, complete };

struct SimilarityClass {
    std::vector<int> vertices; // ascending
    ClassKind kind;            // singletons are edgeless by convention
};

struct EquivalenceDecomposition {
    // Sorted by decreasing size, ties by least vertex label.
    std::vector<SimilarityClass> classes;
    // Class sizes in class order, i.e. weakly decreasing.
    std::vector<int> type;
};

EquivalenceDecomposition decompose(const SimpleGraph& g);

// A graph is Anosov when it is connected, every similarity class has size
// at least 2, and every class of size exactly 2 is edgeless. Passing
// allow_disconnected = true drops the connectivity requirement.
bool is_anosov(const SimpleGraph& g, bool allow_disconnected = false);

// Same test, but on failure reports which condition broke and a witness
// (the offending class, or empty for disconnectedness).
struct AnosovVerdict {
    bool anosov = false;
    std::string reason;        // empty when anosov
    std::vector<int> witness;  // offending class vertices, if any
};

AnosovVerdict diagnose_anosov(const SimpleGraph& g, bool allow_disconnected = false);

// How many graphs in the stream have the given type (weakly decreasing
// class-size sequence). Every graph must have n = sum(type).
std::size_t count_by_type(const std::vector<SimpleGraph>& graphs,
                          const std::vector<int>& type);

} // namespace anosov

#endif
