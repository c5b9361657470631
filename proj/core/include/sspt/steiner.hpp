#ifndef SSPT_STEINER_HPP
#define SSPT_STEINER_HPP

#include <optional>
#include <string>
#include <vector>

#include "sspt/graph.hpp"
#include "sspt/rational.hpp"
#include "sspt/set_cover.hpp"

namespace sspt {

// An SSPT / UVDST / VDST instance: graph, source, terminal set and optional
// non-terminal vertex weights. Terminal weights are forced to zero at
// construction; a missing weight map means uniform weight 1 on non-terminals.
class Instance {
  public:
    Instance() = default;
    Instance(Graph graph, VertexId source, std::vector<VertexId> terminals,
             std::optional<std::vector<Weight>> vertex_weights = std::nullopt);

    const Graph& graph() const { return graph_; }
    VertexId source() const { return source_; }
    const std::vector<VertexId>& terminals() const { return terminals_; }
    const std::optional<std::vector<Weight>>& vertex_weights() const { return vertex_weights_; }

    bool is_terminal(VertexId v) const { return terminal_mask_[v]; }

    // W(v): 0 on terminals, stored weight or uniform 1 otherwise.
    Weight weight_of(VertexId v) const;

  private:
    Graph graph_;
    VertexId source_ = 0;
    std::vector<VertexId> terminals_;
    std::optional<std::vector<Weight>> vertex_weights_;
    std::vector<char> terminal_mask_;
};

// The SCC structure of G[X] together with the derived covering data: source
// components (not reachable in G[X] from any other component), the vertices
// with edges into them, and their neighborhoods N(v).
struct SourceComponents {
    InducedSubgraph terminal_subgraph;  // G[X], new ids ascending in terminal order
    SccPartition scc;                   // over terminal_subgraph ids

    // Source components indexed densely as the Set Cover universe, ordered by
    // smallest original terminal id; members are original terminal ids.
    std::vector<std::vector<VertexId>> source_members;

    struct PreVertex {
        VertexId v;
        std::vector<std::uint32_t> neighborhood;  // universe indices, ascending
    };
    // Non-terminals reachable from s with edges into source-component
    // terminals, ascending by vertex id. The source vertex itself is admitted
    // (with weight 0 downstream) so that components adjacent to s never force
    // a spurious non-terminal.
    std::vector<PreVertex> pre_s;
};

struct BoundCertificate {
    std::uint64_t radius_hops = 0;      // R over all vertices reachable from s
    std::uint64_t radius_hops_vsc = 0;  // restricted to V_SC, informational
    std::uint32_t universe_size = 0;    // |S|
    std::uint32_t cover_size = 0;       // |V_SC|
    Weight cover_weight = 0;
    std::size_t nt_before_expansion = 0;
    Rational harmonic_bound{0};  // H(|S|)
};

struct SolutionReport {
    Arborescence tree;
    std::size_t nt_count = 0;
    Weight nt_weight = 0;
    BoundCertificate certificate;
    std::string warning;
};

struct SolutionVerification {
    bool pass = true;
    std::string witness;
};

SourceComponents source_components(const Instance& inst);

// Universe = source components; one subset per v in PreS with members N(v)
// and weight W(v) (1 when uniform, 0 for the source vertex).
SetCoverInstance build_cover_instance(const Instance& inst, const SourceComponents& sc);

// The set-cover-based approximation for UVDST (vertex weights ignored).
SolutionReport approx_uvdst(const Instance& inst);

// Weighted variant: weighted greedy cover plus a minimum vertex-weight path
// tree in place of the BFS tree.
SolutionReport approx_vdst(const Instance& inst);

// Extends a tree spanning at least one terminal per source component to one
// spanning all of X, grafting DFS-forest edges of G[X]; the non-terminal set
// is unchanged.
Arborescence expand_to_all_terminals(const Instance& inst, const SourceComponents& sc,
                                     const Arborescence& t);

// End-to-end SSPT pipeline: build the shortest path subgraph, prune it to the
// terminals (unless prune=false), and run the UVDST approximation on it.
// Every root-to-vertex path of the result is a shortest path in the input.
SolutionReport solve_sspt(const Instance& inst, bool prune = true);
SolutionReport solve_weighted_sspt(const Instance& inst, bool prune = true);

SolutionVerification verify_solution(const Instance& inst, const Arborescence& t,
                                     bool require_shortest);

// Non-terminal count / total weight of a tree under this instance's terminal
// set; the source is never counted.
std::size_t nonterminal_count(const Instance& inst, const Arborescence& t);
Weight nonterminal_weight(const Instance& inst, const Arborescence& t);

}  // namespace sspt

#endif
