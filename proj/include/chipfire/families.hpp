#pragma once

#include "chipfire/multigraph.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace chipfire {

/// A multigraph plus named vertex roles ("leaves", "root", "central-triangle",
/// "pinch", "cone-apex", "cycle", ...) so certificates can address the anchor
/// vertices the constructions talk about.
struct LabeledGraph {
  Multigraph graph;
  std::map<std::string, std::vector<VertexId>> marks;

  bool has_mark(const std::string& name) const { return marks.count(name) > 0; }
  const std::vector<VertexId>& mark(const std::string& name) const;
  VertexId mark_one(const std::string& name) const;
};

enum class JoinShape {
  CommonRoot,
  Edge,
  Path,
  K23Shape,
  Square,
  TwoTriangles,
  Triangle,
  Pentagon,
};

/// Tagged choice naming a generator plus its integer parameters.
struct FamilySpec {
  enum class Kind {
    TreeT,
    GraphC,
    GraphCPrime,
    LoopOfLoops,
    AGraph,
    BGraph,
    PinchedTetrahedron,
    PinchedK33,
    Cone,
    K23,
    Tetrahedron,
    K33,
    Cube,
    Petersen,
    Heawood,
    Genus7Max,
    C12DoublePrime,
    CaseJoin,
  };

  Kind kind = Kind::Tetrahedron;
  Int param = 0;     // n, g or m for the parametric families
  bool rooted = false;

  // CaseJoin only
  JoinShape shape = JoinShape::Edge;
  Int path_length = 0;
  std::shared_ptr<FamilySpec> piece;
  Int count = 0;
};

/// Pairing tree with n leaves, trivalent away from the leaves. The unrooted
/// form (n >= 3) closes with an edge between the last two tops or a hub under
/// the last three; the rooted form (n a power of two) keeps pairing down to a
/// single bivalent root. Leaves are vertices 0..n-1; internal vertices follow
/// in creation order.
LabeledGraph tree_T(Int n, bool rooted = false);

/// Loop-decorated pairing tree of genus g (g >= 3), trivalent. For
/// g = 3*2^m + 1 the base is a central triangle with rooted trees on its
/// vertices ("central-triangle" mark); for g = 3(2^m + 2^p), m > p+1, three
/// fused line-graph pieces hang off a star.
LabeledGraph graph_C(Int g);

/// Loop-free cousin of graph_C built from cones and doubled edges; genus g,
/// trivalent, defined for g >= 6.
LabeledGraph graph_C_prime(Int g);

/// The 2(g-1)-gon with every other edge doubled; genus g >= 3, 3-regular.
/// "doubled-pairs" lists the doubled edges as consecutive vertex pairs.
LabeledGraph loop_of_loops(Int g);

/// Pinched tetrahedra fused onto the leaves of the rooted tree with 2^m
/// leaves; genus 3*2^m, unique bivalent vertex at the "root" mark.
LabeledGraph a_graph(Int m);
/// Pinched K33s on the rooted tree with 2^(m-2) leaves; genus 2^m, m >= 2.
LabeledGraph b_graph(Int m);

LabeledGraph cone();                 // triangle with one doubled edge, genus 2
LabeledGraph k23();                  // complete bipartite K_{2,3}, genus 2
LabeledGraph pinched_tetrahedron();  // K4 with one subdivided edge, genus 3
LabeledGraph pinched_k33();          // K33 with one subdivided edge, genus 4

LabeledGraph tetrahedron();
LabeledGraph complete_bipartite_33();
LabeledGraph cube();
LabeledGraph petersen();
LabeledGraph heawood();
LabeledGraph genus7_max();
LabeledGraph c12_double_prime();

/// Joins `count` copies of `piece` (which must carry a "root" mark) onto a
/// shape skeleton by bridge edges: a common star center (3), a root-to-root
/// edge (2), a junction path (path_length + 2), the bivalent side of K_{2,3}
/// (3), a cycle (3/4/5), or two triangles sharing an edge (2).
LabeledGraph case_join(JoinShape shape, Int path_length,
                       const LabeledGraph& piece, Int count);

LabeledGraph build(const FamilySpec& spec);

FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);
std::string to_string(JoinShape shape);

}  // namespace chipfire
