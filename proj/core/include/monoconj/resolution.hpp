#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoconj/factor_product.hpp"
#include "monoconj/qspace.hpp"
#include "monoconj/semigroup.hpp"

namespace monoconj {

struct Level {
  int k = 0;
  BigInt r;  // number of components of E_k
  BigInt N;  // multiplicity of E_k
  BigInt M;  // multiplicity at the Q_k points
  std::vector<BigInt> weights;
  BigInt chi_open;                // Euler characteristic of the open part of E_k
  BigInt chi_open_per_component;  // chi_open / r

  friend bool operator==(const Level&, const Level&) = default;
};

enum class NodeKind { Exceptional, Boundary, Strict };

struct Node {
  NodeKind kind = NodeKind::Exceptional;
  int k = 0;          // level (Exceptional) or index i of H_i (Boundary)
  std::size_t j = 0;  // 1-based component index (Exceptional)

  std::string id() const;
  std::string label(const BigInt& N) const;
  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  std::string u, v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Q0 and Qk are single-divisor point groups; Qkk1 is E_k meet E_{k+1}; StrictMeet is E_g meet the strict transform.
enum class StratumKind { Q0, Qk, Qkk1, StrictMeet };

struct Stratum {
  StratumKind kind = StratumKind::Q0;
  int k = 0;
  BigInt count;
  std::optional<BigInt> multiplicity;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct LocalType {
  std::string at;
  CyclicQuotientType type;
  std::optional<CyclicQuotientType> normalized;
  friend bool operator==(const LocalType&, const LocalType&) = default;
};

struct ResolutionGraph {
  std::vector<BigInt> gens;
  std::vector<Level> levels;  // levels[k-1] describes E_k
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<Stratum> strata;
  std::vector<LocalType> local_types;

  int g() const { return static_cast<int>(levels.size()); }
  const Level& level(int k) const { return levels.at(static_cast<std::size_t>(k - 1)); }
  const Stratum& stratum(StratumKind kind, int k) const;
  const LocalType* local_type(const std::string& at) const;
  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

// Refuses graphs with more exceptional components than this.
inline constexpr std::size_t kMaxGraphComponents = 2'000'000;

ResolutionGraph build_resolution(const PlaneSemigroup& sg);
// Re-checks every structural invariant; throws InternalInconsistency on failure.
void validate_graph(const ResolutionGraph& graph);
// Cross-validates the graph against counts derived from the weighted homogeneous systems.
void cross_validate_with_curves(const PlaneSemigroup& sg, const ResolutionGraph& graph);

FactorProduct zeta_from_graph(const ResolutionGraph& graph);

enum class GraphFormat { Dot, Json };
std::string export_graph(const ResolutionGraph& graph, GraphFormat format);
ResolutionGraph parse_graph_json(const std::string& text);

}  // namespace monoconj
