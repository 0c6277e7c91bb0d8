#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/numeric.hpp"

namespace dihedral::genset {

// Symmetric generating set of a dihedral group of order 2n: rotation
// exponents beta (acting as b^{+-beta}) and reflection exponents gamma
// (acting as a*b^{gamma}).  The set is independent of n; pairing it with a
// concrete n yields one Cayley graph on 2n vertices of degree 2s + t.
class GenSet {
 public:
  // Throws InvalidParameters unless betas is strictly increasing with
  // entries >= 1 and gammas is strictly increasing, nonempty, entries >= 0.
  GenSet(std::vector<long> betas, std::vector<long> gammas);

  const std::vector<long>& betas() const { return betas_; }
  const std::vector<long>& gammas() const { return gammas_; }
  long s() const { return static_cast<long>(betas_.size()); }
  long t() const { return static_cast<long>(gammas_.size()); }
  long degree() const { return 2 * s() + t(); }

  std::string describe() const;

 private:
  std::vector<long> betas_;
  std::vector<long> gammas_;
};

struct ValidationReport {
  // Closed-form engines accept the pair (any n >= 1).
  bool formula_valid = false;
  // The concrete simple graph exists: beta_max < n/2 and gamma_max <= n-1.
  bool graph_valid = false;
  std::vector<std::string> violations;
};

ValidationReport validate(const GenSet& gs, long n);

// Connectivity of the Cayley graph, decided arithmetically:
// gcd(n, all betas, all pairwise gamma differences) == 1.
bool is_connected(const GenSet& gs, long n);

// Undirected multigraph on vertices 0..2n-1.  Vertex k is the rotation
// b^k, vertex n+k the reflection b^k a.
class Graph {
 public:
  explicit Graph(long n);

  long n() const { return n_; }
  long vertex_count() const { return 2 * n_; }

  void add_edge(long u, long v);
  const std::map<std::pair<long, long>, long>& edges() const { return edges_; }
  long edge_count() const;
  long degree(long v) const;
  std::vector<std::vector<long>> adjacency() const;

 private:
  long n_;
  std::map<std::pair<long, long>, long> edges_;  // (u <= v) -> multiplicity
};

// Builds the Cayley graph for a graph-valid pair; throws InvalidParameters
// otherwise.  Each undirected edge appears exactly once.
Graph build_graph(const GenSet& gs, long n);

// Breadth-first connectivity on an explicit graph; used to cross-check the
// gcd criterion.
bool connected_bfs(const Graph& g);

// Dense square matrix of exact integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() : dim_(0) {}
  explicit IntegerMatrix(long dim) : dim_(dim), a_(dim * dim) {}

  long dim() const { return dim_; }
  Int& operator()(long i, long j) { return a_[i * dim_ + j]; }
  const Int& operator()(long i, long j) const { return a_[i * dim_ + j]; }

 private:
  long dim_;
  std::vector<Int> a_;
};

// Combinatorial Laplacian D - A of a graph (diagonal of degrees minus
// adjacency multiplicities).
IntegerMatrix laplacian(const Graph& g);

std::string to_dot(const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace dihedral::genset
