#include "dihedral/genset.hpp"

#include <numeric>
#include <queue>
#include <sstream>

#include "dihedral/errors.hpp"

namespace dihedral::genset {

GenSet::GenSet(std::vector<long> betas, std::vector<long> gammas)
    : betas_(std::move(betas)), gammas_(std::move(gammas)) {
  if (gammas_.empty())
    throw InvalidParameters("at least one reflection exponent is required");
  for (size_t i = 0; i < betas_.size(); ++i) {
    if (betas_[i] < 1)
      throw InvalidParameters("rotation exponents must be >= 1");
    if (i > 0 && betas_[i] <= betas_[i - 1])
      throw InvalidParameters("rotation exponents must be strictly increasing");
  }
  for (size_t i = 0; i < gammas_.size(); ++i) {
    if (gammas_[i] < 0)
      throw InvalidParameters("reflection exponents must be >= 0");
    if (i > 0 && gammas_[i] <= gammas_[i - 1])
      throw InvalidParameters(
          "reflection exponents must be strictly increasing");
  }
}

std::string GenSet::describe() const {
  std::ostringstream os;
  os << "betas={";
  for (size_t i = 0; i < betas_.size(); ++i) os << (i ? "," : "") << betas_[i];
  os << "} gammas={";
  for (size_t i = 0; i < gammas_.size(); ++i)
    os << (i ? "," : "") << gammas_[i];
  os << "}";
  return os.str();
}

ValidationReport validate(const GenSet& gs, long n) {
  ValidationReport rep;
  if (n < 1) {
    rep.violations.push_back("n >= 1 fails");
    return rep;
  }
  rep.formula_valid = true;
  rep.graph_valid = true;
  if (!gs.betas().empty() && 2 * gs.betas().back() >= n) {
    rep.graph_valid = false;
    rep.violations.push_back("beta_max < n/2 fails");
  }
  if (gs.gammas().back() > n - 1) {
    rep.graph_valid = false;
    rep.violations.push_back("gamma_max <= n-1 fails");
  }
  return rep;
}

bool is_connected(const GenSet& gs, long n) {
  if (n < 1) throw InvalidParameters("n must be >= 1");
  long g = n;
  for (long b : gs.betas()) g = std::gcd(g, b);
  const auto& gam = gs.gammas();
  for (size_t j = 0; j < gam.size(); ++j)
    for (size_t k = j + 1; k < gam.size(); ++k)
      g = std::gcd(g, gam[k] - gam[j]);
  return g == 1;
}

Graph::Graph(long n) : n_(n) {
  if (n < 1) throw InvalidParameters("graph requires n >= 1");
}

void Graph::add_edge(long u, long v) {
  if (u > v) std::swap(u, v);
  ++edges_[{u, v}];
}

long Graph::edge_count() const {
  long c = 0;
  for (const auto& [uv, m] : edges_) c += m;
  return c;
}

long Graph::degree(long v) const {
  long d = 0;
  for (const auto& [uv, m] : edges_) {
    if (uv.first == v) d += m;
    if (uv.second == v) d += m;  // a loop contributes twice
  }
  return d;
}

std::vector<std::vector<long>> Graph::adjacency() const {
  std::vector<std::vector<long>> adj(vertex_count());
  for (const auto& [uv, m] : edges_) {
    adj[uv.first].push_back(uv.second);
    if (uv.first != uv.second) adj[uv.second].push_back(uv.first);
  }
  return adj;
}

Graph build_graph(const GenSet& gs, long n) {
  ValidationReport rep = validate(gs, n);
  if (!rep.graph_valid) {
    std::string msg = "not graph-valid:";
    for (const auto& v : rep.violations) msg += " " + v;
    throw InvalidParameters(msg);
  }
  Graph g(n);
  // Rotation generators act within each block: b^k -> b^{k+beta} and
  // b^k a -> b^{k-beta} a; over all k both orbits trace the same edge set
  // {k, k+beta mod n} per block.
  for (long b : gs.betas()) {
    for (long k = 0; k < n; ++k) {
      g.add_edge(k, (k + b) % n);
      g.add_edge(n + k, n + (k + b) % n);
    }
  }
  // Reflection generators swap blocks: b^k -> b^{k-gamma} a.
  for (long c : gs.gammas()) {
    for (long k = 0; k < n; ++k) {
      g.add_edge(k, n + ((k - c) % n + n) % n);
    }
  }
  return g;
}

bool connected_bfs(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<long> q;
  q.push(0);
  seen[0] = 1;
  long count = 1;
  while (!q.empty()) {
    long u = q.front();
    q.pop();
    for (long v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == g.vertex_count();
}

IntegerMatrix laplacian(const Graph& g) {
  IntegerMatrix m(g.vertex_count());
  for (const auto& [uv, mult] : g.edges()) {
    auto [u, v] = uv;
    if (u == v) continue;  // loops do not affect D - A
    m(u, v) -= mult;
    m(v, u) -= mult;
    m(u, u) += mult;
    m(v, v) += mult;
  }
  return m;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph cayley {\n";
  for (const auto& [uv, mult] : g.edges())
    for (long i = 0; i < mult; ++i)
      os << "  " << uv.first << " -- " << uv.second << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const auto& [uv, mult] : g.edges())
    for (long i = 0; i < mult; ++i)
      os << uv.first << " " << uv.second << "\n";
  return os.str();
}

}  // namespace dihedral::genset
