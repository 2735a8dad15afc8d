#include "genus_forge/covering.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "genus_forge/error.hpp"

namespace genus {

Tower tower(int k, int depth) {
  if (k < 1 || depth < 1) throw Error(ErrorKind::DomainError, "tower needs k >= 1 and depth >= 1");
  Tower t;
  t.k = k;
  for (int j = 1; j <= depth; ++j) {
    t.scales.push_back(pow(Rational(2), static_cast<unsigned>(j - 1)));
    t.indices.push_back(pow(Rational(2), static_cast<unsigned>((j - 1) * k)));
  }
  return t;
}

TorusQuotientGraph::TorusQuotientGraph(std::vector<int> moduli, std::size_t vertex_cap) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error(ErrorKind::DomainError, "torus graph needs rank >= 1");
  for (int n : moduli_) {
    if (n < 1) throw Error(ErrorKind::DomainError, "moduli must be positive");
    if (vertices_ > vertex_cap / static_cast<std::size_t>(n))
      throw Error(ErrorKind::TooLarge, "graph exceeds " + std::to_string(vertex_cap) + " vertices");
    vertices_ *= static_cast<std::size_t>(n);
  }
}

std::vector<std::size_t> TorusQuotientGraph::strides() const {
  // Mixed-radix vertex ids; stride[i] is the id step of coordinate i.
  std::vector<std::size_t> stride(moduli_.size(), 1);
  for (std::size_t i = 1; i < moduli_.size(); ++i) stride[i] = stride[i - 1] * static_cast<std::size_t>(moduli_[i - 1]);
  return stride;
}

namespace {

std::size_t step(std::size_t v, std::size_t stride, std::size_t n, std::size_t by) {
  const std::size_t coord = (v / stride) % n;
  return v - coord * stride + ((coord + by) % n) * stride;
}

}  // namespace

std::vector<int> TorusQuotientGraph::distances_from_zero() const {
  const auto stride = strides();
  std::vector<int> dist(vertices_, -1);
  std::vector<std::size_t> frontier{0}, next;
  dist[0] = 0;
  for (int level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (std::size_t v : frontier)
      for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const auto n = static_cast<std::size_t>(moduli_[i]);
        for (std::size_t w : {step(v, stride[i], n, 1), step(v, stride[i], n, n - 1)}) {
          if (dist[w] >= 0) continue;
          dist[w] = level;
          next.push_back(w);
        }
      }
    frontier.swap(next);
  }
  return dist;
}

int TorusQuotientGraph::bfs_diameter() const {
  const auto dist = distances_from_zero();
  return *std::max_element(dist.begin(), dist.end());
}

Rational TorusQuotientGraph::length_diameter() const {
  // By transitivity one point x sits at parameter t on the edge (0, e_i); the
  // other point y at parameter s on an edge (c, c + e_j). The distance is the
  // least of the four routes through the endpoints (plus |t - s| on the same
  // edge). All breakpoints of this min lie on the half-integer grid, so
  // t, s in {0, 1/2, 1} suffice. Work in doubled units.
  const auto stride = strides();
  const auto dist = distances_from_zero();
  int best = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto ni = static_cast<std::size_t>(moduli_[i]);
    for (std::size_t c = 0; c < vertices_; ++c) {
      const std::size_t c_back = step(c, stride[i], ni, ni - 1);  // c - e_i
      for (std::size_t j = 0; j < moduli_.size(); ++j) {
        const auto nj = static_cast<std::size_t>(moduli_[j]);
        const std::size_t d = step(c, stride[j], nj, 1);
        const int a = 2 * dist[c], b = 2 * dist[d];
        const int a1 = 2 * dist[c_back], b1 = 2 * dist[step(d, stride[i], ni, ni - 1)];
        const bool same_edge = c == 0 && i == j;
        for (int t = 0; t <= 2; ++t)
          for (int s = 0; s <= 2; ++s) {
            int v = std::min({t + a + s, t + b + 2 - s, 2 - t + a1 + s, 2 - t + b1 + 2 - s});
            if (same_edge) v = std::min(v, std::abs(t - s));
            best = std::max(best, v);
          }
      }
    }
  }
  return Rational(best, 2);
}

int TorusQuotientGraph::closed_form_diameter() const {
  int d = 0;
  for (int n : moduli_) d += n / 2;
  return d;
}

CoverDiameter cover_diameter(int k, std::span<const int> base_moduli, int sub_factor, std::size_t vertex_cap) {
  if (k < 1 || static_cast<int>(base_moduli.size()) != k)
    throw Error(ErrorKind::DomainError, "expected " + std::to_string(k) + " base moduli");
  if (sub_factor < 1) throw Error(ErrorKind::DomainError, "sub_factor must be at least 1");
  std::vector<int> base(base_moduli.begin(), base_moduli.end());
  std::vector<int> cover;
  for (int n : base) {
    if (n > std::numeric_limits<int>::max() / sub_factor) throw Error(ErrorKind::TooLarge, "modulus overflow");
    cover.push_back(n * sub_factor);
  }
  const TorusQuotientGraph base_graph(base, vertex_cap);
  const TorusQuotientGraph cover_graph(cover, vertex_cap);
  CoverDiameter out;
  out.base_diam = base_graph.bfs_diameter();
  out.cover_diam = cover_graph.bfs_diameter();
  out.base_length_diam = base_graph.length_diameter();
  out.cover_length_diam = cover_graph.length_diameter();
  out.index = pow(Rational(sub_factor), static_cast<unsigned>(k));
  out.inequality_holds = out.cover_length_diam <= out.index * out.base_length_diam;
  out.vertex_inequality_holds = Rational(out.cover_diam) <= out.index * Rational(out.base_diam);
  return out;
}

std::vector<Rational> l2_betti_ratio(int k, int p, int depth) {
  if (k < 1 || depth < 1) throw Error(ErrorKind::DomainError, "need k >= 1 and depth >= 1");
  if (p < 0 || p > k) throw Error(ErrorKind::DomainError, "degree p must lie in [0, k]");
  const Tower t = tower(k, depth);
  const Rational betti = binomial(static_cast<unsigned>(k), static_cast<unsigned>(p));
  std::vector<Rational> out;
  for (const auto& index : t.indices) out.push_back(betti / index);
  return out;
}

}  // namespace genus
