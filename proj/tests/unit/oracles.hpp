#pragma once

// Independent models for cross-checking the library. None of them use the
// normal-form code: group elements are integer matrices of the geometric
// (Tits) representation, which is faithful, and graph facts come from plain BFS.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "cubemedian/racg.hpp"

namespace oracle {

using cubemedian::DefiningGraph;
using cubemedian::Generator;
using cubemedian::Word;

class MatrixRacg {
 public:
  using Matrix = std::vector<long long>;

  explicit MatrixRacg(const DefiningGraph& g) : n_(g.rank()) {
    // B(e_s, e_t) = 1 on the diagonal, 0 for commuting pairs, -1 otherwise.
    for (std::size_t s = 0; s < n_; ++s) {
      Matrix m = identity();
      for (std::size_t t = 0; t < n_; ++t) {
        long long b = s == t ? 1 : (g.commutes(static_cast<Generator>(s), static_cast<Generator>(t)) ? 0 : -1);
        // sigma_s(e_t) = e_t - 2 B(e_s, e_t) e_s; column t
        m[s * n_ + t] -= 2 * b;
      }
      gens_.push_back(m);
    }
  }

  Matrix identity() const {
    Matrix m(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }
  const Matrix& gen(std::size_t s) const { return gens_[s]; }

  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix c(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        if (a[i * n_ + k])
          for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
    return c;
  }

  Matrix ofWord(const Word& w) const {
    Matrix m = identity();
    for (Generator s : w) m = mul(m, gens_[s]);
    return m;
  }

  // Word length of every element up to the radius, by BFS on matrices.
  std::map<Matrix, int> lengths(int radius) const {
    std::map<Matrix, int> out{{identity(), 0}};
    std::vector<Matrix> frontier{identity()};
    for (int r = 1; r <= radius; ++r) {
      std::vector<Matrix> next;
      for (const auto& m : frontier) {
        for (std::size_t s = 0; s < n_; ++s) {
          Matrix x = mul(m, gens_[s]);
          if (out.emplace(x, r).second) next.push_back(std::move(x));
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  std::vector<std::size_t> sphereSizes(int radius) const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(radius) + 1, 0);
    for (const auto& [m, r] : lengths(radius)) ++sizes[static_cast<std::size_t>(r)];
    return sizes;
  }

  std::size_t rank() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Matrix> gens_;
};

// Every word of length <= radius.
inline std::vector<Word> allWords(std::size_t rank, int radius) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < rank; ++s) {
        Word w = out[i];
        w.push_back(static_cast<Generator>(s));
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// All-pairs BFS distances of a graph given by adjacency lists.
inline std::vector<std::vector<int>> bfsDistances(const std::vector<std::vector<int>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(static_cast<int>(s));
    d[s][s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (d[s][static_cast<std::size_t>(v)] < 0) {
          d[s][static_cast<std::size_t>(v)] = d[s][static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
  }
  return d;
}

// Median set of (u, v, w) by brute force over all vertices.
inline std::vector<int> medianSet(const std::vector<std::vector<int>>& d, int u, int v, int w) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(d.size()); ++x) {
    auto between = [&](int a, int b) { return d[a][x] + d[x][b] == d[a][b]; };
    if (between(u, v) && between(v, w) && between(u, w)) out.push_back(x);
  }
  return out;
}

// Cartesian product of two graphs (median graphs are closed under it).
inline std::pair<int, std::vector<std::pair<int, int>>> product(
    int n1, const std::vector<std::pair<int, int>>& e1, int n2, const std::vector<std::pair<int, int>>& e2) {
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < n2; ++b)
    for (auto [u, v] : e1) edges.emplace_back(u * n2 + b, v * n2 + b);
  for (int a = 0; a < n1; ++a)
    for (auto [u, v] : e2) edges.emplace_back(a * n2 + u, a * n2 + v);
  return {n1 * n2, edges};
}

}  // namespace oracle
