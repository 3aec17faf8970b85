#pragma once

// Brute-force reference implementations used only by the tests. Elements are
// integer matrices acting on root coordinates, built directly from the Cartan
// matrix; nothing here touches the root permutation tables of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <span>
#include <vector>

#include "schubert/coxeter.hpp"
#include "schubert/group.hpp"

namespace oracle {

using Vec = std::vector<int>;

struct Mat {
  int n = 0;
  std::vector<int> a;  // row major

  int at(int i, int j) const { return a[i * n + j]; }
  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& x, const Mat& y) { return x.a <=> y.a; }
};

inline Mat identity(int n) {
  Mat m{n, std::vector<int>(n * n, 0)};
  for (int i = 0; i < n; ++i) m.a[i * n + i] = 1;
  return m;
}

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat m{x.n, std::vector<int>(x.n * x.n, 0)};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k)
      for (int j = 0; j < x.n; ++j) m.a[i * x.n + j] += x.at(i, k) * y.at(k, j);
  return m;
}

inline Vec apply(const Mat& m, const Vec& v) {
  Vec out(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

// The reflection group in its root-coordinate representation.
struct Reference {
  int n = 0;
  std::vector<Mat> gens;
  std::vector<Vec> positive_roots;
  std::vector<Mat> elements;
  std::set<Mat> reflections;

  explicit Reference(const schubert::CartanMatrix& cartan) : n(static_cast<int>(cartan.size())) {
    for (int i = 0; i < n; ++i) {
      Mat s = identity(n);
      for (int j = 0; j < n; ++j) s.a[i * n + j] -= cartan[i][j];
      gens.push_back(s);
    }
    std::set<Vec> roots;
    std::vector<Vec> frontier;
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      roots.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& r : frontier) {
        for (const auto& s : gens) {
          Vec img = apply(s, r);
          if (std::all_of(img.begin(), img.end(), [](int c) { return c >= 0; }) &&
              roots.insert(img).second) {
            next.push_back(img);
          }
        }
      }
      frontier = std::move(next);
    }
    positive_roots.assign(roots.begin(), roots.end());

    std::set<Mat> seen{identity(n)};
    std::queue<Mat> q;
    q.push(identity(n));
    while (!q.empty()) {
      Mat w = q.front();
      q.pop();
      elements.push_back(w);
      for (const auto& s : gens) {
        Mat sw = s * w;
        if (seen.insert(sw).second) q.push(sw);
      }
    }
    for (const auto& w : elements) {
      for (const auto& s : gens) reflections.insert(w * s * inverse(w));
    }
  }

  int length(const Mat& w) const {
    int count = 0;
    for (const auto& r : positive_roots) {
      const Vec img = apply(w, r);
      if (std::any_of(img.begin(), img.end(), [](int c) { return c < 0; })) ++count;
    }
    return count;
  }

  // Finite group: w^-1 = w^(k-1) where k is the order of w.
  Mat inverse(const Mat& w) const {
    Mat prev = identity(n);
    Mat cur = w;
    while (!(cur == identity(n))) {
      prev = cur;
      cur = cur * w;
    }
    return prev;
  }

  Mat from_word(std::span<const int> word) const {
    Mat m = identity(n);
    for (int i : word) m = m * gens[i];
    return m;
  }

  bool is_reflection(const Mat& m) const { return reflections.count(m) > 0; }

  std::vector<int> left_descents(const Mat& w) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
      if (length(gens[i] * w) < length(w)) out.push_back(i);
    }
    return out;
  }

  // N(w) = { t : l(tw) < l(w) }
  std::set<Mat> inversions(const Mat& w) const {
    std::set<Mat> out;
    for (const auto& t : reflections) {
      if (length(t * w) < length(w)) out.insert(t);
    }
    return out;
  }

  // Subword property: [e, w] is the set of products of subwords of a reduced word.
  std::set<Mat> interval(std::span<const int> reduced_word) const {
    std::set<Mat> out;
    const std::size_t k = reduced_word.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Mat m = identity(n);
      for (std::size_t b = 0; b < k; ++b) {
        if (mask >> b & 1) m = m * gens[reduced_word[b]];
      }
      out.insert(m);
    }
    return out;
  }

  // u <= w by breadth-first search along length-raising reflection edges.
  bool chain_leq(const Mat& u, const Mat& w) const {
    const int lw = length(w);
    std::set<Mat> seen{u};
    std::queue<Mat> q;
    q.push(u);
    while (!q.empty()) {
      Mat z = q.front();
      q.pop();
      if (z == w) return true;
      const int lz = length(z);
      if (lz >= lw) continue;
      for (const auto& t : reflections) {
        Mat y = z * t;
        if (length(y) > lz && length(y) <= lw && seen.insert(y).second) q.push(y);
      }
    }
    return false;
  }

  bool edge(const Mat& a, const Mat& b) const {
    return is_reflection(inverse(a) * b) && length(a) < length(b);
  }

  std::map<Mat, int> degrees(const std::set<Mat>& interval) const {
    std::map<Mat, int> deg;
    for (const auto& a : interval) deg[a] = 0;
    for (const auto& a : interval) {
      for (const auto& t : reflections) {
        Mat b = a * t;
        if (length(b) > length(a) && interval.count(b)) {
          ++deg[a];
          ++deg[b];
        }
      }
    }
    return deg;
  }

  bool regular(const std::set<Mat>& interval) const {
    std::set<int> values;
    for (const auto& [z, d] : degrees(interval)) values.insert(d);
    return values.size() == 1;
  }

  // Literal broken-rhombus search over ordered pairs of out-neighbours.
  bool has_broken_rhombus(const std::set<Mat>& interval) const {
    auto up = [&](const Mat& a) {
      std::vector<Mat> out;
      for (const auto& t : reflections) {
        Mat b = a * t;
        if (length(b) > length(a)) out.push_back(b);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    for (const auto& u : interval) {
      std::vector<Mat> ups;
      for (const auto& b : up(u)) {
        if (interval.count(b)) ups.push_back(b);
      }
      for (std::size_t i = 0; i < ups.size(); ++i) {
        const auto from_x = up(ups[i]);
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
          const auto from_v = up(ups[j]);
          std::vector<Mat> ys;
          std::set_intersection(from_x.begin(), from_x.end(), from_v.begin(), from_v.end(),
                                std::back_inserter(ys));
          if (ys.empty()) continue;
          if (std::none_of(ys.begin(), ys.end(), [&](const Mat& y) { return interval.count(y); })) {
            return true;
          }
        }
      }
    }
    return false;
  }
};

inline Mat to_matrix(const Reference& ref, const schubert::Group& group, schubert::ElementId w) {
  return ref.from_word(group.word(w));
}

}  // namespace oracle
