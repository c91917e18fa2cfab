#pragma once

// The algebras Lambda(q) on the vertex set [0, delta]:
//   Lambda_{x,y} = image of R_{x-y} in S = R/(X_i^{q_i}),
// their quiver presentations, Cartan matrices, and the comparison with the
// tensor product of truncated linear quivers A_{p_i - 1}(q_i).

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "glacm/detail/integer_matrix.hpp"
#include "glacm/graded.hpp"
#include "glacm/picard.hpp"

namespace glacm {

struct QuiverArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t gen = 0;  ///< 0-based generator index i (arrow x -> x + x_i)
};

/// x_i x_j = x_j x_i on the square starting at `vertex` (i < j).
struct CommRelation {
  std::size_t vertex = 0;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// x_i^{q_i} = 0 on the path starting at `vertex`.
struct NilRelation {
  std::size_t vertex = 0;
  std::size_t gen = 0;
};

struct QuiverPresentation {
  std::vector<LElem> vertices;  ///< [0, delta] in lexicographic order
  std::vector<QuiverArrow> arrows;
  std::vector<CommRelation> comm;
  std::vector<NilRelation> nil;

  std::size_t index_of(const LElem& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw DomainError("vertex " + v.to_string() + " not in quiver");
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

/// Entry (x, y) = dim Lambda_{x,y}, rows and columns in vertex order.
struct CartanMatrix {
  std::vector<LElem> vertices;
  IntMatrix dims;

  Int total_dimension() const {
    Int t = 0;
    for (const auto& row : dims)
      for (Int v : row) t += v;
    return t;
  }
};

namespace tilting {

inline Int lambda_dim(const Weights& w, const LElem& x, const LElem& y, const Truncation& q) {
  picard::require_delta_box(w, x, "vertex");
  picard::require_delta_box(w, y, "vertex");
  return graded::dim_S(w, picard::sub(w, x, y), q);
}

inline QuiverPresentation quiver_presentation(const Weights& w, const Truncation& q) {
  QuiverPresentation pres;
  pres.vertices = picard::delta_box(w);
  auto in_box = [&w](const LElem& v) { return picard::in_delta_box(w, v); };
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    const LElem& x = pres.vertices[v];
    for (std::size_t i = 0; i < kArity; ++i) {
      const LElem xi = picard::generator(w, i);
      const LElem target = picard::add(w, x, xi);
      if (in_box(target)) pres.arrows.push_back({v, pres.index_of(target), i});
      for (std::size_t j = i + 1; j < kArity; ++j) {
        if (in_box(picard::add(w, target, picard::generator(w, j)))) pres.comm.push_back({v, i, j});
      }
      if (in_box(picard::add(w, x, picard::scale(w, q[i], xi)))) pres.nil.push_back({v, i});
    }
  }
  return pres;
}

inline CartanMatrix cartan_matrix(const Weights& w, const Truncation& q) {
  CartanMatrix c;
  c.vertices = picard::delta_box(w);
  const std::size_t n = c.vertices.size();
  c.dims.assign(n, std::vector<Int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c.dims[a][b] = lambda_dim(w, c.vertices[a], c.vertices[b], q);
  return c;
}

/// Cartan matrix of A_n(m) (linear quiver 0 -> 1 -> ... -> n-1, paths of
/// length < m): entry (a, b) = 1 iff 0 <= a - b <= m - 1.
inline IntMatrix truncated_linear_cartan(std::size_t n, Int m) {
  IntMatrix f(n, std::vector<Int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b <= a; ++b) f[a][b] = static_cast<Int>(a - b) <= m - 1 ? 1 : 0;
  return f;
}

/// Kronecker product, second factor varying fastest.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t ra = a.size(), rb = b.size();
  const std::size_t ca = ra ? a[0].size() : 0, cb = rb ? b[0].size() : 0;
  IntMatrix out(ra * rb, std::vector<Int>(ca * cb, 0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

/// A_{p_1-1}(q_1) (x) ... (x) A_{p_4-1}(q_4), factor 4 fastest.
inline IntMatrix tensor_cartan(const Weights& w, const Truncation& q) {
  IntMatrix acc{{1}};
  for (std::size_t i = 0; i < kArity; ++i) {
    acc = kronecker(acc, truncated_linear_cartan(static_cast<std::size_t>(w[i] - 1), q[i]));
  }
  return acc;
}

/// Path counts of the presented algebra: entry (x, y) = number of nonzero
/// paths y -> x modulo the listed relations. Paths are walked along the
/// arrow list; two paths are identified when they use the same number of
/// arrows of each kind (the commutativity squares), and a path dies once it
/// contains q_i arrows of kind i starting at a listed nil relation.
inline IntMatrix path_count_matrix(const QuiverPresentation& pres, const Truncation& q) {
  const std::size_t n = pres.vertices.size();
  std::vector<std::vector<const QuiverArrow*>> out_arrows(n);
  for (const auto& a : pres.arrows) out_arrows[a.from].push_back(&a);
  std::set<std::pair<std::size_t, std::size_t>> nil_at;
  for (const auto& r : pres.nil) nil_at.insert({r.vertex, r.gen});

  // Vertex reached after walking exponent vector `e` from `start`, using arrows.
  IntMatrix counts(n, std::vector<Int>(n, 0));
  using Exps = std::array<Int, kArity>;
  for (std::size_t start = 0; start < n; ++start) {
    std::map<Exps, std::size_t> seen;  // exponent vector -> vertex
    std::vector<std::pair<Exps, std::size_t>> stack{{Exps{}, start}};
    seen[Exps{}] = start;
    while (!stack.empty()) {
      auto [e, v] = stack.back();
      stack.pop_back();
      for (const QuiverArrow* a : out_arrows[v]) {
        Exps next = e;
        ++next[a->gen];
        if (next[a->gen] >= q[a->gen]) {
          // Reorder so the run of gen-arrows comes last; it starts q-1 steps back.
          std::size_t run_start = v;
          bool found = true;
          for (Int k = 0; k + 1 < q[a->gen]; ++k) {
            bool stepped = false;
            for (const auto& b : pres.arrows) {
              if (b.to == run_start && b.gen == a->gen) {
                run_start = b.from;
                stepped = true;
                break;
              }
            }
            if (!stepped) {
              found = false;
              break;
            }
          }
          if (found && nil_at.count({run_start, a->gen})) continue;
        }
        if (seen.emplace(next, a->to).second) stack.push_back({next, a->to});
      }
    }
    for (const auto& [e, v] : seen) ++counts[v][start];
  }
  return counts;
}

/// Cartan matrix agrees with the Kronecker product of factor Cartan matrices
/// and with path counting in the quiver presentation.
inline bool tensor_factor_check(const Weights& w, const Truncation& q, const IntMatrix& candidate) {
  if (candidate != tensor_cartan(w, q)) return false;
  return path_count_matrix(quiver_presentation(w, q), q) == candidate;
}

inline bool tensor_factor_check(const Weights& w, const Truncation& q) {
  return tensor_factor_check(w, q, cartan_matrix(w, q).dims);
}

inline std::string vertex_label(const LElem& v) {
  std::ostringstream os;
  os << v.lambda[0] << '.' << v.lambda[1] << '.' << v.lambda[2] << '.' << v.lambda[3];
  return os.str();
}

/// Graphviz rendering; relations are emitted as comments.
inline std::string to_dot(const Weights& w, const Truncation& q, const QuiverPresentation& pres) {
  std::ostringstream os;
  os << "digraph Lambda {\n";
  os << "  // weights " << w.to_string() << " q " << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3] << '\n';
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << vertex_label(pres.vertices[v]) << "\"];\n";
  }
  for (const auto& a : pres.arrows) {
    os << "  v" << a.from << " -> v" << a.to << " [label=\"x" << a.gen + 1 << "\"];\n";
  }
  for (const auto& r : pres.comm) {
    os << "  // comm x" << r.i + 1 << "x" << r.j + 1 << " = x" << r.j + 1 << "x" << r.i + 1 << " at "
       << vertex_label(pres.vertices[r.vertex]) << '\n';
  }
  for (const auto& r : pres.nil) {
    os << "  // nil x" << r.gen + 1 << "^" << q[r.gen] << " = 0 at " << vertex_label(pres.vertices[r.vertex])
       << '\n';
  }
  os << "}\n";
  return os.str();
}

}  // namespace tilting
}  // namespace glacm
