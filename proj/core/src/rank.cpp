#include "evoalg/rank.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace evoalg {

namespace {

void check_cap(const FiniteGraph& g, const RankOptions& opt) {
  if (g.vertex_count() > opt.cap) {
    std::ostringstream os;
    os << "graph has " << g.vertex_count() << " vertices, above the exact-rank cap " << opt.cap;
    throw std::invalid_argument(os.str());
  }
}

std::vector<std::vector<mpz_class>> adjacency_mpz(const FiniteGraph& g) {
  const size_t n = static_cast<size_t>(g.vertex_count());
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
  for (VertexId i = 1; i <= g.vertex_count(); ++i) {
    for (VertexId j : g.neighbors(i)) a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;
  }
  return a;
}

}  // namespace

std::int64_t adjacency_rank(const FiniteGraph& g, const RankOptions& opt) {
  check_cap(g, opt);
  const size_t n = static_cast<size_t>(g.vertex_count());
  if (n == 0) return 0;
  auto m = adjacency_mpz(g);

  // fraction-free elimination: every division is exact, entries stay integer
  std::int64_t rank = 0;
  size_t row = 0;
  mpz_class prev = 1;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t pivot = row;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[row]);
    for (size_t i = row + 1; i < n; ++i) {
      for (size_t j = col + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++rank;
    ++row;
  }
  return rank;
}

bool non_singular(const FiniteGraph& g, const RankOptions& opt) {
  return adjacency_rank(g, opt) == g.vertex_count();
}

std::map<VertexId, std::int64_t> adjacency_kernel_vector(const FiniteGraph& g,
                                                         const RankOptions& opt) {
  check_cap(g, opt);
  const size_t n = static_cast<size_t>(g.vertex_count());
  std::map<VertexId, std::int64_t> out;
  if (n == 0) return out;

  // exact rational forward elimination, then back-substitute a free column
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  for (VertexId i = 1; i <= g.vertex_count(); ++i) {
    for (VertexId j : g.neighbors(i)) m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;
  }

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t pivot = row;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[row]);
    const mpq_class inv = 1 / m[row][col];
    for (size_t j = col; j < n; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const mpq_class factor = m[i][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= factor * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() == n) return out;  // non-singular

  // first free column f: x_f = 1, pivot variables read off the RREF
  std::vector<char> is_pivot(n, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<mpq_class> x(n, 0);
  x[free_col] = 1;
  for (size_t r = 0; r < pivot_col.size(); ++r) {
    x[pivot_col[r]] = -m[r][free_col];
  }

  // clear denominators, make primitive, first nonzero positive
  mpz_class lcm = 1;
  for (const mpq_class& q : x) {
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<mpz_class> z(n);
  mpz_class gcd = 0;
  for (size_t i = 0; i < n; ++i) {
    mpq_class scaled = x[i] * lcm;
    z[i] = scaled.get_num();  // denominator is 1 after scaling
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z[i].get_mpz_t());
  }
  if (gcd != 0) {
    for (auto& v : z) v /= gcd;
  }
  for (const auto& v : z) {
    if (v != 0) {
      if (v < 0) {
        for (auto& w : z) w = -w;
      }
      break;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (z[i] == 0) continue;
    if (!z[i].fits_slong_p()) {
      throw std::runtime_error("kernel vector entry exceeds 64-bit range");
    }
    out[static_cast<VertexId>(i + 1)] = z[i].get_si();
  }
  return out;
}

}  // namespace evoalg
