#include "evoalg/sparse_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace evoalg {

SparseVector basis(VertexId i) {
  if (i < 1) throw std::invalid_argument("basis index must be >= 1");
  SparseVector v;
  v.set(i, 1.0);
  return v;
}

SparseVector add(const SparseVector& v, const SparseVector& w) {
  SparseVector out = v;
  for (const auto& [i, c] : w.entries()) out.accumulate(i, c);
  return out;
}

SparseVector scale(double c, const SparseVector& v) {
  SparseVector out;
  for (const auto& [i, x] : v.entries()) out.set(i, c * x);
  return out;
}

InnerProduct InnerProduct::standard() { return InnerProduct(Kind::Standard); }

InnerProduct InnerProduct::degree_weighted(Graph g) {
  InnerProduct ip(Kind::DegreeWeighted);
  ip.graph_ = std::move(g);
  return ip;
}

InnerProduct InnerProduct::alpha_induced(std::function<double(VertexId)> alpha) {
  InnerProduct ip(Kind::AlphaInduced);
  ip.alpha_ = std::move(alpha);
  return ip;
}

double InnerProduct::inner(const SparseVector& v, const SparseVector& w) const {
  double sum = 0.0;
  for (const auto& [i, vi] : v.entries()) {
    const double wi = w.coeff(i);
    if (wi == 0.0) continue;
    switch (kind_) {
      case Kind::Standard:
        sum += vi * wi;
        break;
      case Kind::DegreeWeighted: {
        const VertexId d = graph_->degree(i);
        if (d < 1) {
          std::ostringstream os;
          os << "degree-weighted inner product undefined: deg(" << i << ") = 0";
          throw std::invalid_argument(os.str());
        }
        sum += vi * wi * static_cast<double>(d);
        break;
      }
      case Kind::AlphaInduced: {
        const double a = alpha_(i);
        if (a == 0.0) {
          std::ostringstream os;
          os << "induced inner product undefined: alpha(" << i << ") = 0";
          throw std::invalid_argument(os.str());
        }
        sum += vi * wi * a * a;
        break;
      }
    }
  }
  return sum;
}

}  // namespace evoalg
