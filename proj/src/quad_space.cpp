#include "spinor/quad_space.hpp"

namespace spinor {

QuadSpace from_diagonal(const FieldModel& m, const std::vector<SquareClass>& entries) {
  QuadSpace v;
  v.model = &m;
  v.dim = static_cast<int>(entries.size());
  v.det = m.identity();
  v.hasse = 1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    v.det = m.mul(v.det, entries[i]);
    for (std::size_t j = i; j < entries.size(); ++j)
      v.hasse *= m.hilbert_of(entries[i], entries[j]);
  }
  return v;
}

bool isometric(const QuadSpace& v, const QuadSpace& w) {
  if (v.model != w.model) throw ValidationError("space comparison across models");
  return v == w;
}

QuadSpace orthogonal_sum(const QuadSpace& v, const QuadSpace& w) {
  if (v.model != w.model) throw ValidationError("orthogonal sum across models");
  const FieldModel& m = *v.model;
  QuadSpace s;
  s.model = v.model;
  s.dim = v.dim + w.dim;
  s.det = m.mul(v.det, w.det);
  s.hasse = v.hasse * w.hasse * m.hilbert_of(v.det, w.det);
  return s;
}

bool space_exists(const FieldModel& m, int dim, SquareClass det, int hasse) {
  if (dim < 0) return false;
  if (dim == 0) return det == m.identity() && hasse == 1;
  if (dim == 1) return hasse == m.hilbert_of(det, det);
  if (dim == 2 && det == m.minus_one()) return hasse == m.hilbert_of(m.minus_one(), m.minus_one());
  return true;
}

bool represents(const QuadSpace& v, const QuadSpace& w) {
  if (v.model != w.model) throw ValidationError("representation test across models");
  const FieldModel& m = *v.model;
  if (w.dim > v.dim) throw ValidationError("representation test needs dim W <= dim V");
  if (w.dim == v.dim) return v == w;
  int codim = v.dim - w.dim;
  SquareClass du = m.mul(v.det, w.det);
  // hasse(V) = hasse(W) * hasse(U) * (det W, det U)
  int hu = v.hasse * w.hasse * m.hilbert_of(w.det, du);
  return space_exists(m, codim, du, hu);
}

}  // namespace spinor
