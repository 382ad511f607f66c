#pragma once

#include <vector>

#include "spinor/field_model.hpp"

namespace spinor {

// A regular quadratic space over the base field, up to isometry: dimension,
// determinant class and Hasse symbol (product over i <= j of the pairwise
// Hilbert symbols of a diagonalization).
struct QuadSpace {
  const FieldModel* model = nullptr;
  int dim = 0;
  SquareClass det{0};
  int hasse = 1;

  friend bool operator==(const QuadSpace&, const QuadSpace&) = default;
};

QuadSpace from_diagonal(const FieldModel& m, const std::vector<SquareClass>& entries);

bool isometric(const QuadSpace& v, const QuadSpace& w);

QuadSpace orthogonal_sum(const QuadSpace& v, const QuadSpace& w);

// Is there a space with these invariants? dim 1 forces hasse = (det,det),
// dim 2 with det = -1 forces the hyperbolic plane's hasse, dim 0 is trivial.
bool space_exists(const FieldModel& m, int dim, SquareClass det, int hasse);

// Is w represented by v (w isometric to a subspace of v)? Decided through the
// orthogonal complement: w < v iff v = w + u for a space u of the
// complementary dimension and determinant det(v)det(w), whose forced Hasse
// symbol must be realizable.
bool represents(const QuadSpace& v, const QuadSpace& w);

}  // namespace spinor
