#pragma once

#include <limits>
#include <vector>

#include "srips/complex.hpp"
#include "srips/filtration.hpp"

namespace srips {

// GF(2) boundary of the dim-simplices: one sorted list of facet positions
// (indices into simplices(dim - 1)) per column.
struct BoundaryMatrix {
  int dim = 0;
  std::size_t rows = 0;
  std::vector<std::vector<Index>> columns;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int dim);

// Rank over GF(2) by column reduction.
std::size_t gf2_rank(std::vector<std::vector<Index>> columns);

// beta_0..beta_dim_cap of the complex as given. beta_dim_cap is exact only
// when the complex contains its (dim_cap + 1)-simplices.
std::vector<std::size_t> betti(const SimplicialComplex& complex, int dim_cap);

long euler_characteristic(const SimplicialComplex& complex);

// Checks that every composite boundary of consecutive dimensions vanishes.
bool boundary_squared_vanishes(const SimplicialComplex& complex);

struct PersistenceInterval {
  int dim = 0;
  double birth = 0.0;
  double death = std::numeric_limits<double>::infinity();

  bool infinite() const noexcept { return death == std::numeric_limits<double>::infinity(); }
  friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
};

// Half-open intervals [birth, death), sorted by (dim, birth, death).
// Zero-length intervals are omitted.
struct Barcode {
  std::vector<PersistenceInterval> intervals;

  std::vector<PersistenceInterval> in_dim(int dim) const;
  // Number of dim-intervals alive at t: birth <= t < death.
  std::size_t rank_at(int dim, double t) const;
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

enum class Reduction { plain, clearing };

// Standard column reduction in filtration order; intervals up to dim_cap.
Barcode persistence(const Filtration& filtration, int dim_cap,
                    Reduction mode = Reduction::clearing);

// Rank of H_dim(sub) -> H_dim(super) over GF(2). Throws PreconditionError if
// sub is not a subcomplex of super.
std::size_t induced_rank(const SimplicialComplex& sub, const SimplicialComplex& super, int dim);

}  // namespace srips
