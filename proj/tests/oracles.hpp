#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond plain containers.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Vertices = std::vector<std::uint32_t>;

struct Bar {
  int dim = 0;
  double birth = 0.0;
  double death = std::numeric_limits<double>::infinity();
};

// Random metric: shortest-path closure of random positive weights.
Matrix random_metric(std::size_t n, std::mt19937_64& rng, double lo = 0.1, double hi = 1.0);
// Euclidean distances of random points in the unit square.
Matrix random_planar(std::size_t n, std::mt19937_64& rng);

// Every vertex subset of size <= dim_cap + 1 whose pairwise distances are < r,
// sorted by size then lexicographically.
std::vector<Vertices> flag_complex(const Matrix& d, double r, int dim_cap);

// Enumerates all set partitions of sigma (restricted growth strings) and
// checks: for each i in 1..|sigma|-1, some partition into <= i blocks has
// every block of diameter < scales[min(i, size) - 1].
bool partition_member(const Matrix& d, const Vertices& sigma, const std::vector<double>& scales);

// Smallest w such that sigma splits into <= i blocks of diameter <= w, by
// trying every partition.
double partition_width(const Matrix& d, const Vertices& sigma, std::size_t i);

// Rank over GF(2) of dense 0/1 rows by Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> rows);

// Betti numbers up to dim_cap of the complex given by its full simplex list.
std::vector<std::size_t> dense_betti(const std::vector<Vertices>& simplices, int dim_cap);

// Standard left-to-right column reduction on dense GF(2) columns. The input
// must be in filtration order. Zero-length bars are dropped; bars are sorted
// by (dim, birth, death).
std::vector<Bar> dense_persistence(const std::vector<Vertices>& simplices, const std::vector<double>& births);

// Vietoris-Rips filtration by brute force: every subset up to dim_cap + 1
// vertices, birth = longest edge, ordered by (birth, dim, lex).
void rips_filtration(const Matrix& d, int dim_cap, std::vector<Vertices>& simplices, std::vector<double>& births);

// Largest ball centred on the segment from the centre to y inside the lens
// B(p, r_inf) & B(p', r_inf), where p, p' are the points at distance r' from
// the centre and r_inf from y, |y| = r'. Bisection for p, golden section for
// the centre.
double two_disc_inscribed_radius(double r_inf, double r_prime);

}  // namespace oracle
