#include "homog/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace homog {

StructuredMesh build_mesh(double R, int n_per_cell, int dim) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("mesh: dim must be 1 or 2");
  if (n_per_cell < 2) throw std::invalid_argument("mesh: need at least 2 intervals per unit");
  if (!(R >= 1.0)) throw std::invalid_argument("mesh: sampling box edge R must be >= 1");
  StructuredMesh mesh;
  mesh.dim = dim;
  mesh.n_per_cell = n_per_cell;
  mesh.m = static_cast<int>(std::lround(R * n_per_cell));
  mesh.h = 1.0 / n_per_cell;
  mesh.R = static_cast<double>(mesh.m) / n_per_cell;
  mesh.periodic = false;
  return mesh;
}

StructuredMesh build_periodic_cell_mesh(int n_per_cell, int dim) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("mesh: dim must be 1 or 2");
  if (n_per_cell < 2) throw std::invalid_argument("mesh: need at least 2 intervals per unit");
  StructuredMesh mesh;
  mesh.dim = dim;
  mesh.n_per_cell = n_per_cell;
  mesh.m = n_per_cell;
  mesh.h = 1.0 / n_per_cell;
  mesh.R = 1.0;
  mesh.periodic = true;
  return mesh;
}

}  // namespace homog
