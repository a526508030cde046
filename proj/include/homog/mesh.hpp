#pragma once

#include <cstdint>

namespace homog {

// Uniform lattice over the centered cube K_R (or the unit cell for periodic
// meshes), h = 1/n_per_cell.  In d=2 each grid square is split into two
// triangles along the (i,j) -> (i+1,j+1) diagonal.
struct StructuredMesh {
  int dim = 2;
  int n_per_cell = 32;   // intervals per unit length
  int m = 0;             // intervals per side, m = round(R * n_per_cell)
  double h = 0.0;        // 1 / n_per_cell
  double R = 0.0;        // stored edge = m / n_per_cell (requested R rounded)
  bool periodic = false;

  std::int64_t nodes_per_side() const { return periodic ? m : m + 1; }
  std::int64_t num_nodes() const {
    const std::int64_t s = nodes_per_side();
    return dim == 1 ? s : s * s;
  }
  std::int64_t num_elements() const {
    const std::int64_t mm = m;
    return dim == 1 ? mm : 2 * mm * mm;
  }

  // Lattice coordinate of index i in [0, m]; exact at both endpoints.
  double coord(int i) const {
    return static_cast<double>(2 * i - m) / static_cast<double>(2 * n_per_cell);
  }

  // Node id from lattice indices (wrapped when periodic).
  std::int64_t node_id(int i, int j = 0) const {
    const int s = static_cast<int>(nodes_per_side());
    if (periodic) {
      i = (i % m + m) % m;
      j = (j % m + m) % m;
    }
    return dim == 1 ? i : static_cast<std::int64_t>(j) * s + i;
  }

  bool boundary_node(std::int64_t k) const {
    if (periodic) return false;
    const int s = m + 1;
    if (dim == 1) return k == 0 || k == m;
    const int i = static_cast<int>(k % s);
    const int j = static_cast<int>(k / s);
    return i == 0 || i == m || j == 0 || j == m;
  }
};

// Dirichlet sampling box K_R; R is rounded to the nearest multiple of h.
StructuredMesh build_mesh(double R, int n_per_cell, int dim);

// Periodic unit cell (m = n_per_cell, opposite faces identified).
StructuredMesh build_periodic_cell_mesh(int n_per_cell, int dim);

}  // namespace homog
