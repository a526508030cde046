#pragma once

#include <cstdint>
#include <vector>

#include "homog/coefficients.hpp"
#include "homog/filters.hpp"
#include "homog/mesh.hpp"
#include "homog/sparse.hpp"
#include "homog/tensor.hpp"

namespace homog {

// One P1 element: node ids, constant basis gradients, volume, vertex
// coordinates and barycenter (coefficient quadrature point).
struct ElementView {
  int nv = 0;            // d+1
  int node[3] = {0, 0, 0};
  double grad[3][2] = {};
  double volume = 0.0;
  double vx[3][2] = {};  // vertex coordinates
  double xc[2] = {};     // barycenter
};

// Visit every element in lattice order (1D: intervals left to right; 2D: for
// each square the lower triangle then the upper one).  fn(const ElementView&).
template <class Fn>
void for_each_element(const StructuredMesh& mesh, Fn&& fn) {
  const double h = mesh.h;
  ElementView e;
  if (mesh.dim == 1) {
    e.nv = 2;
    e.volume = h;
    e.grad[0][0] = -1.0 / h;
    e.grad[1][0] = 1.0 / h;
    for (int i = 0; i < mesh.m; ++i) {
      e.node[0] = static_cast<int>(mesh.node_id(i));
      e.node[1] = static_cast<int>(mesh.node_id(i + 1));
      e.vx[0][0] = mesh.coord(i);
      e.vx[1][0] = mesh.coord(i + 1);
      e.xc[0] = 0.5 * (e.vx[0][0] + e.vx[1][0]);
      fn(static_cast<const ElementView&>(e));
    }
    return;
  }
  e.nv = 3;
  e.volume = 0.5 * h * h;
  for (int j = 0; j < mesh.m; ++j) {
    const double y0 = mesh.coord(j);
    const double y1 = mesh.coord(j + 1);
    for (int i = 0; i < mesh.m; ++i) {
      const double x0 = mesh.coord(i);
      const double x1 = mesh.coord(i + 1);
      const int v00 = static_cast<int>(mesh.node_id(i, j));
      const int v10 = static_cast<int>(mesh.node_id(i + 1, j));
      const int v01 = static_cast<int>(mesh.node_id(i, j + 1));
      const int v11 = static_cast<int>(mesh.node_id(i + 1, j + 1));
      // lower triangle (x0,y0)-(x1,y0)-(x1,y1)
      e.node[0] = v00;
      e.node[1] = v10;
      e.node[2] = v11;
      e.grad[0][0] = -1.0 / h; e.grad[0][1] = 0.0;
      e.grad[1][0] = 1.0 / h;  e.grad[1][1] = -1.0 / h;
      e.grad[2][0] = 0.0;      e.grad[2][1] = 1.0 / h;
      e.vx[0][0] = x0; e.vx[0][1] = y0;
      e.vx[1][0] = x1; e.vx[1][1] = y0;
      e.vx[2][0] = x1; e.vx[2][1] = y1;
      e.xc[0] = x0 + 2.0 * h / 3.0;
      e.xc[1] = y0 + h / 3.0;
      fn(static_cast<const ElementView&>(e));
      // upper triangle (x0,y0)-(x1,y1)-(x0,y1)
      e.node[0] = v00;
      e.node[1] = v11;
      e.node[2] = v01;
      e.grad[0][0] = 0.0;      e.grad[0][1] = -1.0 / h;
      e.grad[1][0] = 1.0 / h;  e.grad[1][1] = 0.0;
      e.grad[2][0] = -1.0 / h; e.grad[2][1] = 1.0 / h;
      e.vx[0][0] = x0; e.vx[0][1] = y0;
      e.vx[1][0] = x1; e.vx[1][1] = y1;
      e.vx[2][0] = x0; e.vx[2][1] = y1;
      e.xc[0] = x0 + h / 3.0;
      e.xc[1] = y0 + 2.0 * h / 3.0;
      fn(static_cast<const ElementView&>(e));
    }
  }
}

// P1 stiffness with the coefficient frozen at element barycenters.
CsrMatrix assemble_stiffness(const StructuredMesh& mesh, const CoefficientField& field);

// Stiffness of the unit-coefficient Laplacian (H1 seminorm matrix).
CsrMatrix assemble_laplacian(const StructuredMesh& mesh);

// Lumped mass diagonal, sum_e |e|/(d+1) per vertex.
std::vector<double> assemble_lumped_mass(const StructuredMesh& mesh);

// Lumped mass against the filter density: entry v gets
// sum_{e ∋ v} |e|/(d+1) * mu_L(x_v).  Raw values; callers normalize by the
// returned total when approximating filtered averages.
std::vector<double> assemble_filtered_mass(const StructuredMesh& mesh, const FilterSpec& filter);

// Load vector b_k = -∫ a(x) e_dir · grad phi_k dx (weak form of div(a e_dir)).
std::vector<double> assemble_load(const StructuredMesh& mesh, const CoefficientField& field,
                                  int dir);

// Dirichlet mask: 1 for nodes on the box boundary, 0 elsewhere (all zero for
// periodic meshes).
std::vector<std::uint8_t> dirichlet_mask(const StructuredMesh& mesh);

// Zero out masked rows and columns and put 1 on their diagonal.  Keeps the
// matrix symmetric; masked right-hand-side entries must be zeroed by the
// caller.
void apply_dirichlet(CsrMatrix& A, const std::vector<std::uint8_t>& fixed);

// Filtered element average of e_i . a (e_j + grad v_j): the flux functional
// shared by the elliptic upscaling variants and the first parabolic term.
// grads[j], if non-null, is the nodal field whose P1 gradient enters column j;
// weights are |e| * (vertex mean of mu_L), normalized by their total.
// A null filter means the uniform density over the mesh (used by the periodic
// reference).
Tensor filtered_flux(const StructuredMesh& mesh, const CoefficientField& field,
                     const FilterSpec* filter, const std::vector<double>* const grads[]);

// Same weighting, but the symmetric energy form
// (e_i + grad v_i) . a (e_j + grad v_j).
Tensor filtered_energy(const StructuredMesh& mesh, const CoefficientField& field,
                       const FilterSpec* filter, const std::vector<double>* const grads[]);

}  // namespace homog
