#include "homog/fem.hpp"

#include <stdexcept>

namespace homog {

namespace {

// grad phi_a . (a_e grad phi_b), dim-aware
inline double bilinear(const Tensor& a, const double* ga, const double* gb, int dim) {
  if (dim == 1) return ga[0] * a.m[0][0] * gb[0];
  const double b0 = a.m[0][0] * gb[0] + a.m[0][1] * gb[1];
  const double b1 = a.m[1][0] * gb[0] + a.m[1][1] * gb[1];
  return ga[0] * b0 + ga[1] * b1;
}

}  // namespace

CsrMatrix assemble_stiffness(const StructuredMesh& mesh, const CoefficientField& field) {
  if (field.dim() != mesh.dim)
    throw std::invalid_argument("fem: coefficient dimension does not match mesh");
  CsrBuilder builder(static_cast<int>(mesh.num_nodes()));
  for_each_element(mesh, [&](const ElementView& e) {
    const Tensor a = field.eval(e.xc);
    for (int r = 0; r < e.nv; ++r)
      for (int c = 0; c < e.nv; ++c)
        builder.add(e.node[r], e.node[c], e.volume * bilinear(a, e.grad[r], e.grad[c], mesh.dim));
  });
  return builder.finalize();
}

CsrMatrix assemble_laplacian(const StructuredMesh& mesh) {
  CsrBuilder builder(static_cast<int>(mesh.num_nodes()));
  const Tensor id = Tensor::identity(mesh.dim, 1.0);
  for_each_element(mesh, [&](const ElementView& e) {
    for (int r = 0; r < e.nv; ++r)
      for (int c = 0; c < e.nv; ++c)
        builder.add(e.node[r], e.node[c], e.volume * bilinear(id, e.grad[r], e.grad[c], mesh.dim));
  });
  return builder.finalize();
}

std::vector<double> assemble_lumped_mass(const StructuredMesh& mesh) {
  std::vector<double> mass(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
  for_each_element(mesh, [&](const ElementView& e) {
    const double share = e.volume / e.nv;
    for (int r = 0; r < e.nv; ++r) mass[static_cast<std::size_t>(e.node[r])] += share;
  });
  return mass;
}

std::vector<double> assemble_filtered_mass(const StructuredMesh& mesh, const FilterSpec& filter) {
  if (filter.dim != mesh.dim)
    throw std::invalid_argument("fem: filter dimension does not match mesh");
  std::vector<double> mass(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
  for_each_element(mesh, [&](const ElementView& e) {
    const double share = e.volume / e.nv;
    for (int r = 0; r < e.nv; ++r)
      mass[static_cast<std::size_t>(e.node[r])] += share * filter_weight(filter, e.vx[r]);
  });
  return mass;
}

std::vector<double> assemble_load(const StructuredMesh& mesh, const CoefficientField& field,
                                  int dir) {
  if (dir < 0 || dir >= mesh.dim) throw std::invalid_argument("fem: load direction out of range");
  std::vector<double> b(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
  for_each_element(mesh, [&](const ElementView& e) {
    const Tensor a = field.eval(e.xc);
    double slope[2] = {a.m[0][dir], 0.0};  // a e_dir
    if (mesh.dim == 2) slope[1] = a.m[1][dir];
    for (int r = 0; r < e.nv; ++r) {
      double g = e.grad[r][0] * slope[0];
      if (mesh.dim == 2) g += e.grad[r][1] * slope[1];
      b[static_cast<std::size_t>(e.node[r])] -= e.volume * g;
    }
  });
  return b;
}

std::vector<std::uint8_t> dirichlet_mask(const StructuredMesh& mesh) {
  std::vector<std::uint8_t> fixed(static_cast<std::size_t>(mesh.num_nodes()), 0);
  if (mesh.periodic) return fixed;
  for (std::int64_t k = 0; k < mesh.num_nodes(); ++k)
    fixed[static_cast<std::size_t>(k)] = mesh.boundary_node(k) ? 1 : 0;
  return fixed;
}

void apply_dirichlet(CsrMatrix& A, const std::vector<std::uint8_t>& fixed) {
  if (fixed.size() != static_cast<std::size_t>(A.n))
    throw std::invalid_argument("fem: mask size does not match matrix");
  for (int i = 0; i < A.n; ++i) {
    const bool row_fixed = fixed[static_cast<std::size_t>(i)] != 0;
    for (int k = A.row_ptr[static_cast<std::size_t>(i)];
         k < A.row_ptr[static_cast<std::size_t>(i) + 1]; ++k) {
      const int j = A.col[static_cast<std::size_t>(k)];
      if (row_fixed)
        A.val[static_cast<std::size_t>(k)] = (j == i) ? 1.0 : 0.0;
      else if (fixed[static_cast<std::size_t>(j)] != 0)
        A.val[static_cast<std::size_t>(k)] = 0.0;
    }
  }
}

namespace {

template <bool Energy>
Tensor weighted_form(const StructuredMesh& mesh, const CoefficientField& field,
                     const FilterSpec* filter, const std::vector<double>* const grads[]) {
  if (field.dim() != mesh.dim)
    throw std::invalid_argument("fem: coefficient dimension does not match mesh");
  const int d = mesh.dim;
  Tensor out;
  out.dim = d;
  out.m[0][0] = out.m[0][1] = out.m[1][0] = out.m[1][1] = 0.0;
  double total = 0.0;
  for_each_element(mesh, [&](const ElementView& e) {
    double w = e.volume;
    if (filter) {
      double mu = 0.0;
      for (int r = 0; r < e.nv; ++r) mu += filter_weight(*filter, e.vx[r]);
      w *= mu / e.nv;
    }
    if (w == 0.0) return;
    const Tensor a = field.eval(e.xc);
    // corrected slopes s_j = e_j + grad v_j on this element
    double s[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
    for (int j = 0; j < d; ++j) {
      if (!grads || !grads[j]) continue;
      const std::vector<double>& v = *grads[j];
      for (int c = 0; c < d; ++c) {
        double g = 0.0;
        for (int r = 0; r < e.nv; ++r)
          g += v[static_cast<std::size_t>(e.node[r])] * e.grad[r][c];
        s[j][c] += g;
      }
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double as[2] = {a.m[0][0] * s[j][0], 0.0};
        if (d == 2) {
          as[0] = a.m[0][0] * s[j][0] + a.m[0][1] * s[j][1];
          as[1] = a.m[1][0] * s[j][0] + a.m[1][1] * s[j][1];
        }
        double v;
        if constexpr (Energy) {
          v = s[i][0] * as[0] + (d == 2 ? s[i][1] * as[1] : 0.0);
        } else {
          v = as[i];  // e_i . a s_j
        }
        out.m[i][j] += w * v;
      }
    total += w;
  });
  if (total <= 0.0) throw std::runtime_error("fem: filter weight vanishes on the mesh");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.m[i][j] /= total;
  return out;
}

}  // namespace

Tensor filtered_flux(const StructuredMesh& mesh, const CoefficientField& field,
                     const FilterSpec* filter, const std::vector<double>* const grads[]) {
  return weighted_form<false>(mesh, field, filter, grads);
}

Tensor filtered_energy(const StructuredMesh& mesh, const CoefficientField& field,
                       const FilterSpec* filter, const std::vector<double>* const grads[]) {
  return weighted_form<true>(mesh, field, filter, grads);
}

}  // namespace homog
