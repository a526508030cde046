#pragma once

#include <cstddef>

// Vector kernels used by the CG and Runge-Kutta-Chebyshev inner loops.
// Each has a scalar reference implementation and (where compiled) SIMD
// variants; calls dispatch through the table selected in simd.hpp.
//
// All kernels are plain loops over contiguous arrays; aliasing between
// distinct pointer arguments is not supported unless noted.

namespace homog::kern {

// sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);

// sum_i w[i]*x[i]*y[i]  (diagonally weighted inner product)
double wdot(const double* w, const double* x, const double* y, std::size_t n);

// y += a*x
void axpy(double a, const double* x, double* y, std::size_t n);

// y = a*x + b*y
void axpby(double a, const double* x, double b, double* y, std::size_t n);

// x *= a
void scal(double a, double* x, std::size_t n);

// y = a * d[i] * x[i]   (diagonal scaling, e.g. M^{-1} application)
void dscale(double a, const double* d, const double* x, double* y, std::size_t n);

// y = c0*u0 + c1*y1 + c2*y2 + c3*f1 + c4*f0
// Fused five-operand update for one Chebyshev recurrence stage.  y may alias
// y2 (the rotating stage buffer) but none of the other inputs.
void stage5(double* y, std::size_t n,
            double c0, const double* u0,
            double c1, const double* y1,
            double c2, const double* y2,
            double c3, const double* f1,
            double c4, const double* f0);

// y = A x for CSR (row_ptr has nrows+1 entries)
void spmv(std::size_t nrows, const int* row_ptr, const int* col,
          const double* val, const double* x, double* y);

}  // namespace homog::kern
