#pragma once

#include <Eigen/Dense>

#include "elliptica/specfun.hpp"

namespace elliptica {

// Row (a,b), column (c,d) of an R-matrix sits at [a*n + b, c*n + d].
using ComplexMatrix = Eigen::MatrixXcd;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix identity(int dim);
// flip on C^n (x) C^n
ComplexMatrix permutation(int n);

ComplexMatrix transpose_first(const ComplexMatrix& m, int n);
ComplexMatrix transpose_second(const ComplexMatrix& m, int n);

// embeddings of a two-site operator into C^n (x) C^n (x) C^n
ComplexMatrix embed12(const ComplexMatrix& m, int n);
ComplexMatrix embed23(const ComplexMatrix& m, int n);
ComplexMatrix embed13(const ComplexMatrix& m, int n);

double condition_number(const ComplexMatrix& m);
// LU inverse; IllConditioned when the 2-norm condition number exceeds max_cond
ComplexMatrix inverse_guarded(const ComplexMatrix& m, double max_cond = 1e10);

// ||a - b||_F / ||b||_F
double rel_residual(const ComplexMatrix& a, const ComplexMatrix& b);
double rel_residual(cplx a, cplx b);

const ComplexMatrix& sigma_x();
const ComplexMatrix& sigma_z();

}  // namespace elliptica
