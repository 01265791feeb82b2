// CM structure from a secant plane, hermitian form H, and complex structures on V.
#pragma once

#include "spinweil/spinors.hpp"

namespace spinweil {

struct CMStructure {
  SecantData secant;
  long d = 0;
  Matrix<Rat> f;  // eta(sqrt(-d)) on the rational basis of V
};

// f = sqrt(-d) on W1 and -sqrt(-d) on W2.
CMStructure cm_from_secant(const SecantData& s);

Rat xi_form(const CMStructure& C, const Vec<Rat>& x, const Vec<Rat>& y);
QuadExt hermitian_H(const CMStructure& C, const Vec<Rat>& x, const Vec<Rat>& y);
// Value of eta(lambda) on x for lambda in K.
Vec<Rat> eta(const CMStructure& C, const QuadExt& lambda, const Vec<Rat>& x);

Matrix<Rat> xi_matrix(const CMStructure& C);
// Gram matrix of Re H = d (x,y) on the rational basis.
Matrix<Rat> real_part_gram(const CMStructure& C);
Matrix<QuadExt> hermitian_gram(const CMStructure& C, const std::vector<Vec<Rat>>& basis);

// Inertia of a nondegenerate symmetric form.
Inertia gram_signature(const Matrix<Rat>& form);

// det of the hermitian Gram matrix on a K-basis of V.
Rat discriminant_H(const CMStructure& C, const std::vector<Vec<Rat>>& basis);
// (0, f_1), ..., (0, f_{2n}): a K-basis of V for the standard construction.
std::vector<Vec<Rat>> standard_hermitian_basis(int n);

// I(e_i) = c_i e_{i+n}, I(e_{i+n}) = -c_i e_i and likewise on the f-block, with
// c_i the signs of the standard polarization.
Matrix<Rat> standard_complex_structure(int n);

bool commutes(const Matrix<Rat>& a, const Matrix<Rat>& b);

// g_P(x,y) = (f I x, y)
Matrix<Rat> g_form(const CMStructure& C, const Matrix<Rat>& I);

struct CentralizerDims {
  int so_f = 0;   // {A in so(V) : A f = f A, tr(f A) = 0}
  int with_I = 0; // the part commuting with I
};
CentralizerDims centralizer_dims(const CMStructure& C, const Matrix<Rat>& I);

}  // namespace spinweil
