#pragma once

#include <kocalc/ko_table.hpp>
#include <kocalc/space_data.hpp>
#include <kocalc/space_spec.hpp>

#include <cstdint>

namespace kocalc {

/* CP^n = Z/2[x]/(x^{n+1}), Sq^2(x) = x^2, twist O1 = x. */
SpaceData projective_space(int n);

/* Gr_{m,n}: Z/2[a_1..a_m] modulo the degree-(n+1)..(n+m) parts of the inverse
 * total Chern class; Sq^2 by the Wu formula; twist O1 = a_1. */
SpaceData grassmannian(int m, int n);

/* Lagrangian (maximal symplectic) Grassmannian Sp(n)/U(n): exterior algebra on
 * c_1..c_n; Sq^2 by the Wu formula; twist O1 = c_1. */
SpaceData symplectic_grassmannian(int n);

/* Smooth quadric Q^n, n >= 3; twist O1 = x (hyperplane class). */
SpaceData quadric(int n);

/* Spinor variety S_n, n >= 2: simple generators e_2..e_{2n-2} with
 * e_{2i}^2 = e_{4i} and Sq^2(e_{2i}) = i e_{2i+2}; twist S = e_2. */
SpaceData spinor(int n);

enum class ExceptionalSpace { EIII, EVII };

/* EIII = Z/2[t,u]/(u^2 t, u^3 + t^12); EVII = Z/2[t,v,w]/(t^14, v^2, w^2). */
SpaceData exceptional(ExceptionalSpace which);

SpaceData point_space();

/* Dispatch for the non-file families. */
SpaceData realize_catalog(const SpaceSpec& spec);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/* rho(n, i) = sum of C(n, d) over d congruent to i mod 4: the i-graded
 * dimension of a Z/4-graded exterior algebra on n degree-1 generators. */
std::uint64_t rho(std::uint64_t n, long long i);

/* Closed-form table for the tabulated families; throws for file specs and for
 * parameters outside the tabulated ranges. */
KOTable expected_table(const SpaceSpec& spec, const std::string& twist_name);

} // namespace kocalc
