#pragma once

#include <biham/poly.hpp>
#include <biham/ratfunc.hpp>
#include <biham/series.hpp>

#include <string>

namespace biham {

enum class NormalFormStatus { Normalized, ScalingUnfixed };
const char* to_string(NormalFormStatus s);

struct NormalForm {
  Series phi{2, 0};
  bool flat = false;
  NormalFormStatus status = NormalFormStatus::Normalized;
  std::string detail;
};

// Reparametrizes x -> a(x), y -> b(y), f -> g(f) so that phi_x(0, y) = phi_y(0, y) = 1 and
// phi_x(x, 0) = phi_y(x, 0) through total degree `order`. The series f is taken about the origin.
NormalForm normal_form_phi(const Series& f, int order);
NormalForm normal_form_phi(const Poly& f, int order);

// True when phi2(x, y) = phi1(C x, C y) / C for some real C != 0.
bool scaling_equivalent(const Series& phi1, const Series& phi2);

// Multiplicative inverse of a series with nonzero constant term.
Series series_reciprocal(const Series& s);

// Exact flatness obstruction f_x f_y (log(f_x / f_y))_xy of M_f, as a rational function.
RationalFunction flatness_obstruction(const Poly& f);

}  // namespace biham
