#pragma once

#include <vector>

#include "kz/bar.hpp"
#include "kz/m05.hpp"
#include "kz/report.hpp"
#include "kz/series.hpp"

namespace kz {

// Fundamental solution of KZE1 normalized at 0: coefficient of W is Li(w; z).
TruncatedSeries<double> build_L1(double z, int N);
// The solution normalized at 1: sum_w Li(w; 1 - z) f(W), f: X0 -> -X1, X1 -> -X0.
TruncatedSeries<double> build_L1_at1(double z, int N);
// Holomorphic part L1(z) z^{-X0}.
TruncatedSeries<double> build_L1_hat(double z, int N);

// Holomorphic part of the SE1 solution over X0..Xm from hyperlogarithms:
// sum L(^{k1}a_{i1} ... ; z) ad(X0)^{k1-1} mu(X_{i1}) ... (1).
TruncatedSeries<double> se1_hat(double z, const std::vector<double>& a, int N);

CheckReport check_connection1(double z, int N, double tol = 1e-9);
// L1_at1(z)^{-1} L1(z) compared across points.
CheckReport check_connection_constancy(const std::vector<double>& zs, int N, double tol = 5e-10);
CheckReport check_gif(double z, int max_weight, double tol = 1e-10);

enum class L2Route { OneTwo, TwoOne };

// Holomorphic part of the KZE2 solution in the PBW basis.
M05Series<double> build_L2(double z1, double z2, int N, L2Route route = L2Route::OneTwo);

CheckReport check_decomposition(double z1, double z2, int N, double tol = 1e-9, int transport_steps = 4000);

// Integral of iota images along the elbow contours.
double contour_integral_12(const TensorPoly& t, double z1, double z2);
double contour_integral_21(const TensorPoly& t, double z1, double z2);
// Integral of a five-letter word combination along the straight path from the origin.
double straight_path_integral(const ShufflePoly& phi, double z1, double z2, double quad_tol = 1e-12);

// xi11 xi12 + xi22 xi11 - xi22 xi12 - xi2 xi12.
ShufflePoly hpr11_element();

CheckReport check_ghpr(const ShufflePoly& phi, double z1, double z2, double tol = 1e-10);
// The explicit two-variable identity for hpr11_element, together with check_ghpr of it.
CheckReport check_hpr11(double z1, double z2, double tol = 1e-10);

// tau^*(z1, z2).
std::pair<double, double> tau_pullback(double z1, double z2);
bool in_landen_domain(double z1, double z2);

CheckReport check_landen_2d(double z1, double z2, double tol = 1e-10);
CheckReport check_landen_classical(double z, double tol = 1e-12);
CheckReport check_five_term(double z1, double z2, double tol = 1e-12);

// Transported KZE1 solution against build_L1, plus the flow-composition and
// degree-1 properties and the SE1(a = 1) reduction.
CheckReport check_transport(double z, int N, int steps = 2000, double tol = 1e-8);

}  // namespace kz
