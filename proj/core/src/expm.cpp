#include "tmsq/expm.hpp"

#include <array>
#include <cmath>

namespace tmsq {

namespace {

using Matrix = Eigen::MatrixXcd;

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// Largest 1-norms for which each degree meets unit-roundoff backward error.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const Matrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

// Pade numerator U (odd part) and V (even part) for degrees up to 9.
template <std::size_t N>
void low_degree_uv(const Matrix& a, const std::array<double, N>& b, Matrix& u, Matrix& v) {
  const auto n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  Matrix power = ident;
  Matrix odd = b[1] * ident;
  Matrix even = b[0] * ident;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    even += b[k] * power;
    if (k + 1 < N) odd += b[k + 1] * power;
  }
  u = a * odd;
  v = even;
}

void degree13_uv(const Matrix& a, Matrix& u, Matrix& v) {
  const auto& b = kPade13;
  const auto n = a.rows();
  const Matrix ident = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const Matrix inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  u = a * (a6 * inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  v = a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  detail::require(a.rows() == a.cols(), ErrorCode::kInvalidArgument, "expm needs a square matrix");
  if (a.rows() == 0) return a;
  const double norm = one_norm(a);
  detail::require(std::isfinite(norm), ErrorCode::kExpmNotConverged, "non-finite input to expm");

  Matrix u, v;
  int squarings = 0;
  if (norm <= kTheta3) {
    low_degree_uv(a, kPade3, u, v);
  } else if (norm <= kTheta5) {
    low_degree_uv(a, kPade5, u, v);
  } else if (norm <= kTheta7) {
    low_degree_uv(a, kPade7, u, v);
  } else if (norm <= kTheta9) {
    low_degree_uv(a, kPade9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    degree13_uv(a / std::ldexp(1.0, squarings), u, v);
  }

  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;

  detail::require(result.allFinite(), ErrorCode::kExpmNotConverged, "expm produced non-finite entries");
  return result;
}

}  // namespace tmsq
