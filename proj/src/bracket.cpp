#include "gcs/bracket.hpp"

#include <cmath>

namespace gcs {

double bracket4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  // Laplace expansion over the 2x2 minors of rows (0,1) and rows (2,3);
  // columns are the points.
  const double s0 = a[0] * b[1] - b[0] * a[1];
  const double s1 = a[0] * c[1] - c[0] * a[1];
  const double s2 = a[0] * d[1] - d[0] * a[1];
  const double s3 = b[0] * c[1] - c[0] * b[1];
  const double s4 = b[0] * d[1] - d[0] * b[1];
  const double s5 = c[0] * d[1] - d[0] * c[1];

  const double c5 = c[2] * d[3] - d[2] * c[3];
  const double c4 = b[2] * d[3] - d[2] * b[3];
  const double c3 = b[2] * c[3] - c[2] * b[3];
  const double c2 = a[2] * d[3] - d[2] * a[3];
  const double c1 = a[2] * c[3] - c[2] * a[3];
  const double c0 = a[2] * b[3] - b[2] * a[3];

  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

double bracket4(const HomogPoint& p1, const HomogPoint& p2, const HomogPoint& p3,
                const HomogPoint& p4) {
  return bracket4(p1.coords(), p2.coords(), p3.coords(), p4.coords());
}

namespace {

template <typename Fn>
void for_each_syzygy_term(const std::array<HomogPoint, 4>& e, const std::array<HomogPoint, 4>& f,
                          Fn&& fn) {
  for (std::size_t j = 0; j < 4; ++j) {
    std::array<Vec4, 4> ff{f[0].coords(), f[1].coords(), f[2].coords(), f[3].coords()};
    ff[j] = e[0].coords();
    fn(bracket4(f[j].coords(), e[1].coords(), e[2].coords(), e[3].coords()) *
       bracket4(ff[0], ff[1], ff[2], ff[3]));
  }
}

}  // namespace

double syzygy_residual(const std::array<HomogPoint, 4>& e, const std::array<HomogPoint, 4>& f) {
  double r = bracket4(e[0], e[1], e[2], e[3]) * bracket4(f[0], f[1], f[2], f[3]);
  for_each_syzygy_term(e, f, [&](double t) { r -= t; });
  return r;
}

double syzygy_scale(const std::array<HomogPoint, 4>& e, const std::array<HomogPoint, 4>& f) {
  double s = std::abs(bracket4(e[0], e[1], e[2], e[3]) * bracket4(f[0], f[1], f[2], f[3]));
  for_each_syzygy_term(e, f, [&](double t) { s += std::abs(t); });
  return s;
}

}  // namespace gcs
