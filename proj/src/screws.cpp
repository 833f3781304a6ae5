#include "gcs/screws.hpp"

#include <algorithm>
#include <cmath>

namespace gcs {

Pitch Screw::pitch(double eps) const {
  const double np = primal.norm();
  const double nd = dual.norm();
  if (np <= eps * nd) return Pitch::Infinite;
  return std::abs(primal.dot(dual)) <= eps * np * std::max(np, nd) ? Pitch::Zero : Pitch::Finite;
}

Screw zero_pitch(const Vec3& direction, const Vec3& point, ScrewKind kind) {
  const Vec3 s = direction.normalized();
  return {s, point.cross(s), kind};
}

Screw infinite_pitch(const Vec3& direction, ScrewKind kind) {
  return {Vec3::Zero(), direction.normalized(), kind};
}

double reciprocal_product(const Screw& t, const Screw& w) {
  if (t.kind != ScrewKind::Twist || w.kind != ScrewKind::Wrench) {
    throw Error(ErrorCode::KindError, "pairing needs a twist and a wrench");
  }
  return t.primal.dot(w.dual) + t.dual.dot(w.primal);
}

double normalized_reciprocal_product(const Screw& t, const Screw& w) {
  const double nt = t.coords().norm();
  const double nw = w.coords().norm();
  return reciprocal_product(t, w) / (nt * nw);
}

std::vector<Screw> reciprocal_system(std::span<const Screw> twists, const Tolerances& tol) {
  // Row k is (t.dual, t.primal) so that row . (w.primal, w.dual) is the pairing.
  Eigen::MatrixXd pairing(static_cast<Eigen::Index>(twists.size()), 6);
  for (std::size_t k = 0; k < twists.size(); ++k) {
    const Screw& t = twists[k];
    if (t.kind != ScrewKind::Twist) throw Error(ErrorCode::KindError, "reciprocal of a non-twist");
    const Vec3 p = t.primal / t.coords().norm();
    const Vec3 d = t.dual / t.coords().norm();
    pairing.row(static_cast<Eigen::Index>(k)) << d.transpose(), p.transpose();
  }
  if (pairing.rows() < 6) {
    pairing.conservativeResize(6, 6);
    pairing.bottomRows(6 - static_cast<Eigen::Index>(twists.size())).setZero();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(pairing, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.rank * std::max(sv(0), 1.0);
  std::vector<Screw> out;
  for (Eigen::Index k = 0; k < 6; ++k) {
    if (k < sv.size() && sv(k) > cutoff) continue;
    const Vec6 w = svd.matrixV().col(k);
    out.push_back({w.head<3>(), w.tail<3>(), ScrewKind::Wrench});
  }
  return out;
}

std::vector<Screw> basis_exchange(std::span<const Screw> system, const Eigen::MatrixXd& coeffs,
                                  const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(system.size());
  if (coeffs.rows() != n || coeffs.cols() != n) {
    throw Error(ErrorCode::SingularMixing, "mixing matrix must be square and match the system size");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(coeffs);
  const auto& sv = svd.singularValues();
  if (n > 0 && !(sv(n - 1) > tol.rank * sv(0))) {
    throw Error(ErrorCode::SingularMixing, "mixing matrix is not invertible");
  }
  std::vector<Screw> out;
  out.reserve(system.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec6 c = Vec6::Zero();
    for (Eigen::Index i = 0; i < n; ++i) c += coeffs(j, i) * system[static_cast<std::size_t>(i)].coords();
    out.push_back({c.head<3>(), c.tail<3>(), system.front().kind});
  }
  return out;
}

double span_residual(std::span<const Screw> screws, std::span<const Screw> basis) {
  Eigen::MatrixXd b(6, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = basis[k].coords();
  const auto qr = b.colPivHouseholderQr();
  double worst = 0.0;
  for (const Screw& s : screws) {
    const Vec6 v = s.coords();
    const Eigen::VectorXd x = qr.solve(v);
    worst = std::max(worst, (b * x - v).norm() / v.norm());
  }
  return worst;
}

std::array<Vec6, 6> GoverningSystem::rows() const {
  std::array<Vec6, 6> out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = wrenches[k].coords();
  return out;
}

ReciprocityCheck check_reciprocity(const GoverningSystem& system, std::span<const JointChain> chains) {
  ReciprocityCheck out;
  for (std::size_t k = 0; k < 6; ++k) {
    const RowTag& tag = system.tags[k];
    const JointChain& chain = chains[static_cast<std::size_t>(tag.chain)];
    for (std::size_t j = 0; j < chain.twists.size(); ++j) {
      const double p = std::abs(normalized_reciprocal_product(chain.twists[j], system.wrenches[k]));
      if (tag.role == RowRole::ActuationForce && static_cast<int>(j) == tag.actuated_twist) {
        out.weakest_actuated = std::min(out.weakest_actuated, p);
      } else {
        out.worst_passive = std::max(out.worst_passive, p);
      }
    }
  }
  return out;
}

}  // namespace gcs
