#include "wacm/spectral.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "wacm/sampling.hpp"

namespace wacm {

namespace {

struct GFrame {
  Mat L;      // g = L L^T
  Mat Linv;   // L^{-1}
};

GFrame g_frame(const StructureData& G) {
  Eigen::LLT<Mat> llt(G.geo.g);
  GFrame f;
  f.L = llt.matrixL();
  f.Linv = f.L.triangularView<Eigen::Lower>().solve(Mat::Identity(G.d, G.d));
  return f;
}

// Symmetric matrix similar to the g-self-adjoint operator M: L^T M L^{-T}.
Mat to_sym(const GFrame& f, const Mat& M) {
  Mat s = f.L.transpose() * M * f.Linv.transpose();
  return 0.5 * (s + s.transpose());
}

}  // namespace

double g_operator_norm(const StructureData& G, const Mat& M) {
  GFrame f = g_frame(G);
  Mat s = f.L.transpose() * M * f.Linv.transpose();
  Eigen::JacobiSVD<Mat> svd(s);
  return svd.singularValues()(0);
}

SpectrumResult h2_spectrum(const StructureData& G, double cluster_tol) {
  const int d = G.d;
  SpectrumResult out;

  GFrame f = g_frame(G);
  Mat h2 = G.h * G.h;
  Eigen::SelfAdjointEigenSolver<Mat> es(to_sym(f, h2));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("h2_spectrum: eigensolver failed");
  out.eigenvalues = es.eigenvalues();

  // g-orthonormal operator eigenvectors
  Mat U = f.Linv.transpose() * es.eigenvectors();

  // cluster ascending eigenvalues
  std::vector<std::pair<int, int>> ranges;  // [begin, end)
  int begin = 0;
  for (int i = 1; i <= d; ++i) {
    if (i == d || out.eigenvalues[i] - out.eigenvalues[i - 1] > cluster_tol) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }

  out.min_gap = std::numeric_limits<double>::infinity();
  for (size_t c = 0; c + 1 < ranges.size(); ++c)
    out.min_gap = std::min(out.min_gap,
                           out.eigenvalues[ranges[c + 1].first] -
                               out.eigenvalues[ranges[c].second - 1]);

  for (size_t c = 0; c < ranges.size(); ++c) {
    auto [b, e] = ranges[c];
    double mean = 0.0;
    for (int i = b; i < e; ++i) mean += out.eigenvalues[i];
    mean /= (e - b);
    out.cluster_values.push_back(mean);
    out.cluster_mult.push_back(e - b);
    Mat P = Mat::Zero(d, d);
    for (int i = b; i < e; ++i) P += U.col(i) * (G.geo.g * U.col(i)).transpose();
    out.projectors.push_back(P);
    if (std::abs(mean) <= cluster_tol) {
      out.zero_cluster = static_cast<int>(c);
      out.zero_multiplicity = e - b;
    }
    if (mean < -cluster_tol) out.lambdas.push_back(std::sqrt(-mean));
  }

  out.P_xi = G.xi * G.eta.transpose();
  if (out.zero_cluster >= 0)
    out.P_D0 = out.projectors[out.zero_cluster] - out.P_xi;
  else
    out.P_D0 = Mat::Zero(d, d);
  return out;
}

ConstancyResult spectrum_constancy(const WeakStructure& S, int points, std::uint64_t seed) {
  SampleSet samples = draw_samples(S.chart, points, 1, seed);
  ConstancyResult out;
  Vec lo, hi;
  bool first = true;
  for (const Vec& p : samples.points) {
    StructureData G = structure_data(S, p);
    SpectrumResult s = h2_spectrum(G);
    if (first) {
      lo = s.eigenvalues;
      hi = s.eigenvalues;
      out.multiplicities = s.cluster_mult;
      out.lambdas = s.lambdas;
      first = false;
    } else {
      lo = lo.cwiseMin(s.eigenvalues);
      hi = hi.cwiseMax(s.eigenvalues);
      if (s.cluster_mult != out.multiplicities) out.multiplicities_constant = false;
    }
  }
  if (!first) out.deviation = (hi - lo).maxCoeff();
  return out;
}

TgResult totally_geodesic_residual(const StructureData& G, DistSelector sel, int cluster_index,
                                   double cluster_tol) {
  const int d = G.d;
  SpectrumResult spec = h2_spectrum(G, cluster_tol);
  if (spec.min_gap < 10.0 * cluster_tol)
    throw std::runtime_error(
        "totally_geodesic_residual: eigenvalue clusters too close at this point "
        "(projector not smooth); gap = " + std::to_string(spec.min_gap));

  // raw partials of the h^2 matrix
  std::vector<Mat> dh2(d, Mat::Zero(d, d));
  for (int k = 0; k < d; ++k) {
    Mat dh(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) dh(a, b) = G.dh_raw(k, a, b);
    dh2[k] = dh * G.h + G.h * dh;
  }

  // first-order perturbation of each cluster projector:
  // dP_c = sum_{c' != c} (P_c' dA P_c + P_c dA P_c') / (l_c - l_c')
  const size_t nc = spec.projectors.size();
  std::vector<std::vector<Mat>> dP(nc, std::vector<Mat>(d, Mat::Zero(d, d)));
  for (size_t c = 0; c < nc; ++c)
    for (size_t cp = 0; cp < nc; ++cp) {
      if (cp == c) continue;
      const double gap = spec.cluster_values[c] - spec.cluster_values[cp];
      for (int k = 0; k < d; ++k)
        dP[c][k] += (spec.projectors[cp] * dh2[k] * spec.projectors[c] +
                     spec.projectors[c] * dh2[k] * spec.projectors[cp]) /
                    gap;
    }

  // projector of the selected distribution and its partials
  Mat P = Mat::Zero(d, d);
  std::vector<Mat> dPsel(d, Mat::Zero(d, d));

  auto add_xi = [&] {
    P += spec.P_xi;
    for (int k = 0; k < d; ++k) {
      Mat dPxi(d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          dPxi(a, b) = G.dxi_raw(k, a) * G.eta[b] + G.xi[a] * G.deta_raw(k, b);
      dPsel[k] += dPxi;
    }
  };

  switch (sel) {
    case DistSelector::XiD0:
      // the zero cluster of h^2 is exactly [xi] + D_0
      if (spec.zero_cluster < 0) {
        add_xi();
      } else {
        P += spec.projectors[spec.zero_cluster];
        for (int k = 0; k < d; ++k) dPsel[k] += dP[spec.zero_cluster][k];
      }
      break;
    case DistSelector::XiDi: {
      if (cluster_index < 0 || cluster_index >= static_cast<int>(nc) ||
          spec.cluster_values[cluster_index] >= -cluster_tol)
        throw std::runtime_error("totally_geodesic_residual: invalid negative cluster index");
      add_xi();
      P += spec.projectors[cluster_index];
      for (int k = 0; k < d; ++k) dPsel[k] += dP[cluster_index][k];
      break;
    }
    case DistSelector::XiAll:
      add_xi();
      for (size_t c = 0; c < nc; ++c) {
        if (spec.cluster_values[c] >= -cluster_tol) continue;
        P += spec.projectors[c];
        for (int k = 0; k < d; ++k) dPsel[k] += dP[c][k];
      }
      break;
  }

  TgResult out;
  out.dist_dim = static_cast<int>(std::round(P.trace()));
  Mat I = Mat::Identity(d, d);

  // sections Y_j(x) = P(x) e_j, differentiated through the projector
  std::vector<Vec> sec(d);
  std::vector<Mat> dsec(d);  // dsec[j](k, m) = d_k (Y_j)^m
  for (int j = 0; j < d; ++j) {
    sec[j] = P.col(j);
    Mat m(d, d);
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < d; ++a) m(k, a) = dPsel[k](a, j);
    dsec[j] = m;
  }

  for (int i = 0; i < d; ++i) {
    if (G.gnorm(sec[i]) < 0.1) continue;
    for (int j = 0; j < d; ++j) {
      if (G.gnorm(sec[j]) < 0.1) continue;
      // nabla_{Y_i} Y_j
      Vec cov = Vec::Zero(d);
      for (int k = 0; k < d; ++k)
        for (int a = 0; a < d; ++a) cov[a] += sec[i][k] * dsec[j](k, a);
      cov += G.conn(sec[i], sec[j]);
      const double denom = G.gnorm(sec[i]) * G.gnorm(sec[j]);
      out.tg_residual = std::max(out.tg_residual, G.gnorm((I - P) * cov) / denom);

      // [Y_i, Y_j]
      Vec br = Vec::Zero(d);
      for (int k = 0; k < d; ++k)
        for (int a = 0; a < d; ++a)
          br[a] += sec[i][k] * dsec[j](k, a) - sec[j][k] * dsec[i](k, a);
      out.integrability = std::max(out.integrability, G.gnorm((I - P) * br) / denom);
      // eta-component for ker-eta sections only
      if (std::abs(G.eta_of(sec[i])) < 1e-8 && std::abs(G.eta_of(sec[j])) < 1e-8)
        out.integrability_eta =
            std::max(out.integrability_eta, std::abs(G.eta_of(br)) / denom);
    }
  }
  return out;
}

}  // namespace wacm
