#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "dps/errors.hpp"
#include "dps/rng.hpp"

namespace dps {

/// Point of Gr_i(R^n) held as an n x i column-orthonormal matrix. The frame
/// is a representative; every operation below depends on the column span
/// only.
class Frame {
 public:
  static constexpr double kOrthoTol = 1e-12;

  /// Wraps a matrix that is already orthonormal to kOrthoTol.
  static Frame from_orthonormal(Eigen::MatrixXd q) {
    check_shape(q);
    const double dev = (q.transpose() * q - Eigen::MatrixXd::Identity(q.cols(), q.cols()))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > kOrthoTol)
      throw validation_error("frame: columns are not orthonormal (max deviation " +
                             std::to_string(dev) + ")");
    return Frame(std::move(q));
  }

  /// Orthonormalizes the column span by QR. The R-diagonal is kept positive,
  /// so an input that is already orthonormal comes back essentially
  /// unchanged (no sign flips).
  static Frame orthonormalized(const Eigen::MatrixXd& m) {
    check_shape(m);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), m.cols());
    const Eigen::MatrixXd r = qr.matrixQR().topLeftCorner(m.cols(), m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(r(c, c)) < 1e-13)
        throw validation_error("frame: columns are numerically rank-deficient");
      if (r(c, c) < 0) q.col(c) = -q.col(c);
    }
    return Frame(std::move(q));
  }

  int n() const { return static_cast<int>(q_.rows()); }
  int i() const { return static_cast<int>(q_.cols()); }
  const Eigen::MatrixXd& columns() const { return q_; }

 private:
  explicit Frame(Eigen::MatrixXd q) : q_(std::move(q)) {}

  static void check_shape(const Eigen::MatrixXd& m) {
    if (m.cols() < 1 || m.cols() > m.rows() - 1)
      throw validation_error("frame: need 1 <= i <= n-1, got n=" + std::to_string(m.rows()) +
                             ", i=" + std::to_string(m.cols()));
  }

  Eigen::MatrixXd q_;
};

/// |cos(E, F)|: the volume-distortion coefficient of the orthogonal
/// projection E -> F, i.e. |det(Q_F^T Q_E)| computed as the product of
/// singular values (robust near 0). Always in [0, 1]; rounding spill above 1
/// is clamped.
inline double cosine(const Frame& e, const Frame& f) {
  if (e.n() != f.n() || e.i() != f.i())
    throw validation_error("cosine: frames must share (n, i)");
  const Eigen::MatrixXd overlap = f.columns().transpose() * e.columns();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(overlap);
  double prod = 1.0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    prod *= svd.singularValues()(k);
  if (prod > 1.0) prod = 1.0;  // singular values of a contraction; spill <= 1e-12
  if (prod < 0.0) prod = 0.0;
  return prod;
}

/// Invariant-measure sample of Gr_i(R^n): orthonormalization of an n x i
/// matrix of independent standard normals.
inline Frame sample_frame(int n, int i, CounterRng& rng) {
  if (i < 1 || i > n - 1)
    throw validation_error("sample_frame: need 1 <= i <= n-1");
  Eigen::MatrixXd m(n, i);
  for (int c = 0; c < i; ++c)
    for (int r = 0; r < n; ++r) m(r, c) = rng.next_gaussian();
  return Frame::orthonormalized(m);
}

/// g . E for an orthogonal matrix g (checked to 1e-10). The product is
/// re-orthonormalized so the frame invariant stays tight.
inline Frame act_orthogonal(const Eigen::MatrixXd& g, const Frame& e) {
  if (g.rows() != e.n() || g.cols() != e.n())
    throw validation_error("act_orthogonal: g must be n x n");
  const double dev =
      (g.transpose() * g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw validation_error("act_orthogonal: g is not orthogonal (max deviation " +
                           std::to_string(dev) + ")");
  return Frame::orthonormalized(g * e.columns());
}

/// Haar-uniform orthogonal matrix (QR of a Gaussian matrix, R-diagonal
/// positive).
inline Eigen::MatrixXd sample_orthogonal(int n, CounterRng& rng) {
  Eigen::MatrixXd m(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) m(r, c) = rng.next_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd rm = qr.matrixQR().topLeftCorner(n, n);
  for (int c = 0; c < n; ++c)
    if (rm(c, c) < 0) q.col(c) = -q.col(c);
  return q;
}

/// Monte-Carlo estimate with reproducibility metadata. For complex transform
/// exponents the imaginary component rides in value_im/stderr_im.
struct MCEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
  long long rejected = 0;
  std::optional<double> value_im;
  std::optional<double> stderr_im;
};

namespace detail {

struct Welford {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  static Welford merged(const Welford& a, const Welford& b) {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    Welford out;
    out.count = a.count + b.count;
    const double d = b.mean - a.mean;
    out.mean = a.mean + d * static_cast<double>(b.count) / static_cast<double>(out.count);
    out.m2 = a.m2 + b.m2 +
             d * d * static_cast<double>(a.count) * static_cast<double>(b.count) /
                 static_cast<double>(out.count);
    return out;
  }

  double std_error() const {
    if (count < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(count - 1)) /
           std::sqrt(static_cast<double>(count));
  }
};

// Pairwise tree reduction; deterministic for a fixed block layout.
inline Welford reduce_pairwise(std::vector<Welford> blocks) {
  if (blocks.empty()) return {};
  while (blocks.size() > 1) {
    std::vector<Welford> next;
    next.reserve((blocks.size() + 1) / 2);
    for (size_t k = 0; k + 1 < blocks.size(); k += 2)
      next.push_back(Welford::merged(blocks[k], blocks[k + 1]));
    if (blocks.size() % 2 == 1) next.push_back(blocks.back());
    blocks = std::move(next);
  }
  return blocks.front();
}

}  // namespace detail

/// Monte-Carlo evaluation of the alpha-cosine transform
///   (T_alpha f)(E) = int |cos(E, F)|^alpha f(F) dF
/// over the invariant probability measure, for Re(alpha) > -1 (the
/// absolutely convergent range; the analytic continuation lives in the
/// spectral engine). Sample j draws from stream j of the seed, so estimates
/// are reproducible bit-for-bit at a fixed worker count.
///
/// Samples with cosine exactly 0 contribute 0 when Re(alpha) > 0 and are
/// rejected and redrawn (counted) when Re(alpha) <= 0.
inline MCEstimate cosine_transform_mc(const std::function<double(const Frame&)>& f,
                                      const Frame& e, std::complex<double> alpha, long long n_samples,
                                      std::uint64_t seed, int workers = 1) {
  if (!(alpha.real() > -1.0))
    throw precondition_error(
        "alpha: Monte-Carlo evaluation needs Re(alpha) > -1; the continued transform is "
        "available through the spectral engine");
  if (n_samples < 2) throw validation_error("samples: need at least 2");
  if (workers < 1) workers = 1;
  const bool complex_mode = alpha.imag() != 0.0;

  std::vector<detail::Welford> re_blocks(static_cast<size_t>(workers));
  std::vector<detail::Welford> im_blocks(static_cast<size_t>(workers));
  std::vector<long long> rejected(static_cast<size_t>(workers), 0);

  auto run_block = [&](int w) {
    const long long lo = n_samples * w / workers;
    const long long hi = n_samples * (w + 1) / workers;
    for (long long j = lo; j < hi; ++j) {
      CounterRng rng(seed, static_cast<std::uint64_t>(j));
      Frame fr = sample_frame(e.n(), e.i(), rng);
      double c = cosine(fr, e);
      while (c == 0.0 && alpha.real() <= 0.0) {
        ++rejected[static_cast<size_t>(w)];
        fr = sample_frame(e.n(), e.i(), rng);
        c = cosine(fr, e);
      }
      double wre = 0.0, wim = 0.0;
      if (c > 0.0) {
        const std::complex<double> kern = std::exp(alpha * std::log(c));
        wre = kern.real();
        wim = kern.imag();
      }  // else Re(alpha) > 0 and the kernel vanishes
      const double fc = f(fr);
      re_blocks[static_cast<size_t>(w)].push(wre * fc);
      if (complex_mode) im_blocks[static_cast<size_t>(w)].push(wim * fc);
    }
  };

  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
    for (auto& t : pool) t.join();
  }

  const detail::Welford re = detail::reduce_pairwise(re_blocks);
  MCEstimate est;
  est.value = re.mean;
  est.stderr_ = re.std_error();
  est.samples = n_samples;
  est.seed = seed;
  for (long long rj : rejected) est.rejected += rj;
  if (complex_mode) {
    const detail::Welford im = detail::reduce_pairwise(im_blocks);
    est.value_im = im.mean;
    est.stderr_im = im.std_error();
  }
  return est;
}

}  // namespace dps
