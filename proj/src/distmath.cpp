#include "spectrum/distmath.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "spectrum/error.hpp"

namespace spectrum {

namespace {

void check_normalized(const VoteDistribution& d, const char* who) {
  double sum = 0.0;
  for (double p : d.probs) {
    if (!(p >= 0.0)) {
      throw InvalidDistributionError(std::string(who) +
                                     ": negative probability entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidDistributionError(std::string(who) +
                                   ": distribution does not sum to 1");
  }
}

// Inversion count of v via merge sort (pairs i<j with v[i] > v[j]).
std::int64_t count_inversions(std::vector<double>& v) {
  std::size_t n = v.size();
  std::vector<double> buf(n);
  std::int64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      std::size_t mid = lo + width;
      std::size_t hi = std::min(mid + width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          inversions += static_cast<std::int64_t>(mid - i);
          buf[k++] = v[j++];
        } else {
          buf[k++] = v[i++];
        }
      }
      while (i < mid) buf[k++] = v[i++];
      while (j < hi) buf[k++] = v[j++];
      std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    }
  }
  return inversions;
}

struct TieStats {
  std::int64_t pairs = 0;  // sum m(m-1)/2
  std::int64_t t0 = 0;     // sum m(m-1)(m-2)
  std::int64_t t1 = 0;     // sum m(m-1)(2m+5)
};

TieStats tie_stats(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  TieStats s;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    std::int64_t m = static_cast<std::int64_t>(j - i);
    s.pairs += m * (m - 1) / 2;
    s.t0 += m * (m - 1) * (m - 2);
    s.t1 += m * (m - 1) * (2 * m + 5);
    i = j;
  }
  return s;
}

}  // namespace

double emd(const VoteDistribution& d1, const VoteDistribution& d2) {
  if (d1.scheme != d2.scheme) {
    throw SchemeMismatchError("emd: distributions use different schemes");
  }
  check_normalized(d1, "emd");
  check_normalized(d2, "emd");
  double acc = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < d1.probs.size(); ++i) {
    acc += d1.probs[i] - d2.probs[i];
    total += std::abs(acc);
  }
  return total;
}

double ems(const VoteDistribution& d1, const VoteDistribution& d2) {
  return ems_from_emd(emd(d1, d2));
}

VoteDistribution baseline_distribution(const BaselineSpec& spec,
                                       const LabelScheme& scheme) {
  if (spec.kind == BaselineKind::Uniform) {
    std::vector<double> p(scheme.size, 1.0 / scheme.size);
    return VoteDistribution{scheme, std::move(p)};
  }
  if (!(spec.std >= 0.0)) {
    throw InvalidParameterError("baseline_distribution: std must be >= 0");
  }
  if (!std::isfinite(spec.mean)) {
    throw InvalidParameterError("baseline_distribution: mean must be finite");
  }
  auto point_mass = [&](double mean) {
    int idx = static_cast<int>(std::round(mean));  // half away from zero
    idx = std::clamp(idx, 1, scheme.size);
    return onehot(idx, scheme);
  };
  if (spec.std == 0.0) return point_mass(spec.mean);
  std::vector<double> p(scheme.size);
  double z = 0.0;
  for (int i = 1; i <= scheme.size; ++i) {
    double d = (i - spec.mean) / spec.std;
    p[i - 1] = std::exp(-0.5 * d * d);
    z += p[i - 1];
  }
  if (z <= 0.0) return point_mass(spec.mean);  // densities underflowed
  for (double& v : p) v /= z;
  return VoteDistribution{scheme, std::move(p)};
}

KendallResult kendall_tau(const std::vector<double>& x,
                          const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw InvalidInputError("kendall_tau: length mismatch");
  }
  std::int64_t n = static_cast<std::int64_t>(x.size());
  if (n < 2) throw InvalidInputError("kendall_tau: need at least 2 points");

  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  // pairs tied in both x and y
  std::int64_t xytie = 0;
  {
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i;
      while (j < idx.size() && x[idx[j]] == x[idx[i]] &&
             y[idx[j]] == y[idx[i]]) {
        ++j;
      }
      std::int64_t m = static_cast<std::int64_t>(j - i);
      xytie += m * (m - 1) / 2;
      i = j;
    }
  }

  TieStats xs = tie_stats(x);
  TieStats ys = tie_stats(y);

  std::vector<double> y_in_x_order(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) y_in_x_order[i] = y[idx[i]];
  std::int64_t dis = count_inversions(y_in_x_order);

  std::int64_t tot = n * (n - 1) / 2;
  std::int64_t con_minus_dis = tot - xs.pairs - ys.pairs + xytie - 2 * dis;

  if (tot == xs.pairs || tot == ys.pairs) {
    // every pair tied in one coordinate: tau-b undefined
    return KendallResult{0.0, 1.0};
  }
  double tau = static_cast<double>(con_minus_dis) /
               std::sqrt(static_cast<double>(tot - xs.pairs)) /
               std::sqrt(static_cast<double>(tot - ys.pairs));
  tau = std::clamp(tau, -1.0, 1.0);

  // normal approximation to the null distribution of con_minus_dis,
  // with tie corrections
  double m = static_cast<double>(n) * (n - 1.0);
  double var = (m * (2.0 * n + 5.0) - xs.t1 - ys.t1) / 18.0 +
               (2.0 * static_cast<double>(xs.pairs) * ys.pairs) / m;
  if (n > 2) {
    var += static_cast<double>(xs.t0) * ys.t0 / (9.0 * m * (n - 2.0));
  }
  double p = 1.0;
  if (var > 0.0) {
    double z = static_cast<double>(con_minus_dis) / std::sqrt(var);
    p = std::erfc(std::abs(z) / std::sqrt(2.0));
  } else if (con_minus_dis != 0) {
    p = 0.0;
  }
  p = std::clamp(p, 0.0, 1.0);
  return KendallResult{tau, p};
}

}  // namespace spectrum
