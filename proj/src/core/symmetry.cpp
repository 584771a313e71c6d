#include "core/symmetry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace rdmkit {

namespace {
constexpr int kProjectorCap = 8;   // n! summation cap for projector construction
constexpr int kSectorTraceCap = 10;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

const char* sector_name(Sector s) { return s == Sector::Fermi ? "fermi" : "bose"; }

Sector sector_from_name(const std::string& name) {
  if (name == "fermi") return Sector::Fermi;
  if (name == "bose") return Sector::Bose;
  fail(ErrorCode::InvalidArgument, "unknown sector '" + name + "'");
}

Permutation Permutation::identity(int k) {
  Permutation p;
  p.images.resize(k);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) fail(ErrorCode::BadArity, "permutation size mismatch");
  Permutation out;
  out.images.resize(size());
  for (int i = 0; i < size(); ++i) out.images[i] = images[other.images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(size());
  for (int i = 0; i < size(); ++i) out.images[images[i]] = i;
  return out;
}

int Permutation::sign() const {
  const auto cd = cycle_decompose(*this);
  return ((size() - cd.cycle_count()) % 2 == 0) ? 1 : -1;
}

CycleDecomposition cycle_decompose(const Permutation& pi) {
  const int k = pi.size();
  CycleDecomposition cd;
  std::vector<bool> seen(k, false);
  for (int start = 0; start < k; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int cur = start;
    do {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = pi.images[cur];
    } while (cur != start);
    cd.cycles.push_back(std::move(cycle));
  }
  return cd;
}

Operator permutation_operator(const Permutation& pi, int d, int n) {
  if (pi.size() != n) fail(ErrorCode::BadArity, "permutation acts on n factors");
  const std::int64_t dn = pow_checked(d, n);
  const Permutation inv = pi.inverse();
  Operator p = Operator::Zero(dn, dn);
  std::vector<int> digits(n), permuted(n);
  for (std::int64_t x = 0; x < dn; ++x) {
    std::int64_t rest = x;
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (int i = 0; i < n; ++i) permuted[i] = digits[inv.images[i]];
    std::int64_t y = 0;
    for (int i = 0; i < n; ++i) y = y * d + permuted[i];
    p(y, x) = 1.0;
  }
  return p;
}

const Operator& symmetrizer(Sector sector, int d, int n) {
  static std::map<std::tuple<int, int, int>, Operator> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(sector == Sector::Fermi ? 0 : 1, d, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  if (n < 1) fail(ErrorCode::BadArity, "symmetrizer: n >= 1 required");
  if (n > kProjectorCap)
    fail(ErrorCode::DimensionOverflow, "symmetrizer: n exceeds projector cap " +
                                           std::to_string(kProjectorCap));
  const std::int64_t dn = pow_checked(d, n);
  Operator p = Operator::Zero(dn, dn);
  const double weight = 1.0 / factorial(n);

  Permutation pi = Permutation::identity(n);
  std::vector<int> digits(n);
  do {
    const double c = (sector == Sector::Fermi) ? weight * pi.sign() : weight;
    const Permutation inv = pi.inverse();
    for (std::int64_t x = 0; x < dn; ++x) {
      std::int64_t rest = x;
      for (int i = n - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % d);
        rest /= d;
      }
      std::int64_t y = 0;
      for (int i = 0; i < n; ++i) y = y * d + digits[inv.images[i]];
      p(y, x) += c;
    }
  } while (std::next_permutation(pi.images.begin(), pi.images.end()));

  return cache.emplace(key, std::move(p)).first->second;
}

int factor_count(const Operator& op, int d) {
  std::int64_t dim = op.rows();
  int n = 0;
  std::int64_t acc = 1;
  while (acc < dim) {
    acc *= d;
    ++n;
  }
  if (acc != dim) fail(ErrorCode::BadArity, "operator dimension is not a power of d");
  return n == 0 ? 1 : n;
}

Operator graded_product(const Operator& b, const Operator& c, Sector sector, int d) {
  const int k = factor_count(b, d);
  const int m = factor_count(c, d);
  const Operator& p = symmetrizer(sector, d, k + m);
  Operator bc = tensor_product(b, c);
  return p * bc * p;
}

Operator graded_power(const SingleParticleState& rho, int n, Sector sector) {
  const int d = rho.dim();
  if (n < 1) fail(ErrorCode::BadArity, "graded_power: n >= 1 required");
  if (n == 1) return rho.base;
  const std::int64_t dn = pow_checked(d, n);
  if (sector == Sector::Fermi && n > d) return Operator::Zero(dn, dn);
  const Operator& p = symmetrizer(sector, d, n);
  // P rho^{otimes n} equals the two-sided projection since they commute.
  // Computed as (rho^{otimes n} P)^dagger using the Kronecker-apply kernel.
  Operator z = kron_power_apply_left(rho.base, n, p);
  return z.adjoint();
}

Complex sector_trace(const std::vector<Operator>& bs, Sector sector) {
  const int k = static_cast<int>(bs.size());
  if (k < 1) fail(ErrorCode::BadArity, "sector_trace: at least one operator");
  if (k > kSectorTraceCap) fail(ErrorCode::BadArity, "sector_trace: k exceeds cap");
  const auto d = bs[0].rows();
  for (const auto& b : bs)
    if (b.rows() != d || b.cols() != d) fail(ErrorCode::BadArity, "sector_trace: mixed dims");

  Complex total = 0.0;
  Permutation pi = Permutation::identity(k);
  do {
    const auto cd = cycle_decompose(pi);
    Complex term = (sector == Sector::Fermi) ? Complex(pi.sign(), 0.0) : Complex(1.0, 0.0);
    for (const auto& cycle : cd.cycles) {
      Operator prod = bs[cycle[0]];
      for (std::size_t s = 1; s < cycle.size(); ++s) prod *= bs[cycle[s]];
      term *= prod.trace();
    }
    total += term;
  } while (std::next_permutation(pi.images.begin(), pi.images.end()));
  return total;
}

}  // namespace rdmkit
