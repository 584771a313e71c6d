#include "core/contraction.hpp"

#include <map>

namespace rdmkit {

const char* path_name(Path p) {
  switch (p) {
    case Path::BruteForce: return "brute";
    case Path::Recurrence: return "recurrence";
    case Path::Explicit: return "explicit";
  }
  return "?";
}

Path path_from_name(const std::string& name) {
  if (name == "brute" || name == "bruteforce") return Path::BruteForce;
  if (name == "recurrence") return Path::Recurrence;
  if (name == "explicit") return Path::Explicit;
  fail(ErrorCode::InvalidArgument, "unknown path '" + name + "'");
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

double xi_or_fail_normalized(const XiTable& xi, int n, bool normalized) {
  const double v = xi.value(n);
  if (normalized && v <= 0.0)
    fail(ErrorCode::DegenerateState, "xi_" + std::to_string(n) + " = 0, cannot normalize");
  return v;
}

ContractionResult finish(Operator m, int n, int k, Sector sector, Path path,
                         bool normalized, double xi_n) {
  if (normalized) m /= xi_n;
  ContractionResult r;
  r.matrix = std::move(m);
  r.n = n;
  r.k = k;
  r.sector = sector;
  r.path = path;
  r.normalized = normalized;
  r.xi_n = xi_n;
  return r;
}

}  // namespace

ContractionResult contract_bruteforce(const SingleParticleState& rho, int n, int k,
                                      Sector sector, bool normalized) {
  if (k < 1 || k > n) fail(ErrorCode::BadArity, "contract: need 1 <= k <= n");
  const XiTable xi = xi_table(rho, n, sector);
  const double xi_n = xi_or_fail_normalized(xi, n, normalized);
  Operator power = graded_power(rho, n, sector);
  Operator m = partial_trace_last(power, rho.dim(), n, k);
  return finish(std::move(m), n, k, sector, Path::BruteForce, normalized, xi_n);
}

ContractionResult contract_recurrence(const SingleParticleState& rho, int n, int k,
                                      Sector sector, const XiTable& xi, bool normalized) {
  if (k < 1 || k >= n) fail(ErrorCode::BadArity, "contract_recurrence: need 1 <= k < n");
  if (xi.max_order() < n) fail(ErrorCode::BadArity, "contract_recurrence: xi table too short");
  const int d = rho.dim();
  const double sign = (sector == Sector::Fermi) ? -1.0 : 1.0;

  // table[(n', k')] = C(n', k') L^{k'}_{n'} rho^{graded n'}
  std::map<std::pair<int, int>, Operator> table;

  // k' = 1 base chain: M(1,1) = rho, then M(n',1) = xi_{n'-1} rho + sign * M(n'-1,1) rho.
  table[{1, 1}] = rho.base;
  for (int np = 2; np <= n; ++np)
    table[{np, 1}] = xi.value(np - 1) * rho.base + sign * (table[{np - 1, 1}] * rho.base);

  for (int kp = 2; kp <= k; ++kp) {
    // Diagonal base: C(k',k') L^{k'}_{k'} = the graded power itself.
    table[{kp, kp}] = graded_power(rho, kp, sector);
    const Operator& proj = symmetrizer(sector, d, kp);
    const Operator tail =
        tensor_product(Operator::Identity(pow_checked(d, kp - 1), pow_checked(d, kp - 1)),
                       rho.base) *
        proj;
    for (int np = kp + 1; np <= n - (k - kp); ++np) {
      Operator step = graded_product(table[{np - 1, kp - 1}], rho.base, sector, d);
      step += sign * (table[{np - 1, kp}] * tail);
      table[{np, kp}] = std::move(step);
    }
  }

  const double xi_n = xi_or_fail_normalized(xi, n, normalized);
  Operator m = table[{n, k}] / binomial(n, k);
  return finish(std::move(m), n, k, sector, Path::Recurrence, normalized, xi_n);
}

ContractionResult contract_explicit(const SingleParticleState& rho, int n, int k,
                                    Sector sector, const XiTable& xi, bool normalized) {
  if (k < 1 || k > n) fail(ErrorCode::BadArity, "contract_explicit: need 1 <= k <= n");
  if (xi.max_order() < n) fail(ErrorCode::BadArity, "contract_explicit: xi table too short");
  const int d = rho.dim();
  const std::int64_t dk = pow_checked(d, k);

  std::vector<Operator> powers(n + 1);
  for (int p = 1; p <= n; ++p) powers[p] = rho.power(p);

  // Lexicographic enumeration of compositions (i_1..i_k), i_j >= 1, sum <= n.
  // The projector is pulled out of the sum: the accumulated tensor part is
  // projected once at the end.
  Operator acc = Operator::Zero(dk, dk);
  std::vector<int> comp(k, 1);
  while (true) {
    int total = 0;
    for (int c : comp) total += c;
    if (total <= n) {
      double coeff = xi.value(n - total);
      if (sector == Sector::Fermi && (k + total) % 2 != 0) coeff = -coeff;
      if (coeff != 0.0) {
        Operator term = powers[comp[0]];
        for (int j = 1; j < k; ++j) term = tensor_product(term, powers[comp[j]]);
        acc += coeff * term;
      }
    }
    // Advance: increment the last slot; on overflow of the remaining budget,
    // carry to the left.
    int pos = k - 1;
    while (pos >= 0) {
      ++comp[pos];
      int rest = 0;
      for (int j = 0; j <= pos; ++j) rest += comp[j];
      if (rest + (k - 1 - pos) <= n) {
        for (int j = pos + 1; j < k; ++j) comp[j] = 1;
        break;
      }
      --pos;
    }
    if (pos < 0) break;
  }

  const Operator& proj = symmetrizer(sector, d, k);
  Operator m = (proj * acc * proj) / binomial(n, k);
  const double xi_n = xi_or_fail_normalized(xi, n, normalized);
  return finish(std::move(m), n, k, sector, Path::Explicit, normalized, xi_n);
}

ContractionResult sigma_k(const SingleParticleState& rho, int n, int k, Sector sector,
                          Path path) {
  switch (path) {
    case Path::BruteForce:
      return contract_bruteforce(rho, n, k, sector, true);
    case Path::Recurrence: {
      const XiTable xi = xi_table(rho, n, sector);
      if (k == n) return contract_bruteforce(rho, n, k, sector, true);
      return contract_recurrence(rho, n, k, sector, xi, true);
    }
    case Path::Explicit: {
      const XiTable xi = xi_table(rho, n, sector);
      return contract_explicit(rho, n, k, sector, xi, true);
    }
  }
  fail(ErrorCode::InvalidArgument, "sigma_k: unknown path");
}

}  // namespace rdmkit
