// Copyright 2026 The vdcwitness Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/expsum.hpp"
#include "core/kernels.hpp"
#include "core/numeric.hpp"

namespace vdc {
namespace {

constexpr double kSlack = 1e-12;

double clipped(double value) { return std::max(value, -1.0); }

// -alpha r^-beta for r = p^e, e >= 1.
double negative_power(std::uint64_t p, long e, double alpha, double beta) {
  return -alpha * std::exp(-beta * static_cast<double>(e) * std::log(static_cast<double>(p)));
}

std::vector<double> geometric_weights(double lambda, int s) {
  std::vector<double> w(static_cast<std::size_t>(s) + 1);
  double x = 1.0;
  for (auto& v : w) {
    v = x;
    x *= lambda;
  }
  return w;
}

double sum_of(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  return total;
}

// Exponent ladders for the primes dividing q, looked up once per q.
struct FactorRow {
  std::uint64_t p;
  int e;
  const std::vector<int>* ladder;  // nullptr when every a_j is zero
};

double averaged_from_rows(const AveragingScheme& sc, const std::vector<FactorRow>& rows,
                          const std::vector<double>& weights) {
  double total = 0.0;
  for (int j = 0; j <= sc.s; ++j) {
    double log_r = 0.0;
    for (const auto& row : rows) {
      const int a = row.ladder ? (*row.ladder)[static_cast<std::size_t>(j)] : 0;
      const long left = static_cast<long>(row.e) - static_cast<long>(sc.l) * a;
      if (left > 0) log_r += static_cast<double>(left) * std::log(static_cast<double>(row.p));
    }
    const double t = log_r == 0.0 ? 1.0 : clipped(-sc.alpha * std::exp(-sc.beta * log_r));
    total += weights[static_cast<std::size_t>(j)] * t;
  }
  return total / sc.Lambda;
}

const std::vector<int>* ladder_of(const AveragingScheme& sc, std::uint64_t p) {
  auto it = std::lower_bound(sc.ladders.begin(), sc.ladders.end(), p,
                             [](const PrimeLadder& l, std::uint64_t v) { return l.p < v; });
  if (it == sc.ladders.end() || it->p != p) return nullptr;
  return &it->exponents;
}

void fill_constants(AveragingScheme& sc, std::uint64_t prime_count) {
  sc.lambda = std::exp2(-sc.beta);
  sc.c3 = std::max((1.0 + sc.alpha) / (1.0 - sc.lambda), sc.alpha / sc.lambda);
  sc.pstar = threshold_pstar(sc.alpha, sc.beta);
  sc.astar = threshold_astar(sc.alpha, sc.beta, sc.l);
  sc.c2 = std::max(2, sc.astar) * std::log2(static_cast<double>(sc.pstar));
  const double m = static_cast<double>(sc.m);
  sc.c4 = sc.m >= 2 ? static_cast<double>(prime_count) * std::log(m) / m : 0.0;
  sc.c1 = sc.c2 * std::pow(sc.c3, 1.0 / sc.beta) * sc.c4 / std::log(2.0);
  sc.Lambda = sum_of(geometric_weights(sc.lambda, sc.s));
}

void fill_log_moduli(AveragingScheme& sc) {
  sc.log_moduli.assign(static_cast<std::size_t>(sc.s) + 1, 0.0);
  for (const auto& ladder : sc.ladders) {
    const double lp = std::log(static_cast<double>(ladder.p));
    for (int j = 0; j <= sc.s; ++j) {
      sc.log_moduli[static_cast<std::size_t>(j)] += ladder.exponents[static_cast<std::size_t>(j)] * lp;
    }
  }
}

}  // namespace

double tau(std::uint64_t d, std::uint64_t q, double alpha, double beta, int l) {
  require(d >= 1 && q >= 1, ErrorCode::kInvalidArgument, "tau needs d, q >= 1");
  const std::uint64_t g = gcd_with_power(q, d, l);
  const std::uint64_t r = q / g;
  if (r == 1) return 1.0;
  return clipped(-alpha * std::pow(static_cast<double>(r), -beta));
}

double tau_star_prime_power(std::uint64_t p, int a, int k, double alpha, double beta, int l) {
  const long left = static_cast<long>(k) - static_cast<long>(a) * l;
  return left <= 0 ? 1.0 : negative_power(p, left, alpha, beta);
}

double tau_prime_power(std::uint64_t p, int a, int k, double alpha, double beta, int l) {
  return clipped(tau_star_prime_power(p, a, k, alpha, beta, l));
}

std::uint64_t threshold_pstar(double alpha, double beta) {
  require(alpha > 0.0 && beta > 0.0 && beta < 1.0, ErrorCode::kInvalidArgument,
          "threshold_pstar needs alpha > 0 and 0 < beta < 1");
  const double lambda = std::exp2(-beta);
  for (std::uint64_t p = 2;; ++p) {
    if (!is_prime(p)) continue;
    if (lambda * (alpha + std::pow(static_cast<double>(p), beta)) >= alpha + 1.0 - kSlack) return p;
  }
}

int threshold_astar(double alpha, double beta, int l) {
  require(alpha > 0.0 && beta > 0.0 && beta < 1.0 && l >= 1, ErrorCode::kInvalidArgument,
          "threshold_astar needs alpha > 0, 0 < beta < 1, l >= 1");
  const double lambda = std::exp2(-beta);
  const double rhs = (alpha * lambda * (1.0 - lambda) + 2.0 * lambda - 1.0) /
                     (lambda * (2.0 * lambda - 1.0));
  int a = 1;
  while (std::exp2(beta * a * l) < rhs - kSlack) ++a;
  return a;
}

std::vector<int> exponents_for_prime(std::uint64_t p, int s, double alpha, double beta, int l) {
  require(s >= 0, ErrorCode::kInvalidArgument, "s must be nonnegative");
  std::vector<int> a(static_cast<std::size_t>(s) + 1, 0);
  const std::uint64_t pstar = threshold_pstar(alpha, beta);
  if (p < pstar) {
    const int astar = threshold_astar(alpha, beta, l);
    for (int j = 0; j <= s; ++j) a[static_cast<std::size_t>(j)] = astar * j;
    return a;
  }
  // Largest q with pstar^q <= p.
  int q = 0;
  for (u128 power = pstar; power <= p; power *= pstar) ++q;
  for (int j = 0; j <= s; ++j) a[static_cast<std::size_t>(j)] = j / q;
  return a;
}

int AveragingScheme::exponent(std::uint64_t p, int j) const {
  require(j >= 0 && j <= s, ErrorCode::kInvalidArgument, "level out of range");
  const auto* ladder = ladder_of(*this, p);
  return ladder ? (*ladder)[static_cast<std::size_t>(j)] : 0;
}

double AveragingScheme::weight(int j) const { return std::pow(lambda, j) / Lambda; }

std::optional<std::uint64_t> AveragingScheme::modulus(int j) const {
  require(j >= 0 && j <= s, ErrorCode::kInvalidArgument, "level out of range");
  u128 d = 1;
  constexpr u128 kLimit = std::numeric_limits<std::uint64_t>::max();
  for (const auto& ladder : ladders) {
    for (int e = 0; e < ladder.exponents[static_cast<std::size_t>(j)]; ++e) {
      d *= ladder.p;
      if (d > kLimit) return std::nullopt;
    }
  }
  return static_cast<std::uint64_t>(d);
}

double AveragingScheme::averaged_tau(std::uint64_t q) const {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  std::vector<FactorRow> rows;
  for (const auto& [p, e] : factorize(q)) rows.push_back({p, e, ladder_of(*this, p)});
  return averaged_from_rows(*this, rows, geometric_weights(lambda, s));
}

AveragingScheme build_scheme(double delta, const OddPolynomial& f, double c0,
                             const SchemeOptions& options) {
  require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  require(c0 > 0.0, ErrorCode::kInvalidArgument, "c0 must be positive");
  AveragingScheme sc;
  sc.delta = delta;
  sc.c0 = c0;
  sc.l = f.least_index();
  sc.beta = 1.0 / f.degree();
  sc.alpha = c0 * std::abs(ratio_to_double(f.coeff(sc.l), 1));
  sc.lambda = std::exp2(-sc.beta);
  const double c3 = std::max((1.0 + sc.alpha) / (1.0 - sc.lambda), sc.alpha / sc.lambda);

  // Smallest s with lambda^{s+1} <= delta / c3; the lower half of the
  // sandwich then holds because lambda^s > delta / c3.
  const double target = delta / c3;
  int s = 0;
  while (std::pow(sc.lambda, s + 1) > target) ++s;
  if (s >= 63 || (std::uint64_t{1} << s) > options.cap) {
    fail(ErrorCode::kCapExceeded, "scheme needs 2^" + std::to_string(s) +
                                      " primes of headroom, above the configured cap " +
                                      std::to_string(options.cap));
  }
  sc.s = s;
  sc.m = std::uint64_t{1} << s;
  fill_constants(sc, 0);

  const auto primes = sc.m >= 2 ? primes_up_to(sc.m) : std::vector<std::uint64_t>{};
  for (std::uint64_t p : primes) {
    auto ladder = exponents_for_prime(p, s, sc.alpha, sc.beta, sc.l);
    if (ladder.back() == 0) continue;  // contributes nothing to any d_j
    sc.ladders.push_back({p, std::move(ladder)});
  }
  fill_constants(sc, primes.size());
  fill_log_moduli(sc);
  return sc;
}

SchemeVerdict verify_scheme(const AveragingScheme& scheme, std::uint64_t q_max, unsigned threads) {
  require(q_max >= 1, ErrorCode::kInvalidArgument, "q_max must be positive");
  require(q_max < (std::uint64_t{1} << 32), ErrorCode::kCapExceeded, "q_max must be below 2^32");
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(q_max));
  const auto weights = geometric_weights(scheme.lambda, scheme.s);

  // Dense prime -> ladder table; primes above q_max never divide any q here.
  std::vector<const std::vector<int>*> table(q_max + 1, nullptr);
  for (const auto& ladder : scheme.ladders) {
    if (ladder.p <= q_max) table[ladder.p] = &ladder.exponents;
  }

  constexpr std::size_t kBlocks = 64;
  struct Best {
    std::uint64_t q = 1;
    double value = 1.0;
  };
  std::vector<Best> best(kBlocks);
  const std::uint64_t span = (q_max + kBlocks - 1) / kBlocks;
  parallel_blocks(kBlocks, threads, [&](std::size_t b) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, b * span + 1);
    const std::uint64_t hi = std::min(q_max, (b + 1) * span);
    Best local;
    std::vector<FactorRow> rows;
    for (std::uint64_t q = lo; q <= hi; ++q) {
      rows.clear();
      for (std::uint64_t x = q; x > 1;) {
        const std::uint64_t p = spf[x];
        int e = 0;
        while (x % p == 0) {
          x /= p;
          ++e;
        }
        rows.push_back({p, e, table[p]});
      }
      const double v = averaged_from_rows(scheme, rows, weights);
      if (v < local.value) local = {q, v};
    }
    best[b] = local;
  });

  SchemeVerdict verdict;
  verdict.q_max = q_max;
  for (const auto& b : best) {
    if (b.value < verdict.worst_value) {
      verdict.worst_value = b.value;
      verdict.worst_q = b.q;
    }
  }
  verdict.pass = verdict.worst_value >= -scheme.delta - kSlack;
  return verdict;
}

ReductionCertificate reduction_certificate(const AveragingScheme& scheme, std::uint64_t q) {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  const auto weights = geometric_weights(scheme.lambda, scheme.s);
  const auto factors = factorize(q);

  std::vector<FactorRow> rows;
  for (const auto& [p, e] : factors) rows.push_back({p, e, ladder_of(scheme, p)});
  ReductionCertificate cert;
  cert.full_sum = averaged_from_rows(scheme, rows, weights);

  auto prime_average = [&](const FactorRow& row) {
    return averaged_from_rows(scheme, std::vector<FactorRow>{row}, weights);
  };
  cert.min_prime_sum = cert.full_sum;
  if (rows.empty()) {
    cert.prime_sum = cert.full_sum;
    return cert;
  }
  cert.min_prime_sum = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) cert.min_prime_sum = std::min(cert.min_prime_sum, prime_average(row));

  // First level whose modulus absorbs q; the level before it leaves a
  // nontrivial cofactor r, and the smallest prime of r is the certificate.
  auto leftover = [&](const FactorRow& row, int j) {
    const int a = row.ladder ? (*row.ladder)[static_cast<std::size_t>(j)] : 0;
    return row.e > scheme.l * a;
  };
  int first_absorbing = scheme.s + 1;
  for (int j = 0; j <= scheme.s; ++j) {
    if (std::none_of(rows.begin(), rows.end(), [&](const FactorRow& r) { return leftover(r, j); })) {
      first_absorbing = j;
      break;
    }
  }
  const int level = first_absorbing - 1;
  const FactorRow* chosen = nullptr;
  if (level >= 0) {
    for (const auto& row : rows) {
      if (leftover(row, level)) {
        chosen = &row;
        break;
      }
    }
  }
  if (chosen == nullptr) chosen = &rows.front();  // q = 1 is handled above; q | d_0^l is impossible
  cert.p = chosen->p;
  cert.k = chosen->e;
  cert.prime_sum = prime_average(*chosen);

  // Termwise comparison of tau(d_j, q) against tau(p^{a_j}, p^k).
  for (int j = 0; j <= scheme.s; ++j) {
    double log_r = 0.0;
    for (const auto& row : rows) {
      if (leftover(row, j)) {
        const int a = row.ladder ? (*row.ladder)[static_cast<std::size_t>(j)] : 0;
        log_r += (row.e - scheme.l * a) * std::log(static_cast<double>(row.p));
      }
    }
    const double full = log_r == 0.0 ? 1.0 : clipped(-scheme.alpha * std::exp(-scheme.beta * log_r));
    const int a = chosen->ladder ? (*chosen->ladder)[static_cast<std::size_t>(j)] : 0;
    const double local = tau_prime_power(chosen->p, a, chosen->e, scheme.alpha, scheme.beta, scheme.l);
    if (full < local - kSlack) cert.termwise = false;
  }
  return cert;
}

namespace {

void record(LemmaSuiteReport& report, double lhs, double rhs) {
  ++report.checks;
  const double margin = lhs - rhs;
  if (report.checks == 1 || margin < report.worst_margin) report.worst_margin = margin;
  if (margin < -kSlack) ++report.failures;
}

}  // namespace

LemmaSuiteReport check_large_prime_lemma(double alpha, double beta, int l, std::uint64_t p_max,
                                         int s_max) {
  const double mu = std::exp2(-beta);
  const std::uint64_t pstar = threshold_pstar(alpha, beta);
  LemmaSuiteReport report;
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p < pstar) continue;
    for (int s = 1; s <= s_max; ++s) {
      const double rhs = -std::pow(mu, s + 1) / (1.0 - mu);
      for (int k = 1; k <= 8 * l * s; ++k) {
        double lhs = 0.0;
        for (int j = 0; j <= s; ++j) {
          lhs += std::pow(mu, j) * tau_star_prime_power(p, j, k, alpha, beta, l);
        }
        record(report, lhs, rhs);
      }
    }
  }
  return report;
}

LemmaSuiteReport check_small_prime_lemma(double alpha, double beta, int l, std::uint64_t p_max,
                                         int s_max) {
  const double mu = std::exp2(-beta);
  const std::uint64_t pstar = threshold_pstar(alpha, beta);
  const int astar = threshold_astar(alpha, beta, l);
  LemmaSuiteReport report;
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p >= pstar) break;
    for (int s = 1; s <= s_max; ++s) {
      const double rhs = -std::pow(mu, s + 1) / (1.0 - mu);
      for (int k = 1; k <= 8 * l * s; ++k) {
        double lhs = 0.0;
        for (int j = 0; j <= s; ++j) {
          lhs += std::pow(mu, j) * tau_prime_power(p, astar * j, k, alpha, beta, l);
        }
        record(report, lhs, rhs);
      }
    }
  }
  return report;
}

LemmaSuiteReport check_ladder_lemma(double alpha, double beta, int l, std::uint64_t p_max,
                                    int s_max) {
  const double lambda = std::exp2(-beta);
  const std::uint64_t pstar = threshold_pstar(alpha, beta);
  const int astar = threshold_astar(alpha, beta, l);
  const double c2 = std::max(2, astar) * std::log2(static_cast<double>(pstar));
  LemmaSuiteReport report;
  for (std::uint64_t p : primes_up_to(p_max)) {
    for (int s = 1; s <= s_max; ++s) {
      if (s < 63 && p > (std::uint64_t{1} << s)) continue;
      const auto a = exponents_for_prime(p, s, alpha, beta, l);
      const double rhs = -(1.0 + alpha) * std::pow(lambda, s + 1) / (1.0 - lambda);
      for (int k = 1; k <= 8 * l * s; ++k) {
        double lhs = 0.0;
        for (int j = 0; j <= s; ++j) {
          lhs += std::pow(lambda, j) *
                 tau_prime_power(p, a[static_cast<std::size_t>(j)], k, alpha, beta, l);
        }
        record(report, lhs, rhs);
      }
      // p^{a_s} < 2^{c2 s}, compared in base-2 logarithms.
      record(report, c2 * s, a.back() * std::log2(static_cast<double>(p)) + kSlack);
    }
  }
  return report;
}

PrincipalMinimum principal_minimum(const OddPolynomial& f, const std::vector<std::uint64_t>& moduli,
                                   double lambda, std::uint64_t q_max) {
  require(!moduli.empty(), ErrorCode::kInvalidArgument, "need at least one modulus");
  double Lambda = 0.0;
  for (std::size_t j = 0; j < moduli.size(); ++j) Lambda += std::pow(lambda, static_cast<double>(j));
  PrincipalMinimum best;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    std::vector<double> avg(q, 0.0);
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      const auto sums = multiplier_sums(f, moduli[j], q);
      const double w = std::pow(lambda, static_cast<double>(j)) / (Lambda * static_cast<double>(q));
      for (std::uint64_t a = 0; a < q; ++a) avg[a] += w * sums[a];
    }
    for (std::uint64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      if (avg[a] < best.value) best = {avg[a], q, static_cast<std::int64_t>(a)};
    }
  }
  return best;
}

AveragingScheme build_desk_scheme(const OddPolynomial& f, std::uint64_t n,
                                  const DeskOptions& options) {
  require(options.max_levels >= 0, ErrorCode::kInvalidArgument, "max_levels must be nonnegative");
  auto term_count = [&](std::uint64_t d) -> std::uint64_t {
    try {
      return surrogate_terms(f, n, d).size();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kEmptyRange) return 0;
      throw;
    }
  };
  require(term_count(1) >= options.min_terms, ErrorCode::kEmptyRange,
          "n is too small for the surrogate at d = 1");

  AveragingScheme sc;
  sc.desk = true;
  sc.delta = options.delta;
  sc.c0 = options.c0;
  sc.l = f.least_index();
  sc.beta = 1.0 / f.degree();
  sc.alpha = options.c0 * std::abs(ratio_to_double(f.coeff(sc.l), 1));
  sc.lambda = std::exp2(-sc.beta);

  std::vector<std::uint64_t> moduli{1};
  double current = principal_minimum(f, moduli, sc.lambda, options.principal_qmax).value;
  const auto candidates = primes_up_to(std::max<std::uint64_t>(options.principal_qmax, 2));
  for (int level = 0; level < options.max_levels; ++level) {
    std::uint64_t best_p = 0;
    double best_value = current;
    for (std::uint64_t p : candidates) {
      const u128 next = static_cast<u128>(moduli.back()) * p;
      if (next > std::numeric_limits<std::uint32_t>::max()) break;
      if (term_count(static_cast<std::uint64_t>(next)) < options.min_terms) break;
      auto trial = moduli;
      trial.push_back(static_cast<std::uint64_t>(next));
      const double v = principal_minimum(f, trial, sc.lambda, options.principal_qmax).value;
      if (v > best_value + kSlack) {
        best_value = v;
        best_p = p;
      }
    }
    if (best_p == 0) break;
    moduli.push_back(moduli.back() * best_p);
    current = best_value;
  }

  sc.s = static_cast<int>(moduli.size()) - 1;
  std::vector<std::uint64_t> used;
  for (std::uint64_t d : moduli) {
    for (const auto& [p, e] : factorize(d)) used.push_back(p);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (std::uint64_t p : used) {
    PrimeLadder ladder{p, {}};
    for (std::uint64_t d : moduli) {
      int e = 0;
      for (std::uint64_t x = d; x % p == 0; x /= p) ++e;
      ladder.exponents.push_back(e);
    }
    sc.ladders.push_back(std::move(ladder));
  }
  sc.m = used.empty() ? 1 : used.back();
  fill_constants(sc, used.size());
  fill_log_moduli(sc);
  return sc;
}

}  // namespace vdc
