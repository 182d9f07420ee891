// Copyright 2026 The gradedlnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gradedlnd/cylinder.h"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "gradedlnd/error.h"
#include "gradedlnd/linear_solve.h"
#include "gradedlnd/polynomial_io.h"

namespace gradedlnd {

namespace {

const Monomial& monomial_of(const RingElem& e) { return e.poly().terms().begin()->first; }

bool valid_in(const Ring& ring, const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (!ring.is_valid_monomial(m)) return false;
  }
  return true;
}

RingPtr chart_of(const RingPtr& ring, const Monomial& m) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && !ring->variable(i).inverted) support.push_back(i);
  }
  return support.empty() ? ring : ring->localized(support);
}

RingElem monomial_inverse(const RingPtr& ring, const RingElem& term) {
  const auto& [m, c] = *term.poly().terms().begin();
  Monomial inv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
  if (!ring->is_valid_monomial(inv)) {
    throw Error(ErrorCode::kUnsupportedDenominator,
                format(term) + " is not invertible in the chart");
  }
  return RingElem::monomial(ring, inv, 1 / c);
}

// The value of q in a ring where its base is a unit monomial.
RingElem fraction_value(const LocalFraction& q, const RingPtr& chart) {
  RingElem num = embed(q.numerator, chart);
  if (q.power == 0) return num;
  if (!q.base.is_term()) {
    throw Error(ErrorCode::kUnsupportedDenominator,
                "denominator " + format(q.base) + " is not a monomial");
  }
  return num * monomial_inverse(chart, embed(q.base, chart)).pow(static_cast<unsigned>(q.power));
}

// z from a chart of `ring`, written as numerator / monomial.
LocalFraction as_fraction(const RingElem& z, const RingPtr& ring) {
  const std::size_t n = ring->num_vars();
  Monomial den(n, 0);
  for (const auto& [m, c] : z.poly().terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < 0 && !ring->variable(i).inverted) den[i] = std::max(den[i], -m[i]);
    }
  }
  const RingElem base = RingElem::monomial(ring, den);
  const bool trivial = std::all_of(den.begin(), den.end(), [](int e) { return e == 0; });
  return {RingElem(ring, z.poly().times_monomial(den)), base, trivial ? 0 : 1};
}

}  // namespace

std::string format_fraction(const LocalFraction& q) {
  if (q.power == 0) return format(q.numerator);
  const RingElem den = q.base.pow(static_cast<unsigned>(q.power));
  std::string d = format(den);
  if (!den.is_term()) d = "(" + d + ")";
  std::string num = format(q.numerator);
  if (q.numerator.poly().size() > 1) num = "(" + num + ")";
  return num + " / " + d;
}

RingElem Dehomogenization::rho(const RingElem& e) const { return embed(e, quotient); }

LocalFraction Dehomogenization::rho_prime_inverse(const RingElem& y) const {
  for (const auto& [mono, c] : y.poly().terms()) {
    if (quotient->degree(mono) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  format(y) + " is not in residue class 0");
    }
  }
  // Clear denominators S inverted beyond B; h is a unit of value 1 there.
  Polynomial lifted = y.poly();
  if (h.is_term()) {
    const Monomial& hm = monomial_of(h);
    int power = 0;
    for (const auto& [mono, c] : lifted.terms()) {
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] < 0 && !source->variable(i).inverted) {
          power = std::max(power, (-mono[i] + hm[i] - 1) / hm[i]);
        }
      }
    }
    lifted = lifted * h.poly().pow(static_cast<unsigned>(power));
  }
  if (!valid_in(*source, lifted)) {
    throw Error(ErrorCode::kInvalidArgument, format(y) + " has no preimage in B");
  }
  const RingElem preimage(source, lifted);
  std::map<std::int64_t, RingElem> kept;
  for (auto& [deg, comp] : homogeneous_components(preimage)) {
    if (deg % m == 0) kept.emplace(deg / m, comp);
  }
  if (kept.empty()) return {RingElem::zero(source), h, 0};
  const std::int64_t top = std::max<std::int64_t>(kept.rbegin()->first, 0);
  RingElem num = RingElem::zero(source);
  for (auto& [i, comp] : kept) num += comp * h.pow(static_cast<unsigned>(top - i));
  return {num, h, static_cast<int>(top)};
}

RingElem Dehomogenization::rho_prime(const LocalFraction& q) const {
  RingElem out = rho(q.numerator);
  if (q.power == 0) return out;
  auto inv = find_inverse(rho(q.base));
  if (!inv) {
    throw Error(ErrorCode::kUnsupportedDenominator,
                format(q.base) + " is not a unit of the dehomogenization");
  }
  return out * inv->pow(static_cast<unsigned>(q.power));
}

Dehomogenization dehomogenize(const RingPtr& ring, const RingElem& h) {
  if (ring->modulus() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "dehomogenization needs a Z-graded ring");
  }
  const auto deg = h.degree();
  if (!deg) throw Error(ErrorCode::kInvalidArgument, "h must be nonzero and homogeneous");
  if (*deg == 0) {
    throw Error(ErrorCode::kDegreeZeroDehomogenization, "h has degree 0");
  }
  Dehomogenization out;
  out.source = ring;
  out.h = h;
  out.m = *deg;
  const std::size_t n = ring->num_vars();
  const Polynomial relation = h.poly() - Polynomial::constant(n, Rat(1));
  std::string last_error = "no variable can lead h - 1";
  for (std::size_t y = 0; y < n; ++y) {
    if (ring->variable(y).inverted || ring->is_lead_variable(y) || !h.poly().involves(y)) {
      continue;
    }
    try {
      RingPtr base = ring;
      if (h.is_term()) {
        std::vector<std::size_t> others;
        const Monomial& hm = monomial_of(h);
        for (std::size_t i = 0; i < n; ++i) {
          if (i != y && hm[i] != 0 && !ring->variable(i).inverted) others.push_back(i);
        }
        if (!others.empty()) base = ring->localized(others);
      }
      out.quotient = base->with_relation(relation, y, std::abs(out.m));
      out.lead = y;
      return out;
    } catch (const Error& e) {
      last_error = e.what();
    }
  }
  throw Error(ErrorCode::kUnsupportedDenominator,
              "cannot dehomogenize at " + format(h) + ": " + last_error);
}

namespace {

// Coefficients expressing target as a polynomial in the given values, over
// exponent vectors of total degree <= max_total.
struct Expression {
  std::vector<std::vector<int>> exponents;
  std::vector<Rat> coefficients;
};

std::optional<Expression> express(const RingElem& target,
                                  const std::vector<RingElem>& values, int max_total) {
  const RingPtr& ring = target.ring();
  std::vector<std::vector<int>> exps;
  std::vector<RingElem> products;
  std::vector<int> e(values.size(), 0);
  std::function<void(std::size_t, int, const RingElem&)> walk =
      [&](std::size_t i, int left, const RingElem& acc) {
        if (i == values.size()) {
          exps.push_back(e);
          products.push_back(acc);
          return;
        }
        RingElem cur = acc;
        for (int k = 0; k <= left; ++k) {
          e[i] = k;
          walk(i + 1, left - k, cur);
          cur *= values[i];
        }
        e[i] = 0;
      };
  walk(0, max_total, RingElem::constant(ring, Rat(1)));

  std::map<Monomial, std::size_t> row_of;
  for (const auto& [m, c] : target.poly().terms()) row_of.try_emplace(m, row_of.size());
  for (const RingElem& p : products) {
    for (const auto& [m, c] : p.poly().terms()) row_of.try_emplace(m, row_of.size());
  }
  std::vector<std::vector<Rat>> a(row_of.size(), std::vector<Rat>(products.size(), Rat(0)));
  std::vector<Rat> b(row_of.size(), Rat(0));
  for (const auto& [m, c] : target.poly().terms()) b[row_of.at(m)] = c;
  for (std::size_t j = 0; j < products.size(); ++j) {
    for (const auto& [m, c] : products[j].poly().terms()) a[row_of.at(m)][j] = c;
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  return Expression{std::move(exps), std::move(*x)};
}

constexpr int kMaxExpressionDegree = 8;

}  // namespace

CylinderLnd cylinder_to_lnd(const RingPtr& ring, const CylinderWitness& w,
                            std::int64_t d, int bound) {
  if (ring->modulus() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "cylinder_to_lnd needs a Z-graded ring");
  }
  if (!w.f.is_term()) {
    throw Error(ErrorCode::kUnsupportedDenominator, "f must be a monomial");
  }
  const std::int64_t deg_f = *w.f.degree();
  if (deg_f == 0) throw Error(ErrorCode::kDegreeZeroDenominator, "f has degree 0");
  if (d != deg_f) {
    throw Error(ErrorCode::kInvalidArgument,
                "d = " + std::to_string(d) + " but deg f = " + std::to_string(deg_f));
  }
  const RingPtr chart = chart_of(ring, monomial_of(w.f));
  const RingElem f = embed(w.f, chart);
  const RingElem f_inv = monomial_inverse(chart, f);

  std::vector<RingElem> values{fraction_value(w.t, chart)};
  for (const LocalFraction& r : w.R_generators) values.push_back(fraction_value(r, chart));
  for (const RingElem& v : values) {
    auto deg = v.degree();
    if (deg && *deg != 0) {
      throw Error(ErrorCode::kInvalidArgument, format(v) + " does not have degree 0");
    }
  }

  std::vector<std::string> checks;
  const RingElem& t = values[0];
  if (t.is_constant()) {
    throw Error(ErrorCode::kInvalidArgument, "t is a constant");
  }
  checks.push_back("t is not constant: ok");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == t) {
      throw Error(ErrorCode::kInvalidArgument, "t equals an R generator");
    }
  }
  checks.push_back("t differs from every R generator: ok");
  {
    const std::vector<RingElem> rest(values.begin() + 1, values.end());
    std::optional<Expression> in_r;
    for (int k = 1; k <= kMaxExpressionDegree && !in_r && !rest.empty(); ++k) {
      in_r = express(t, rest, k);
    }
    if (in_r) {
      throw Error(ErrorCode::kInvalidArgument, "t is a polynomial in the R generators");
    }
    checks.push_back("t is not a polynomial of degree <= " +
                     std::to_string(kMaxExpressionDegree) + " in R: ok");
  }

  const VeroneseDescription veronese(ring, std::abs(d));
  std::vector<RingElem> delta;  // Delta'(v) in the chart
  for (const RingElem& g : veronese.generators()) {
    const std::int64_t j = *g.degree() / deg_f;
    const RingElem scale = j >= 0 ? f.pow(static_cast<unsigned>(j))
                                  : f_inv.pow(static_cast<unsigned>(-j));
    const RingElem z = embed(g, chart) * (j >= 0 ? f_inv.pow(static_cast<unsigned>(j))
                                                 : f.pow(static_cast<unsigned>(-j)));
    std::optional<Expression> ex;
    for (int k = 1; k <= kMaxExpressionDegree && !ex; ++k) ex = express(z, values, k);
    if (!ex) {
      throw Error(ErrorCode::kIntegralityBoundExceeded,
                  format(g) + " / f^" + std::to_string(j) +
                      " is not a polynomial in t and R");
    }
    RingElem image = RingElem::zero(chart);
    for (std::size_t k = 0; k < ex->exponents.size(); ++k) {
      const auto& e = ex->exponents[k];
      if (e[0] == 0 || ex->coefficients[k] == 0) continue;
      RingElem term = RingElem::constant(chart, ex->coefficients[k] * e[0]);
      term *= values[0].pow(static_cast<unsigned>(e[0] - 1));
      for (std::size_t l = 1; l < e.size(); ++l) {
        term *= values[l].pow(static_cast<unsigned>(e[l]));
      }
      image += term;
    }
    delta.push_back(image * scale);
  }

  CylinderLnd out;
  out.witness_checks = std::move(checks);
  bool found = false;
  for (int n = 0; n <= bound && !found; ++n) {
    const RingElem fn = f.pow(static_cast<unsigned>(n));
    std::vector<RingElem> images;
    bool integral = true;
    for (const RingElem& img : delta) {
      RingElem scaled = img * fn;
      if (!valid_in(*ring, scaled.poly())) {
        integral = false;
        break;
      }
      images.push_back(RingElem(ring, scaled.poly()));
    }
    if (!integral) continue;
    out.derivation = VeroneseDerivation(veronese, std::move(images));
    out.n = n;
    found = true;
  }
  if (!found) {
    throw Error(ErrorCode::kIntegralityBoundExceeded,
                "no n <= " + std::to_string(bound) + " makes f^n Delta' integral");
  }
  for (int m = 1; m <= bound; ++m) {
    const RingElem candidate = values[0] * f.pow(static_cast<unsigned>(m));
    if (!valid_in(*ring, candidate.poly())) continue;
    out.m = m;
    out.preimage = RingElem(ring, candidate.poly());
    out.image = out.derivation.apply(out.preimage);
    if (!(out.image == w.f.pow(static_cast<unsigned>(m + out.n)))) {
      throw Error(ErrorCode::kIntegralityBoundExceeded,
                  "D(t f^m) is not a power of f; the witness is inconsistent");
    }
    return out;
  }
  throw Error(ErrorCode::kIntegralityBoundExceeded,
              "no m <= " + std::to_string(bound) + " puts t f^m in B");
}

Derivation to_derivation(const VeroneseDerivation& d) {
  const RingPtr& ring = d.veronese().ring();
  if (d.veronese().d() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "only B^(1) derivations are derivations of B");
  }
  std::vector<RingElem> images;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    auto k = d.veronese().find_generator(unit_monomial(ring->num_vars(), i));
    images.push_back(k ? d.images()[*k] : d.apply(RingElem::variable(ring, i)));
  }
  return Derivation(ring, std::move(images));
}

std::string verdict_name(CylinderCandidate::Verdict v) {
  switch (v) {
    case CylinderCandidate::Verdict::kCertified: return "Certified";
    case CylinderCandidate::Verdict::kUnverified: return "Unverified";
    case CylinderCandidate::Verdict::kFailed: return "Failed";
  }
  return "";
}

namespace {

struct Attempt {
  std::string route;
  CylinderWitness witness;
};

void add_unique(std::vector<LocalFraction>& out, const LocalFraction& q) {
  if (q.numerator.is_zero()) return;
  if (q.power == 0 && q.numerator.is_constant()) return;
  for (const LocalFraction& p : out) {
    if (fractions_equal(p, q)) return;
  }
  out.push_back(q);
}

// deg beta == q * deg h: t = beta / h^q, a slice of the dehomogenized D.
std::optional<Attempt> try_residue_zero(const Derivation& d, const RingElem& beta,
                                        const RingElem& h, int bound,
                                        std::vector<std::string>& diag) {
  const RingPtr& ring = d.ring();
  const std::int64_t m = *h.degree();
  const std::int64_t deg_beta = *beta.degree();
  if (deg_beta % m != 0) return std::nullopt;
  try {
    const Dehomogenization dh = dehomogenize(ring, h);
    std::vector<RingElem> images;
    for (const RingElem& img : d.images()) images.push_back(dh.rho(img));
    const Derivation dbar(dh.quotient, std::move(images));
    const RingElem v = dh.rho(beta);
    if (!(dbar.apply(v) == RingElem::constant(dh.quotient, Rat(1)))) {
      diag.push_back("rho(beta) is not a slice for h = " + format(h));
      return std::nullopt;
    }
    const auto cert = certify_lnd(dbar, bound);
    if (!cert.nilpotent()) {
      diag.push_back("dehomogenized derivation not certified for h = " + format(h));
      return std::nullopt;
    }
    const std::int64_t q = deg_beta / m;
    Attempt out;
    out.route = "slice in residue class 0";
    out.witness.f = h;
    out.witness.t = q >= 0 ? LocalFraction{beta, h, static_cast<int>(q)}
                           : LocalFraction{beta * h.pow(static_cast<unsigned>(-q)), h, 0};
    if (h.is_term()) {
      for (const LocalFraction& g : degree_zero_localization_generators(ring, h)) {
        for (const RingElem& a : slice_decompose(dbar, v, dh.rho_prime(g), cert)) {
          add_unique(out.witness.R_generators, dh.rho_prime_inverse(a));
        }
      }
    } else {
      diag.push_back("R generators are only computed for monomial h");
    }
    return out;
  } catch (const Error& e) {
    diag.push_back(std::string(error_name(e.code())) + ": " + e.what());
    return std::nullopt;
  }
}

// A kernel unit a of the chart B_h with deg a == deg beta; then beta / a is a
// slice of (a / h) D.
std::optional<Attempt> try_unit_slice(const Derivation& d, const RingElem& beta,
                                      const RingElem& h, int degree_bound, int bound,
                                      std::vector<std::string>& diag) {
  if (!h.is_term()) return std::nullopt;
  const RingPtr& ring = d.ring();
  try {
    const RingPtr chart = chart_of(ring, monomial_of(h));
    std::vector<RingElem> images;
    for (const RingElem& img : d.images()) images.push_back(embed(img, chart));
    const Derivation dc(chart, std::move(images));
    const std::int64_t target = *beta.degree();
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < chart->num_vars(); ++i) {
      if (chart->variable(i).inverted) units.push_back(i);
    }
    std::optional<RingElem> a;
    Monomial mono(chart->num_vars(), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t k, int left) {
      if (a) return;
      if (k == units.size()) {
        if (chart->degree(mono) != target) return;
        RingElem cand = RingElem::monomial(chart, mono);
        if (dc.apply(cand).is_zero()) a = cand;
        return;
      }
      for (int e = -left; e <= left && !a; ++e) {
        mono[units[k]] = e;
        walk(k + 1, left - std::abs(e));
      }
      mono[units[k]] = 0;
    };
    for (int total = 0; total <= degree_bound && !a; ++total) walk(0, total);
    if (!a) {
      diag.push_back("no kernel unit of degree " + std::to_string(target) +
                     " in the chart of " + format(h));
      return std::nullopt;
    }
    const RingElem a_inv = monomial_inverse(chart, *a);
    const RingElem h_inv = monomial_inverse(chart, embed(h, chart));
    const RingElem t = embed(beta, chart) * a_inv;
    const Derivation e = dc.scaled(*a * h_inv);
    if (!(e.apply(t) == RingElem::constant(chart, Rat(1)))) return std::nullopt;
    const auto cert = certify_lnd(e, bound);
    if (!cert.nilpotent()) {
      diag.push_back("scaled derivation not certified in the chart of " + format(h));
      return std::nullopt;
    }
    Attempt out;
    out.route = "kernel unit slice";
    out.witness.f = h;
    out.witness.t = as_fraction(t, ring);
    for (const LocalFraction& g : degree_zero_localization_generators(ring, h)) {
      for (const RingElem& c : slice_decompose(e, t, fraction_value(g, chart), cert)) {
        add_unique(out.witness.R_generators, as_fraction(c, ring));
      }
    }
    return out;
  } catch (const Error& err) {
    diag.push_back(std::string(error_name(err.code())) + ": " + err.what());
    return std::nullopt;
  }
}

}  // namespace

CylinderCandidate lnd_to_cylindrical_candidate(const Derivation& d,
                                               const NilpotencyCertificate& cert,
                                               const std::vector<RingElem>& kernel_seeds,
                                               const CandidateOptions& options) {
  const RingPtr& ring = d.ring();
  if (ring->modulus() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "the ring must be Z-graded");
  }
  const auto deg_d = d.degree();
  if (!deg_d) {
    throw Error(ErrorCode::kNotHomogeneous,
                d.is_zero() ? "the derivation is zero" : "the derivation is not homogeneous");
  }
  if (!cert.nilpotent()) {
    throw Error(ErrorCode::kNilpotencyUnverified,
                "local nilpotency is " + verdict_name(cert.verdict));
  }
  std::vector<RingElem> seeds;
  for (const RingElem& s : kernel_seeds) {
    const RingElem seed = embed(s, ring);
    if (!kernel_membership(d, seed)) {
      throw Error(ErrorCode::kInvalidArgument, format(seed) + " is not in ker D");
    }
    auto deg = seed.degree();
    if (deg && *deg != 0) seeds.push_back(seed);
  }
  if (seeds.empty()) {
    throw Error(ErrorCode::kKernelInDegreeZero,
                "no kernel seed of nonzero degree was supplied");
  }

  std::int64_t largest = 0;
  for (std::int64_t w : ring->weights()) largest = std::max(largest, std::abs(w));
  const int degree_bound = options.degree_bound > 0
                               ? options.degree_bound
                               : static_cast<int>(std::max(2 * std::abs(*deg_d), 2 * largest) * 4);

  CylinderCandidate out;
  const std::size_t n = ring->num_vars();
  Monomial mono(n, 0);
  int tried = 0;
  bool done = false;

  auto attempt = [&](const RingElem& beta, const RingElem& h) -> std::optional<Attempt> {
    if (auto a = try_residue_zero(d, beta, h, options.bound, out.diagnostics)) return a;
    return try_unit_slice(d, beta, h, degree_bound, options.bound, out.diagnostics);
  };

  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
    if (done) return;
    if (i + 1 == n) {
      mono[i] = left;
      const RingElem beta = RingElem::monomial(ring, mono);
      const RingElem h = d.apply(beta);
      if (h.is_zero() || !kernel_membership(d, h)) return;
      auto deg_h = h.degree();
      if (!deg_h || *deg_h == 0) return;
      if (!out.h) {
        out.h = h;
        out.beta = beta;
        out.verdict = CylinderCandidate::Verdict::kUnverified;
      }
      std::optional<Attempt> result = attempt(beta, h);
      for (const RingElem& a : seeds) {
        if (result) break;
        for (int k = 1; k <= 2 && !result; ++k) {
          const RingElem ak = a.pow(static_cast<unsigned>(k));
          const RingElem h2 = ak * h;
          auto deg2 = h2.degree();
          if (!deg2 || *deg2 == 0) continue;
          result = attempt(ak * beta, h2);
          if (result) {
            result->route += " after multiplying h by " + format(ak);
            out.h = h2;
            out.beta = ak * beta;
          }
        }
      }
      if (result) {
        if (result->witness.f == h) {
          out.h = h;
          out.beta = beta;
        }
        out.verdict = CylinderCandidate::Verdict::kCertified;
        out.route = result->route;
        out.witness = std::move(result->witness);
        done = true;
      }
      done = done || ++tried >= options.max_candidates;
      return;
    }
    for (int k = left; k >= 0 && !done; --k) {
      mono[i] = k;
      walk(i + 1, left - k);
    }
    mono[i] = 0;
  };
  for (int total = 1; total <= degree_bound && !done; ++total) walk(0, total);
  if (!out.h) out.diagnostics.push_back("no h in D(B) cap ker D of nonzero degree found");
  return out;
}

}  // namespace gradedlnd
