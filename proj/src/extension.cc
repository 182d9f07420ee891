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

#include "gradedlnd/extension.h"

#include <algorithm>
#include <numeric>
#include <functional>
#include <set>

#include "gradedlnd/error.h"
#include "gradedlnd/polynomial_io.h"

namespace gradedlnd {

namespace {

Polynomial remap(const Polynomial& p, const std::vector<std::size_t>& to,
                 std::size_t nvars) {
  Polynomial out(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(nvars, 0);
    for (std::size_t k = 0; k < m.size(); ++k) mm[to[k]] = m[k];
    out.add_term(mm, c);
  }
  return out;
}

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const Matrix& a, std::size_t nvars) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(nvars, Rat(1));
  if (n == 1) return a[0][0];
  Polynomial det(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = a[0][j] * determinant(minor, nvars);
    if (j % 2 == 0) det += term; else det -= term;
  }
  return det;
}

// adj[i][j] = (-1)^(i+j) * det(a without row j and column i).
Matrix adjugate(const Matrix& a, std::size_t nvars) {
  const std::size_t n = a.size();
  Matrix adj(n, std::vector<Polynomial>(n, Polynomial(nvars)));
  if (n == 1) {
    adj[0][0] = Polynomial::constant(nvars, Rat(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(a[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Polynomial m = determinant(minor, nvars);
      adj[i][j] = (i + j) % 2 == 0 ? m : -m;
    }
  }
  return adj;
}

Matrix jacobian(const std::vector<Polynomial>& f, const std::vector<std::size_t>& vars) {
  Matrix j;
  for (const Polynomial& fi : f) {
    std::vector<Polynomial> row;
    for (std::size_t v : vars) row.push_back(fi.derivative(v));
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace

EtalePresentation make_etale_presentation(const RingPtr& ring,
                                          const std::vector<std::size_t>& new_vars) {
  EtalePresentation pres;
  pres.ring = ring;
  pres.new_vars = new_vars;
  const std::size_t n = ring->num_vars();
  std::set<std::size_t> fresh(new_vars.begin(), new_vars.end());
  if (fresh.size() != new_vars.size() || new_vars.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "new variables must be distinct and nonempty");
  }
  std::vector<std::size_t> to_base(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (fresh.count(i)) continue;
    to_base[i] = pres.base_vars.size();
    pres.base_vars.push_back(i);
  }
  if (pres.base_vars.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "the base ring needs a variable");
  }
  for (std::size_t x : new_vars) {
    if (x >= n) throw Error(ErrorCode::kInvalidArgument, "new variable out of range");
    const Relation* found = nullptr;
    for (const Relation& rel : ring->relations()) {
      if (rel.lead == x) found = &rel;
    }
    if (found == nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no relation is led by " + ring->variable(x).name);
    }
    pres.relation_polys.push_back(found->poly);
  }

  std::vector<Variable> base_vars;
  for (std::size_t i : pres.base_vars) base_vars.push_back(ring->variable(i));
  std::vector<RelationSpec> base_relations;
  for (const Relation& rel : ring->relations()) {
    if (fresh.count(rel.lead)) continue;
    for (std::size_t x : new_vars) {
      if (rel.poly.involves(x)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "a base relation involves " + ring->variable(x).name);
      }
    }
    Polynomial p(pres.base_vars.size());
    for (const auto& [m, c] : rel.poly.terms()) {
      Monomial mm;
      for (std::size_t i : pres.base_vars) mm.push_back(m[i]);
      p.add_term(mm, c);
    }
    base_relations.push_back({p, to_base[rel.lead]});
  }
  pres.base = Ring::make(std::move(base_vars), std::move(base_relations),
                         ring->assertions(), ring->modulus());
  pres.jacobian_det = determinant(jacobian(pres.relation_polys, new_vars), n);
  return pres;
}

Polynomial base_to_ring(const EtalePresentation& pres, const Polynomial& p) {
  return remap(p, pres.base_vars, pres.ring->num_vars());
}

Derivation jacobian_lift(const EtalePresentation& pres, const Derivation& delta,
                         const LiftOptions& options) {
  const RingPtr& ring = pres.ring;
  const std::size_t nvars = ring->num_vars();
  const std::size_t n = pres.new_vars.size();
  if (delta.ring()->num_vars() != pres.base_vars.size()) {
    throw Error(ErrorCode::kInvalidArgument, "delta is not a derivation of the base");
  }
  std::vector<std::size_t> order = options.order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<Polynomial> f;
  std::vector<std::size_t> vars;
  for (std::size_t k : order) {
    f.push_back(pres.relation_polys.at(k));
    vars.push_back(pres.new_vars.at(k));
  }

  std::vector<Polynomial> delta_images(nvars, Polynomial(nvars));
  for (std::size_t k = 0; k < pres.base_vars.size(); ++k) {
    delta_images[pres.base_vars[k]] = base_to_ring(pres, delta.image(k).poly());
  }

  const Matrix j = jacobian(f, vars);
  const RingElem det(ring, determinant(j, nvars));
  const auto inverse = find_inverse(det);
  if (!inverse) {
    throw Error(ErrorCode::kJacobianNotUnit,
                "the Jacobian determinant " + format(det) + " is not a recognized unit");
  }
  const Matrix adj = adjugate(j, nvars);

  // D_0(f_i): delta applied to the coefficients.
  std::vector<RingElem> d0;
  for (const Polynomial& fi : f) {
    Polynomial sum(nvars);
    for (std::size_t a : pres.base_vars) {
      if (delta_images[a].is_zero()) continue;
      sum += fi.derivative(a) * delta_images[a];
    }
    if (options.shift_representatives) {
      sum += pres.relation_polys.front().times_monomial(Monomial(nvars, 0), Rat(1, 3));
    }
    d0.push_back(RingElem(ring, std::move(sum)));
  }

  std::vector<RingElem> images(nvars, RingElem::zero(ring));
  for (std::size_t a : pres.base_vars) images[a] = RingElem(ring, delta_images[a]);
  for (std::size_t r = 0; r < n; ++r) {
    RingElem g = RingElem::zero(ring);
    for (std::size_t c = 0; c < n; ++c) g -= RingElem(ring, adj[r][c]) * d0[c];
    images[vars[r]] = *inverse * g;
  }
  return Derivation(ring, std::move(images));
}

std::vector<RingElem> chi_d_generators(const RingPtr& ring, std::int64_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "d must be at least 2");
  const auto w = ring->weights();
  const std::int64_t e = std::abs(gcd_of_set(std::span<const std::int64_t>(w)));
  if (e != 1) {
    throw Error(ErrorCode::kNotSaturationIndexOne,
                "gcd of the degrees is " + std::to_string(e) + ", not 1");
  }
  const std::size_t n = ring->num_vars();
  std::vector<RingElem> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::gcd(w[i], d) == 1) out.push_back(RingElem::variable(ring, i));
  }
  if (!out.empty()) return out;

  const bool positive = std::all_of(w.begin(), w.end(), [](auto x) { return x > 0; });
  const bool negative = std::all_of(w.begin(), w.end(), [](auto x) { return x < 0; });
  if (positive || negative) {
    std::vector<std::int64_t> magnitudes;
    for (std::int64_t x : w) magnitudes.push_back(std::abs(x));
    const CoprimeWitness witness = coprime_in_monoid(magnitudes, d);
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(witness.coefficients[i]);
    return {RingElem::monomial(ring, m)};
  }
  // Mixed signs: smallest exponent vectors first.
  std::int64_t largest = 1;
  for (std::int64_t x : w) largest = std::max(largest, std::abs(x));
  const int limit = static_cast<int>(2 * d * largest);
  Monomial m(n, 0);
  for (int total = 1; total <= limit; ++total) {
    std::optional<Monomial> hit;
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
      if (hit) return;
      if (i + 1 == n) {
        m[i] = left;
        const std::int64_t deg = ring->degree(m);
        if (deg != 0 && std::gcd(deg, d) == 1) hit = m;
        return;
      }
      for (int k = left; k >= 0 && !hit; --k) {
        m[i] = k;
        walk(i + 1, left - k);
      }
    };
    walk(0, total);
    if (hit) return {RingElem::monomial(ring, *hit)};
  }
  throw Error(ErrorCode::kNoCoprimeExists, "no monomial of degree coprime to d found");
}

namespace {

bool is_unit_monomial(const Ring& ring, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && !ring.variable(i).inverted) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

ChartLift veronese_chart_lift(const RingPtr& ring, std::int64_t d, const RingElem& x,
                              const std::map<Monomial, RingElem>& delta) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "d must be at least 2");
  if (!x.is_term() || x.ring()->num_vars() != ring->num_vars()) {
    throw Error(ErrorCode::kInvalidArgument, "the chart element must be a monomial");
  }
  const auto& [xm, xc] = *x.poly().terms().begin();
  const std::int64_t deg_x = ring->degree(xm);
  if (std::gcd(deg_x, d) != 1) {
    throw Error(ErrorCode::kNotCoprimeChart,
                "gcd(deg x, d) = gcd(" + std::to_string(deg_x) + ", " +
                    std::to_string(d) + ") is not 1");
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < xm.size(); ++i) {
    if (xm[i] != 0 && !ring->variable(i).inverted) support.push_back(i);
  }

  ChartLift out;
  out.chart = support.empty() ? ring : ring->localized(support);
  const RingPtr& chart = out.chart;
  out.veronese = VeroneseDescription(chart, d);
  const auto names = variable_names(*chart);

  const auto& gens = out.veronese.generator_monomials();
  std::vector<std::optional<RingElem>> given(gens.size());
  for (const auto& [m, img] : delta) {
    auto k = out.veronese.find_generator(m);
    if (!k) {
      throw Error(ErrorCode::kInvalidArgument,
                  format_monomial(m, names) + " is not a Veronese generator of the chart");
    }
    given[*k] = embed(img, chart);
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (given[k]) continue;
    Monomial inv(gens[k].size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = -gens[k][i];
    auto partner = out.veronese.find_generator(inv);
    if (is_unit_monomial(*chart, gens[k]) && partner && given[*partner]) {
      // delta(g) = -g^2 delta(g^-1)
      const RingElem g = out.veronese.generators()[k];
      given[k] = -(g * g * *given[*partner]);
      continue;
    }
    throw Error(ErrorCode::kMissingDeltaImage,
                "no image given for " + format_monomial(gens[k], names));
  }
  for (auto& g : given) out.delta_images.push_back(*g);
  const VeroneseDerivation delta_v(out.veronese, out.delta_images);

  // D(x) = delta(x^d) / (d x^(d-1)).
  const RingElem x_chart = embed(x, chart);
  const RingElem x_inv = RingElem::monomial(chart, monomial_quotient(Monomial(xm.size(), 0), xm),
                                            1 / xc);
  const RingElem x_d = x_chart.pow(static_cast<unsigned>(d));
  const RingElem dx = delta_v.apply(x_d) * x_inv.pow(static_cast<unsigned>(d - 1)) *
                      (Rat(1) / Rat(static_cast<long>(d)));

  // deg x is invertible mod d.
  std::int64_t inv_deg = 1;
  while (mod(inv_deg * deg_x, d) != 1) ++inv_deg;

  std::vector<RingElem> images;
  for (std::size_t i = 0; i < chart->num_vars(); ++i) {
    const std::int64_t j = mod(chart->variable(i).weight * inv_deg, d);
    const RingElem y = RingElem::variable(chart, i);
    const RingElem ratio = y * x_inv.pow(static_cast<unsigned>(j));
    RingElem image = delta_v.apply(ratio) * x_chart.pow(static_cast<unsigned>(j));
    if (j > 0) image += y * x_inv * dx * Rat(static_cast<long>(j));
    images.push_back(std::move(image));
  }
  try {
    out.derivation = Derivation(chart, std::move(images));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kIncompatibleDerivation) throw;
    throw Error(ErrorCode::kInconsistentDelta,
                std::string("delta does not extend to the chart: ") + e.what());
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const RingElem lifted = out.derivation.apply(out.veronese.generators()[k]);
    if (!(lifted == out.delta_images[k])) {
      throw Error(ErrorCode::kInconsistentDelta,
                  "delta(" + format_monomial(gens[k], names) + ") = " +
                      format(out.delta_images[k]) + " but the lift gives " + format(lifted));
    }
  }
  out.integral_on_B = true;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    for (const auto& [m, c] : out.derivation.image(i).poly().terms()) {
      if (!ring->is_valid_monomial(m)) out.integral_on_B = false;
    }
  }
  return out;
}

}  // namespace gradedlnd
