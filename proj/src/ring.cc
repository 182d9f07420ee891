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

#include "gradedlnd/ring.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gradedlnd/error.h"
#include "gradedlnd/linear_solve.h"

namespace gradedlnd {

std::string_view assertion_name(Assertion a) {
  switch (a) {
    case Assertion::kDomain: return "domain";
    case Assertion::kNormal: return "normal";
    case Assertion::kRelationIrreducible: return "relation-irreducible";
    case Assertion::kGeneratorsPrime: return "generators-prime";
    case Assertion::kGeneratorsNonAssociate: return "generators-non-associate";
  }
  return "";
}

std::optional<Assertion> parse_assertion(std::string_view name) {
  for (Assertion a : {Assertion::kDomain, Assertion::kNormal,
                      Assertion::kRelationIrreducible,
                      Assertion::kGeneratorsPrime,
                      Assertion::kGeneratorsNonAssociate}) {
    if (assertion_name(a) == name) return a;
  }
  return std::nullopt;
}

namespace {

Relation validate_relation(const std::vector<Variable>& vars,
                           const RelationSpec& spec, std::int64_t modulus) {
  const std::size_t n = vars.size();
  const Polynomial& f = spec.poly;
  const std::string& lead_name = vars.at(spec.lead).name;
  if (f.num_vars() != n) {
    throw Error(ErrorCode::kInvalidRelation, "relation has wrong arity");
  }
  if (f.is_zero() || f.is_constant()) {
    throw Error(ErrorCode::kInvalidRelation, "relation must be nonconstant");
  }
  if (vars[spec.lead].inverted) {
    throw Error(ErrorCode::kInvalidRelation,
                "leading variable " + lead_name + " may not be inverted");
  }
  std::set<std::int64_t> degrees;
  for (const auto& [m, c] : f.terms()) {
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < 0 && !vars[i].inverted) {
        throw Error(ErrorCode::kInvalidRelation,
                    "negative exponent on non-inverted variable " + vars[i].name);
      }
      deg += m[i] * vars[i].weight;
    }
    if (modulus > 0) deg = ((deg % modulus) + modulus) % modulus;
    degrees.insert(deg);
  }
  if (degrees.size() > 1) {
    std::string listed;
    for (std::int64_t d : degrees) {
      listed += (listed.empty() ? "" : ", ") + std::to_string(d);
    }
    throw Error(ErrorCode::kInhomogeneousRelation,
                "relation is not homogeneous; term degrees: " + listed);
  }

  Relation rel;
  rel.poly = f;
  rel.lead = spec.lead;
  rel.lead_degree = f.max_exponent(spec.lead);
  if (rel.lead_degree <= 0) {
    throw Error(ErrorCode::kInvalidRelation,
                "relation does not involve its leading variable " + lead_name);
  }
  const Monomial* lead_monomial = nullptr;
  Rat lead_coeff;
  for (const auto& [m, c] : f.terms()) {
    if (m[spec.lead] != rel.lead_degree) continue;
    if (lead_monomial != nullptr) {
      throw Error(ErrorCode::kInvalidRelation,
                  "relation is not monic in " + lead_name);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i != spec.lead && m[i] != 0 && !vars[i].inverted) {
        throw Error(ErrorCode::kInvalidRelation,
                    "leading coefficient of " + lead_name + " is not a unit");
      }
    }
    lead_monomial = &m;
    lead_coeff = c;
  }
  // x_lead^k == -(f - lead term) / (lead coefficient)
  Monomial unit_inverse(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != spec.lead) unit_inverse[i] = -(*lead_monomial)[i];
  }
  Polynomial rest = f;
  rest.add_term(*lead_monomial, -lead_coeff);
  rel.tail = rest.times_monomial(unit_inverse, Rat(-1) / lead_coeff);
  return rel;
}

}  // namespace

RingPtr Ring::make(std::vector<Variable> variables,
                   std::vector<RelationSpec> relations,
                   std::set<Assertion> assertions, std::int64_t modulus) {
  if (variables.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a ring needs at least one variable");
  }
  if (modulus < 0) {
    throw Error(ErrorCode::kInvalidModulus, "grading modulus must be >= 0");
  }
  std::set<std::string> names;
  for (const Variable& v : variables) {
    if (!names.insert(v.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate variable " + v.name);
    }
    if (v.weight == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + v.name + " has weight 0");
    }
  }

  std::vector<Relation> validated;
  std::set<std::size_t> leads;
  for (const RelationSpec& spec : relations) {
    if (spec.lead >= variables.size()) {
      throw Error(ErrorCode::kInvalidRelation, "leading variable out of range");
    }
    if (!leads.insert(spec.lead).second) {
      throw Error(ErrorCode::kInvalidRelation,
                  "two relations share the leading variable " +
                      variables[spec.lead].name);
    }
    validated.push_back(validate_relation(variables, spec, modulus));
  }

  // Relation a must be applied before b when a mentions b's leading variable.
  const std::size_t r = validated.size();
  std::vector<std::size_t> order;
  std::vector<bool> placed(r, false);
  while (order.size() < r) {
    bool progressed = false;
    for (std::size_t a = 0; a < r; ++a) {
      if (placed[a]) continue;
      bool blocked = false;
      for (std::size_t b = 0; b < r && !blocked; ++b) {
        blocked = b != a && !placed[b] && validated[b].poly.involves(validated[a].lead);
      }
      if (!blocked) {
        order.push_back(a);
        placed[a] = true;
        progressed = true;
      }
    }
    if (!progressed) {
      throw Error(ErrorCode::kInvalidRelation,
                  "relations are not triangular in their leading variables");
    }
  }

  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->variables_ = std::move(variables);
  for (std::size_t i : order) ring->relations_.push_back(validated[i]);
  ring->relation_specs_ = std::move(relations);
  ring->assertions_ = std::move(assertions);
  ring->modulus_ = modulus;
  return ring;
}

std::optional<std::size_t> Ring::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::variable_index(std::string_view name) const {
  auto i = find_variable(name);
  if (!i) {
    throw Error(ErrorCode::kUnknownVariable,
                "unknown variable '" + std::string(name) + "'");
  }
  return *i;
}

std::vector<std::int64_t> Ring::weights() const {
  std::vector<std::int64_t> w;
  for (const Variable& v : variables_) w.push_back(v.weight);
  return w;
}

bool Ring::is_lead_variable(std::size_t var) const {
  return std::any_of(relations_.begin(), relations_.end(),
                     [&](const Relation& r) { return r.lead == var; });
}

std::int64_t Ring::normalize_degree(std::int64_t deg) const {
  if (modulus_ > 0) return ((deg % modulus_) + modulus_) % modulus_;
  return deg;
}

std::int64_t Ring::degree(const Monomial& m) const {
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * variables_[i].weight;
  return normalize_degree(deg);
}

bool Ring::is_valid_monomial(const Monomial& m) const {
  if (m.size() != variables_.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 && !variables_[i].inverted) return false;
  }
  return true;
}

Polynomial Ring::reduce(Polynomial p) const {
  for (const Relation& rel : relations_) {
    while (true) {
      bool reducible = false;
      for (const auto& [m, c] : p.terms()) {
        if (m[rel.lead] >= rel.lead_degree) {
          reducible = true;
          break;
        }
      }
      if (!reducible) break;
      Polynomial next(p.num_vars());
      for (const auto& [m, c] : p.terms()) {
        if (m[rel.lead] >= rel.lead_degree) {
          Monomial shifted(m);
          shifted[rel.lead] -= rel.lead_degree;
          next += rel.tail.times_monomial(shifted, c);
        } else {
          next.add_term(m, c);
        }
      }
      p = std::move(next);
    }
  }
  return p;
}

RingPtr Ring::localized(std::span<const std::size_t> vars) const {
  std::vector<Variable> v = variables_;
  for (std::size_t i : vars) {
    if (is_lead_variable(i)) {
      throw Error(ErrorCode::kUnsupportedDenominator,
                  "cannot invert " + v[i].name +
                      ": it leads a relation of the ring");
    }
    v[i].inverted = true;
  }
  return make(std::move(v), relation_specs_, assertions_, modulus_);
}

RingPtr Ring::with_relation(const Polynomial& poly, std::size_t lead,
                            std::int64_t modulus) const {
  std::vector<RelationSpec> rels = relation_specs_;
  rels.push_back({poly, lead});
  return make(variables_, std::move(rels), assertions_, modulus);
}

RingElem::RingElem(RingPtr ring, Polynomial poly) : ring_(std::move(ring)) {
  if (poly.num_vars() == 0 && poly.is_zero()) poly = Polynomial(ring_->num_vars());
  if (poly.num_vars() != ring_->num_vars()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial arity does not match ring");
  }
  for (const auto& [m, c] : poly.terms()) {
    if (!ring_->is_valid_monomial(m)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative exponent on a variable that is not inverted");
    }
  }
  poly_ = ring_->reduce(std::move(poly));
}

RingElem RingElem::zero(const RingPtr& ring) {
  return RingElem(ring, Polynomial(ring->num_vars()));
}

RingElem RingElem::constant(const RingPtr& ring, const Rat& c) {
  return RingElem(ring, Polynomial::constant(ring->num_vars(), c));
}

RingElem RingElem::variable(const RingPtr& ring, std::size_t var, int power) {
  return RingElem(ring, Polynomial::variable(ring->num_vars(), var, power));
}

RingElem RingElem::monomial(const RingPtr& ring, const Monomial& m, const Rat& c) {
  return RingElem(ring, Polynomial::term(m, c));
}

std::optional<std::int64_t> RingElem::degree() const {
  if (poly_.is_zero()) return std::nullopt;
  std::optional<std::int64_t> deg;
  for (const auto& [m, c] : poly_.terms()) {
    const std::int64_t d = ring_->degree(m);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

RingElem RingElem::pow(unsigned n) const {
  RingElem result = constant(ring_, Rat(1));
  RingElem base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

RingElem& RingElem::operator+=(const RingElem& other) {
  poly_ += other.poly_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  poly_ -= other.poly_;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  poly_ = ring_->reduce(poly_ * other.poly_);
  return *this;
}

RingElem& RingElem::operator*=(const Rat& c) {
  poly_ *= c;
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem out(*this);
  out.poly_ = -out.poly_;
  return out;
}

std::map<std::int64_t, RingElem> homogeneous_components(const RingElem& e) {
  std::map<std::int64_t, Polynomial> parts;
  const RingPtr& ring = e.ring();
  for (const auto& [m, c] : e.poly().terms()) {
    auto [it, inserted] = parts.try_emplace(ring->degree(m), ring->num_vars());
    it->second.add_term(m, c);
  }
  std::map<std::int64_t, RingElem> out;
  for (auto& [deg, p] : parts) out.emplace(deg, RingElem(ring, std::move(p)));
  return out;
}

RingElem embed(const RingElem& e, const RingPtr& target) {
  if (e.ring()->num_vars() != target->num_vars()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot embed between rings with different variables");
  }
  return RingElem(target, e.poly());
}

namespace {

// Scalar times a monomial in inverted variables.
bool is_obvious_unit(const Ring& ring, const Polynomial& p) {
  if (p.size() != 1) return false;
  const Monomial& m = p.terms().begin()->first;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && !ring.variable(i).inverted) return false;
  }
  return true;
}

Polynomial obvious_inverse(const Polynomial& p) {
  const auto& [m, c] = *p.terms().begin();
  Monomial inv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
  return Polynomial::term(inv, 1 / c);
}

constexpr std::size_t kMaxCofactors = 600;

std::optional<RingElem> cofactor_search(const RingElem& e, int bound) {
  const RingPtr& ring = e.ring();
  const std::size_t n = ring->num_vars();
  std::optional<std::int64_t> target_degree;
  if (auto deg = e.degree()) target_degree = ring->normalize_degree(-*deg);

  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = ring->variable(i).inverted ? -bound : 0;
    hi[i] = bound;
    for (const Relation& rel : ring->relations()) {
      if (rel.lead == i) hi[i] = std::min(hi[i], rel.lead_degree - 1);
    }
  }
  std::vector<Monomial> candidates;
  Monomial m(n, 0);
  bool overflow = false;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int used) {
    if (overflow) return;
    if (i == n) {
      if (!target_degree || ring->degree(m) == *target_degree) {
        candidates.push_back(m);
        overflow = candidates.size() > kMaxCofactors;
      }
      return;
    }
    for (int v = lo[i]; v <= hi[i]; ++v) {
      if (used + std::abs(v) > bound) continue;
      m[i] = v;
      walk(i + 1, used + std::abs(v));
    }
    m[i] = 0;
  };
  walk(0, 0);
  if (overflow || candidates.empty()) return std::nullopt;

  std::vector<Polynomial> products;
  std::map<Monomial, std::size_t> row_of;
  row_of.emplace(Monomial(n, 0), 0);
  for (const Monomial& c : candidates) {
    products.push_back(ring->reduce(e.poly().times_monomial(c)));
    for (const auto& [pm, pc] : products.back().terms()) {
      row_of.try_emplace(pm, row_of.size());
    }
  }
  std::vector<std::vector<Rat>> a(row_of.size(),
                                  std::vector<Rat>(candidates.size(), Rat(0)));
  std::vector<Rat> b(row_of.size(), Rat(0));
  b[0] = 1;
  for (std::size_t j = 0; j < products.size(); ++j) {
    for (const auto& [pm, pc] : products[j].terms()) a[row_of.at(pm)][j] = pc;
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  Polynomial inv(n);
  for (std::size_t j = 0; j < candidates.size(); ++j) inv.add_term(candidates[j], (*x)[j]);
  RingElem result(ring, inv);
  if (!(result * e == RingElem::constant(ring, Rat(1)))) return std::nullopt;
  return result;
}

}  // namespace

std::optional<RingElem> find_inverse(const RingElem& e) {
  if (e.is_zero()) return std::nullopt;
  const RingPtr& ring = e.ring();
  int max_lead = 1;
  for (const Relation& rel : ring->relations()) {
    max_lead = std::max(max_lead, rel.lead_degree);
  }
  // If e^j is an obvious unit u, then e^{-1} = e^{j-1} / u.
  RingElem power = e;
  for (int j = 1; j <= 2 * max_lead; ++j) {
    if (is_obvious_unit(*ring, power.poly())) {
      return e.pow(static_cast<unsigned>(j - 1)) *
             RingElem(ring, obvious_inverse(power.poly()));
    }
    power *= e;
  }
  return cofactor_search(e, 2 * max_lead);
}

GeneratorSet expanded_generators(const Ring& ring) {
  GeneratorSet out;
  const std::size_t n = ring.num_vars();
  for (std::size_t i = 0; i < n; ++i) {
    out.monomials.push_back(unit_monomial(n, i));
    out.degrees.push_back(ring.variable(i).weight);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ring.variable(i).inverted) continue;
    out.monomials.push_back(unit_monomial(n, i, -1));
    out.degrees.push_back(-ring.variable(i).weight);
  }
  return out;
}

std::vector<int> to_expanded(const Ring& ring, const Monomial& m) {
  const std::size_t n = ring.num_vars();
  std::vector<int> k(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.variable(i).inverted) k.push_back(0);
  }
  std::size_t slot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] >= 0) k[i] = m[i];
    if (ring.variable(i).inverted) {
      if (m[i] < 0) k[slot] = -m[i];
      ++slot;
    }
  }
  return k;
}

Monomial from_expanded(const Ring& ring, std::span<const int> k) {
  const std::size_t n = ring.num_vars();
  Monomial m(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
  std::size_t slot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.variable(i).inverted) m[i] -= k[slot++];
  }
  return m;
}

namespace {

// True when k uses some variable together with its inverse.
bool has_unit_pair(const Ring& ring, std::span<const int> k) {
  const std::size_t n = ring.num_vars();
  std::size_t slot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ring.variable(i).inverted) continue;
    if (k[i] > 0 && k[slot] > 0) return true;
    ++slot;
  }
  return false;
}

}  // namespace

VeroneseDescription::VeroneseDescription(RingPtr ring, std::int64_t d)
    : ring_(std::move(ring)), d_(d) {
  if (d < 1) {
    throw Error(ErrorCode::kInvalidModulus, "Veronese degree must be >= 1");
  }
  if (ring_->modulus() != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Veronese subrings need a Z-graded ring");
  }
  const GeneratorSet gens = expanded_generators(*ring_);
  for (auto& k : hilbert_basis(CongruenceMonoid{gens.degrees, d})) {
    if (has_unit_pair(*ring_, k)) continue;
    Monomial m = from_expanded(*ring_, k);
    generators_.push_back(RingElem::monomial(ring_, m));
    monomials_.push_back(std::move(m));
    exponent_vectors_.push_back(std::move(k));
  }
}

std::optional<std::size_t> VeroneseDescription::find_generator(
    const Monomial& m) const {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i] == m) return i;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> VeroneseDescription::decompose(
    const Monomial& m) const {
  if (!ring_->is_valid_monomial(m)) return std::nullopt;
  std::int64_t deg = ring_->degree(m);
  if (deg % d_ != 0) return std::nullopt;
  std::vector<int> rest = to_expanded(*ring_, m);
  std::vector<int> counts(exponent_vectors_.size(), 0);
  std::set<std::vector<int>> dead;
  std::function<bool()> search = [&]() {
    if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
      return true;
    }
    if (dead.count(rest)) return false;
    for (std::size_t g = 0; g < exponent_vectors_.size(); ++g) {
      const auto& b = exponent_vectors_[g];
      bool fits = true;
      for (std::size_t i = 0; i < b.size() && fits; ++i) fits = b[i] <= rest[i];
      if (!fits) continue;
      for (std::size_t i = 0; i < b.size(); ++i) rest[i] -= b[i];
      ++counts[g];
      if (search()) return true;
      --counts[g];
      for (std::size_t i = 0; i < b.size(); ++i) rest[i] += b[i];
    }
    dead.insert(rest);
    return false;
  };
  if (!search()) return std::nullopt;
  return counts;
}

VeroneseDescription veronese_generators(const RingPtr& ring, std::int64_t d) {
  return VeroneseDescription(ring, d);
}

bool fractions_equal(const LocalFraction& a, const LocalFraction& b) {
  return a.numerator * b.base.pow(static_cast<unsigned>(b.power)) ==
         b.numerator * a.base.pow(static_cast<unsigned>(a.power));
}

std::vector<LocalFraction> degree_zero_localization_generators(
    const RingPtr& ring, const RingElem& f) {
  if (!f.is_term() || !ring->is_valid_monomial(f.poly().terms().begin()->first)) {
    throw Error(ErrorCode::kInvalidArgument,
                "the denominator must be a monomial in the generators");
  }
  if (ring->modulus() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "localization needs a Z-graded ring");
  }
  const Monomial& fm = f.poly().terms().begin()->first;
  const std::int64_t deg_f = ring->degree(fm);
  if (deg_f == 0) {
    throw Error(ErrorCode::kDegreeZeroDenominator,
                "the denominator has degree 0");
  }
  const GeneratorSet gens = expanded_generators(*ring);
  std::vector<std::int64_t> coefficients = gens.degrees;
  coefficients.push_back(-deg_f);
  std::vector<LocalFraction> out;
  for (const auto& v : kernel_hilbert_basis(coefficients)) {
    std::span<const int> k(v.data(), v.size() - 1);
    if (has_unit_pair(*ring, k)) continue;
    const int power = v.back();
    Monomial num = from_expanded(*ring, k);
    Monomial f_power(fm.size());
    for (std::size_t i = 0; i < fm.size(); ++i) f_power[i] = fm[i] * power;
    if (num == f_power) continue;  // the generator 1
    out.push_back({RingElem::monomial(ring, num), f, power});
  }
  return out;
}

}  // namespace gradedlnd
