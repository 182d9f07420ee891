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

#include "gradedlnd/derivation.h"

#include <algorithm>
#include <functional>

#include "gradedlnd/error.h"
#include "gradedlnd/polynomial_io.h"

namespace gradedlnd {

std::vector<RingElem> relation_defects(const RingPtr& ring,
                                       const std::vector<RingElem>& images) {
  std::vector<RingElem> defects;
  for (const Relation& rel : ring->relations()) {
    RingElem total = RingElem::zero(ring);
    for (std::size_t i = 0; i < ring->num_vars(); ++i) {
      if (images[i].is_zero()) continue;
      Polynomial partial = rel.poly.derivative(i);
      if (partial.is_zero()) continue;
      total += RingElem(ring, std::move(partial)) * images[i];
    }
    defects.push_back(std::move(total));
  }
  return defects;
}

Derivation::Derivation(RingPtr ring, std::vector<RingElem> images, Unchecked)
    : ring_(std::move(ring)), images_(std::move(images)) {}

Derivation::Derivation(RingPtr ring, std::vector<RingElem> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->num_vars()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a derivation needs one image per variable");
  }
  for (RingElem& img : images_) {
    if (img.ring() != ring_) img = embed(img, ring_);
  }
  const auto defects = relation_defects(ring_, images_);
  for (std::size_t r = 0; r < defects.size(); ++r) {
    if (!defects[r].is_zero()) {
      throw Error(ErrorCode::kIncompatibleDerivation,
                  "D(" + format_polynomial(ring_->relations()[r].poly,
                                           variable_names(*ring_)) +
                      ") = " + format(defects[r]) + " is not zero");
    }
  }
}

Derivation Derivation::zero(const RingPtr& ring) {
  return Derivation(ring, std::vector<RingElem>(ring->num_vars(), RingElem::zero(ring)),
                    Unchecked{});
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const RingElem& e) { return e.is_zero(); });
}

RingElem Derivation::apply_monomial(const Monomial& m) const {
  RingElem out = RingElem::zero(ring_);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0 || images_[i].is_zero()) continue;
    Monomial rest(m);
    rest[i] -= 1;
    out += RingElem::monomial(ring_, rest, Rat(m[i])) * images_[i];
  }
  return out;
}

RingElem Derivation::apply(const RingElem& e) const {
  RingElem out = RingElem::zero(ring_);
  for (const auto& [m, c] : e.poly().terms()) out += apply_monomial(m) * c;
  return out;
}

RingElem Derivation::iterate(const RingElem& e, int times) const {
  RingElem out = e;
  for (int k = 0; k < times && !out.is_zero(); ++k) out = apply(out);
  return out;
}

std::optional<std::int64_t> Derivation::degree() const {
  std::optional<std::int64_t> deg;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].is_zero()) continue;
    auto d = images_[i].degree();
    if (!d) return std::nullopt;
    const std::int64_t e = ring_->normalize_degree(*d - ring_->variable(i).weight);
    if (deg && *deg != e) return std::nullopt;
    deg = e;
  }
  return deg;
}

Derivation Derivation::scaled(const RingElem& a) const {
  std::vector<RingElem> images;
  for (const RingElem& img : images_) images.push_back(a * img);
  return Derivation(ring_, std::move(images), Unchecked{});
}

bool operator==(const Derivation& a, const Derivation& b) {
  return a.images_ == b.images_;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  std::vector<RingElem> images;
  for (std::size_t i = 0; i < a.images_.size(); ++i) {
    images.push_back(a.images_[i] + b.images_[i]);
  }
  return Derivation(a.ring_, std::move(images), Derivation::Unchecked{});
}

bool kernel_membership(const Derivation& d, const RingElem& e) {
  return d.apply(e).is_zero();
}

std::string format_derivation(const Derivation& d) {
  std::string out;
  for (std::size_t i = 0; i < d.images().size(); ++i) {
    if (i > 0) out += "; ";
    out += d.ring()->variable(i).name + " -> " + format(d.image(i));
  }
  return out;
}

std::map<std::int64_t, Derivation> decompose_homogeneous(const Derivation& d) {
  const RingPtr& ring = d.ring();
  std::map<std::int64_t, std::vector<RingElem>> parts;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    for (auto& [deg, comp] : homogeneous_components(d.image(i))) {
      const std::int64_t e = ring->normalize_degree(deg - ring->variable(i).weight);
      auto [it, inserted] = parts.try_emplace(
          e, std::vector<RingElem>(ring->num_vars(), RingElem::zero(ring)));
      it->second[i] = comp;
    }
  }
  std::map<std::int64_t, Derivation> out;
  for (auto& [e, images] : parts) out.emplace(e, Derivation(ring, std::move(images)));
  return out;
}

std::pair<std::int64_t, Derivation> top_homogeneous_part(const Derivation& d) {
  auto parts = decompose_homogeneous(d);
  if (parts.empty()) {
    throw Error(ErrorCode::kZeroDerivation, "the derivation is zero");
  }
  return *parts.rbegin();
}

std::string verdict_name(NilpotencyCertificate::Verdict v) {
  switch (v) {
    case NilpotencyCertificate::Verdict::kNilpotent: return "Nilpotent";
    case NilpotencyCertificate::Verdict::kNotNilpotent: return "NotNilpotent";
    case NilpotencyCertificate::Verdict::kUnknown: return "Unknown";
  }
  return "";
}

namespace {

// lambda with b == lambda * a, if any.
std::optional<Rat> proportionality(const RingElem& a, const RingElem& b) {
  if (a.is_zero() || b.is_zero() || a.poly().size() != b.poly().size()) {
    return std::nullopt;
  }
  const auto& [m, c] = *a.poly().terms().begin();
  const Rat lambda = b.poly().coefficient(m) / c;
  if (lambda == 0 || !(a.poly() * lambda == b.poly())) return std::nullopt;
  return lambda;
}

using Step = std::function<RingElem(const RingElem&)>;

NilpotencyCertificate certify_generators(
    const std::vector<std::pair<std::string, RingElem>>& generators,
    const Step& step, int bound, std::size_t max_terms) {
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  NilpotencyCertificate cert;
  cert.bound = bound;
  bool unknown = false;
  for (const auto& [label, g] : generators) {
    RingElem w = g;
    int order = 0;
    for (int k = 1; k <= bound; ++k) {
      RingElem next = step(w);
      if (next.is_zero()) {
        order = k;
        break;
      }
      if (auto lambda = proportionality(w, next)) {
        cert.verdict = NilpotencyCertificate::Verdict::kNotNilpotent;
        cert.orders.clear();
        cert.witness = w;
        cert.eigenvalue = *lambda;
        return cert;
      }
      if (next.poly().size() > max_terms) break;
      w = std::move(next);
    }
    if (order == 0) {
      unknown = true;
    } else {
      cert.orders[label] = order;
    }
  }
  if (unknown) {
    cert.orders.clear();
    cert.verdict = NilpotencyCertificate::Verdict::kUnknown;
  } else {
    cert.verdict = NilpotencyCertificate::Verdict::kNilpotent;
  }
  return cert;
}

}  // namespace

NilpotencyCertificate certify_lnd(const Derivation& d, int bound,
                                  std::size_t max_terms) {
  const RingPtr& ring = d.ring();
  std::vector<std::pair<std::string, RingElem>> generators;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    generators.emplace_back(ring->variable(i).name, RingElem::variable(ring, i));
  }
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    if (!ring->variable(i).inverted) continue;
    generators.emplace_back(ring->variable(i).name + "^-1",
                            RingElem::variable(ring, i, -1));
  }
  return certify_generators(
      generators, [&](const RingElem& e) { return d.apply(e); }, bound, max_terms);
}

namespace {

constexpr int kIterationCap = 4096;

}  // namespace

RingElem kernel_projection(const Derivation& d, const RingElem& s,
                           const RingElem& b, int bound) {
  RingElem out = RingElem::zero(d.ring());
  RingElem power = RingElem::constant(d.ring(), Rat(1));  // s^j
  RingElem iterate = b;                                  // D^j(b)
  Rat scale(1);                                          // (-1)^j / j!
  for (int j = 0; !iterate.is_zero(); ++j) {
    if (j > std::max(bound, kIterationCap)) {
      throw Error(ErrorCode::kNilpotencyUnverified,
                  "iterates did not vanish within the bound");
    }
    out += power * iterate * scale;
    iterate = d.apply(iterate);
    power *= s;
    scale /= -(j + 1);
  }
  return out;
}

std::vector<RingElem> slice_decompose(const Derivation& d, const RingElem& s,
                                      const RingElem& e,
                                      const NilpotencyCertificate& cert) {
  const RingPtr& ring = d.ring();
  if (!(d.apply(s) == RingElem::constant(ring, Rat(1)))) {
    throw Error(ErrorCode::kNotASlice, "D(" + format(s) + ") = " +
                                           format(d.apply(s)) + ", not 1");
  }
  if (!cert.nilpotent()) {
    throw Error(ErrorCode::kNilpotencyUnverified,
                "local nilpotency is " + verdict_name(cert.verdict));
  }
  if (e.is_zero()) return {RingElem::zero(ring)};
  std::vector<RingElem> coefficients;
  RingElem iterate = e;
  Rat scale(1);  // 1 / i!
  for (int i = 0; !iterate.is_zero(); ++i) {
    if (i > kIterationCap) {
      throw Error(ErrorCode::kNilpotencyUnverified,
                  "iterates did not vanish within the bound");
    }
    coefficients.push_back(kernel_projection(d, s, iterate) * scale);
    iterate = d.apply(iterate);
    scale /= i + 1;
  }
  return coefficients;
}

bool in_veronese(const RingElem& e, std::int64_t d) {
  for (const auto& [m, c] : e.poly().terms()) {
    if (e.ring()->degree(m) % d != 0) return false;
  }
  return true;
}

VeroneseDerivation::VeroneseDerivation(VeroneseDescription veronese,
                                       std::vector<RingElem> images)
    : veronese_(std::move(veronese)), images_(std::move(images)) {
  if (images_.size() != veronese_.generators().size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a Veronese derivation needs one image per generator");
  }
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k].ring() != veronese_.ring()) {
      images_[k] = embed(images_[k], veronese_.ring());
    }
    if (!in_veronese(images_[k], veronese_.d())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "image of " + format(veronese_.generators()[k]) +
                      " is not in the Veronese subring");
    }
  }
}

VeroneseDerivation VeroneseDerivation::restrict(const Derivation& d,
                                                const VeroneseDescription& veronese) {
  std::vector<RingElem> images;
  for (const RingElem& g : veronese.generators()) images.push_back(d.apply(g));
  return VeroneseDerivation(veronese, std::move(images));
}

RingElem VeroneseDerivation::apply(const RingElem& e) const {
  const RingPtr& ring = veronese_.ring();
  RingElem out = RingElem::zero(ring);
  for (const auto& [m, c] : e.poly().terms()) {
    auto counts = veronese_.decompose(m);
    if (!counts) {
      throw Error(ErrorCode::kInvalidArgument,
                  format_monomial(m, variable_names(*ring)) +
                      " is not in the Veronese subring");
    }
    for (std::size_t k = 0; k < counts->size(); ++k) {
      if ((*counts)[k] == 0 || images_[k].is_zero()) continue;
      const Monomial rest = monomial_quotient(m, veronese_.generator_monomials()[k]);
      out += RingElem::monomial(ring, rest, c * (*counts)[k]) * images_[k];
    }
  }
  return out;
}

RingElem VeroneseDerivation::iterate(const RingElem& e, int times) const {
  RingElem out = e;
  for (int k = 0; k < times && !out.is_zero(); ++k) out = apply(out);
  return out;
}

bool VeroneseDerivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const RingElem& e) { return e.is_zero(); });
}

std::string format_veronese_derivation(const VeroneseDerivation& d) {
  std::string out;
  for (std::size_t k = 0; k < d.images().size(); ++k) {
    if (k > 0) out += "; ";
    out += format(d.veronese().generators()[k]) + " -> " + format(d.images()[k]);
  }
  return out;
}

NilpotencyCertificate certify_lnd(const VeroneseDerivation& d, int bound,
                                  std::size_t max_terms) {
  std::vector<std::pair<std::string, RingElem>> generators;
  for (const RingElem& g : d.veronese().generators()) {
    generators.emplace_back(format(g), g);
  }
  return certify_generators(
      generators, [&](const RingElem& e) { return d.apply(e); }, bound, max_terms);
}

}  // namespace gradedlnd
