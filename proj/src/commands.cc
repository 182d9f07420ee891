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

#include "gradedlnd/commands.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "gradedlnd/analysis.h"
#include "gradedlnd/cylinder.h"
#include "gradedlnd/derivation.h"
#include "gradedlnd/error.h"
#include "gradedlnd/extension.h"
#include "gradedlnd/polynomial_io.h"

namespace gradedlnd {

using nlohmann::json;

int default_bound() {
  if (const char* env = std::getenv("GRADEDLND_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 100000) return static_cast<int>(v);
  }
  return kDefaultBound;
}

namespace {

json prime_set(const PrimeSet& p) { return p.to_string(); }

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json hypotheses_json(const std::vector<Hypothesis>& hs) {
  json out = json::array();
  for (const Hypothesis& h : hs) {
    out.push_back({{"name", h.name}, {"status", status_name(h.status)}, {"detail", h.detail}});
  }
  return out;
}

json saturation_json(const SaturationReport& r) {
  json out;
  out["e_B"] = r.e_B;
  out["d_list"] = r.d_list;
  out["e_list"] = r.e_list;
  out["E"] = prime_set(r.E);
  out["kind"] = r.pi_exact ? "exact" : "interval";
  out["Pi"] = r.pi_exact ? json(r.pi_lower.to_string()) : json(nullptr);
  out["Pi_lower"] = prime_set(r.pi_lower);
  out["Pi_upper"] = r.pi_upper ? json(r.pi_upper->to_string()) : json("all primes");
  out["Pi_star"] = r.pi_star;
  out["saturated_codim1"] = optional_bool(r.saturated_codim1);
  out["pointwise_saturated"] = optional_bool(r.pointwise_saturated);
  json pairs = json::array();
  for (const auto& [i, j] : r.failing_pairs) pairs.push_back({i, j});
  out["failing_pairs"] = pairs;
  out["hypotheses"] = hypotheses_json(r.hypotheses);
  return out;
}

json derivation_json(const Derivation& d) {
  json out = json::object();
  for (std::size_t i = 0; i < d.images().size(); ++i) {
    out[d.ring()->variable(i).name] = format(d.image(i));
  }
  return out;
}

json certificate_json(const NilpotencyCertificate& c) {
  json out;
  out["verdict"] = verdict_name(c.verdict);
  out["bound"] = c.bound;
  switch (c.verdict) {
    case NilpotencyCertificate::Verdict::kNilpotent:
      out["orders"] = c.orders;
      break;
    case NilpotencyCertificate::Verdict::kNotNilpotent:
      out["witness"] = format(*c.witness);
      out["eigenvalue"] = to_string(c.eigenvalue);
      break;
    case NilpotencyCertificate::Verdict::kUnknown:
      break;
  }
  return out;
}

json fraction_json(const LocalFraction& q) { return format_fraction(q); }

const DerivationSpec& first_derivation(const SpecFile& spec) {
  if (spec.derivations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "the file has no derivation block");
  }
  return spec.derivations.front();
}

Derivation build_derivation(const DerivationSpec& d, const RingPtr& ring) {
  std::vector<RingElem> images;
  for (const auto& img : d.images) {
    images.push_back(img ? RingElem(ring, *img) : RingElem::zero(ring));
  }
  return Derivation(ring, std::move(images));
}

std::int64_t require_d(const CommandOptions& o, std::int64_t minimum) {
  if (o.d < minimum) {
    throw Error(ErrorCode::kInvalidArgument,
                "--d must be given and at least " + std::to_string(minimum));
  }
  return o.d;
}

RingElem option_element(const std::string& text, const std::string& flag,
                        const RingPtr& ring) {
  if (text.empty()) throw Error(ErrorCode::kInvalidArgument, flag + " must be given");
  return parse_element(text, ring);
}

json analyze(const SpecFile& spec) {
  const Ring& ring = *spec.ring;
  json out;
  out["degrees"] = ring.weights();
  if (ring.num_vars() >= 2) out["e_invariants"] = e_invariants(ring.weights());
  const HypothesisReport h = check_rigidity_hypotheses(ring);
  out["hypotheses"] = hypotheses_json(h.hypotheses);
  out["veronese_rigidity_equivalence"] = h.equivalence_applies;
  if (ring.relations().size() == 1) {
    out["saturation"] = saturation_json(pi_set_hypersurface(ring));
  } else if (ring.has_relations()) {
    out["saturation"] = {{"kind", "unavailable"},
                         {"reason", "the substitution test needs a single relation"}};
  }
  return out;
}

json veronese(const SpecFile& spec, const CommandOptions& o) {
  const VeroneseDescription v(spec.ring, require_d(o, 1));
  json out;
  out["d"] = v.d();
  json gens = json::array();
  for (const RingElem& g : v.generators()) gens.push_back(format(g));
  out["generators"] = gens;
  out["exponent_vectors"] = v.exponent_vectors();
  return out;
}

json chi_d(const SpecFile& spec, const CommandOptions& o) {
  const std::int64_t d = require_d(o, 2);
  json out;
  out["d"] = d;
  json elems = json::array();
  for (const RingElem& e : chi_d_generators(spec.ring, d)) {
    elems.push_back({{"element", format(e)}, {"degree", *e.degree()}});
  }
  out["elements"] = elems;
  return out;
}

json lift(const SpecFile& spec, const CommandOptions& o) {
  if (spec.etale_new.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "the file has no etale block");
  }
  const EtalePresentation pres = make_etale_presentation(spec.ring, spec.etale_new);
  const DerivationSpec& ds = first_derivation(spec);
  std::vector<RingElem> base_images;
  const std::size_t n = spec.ring->num_vars();
  for (std::size_t x : pres.new_vars) {
    if (ds.images[x]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "delta may not prescribe the new variable " + spec.ring->variable(x).name);
    }
  }
  for (std::size_t i : pres.base_vars) {
    Polynomial img = ds.images[i] ? *ds.images[i] : Polynomial(n);
    for (std::size_t x : pres.new_vars) {
      if (img.involves(x)) {
        throw Error(ErrorCode::kInvalidArgument, "delta must map the base into itself");
      }
    }
    Polynomial base(pres.base_vars.size());
    for (const auto& [m, c] : img.terms()) {
      Monomial mm;
      for (std::size_t k : pres.base_vars) mm.push_back(m[k]);
      base.add_term(mm, c);
    }
    base_images.push_back(RingElem(pres.base, base));
  }
  const Derivation delta(pres.base, std::move(base_images));
  const Derivation lifted = jacobian_lift(pres, delta);
  json out;
  json fresh = json::array();
  for (std::size_t x : pres.new_vars) fresh.push_back(spec.ring->variable(x).name);
  out["new_variables"] = fresh;
  out["jacobian_det"] = format_polynomial(pres.jacobian_det, variable_names(*spec.ring));
  out["delta"] = derivation_json(delta);
  out["lift"] = derivation_json(lifted);
  out["delta_certificate"] = certificate_json(certify_lnd(delta, o.bound));
  out["lift_certificate"] = certificate_json(certify_lnd(lifted, o.bound));
  return out;
}

json chart_lift(const SpecFile& spec, const CommandOptions& o) {
  const std::int64_t d = require_d(o, 2);
  if (!spec.has_delta) throw Error(ErrorCode::kInvalidArgument, "the file has no delta block");
  const RingElem x = o.x.empty() ? chi_d_generators(spec.ring, d).front()
                                 : parse_element(o.x, spec.ring);
  const RingPtr laurent = laurent_names_ring(*spec.ring);
  std::map<Monomial, RingElem> delta;
  for (const auto& [k, img] : spec.delta) {
    delta.emplace(k.terms().begin()->first, RingElem(laurent, img));
  }
  const ChartLift cl = veronese_chart_lift(spec.ring, d, x, delta);
  json out;
  out["d"] = d;
  out["x"] = format(x);
  json inverted = json::array();
  for (const Variable& v : cl.chart->variables()) {
    if (v.inverted) inverted.push_back(v.name);
  }
  out["chart_inverted"] = inverted;
  json images = json::object();
  for (std::size_t k = 0; k < cl.delta_images.size(); ++k) {
    images[format(cl.veronese.generators()[k])] = format(cl.delta_images[k]);
  }
  out["delta"] = images;
  out["lift"] = derivation_json(cl.derivation);
  out["integral_on_B"] = cl.integral_on_B;
  out["lift_certificate"] = certificate_json(certify_lnd(cl.derivation, o.bound));
  return out;
}

json lnd_check(const SpecFile& spec, const CommandOptions& o) {
  const Derivation d = build_derivation(first_derivation(spec), spec.ring);
  json out;
  out["derivation"] = derivation_json(d);
  const auto deg = d.degree();
  out["degree"] = deg ? json(*deg) : json(nullptr);
  out["certificate"] = certificate_json(certify_lnd(d, o.bound));
  json parts = json::object();
  for (const auto& [e, part] : decompose_homogeneous(d)) {
    parts[std::to_string(e)] = derivation_json(part);
  }
  out["homogeneous_components"] = parts;
  if (!d.is_zero()) {
    const auto [e, top] = top_homogeneous_part(d);
    out["top_part"] = {{"degree", e}, {"images", derivation_json(top)},
                       {"certificate", certificate_json(certify_lnd(top, o.bound))}};
  }
  return out;
}

json slice(const SpecFile& spec, const CommandOptions& o) {
  const Derivation d = build_derivation(first_derivation(spec), spec.ring);
  const RingElem s = option_element(o.s, "--s", spec.ring);
  const RingElem e = option_element(o.e, "--e", spec.ring);
  const auto cert = certify_lnd(d, o.bound);
  const auto coeffs = slice_decompose(d, s, e, cert);
  RingElem sum = RingElem::zero(spec.ring);
  bool in_kernel = true;
  json list = json::array();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    list.push_back(format(coeffs[i]));
    sum += coeffs[i] * s.pow(static_cast<unsigned>(i));
    in_kernel = in_kernel && kernel_membership(d, coeffs[i]);
  }
  json out;
  out["s"] = format(s);
  out["e"] = format(e);
  out["coefficients"] = list;
  out["reconstruction_exact"] = sum == e;
  out["coefficients_in_kernel"] = in_kernel;
  return out;
}

json dehomogenize_report(const SpecFile& spec, const CommandOptions& o) {
  const RingElem h = option_element(o.h, "--h", spec.ring);
  const Dehomogenization dh = dehomogenize(spec.ring, h);
  json out;
  out["h"] = format(h);
  out["m"] = dh.m;
  out["modulus"] = dh.quotient->modulus();
  out["lead"] = dh.quotient->variable(dh.lead).name;
  json rels = json::array();
  const auto names = variable_names(*dh.quotient);
  for (const RelationSpec& r : dh.quotient->relation_specs()) {
    rels.push_back(names[r.lead] + " : " + format_polynomial(r.poly, names));
  }
  out["relations"] = rels;
  json rho = json::object();
  for (std::size_t i = 0; i < spec.ring->num_vars(); ++i) {
    const RingElem v = dh.rho(RingElem::variable(spec.ring, i));
    rho[names[i]] = {{"image", format(v)}, {"class", dh.quotient->degree(unit_monomial(names.size(), i))}};
  }
  out["rho"] = rho;
  if (h.is_term()) {
    json gens = json::array();
    for (const LocalFraction& g : degree_zero_localization_generators(spec.ring, h)) {
      const RingElem image = dh.rho_prime(g);
      const LocalFraction back = dh.rho_prime_inverse(image);
      gens.push_back({{"fraction", format_fraction(g)},
                      {"rho_prime", format(image)},
                      {"round_trip", fractions_equal(back, g)}});
    }
    out["degree_zero_generators"] = gens;
  }
  return out;
}

CylinderWitness build_witness(const WitnessSpec& w, const RingPtr& ring) {
  auto fraction = [&](const FractionSpec& f) {
    return LocalFraction{RingElem(ring, f.numerator), RingElem(ring, f.denominator),
                         f.denominator.is_constant() ? 0 : 1};
  };
  CylinderWitness out{RingElem(ring, w.f), fraction(w.t), {}};
  for (const FractionSpec& r : w.r) out.R_generators.push_back(fraction(r));
  return out;
}

json cylinder_to_lnd_report(const SpecFile& spec, const CommandOptions& o) {
  if (!spec.witness) throw Error(ErrorCode::kInvalidArgument, "the file has no witness block");
  const CylinderWitness w = build_witness(*spec.witness, spec.ring);
  const auto deg_f = w.f.degree();
  if (!deg_f) throw Error(ErrorCode::kInvalidArgument, "f must be homogeneous");
  const std::int64_t d = o.d != 0 ? o.d : *deg_f;
  const CylinderLnd c = cylinder_to_lnd(spec.ring, w, d, o.bound);
  json out;
  out["d"] = d;
  out["n"] = c.n;
  out["m"] = c.m;
  json images = json::object();
  for (std::size_t k = 0; k < c.derivation.images().size(); ++k) {
    images[format(c.derivation.veronese().generators()[k])] = format(c.derivation.images()[k]);
  }
  out["derivation"] = images;
  out["preimage"] = format(c.preimage);
  out["image"] = format(c.image);
  out["witness_checks"] = c.witness_checks;
  out["certificate"] = certificate_json(certify_lnd(c.derivation, o.bound));
  return out;
}

json lnd_to_cylinder_report(const SpecFile& spec, const CommandOptions& o) {
  const Derivation d = build_derivation(first_derivation(spec), spec.ring);
  std::vector<RingElem> seeds;
  for (const Polynomial& p : spec.seeds) seeds.push_back(RingElem(spec.ring, p));
  CandidateOptions options;
  options.bound = o.bound;
  const auto cert = certify_lnd(d, o.bound);
  const CylinderCandidate c = lnd_to_cylindrical_candidate(d, cert, seeds, options);
  json out;
  out["verdict"] = verdict_name(c.verdict);
  out["h"] = c.h ? json(format(*c.h)) : json(nullptr);
  out["beta"] = c.beta ? json(format(*c.beta)) : json(nullptr);
  out["route"] = c.route;
  if (c.witness) {
    json r = json::array();
    for (const LocalFraction& q : c.witness->R_generators) r.push_back(fraction_json(q));
    out["witness"] = {{"f", format(c.witness->f)}, {"t", fraction_json(c.witness->t)},
                      {"R_generators", r}};
  } else {
    out["witness"] = nullptr;
  }
  out["diagnostics"] = c.diagnostics;
  return out;
}

void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

std::string error_text(const Error& e) {
  std::string out = "error: " + std::string(error_name(e.code())) + ": " + e.what();
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    out += " (line " + std::to_string(p->line()) + ", column " + std::to_string(p->column()) + ")";
  }
  return out + "\n";
}

const std::vector<std::string> kSpecCommands = {
    "analyze", "veronese", "chi-d", "lift", "chart-lift", "lnd-check",
    "slice", "dehomogenize", "cylinder-to-lnd", "lnd-to-cylinder"};

}  // namespace

json spec_report(const std::string& command, const SpecFile& spec,
                 const CommandOptions& options) {
  json out;
  if (command == "analyze") out = analyze(spec);
  else if (command == "veronese") out = veronese(spec, options);
  else if (command == "chi-d") out = chi_d(spec, options);
  else if (command == "lift") out = lift(spec, options);
  else if (command == "chart-lift") out = chart_lift(spec, options);
  else if (command == "lnd-check") out = lnd_check(spec, options);
  else if (command == "slice") out = slice(spec, options);
  else if (command == "dehomogenize") out = dehomogenize_report(spec, options);
  else if (command == "cylinder-to-lnd") out = cylinder_to_lnd_report(spec, options);
  else if (command == "lnd-to-cylinder") out = lnd_to_cylinder_report(spec, options);
  else throw Error(ErrorCode::kInvalidArgument, "unknown command '" + command + "'");
  out["command"] = command;
  return out;
}

std::string render_text(const json& report) {
  std::string out;
  flatten(report, "", out);
  return out;
}

CommandResult run_command(const std::vector<std::string>& args) {
  CommandResult result;
  CLI::App app{"Graded rings, Veronese subrings and locally nilpotent derivations", "gradedlnd"};
  std::string command;
  std::vector<std::string> operands;
  CommandOptions options;
  options.bound = default_bound();
  std::string format = "text";
  app.set_help_flag("--help", "print this help");
  app.add_option("command", command, "analyze, pb, veronese, chi-d, lift, chart-lift, "
                                     "lnd-check, slice, dehomogenize, cylinder-to-lnd, "
                                     "lnd-to-cylinder")
      ->required();
  app.add_option("operands", operands, "spec file, or the exponents for pb");
  app.add_option("--d", options.d, "degree of the Veronese subring or chart");
  app.add_option("--bound", options.bound, "iteration and search bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--s", options.s, "slice element");
  app.add_option("--e", options.e, "element to decompose");
  app.add_option("--h", options.h, "element to dehomogenize at");
  app.add_option("--x", options.x, "chart element");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: usage: ") + e.what() + "\n";
    return result;
  }

  try {
    json report;
    if (command == "pb") {
      PBRing pb;
      for (const std::string& a : operands) {
        std::size_t used = 0;
        long long v = 0;
        try {
          v = std::stoll(a, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != a.size() || a.empty()) {
          throw ParseError(ErrorCode::kSyntaxError, "expected an integer, got '" + a + "'", 1, 1);
        }
        pb.exponents.push_back(v);
      }
      report["command"] = "pb";
      report["exponents"] = pb.exponents;
      report["saturation"] = saturation_json(pb_analyze(pb));
    } else if (std::find(kSpecCommands.begin(), kSpecCommands.end(), command) !=
               kSpecCommands.end()) {
      if (operands.size() != 1) {
        result.exit_code = 2;
        result.err = "error: usage: " + command + " expects exactly one spec file\n";
        return result;
      }
      std::ifstream in(operands[0]);
      if (!in) {
        result.exit_code = 2;
        result.err = "error: cannot read " + operands[0] + "\n";
        return result;
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      report = spec_report(command, parse_spec(buffer.str()), options);
    } else {
      result.exit_code = 2;
      result.err = "error: usage: unknown command '" + command + "'\n";
      return result;
    }
    result.out = format == "structured" ? report.dump(2) + "\n" : render_text(report);
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = error_text(e);
  } catch (const Error& e) {
    result.exit_code = 1;
    result.err = error_text(e);
  }
  return result;
}

}  // namespace gradedlnd
