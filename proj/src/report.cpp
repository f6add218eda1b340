#include "roothk/report.hpp"

#include <json.hpp>
#include <sstream>

namespace roothk {

namespace {

using Json = nlohmann::ordered_json;

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::string factors_string(const std::vector<Integer>& fs) {
  if (fs.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) s += "+";
    s += "Z/" + fs[i].get_str();
  }
  return s;
}

Json value_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Integer>) {
          if (x.fits_slong_p()) return Json(x.get_si());
          return Json(x.get_str());
        } else if constexpr (std::is_same_v<T, Rational>) {
          if (x.get_den() == 1 && x.get_num().fits_slong_p())
            return Json(x.get_num().get_si());
          return Json(x.get_str());
        } else {
          return Json(x);
        }
      },
      v);
}

std::string value_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>)
          return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>)
          return x;
        else
          return x.get_str();
      },
      v);
}

Integer as_int(std::size_t x) { return Integer(std::to_string(x)); }

const char* kLemmaRef =
    "W-invariants of wedge^2(L+L) form a rank-one lattice; "
    "(Sym^2 V)^W = Q and (wedge^2 V)^W = 0";
const char* kDecompRef = "wedge^2(V+V) = 3 wedge^2 V + Sym^2 V";
const char* kFreenessRef = "W acts on L(x)C^2 freely outside codimension >= 2";
const char* kTowerRef =
    "W-invariant lattices between the root lattice and its dual: "
    "A_n < L < A_n^*; D_n, B_n = Z^n, D_n^* for B_n and C_n";
const char* kModelRef = "A_n^* = Z^{n+1}/diag Z";
const char* kSignedRef = "W(B_n) = Z_2^n x| S_n acting by signed permutations";
const char* kFixedRef =
    "fixed locus of w on L(x)A: components = |tors coker(w-I)|^4";

CheckRecord lemma_record(const InvariantReport& r) {
  CheckRecord c;
  c.name = "lemma/" + r.spec.name();
  c.status = pass_if(r.passed());
  c.add("sym2_inv", as_int(r.dim_sym2_inv))
      .add("wedge2_inv", as_int(r.dim_wedge2_inv))
      .add("wedge2_doubled_inv", as_int(r.dim_wedge2_doubled_inv))
      .add("irreducible", r.irreducible)
      .add("decomposition_consistent", r.decomposition_consistent);
  c.paper_ref = kLemmaRef;
  return c;
}

CheckRecord decomposition_record(const RootDatum& datum) {
  const DecompositionCheck d = decomposition_check(datum);
  CheckRecord c;
  c.name = "decomposition/" + datum.spec.name();
  c.status = pass_if(d.passed());
  c.add("dim_wedge2_doubled", as_int(d.dim_wedge2_doubled))
      .add("dim_wedge2", as_int(d.dim_wedge2))
      .add("dim_sym2", as_int(d.dim_sym2))
      .add("inv_wedge2_doubled", as_int(d.inv_wedge2_doubled))
      .add("inv_wedge2", as_int(d.inv_wedge2))
      .add("inv_sym2", as_int(d.inv_sym2));
  c.paper_ref = kDecompRef;
  return c;
}

CheckRecord freeness_record(const RootSystemSpec& spec, const GroupCap& cap) {
  const RootDatum datum = build_root_datum(spec);
  const Integer formula = group_order_formula(spec);
  CheckRecord c;
  c.name = "freeness/" + spec.name();
  c.paper_ref = kFreenessRef;
  c.add("order_formula", formula);
  if (formula > Integer(std::to_string(cap.max_elements))) {
    c.status = CheckStatus::Skipped;
    c.add("reason", std::string("group order exceeds cap ") +
                        std::to_string(cap.max_elements));
    return c;
  }
  const WeylGroup group = generate_group(datum, cap);
  const FreenessResult f = freeness_codim_check(group, cap);
  c.add("elements_generated", as_int(group.size()))
      .add("min_codim", as_int(f.min_codim))
      .add("attaining_min", as_int(f.attaining_min));
  c.status = pass_if(f.ok() && as_int(group.size()) == formula && f.min_codim == 2);
  return c;
}

CheckRecord tower_summary(const TowerReport& t) {
  CheckRecord c;
  c.name = "tower/" + t.spec.name();
  c.paper_ref = kTowerRef;
  std::string labels;
  for (const auto& l : t.lattices) {
    if (!labels.empty()) labels += ",";
    labels += l.label;
  }
  bool duality_ok = true;
  for (std::size_t i = 0; i < t.lattices.size(); ++i) {
    const std::size_t j = t.dual_of[i];
    if (j >= t.lattices.size() || t.dual_of[j] != i ||
        t.lattices[i].index_over_root * t.lattices[j].index_over_root !=
            t.discriminant_order)
      duality_ok = false;
  }
  const RootDatum base = build_root_datum(t.base_spec);
  const auto gens = simple_reflections(base);
  bool stable = true;
  for (const auto& l : t.lattices) stable = stable && lattice_is_stable(l, gens);
  c.add("base", t.base_label)
      .add("discriminant", factors_string(t.discriminant_factors))
      .add("subgroups", as_int(t.subgroup_count))
      .add("invariant_lattices", as_int(t.lattices.size()))
      .add("labels", labels)
      .add("classes", as_int(t.classes.classes.size()))
      .add("inconclusive_pairs", as_int(t.classes.inconclusive.size()))
      .add("duality_involution", duality_ok)
      .add("w_stable", stable);
  c.status = pass_if(duality_ok && stable);
  return c;
}

CheckRecord resolution_record(Family f) {
  CheckRecord c;
  c.name = std::string("resolution/") + family_letter(f);
  const Resolution r = resolution_verdict(f);
  c.add("verdict", std::string(to_string(r)));
  c.paper_ref = kResolutionCitation;
  c.status = CheckStatus::Pass;
  return c;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t ReportDocument::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

int ReportDocument::exit_code() const { return count(CheckStatus::Fail) ? 1 : 0; }

std::string render_json(const ReportDocument& doc) {
  Json j;
  j["tool"] = "roothk";
  j["tool_version"] = kToolVersion;
  j["command"] = doc.command;
  Json spec = Json::object();
  for (const auto& [k, v] : doc.spec_echo) spec[k] = v;
  j["spec"] = spec;
  Json checks = Json::array();
  for (const auto& c : doc.checks) {
    Json rec;
    rec["name"] = c.name;
    rec["status"] = to_string(c.status);
    Json vals = Json::object();
    for (const auto& [k, v] : c.values) vals[k] = value_json(v);
    rec["values"] = vals;
    rec["paper_ref"] = c.paper_ref;
    checks.push_back(std::move(rec));
  }
  j["checks"] = checks;
  j["summary"] = {{"pass", doc.count(CheckStatus::Pass)},
                  {"fail", doc.count(CheckStatus::Fail)},
                  {"skipped", doc.count(CheckStatus::Skipped)}};
  if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
  return j.dump(2) + "\n";
}

std::string render_tsv(const ReportDocument& doc) {
  std::ostringstream out;
  out << "name\tstatus\tvalues\tpaper_ref\n";
  for (const auto& c : doc.checks) {
    out << c.name << '\t' << to_string(c.status) << '\t';
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      if (i) out << ';';
      out << c.values[i].first << '=' << value_text(c.values[i].second);
    }
    out << '\t' << c.paper_ref << '\n';
  }
  if (doc.timing_ms) out << "# timing_ms\t" << *doc.timing_ms << '\n';
  return out.str();
}

std::string matrix_string(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

std::string matrix_string(const IntMatrix& m) { return matrix_string(to_rational(m)); }

std::vector<RootSystemSpec> default_suite_specs() {
  std::vector<RootSystemSpec> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 7; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 7; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= 8; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

ReportDocument cmd_analyze(const RootSystemSpec& spec, const LatticeSelector& selector,
                           const GroupCap& cap) {
  ReportDocument doc;
  doc.command = "analyze";
  doc.spec_echo = {{"family", std::string(1, family_letter(spec.family))},
                   {"rank", std::to_string(spec.rank)},
                   {"lattice", selector.str()},
                   {"group_cap", std::to_string(cap.max_elements)}};
  const HKVerdict v = analyze(spec, selector, cap);
  const std::string base = "analyze/" + spec.name() + "/";

  CheckRecord lat;
  lat.name = base + "lattice";
  lat.add("label", v.lattice_label)
      .add("index_over_root", v.lattice_index_over_root)
      .add("w_stable", v.lattice_w_stable);
  lat.status = pass_if(v.lattice_w_stable);
  lat.paper_ref = "L is a finite-index W-invariant sublattice of the weight lattice";
  doc.checks.push_back(std::move(lat));

  CheckRecord irr;
  irr.name = base + "irreducible";
  irr.add("irreducible", v.irreducible);
  irr.status = pass_if(v.irreducible);
  irr.paper_ref = "the invariant form on V is unique up to scalar (Schur)";
  doc.checks.push_back(std::move(irr));

  CheckRecord form;
  form.name = base + "symplectic_form_dim";
  form.add("dim", as_int(v.symplectic_form_dim));
  form.status = pass_if(v.symplectic_form_dim == 1);
  form.paper_ref = "H^0(U, Omega^2) = C";
  doc.checks.push_back(std::move(form));

  CheckRecord fr;
  fr.name = base + "freeness";
  fr.paper_ref = kFreenessRef;
  if (v.freeness.status == FreenessStatus::Skipped) {
    fr.status = CheckStatus::Skipped;
    fr.add("reason", v.freeness.reason);
  } else {
    fr.status = pass_if(v.freeness.ok());
    fr.add("min_codim", as_int(v.freeness.min_codim))
        .add("elements_checked", Integer(std::to_string(v.freeness.elements_checked)))
        .add("attaining_min", Integer(std::to_string(v.freeness.attaining_min)));
  }
  doc.checks.push_back(std::move(fr));

  CheckRecord res;
  res.name = base + "resolution";
  res.add("verdict", std::string(to_string(v.resolution)));
  res.status = CheckStatus::Pass;
  res.paper_ref = kResolutionCitation;
  doc.checks.push_back(std::move(res));

  CheckRecord km;
  km.name = base + "known_model";
  km.add("model", v.known_model.value_or("none"));
  km.status = CheckStatus::Pass;
  km.paper_ref = "A_n: generalized Kummer K_n(A); B_n on Z^n: Sym^n(Kummer K)";
  doc.checks.push_back(std::move(km));
  return doc;
}

ReportDocument cmd_lemma_check(int max_rank) {
  if (max_rank < 1) throw InvalidSpec("--max-rank must be at least 1");
  ReportDocument doc;
  doc.command = "lemma-check";
  doc.spec_echo = {{"max_rank", std::to_string(max_rank)}};
  for (const auto& s : supported_specs(max_rank))
    doc.checks.push_back(lemma_record(lemma_report(s)));
  return doc;
}

ReportDocument cmd_sublattices(const RootSystemSpec& spec) {
  ReportDocument doc;
  doc.command = "sublattices";
  doc.spec_echo = {{"family", std::string(1, family_letter(spec.family))},
                   {"rank", std::to_string(spec.rank)}};
  spec.validate();
  TowerReport t;
  try {
    t = tower_for_spec(spec);
  } catch (const DiscriminantTooLarge& e) {
    CheckRecord c;
    c.name = "tower/" + spec.name();
    c.status = CheckStatus::Fail;
    c.add("error", std::string(e.what()));
    c.paper_ref = kTowerRef;
    doc.checks.push_back(std::move(c));
    return doc;
  }
  doc.checks.push_back(tower_summary(t));
  std::vector<std::size_t> class_of(t.lattices.size());
  for (std::size_t k = 0; k < t.classes.classes.size(); ++k)
    for (auto i : t.classes.classes[k]) class_of[i] = k;
  for (std::size_t i = 0; i < t.lattices.size(); ++i) {
    const auto& l = t.lattices[i];
    CheckRecord c;
    c.name = "sublattice/" + spec.name() + "/" + l.label;
    c.add("position", as_int(i))
        .add("index_over_root", l.index_over_root)
        .add("gram", matrix_string(l.gram))
        .add("inherited_gram", matrix_string(l.inherited_gram))
        .add("dual", t.lattices[t.dual_of[i]].label)
        .add("class", as_int(class_of[i]))
        .add("class_rescaled", static_cast<bool>(t.classes.rescaled[class_of[i]]));
    c.status = CheckStatus::Pass;
    c.paper_ref = kTowerRef;
    doc.checks.push_back(std::move(c));
  }
  return doc;
}

ReportDocument cmd_report(const std::string& suite, const GroupCap& cap) {
  if (suite != "default") throw InvalidSpec("unknown suite: " + suite);
  ReportDocument doc;
  doc.command = "report";
  doc.spec_echo = {{"suite", suite}, {"group_cap", std::to_string(cap.max_elements)}};
  const auto specs = default_suite_specs();

  for (const auto& s : specs) doc.checks.push_back(lemma_record(lemma_report(s)));
  for (const auto& s : specs)
    doc.checks.push_back(decomposition_record(build_root_datum(s)));

  auto group_specs = specs;
  group_specs.push_back({Family::A, 9});
  for (const auto& s : group_specs) doc.checks.push_back(freeness_record(s, cap));

  for (int n = 2; n <= 5; ++n) {
    CheckRecord c;
    c.name = "signed_permutations/B" + std::to_string(n);
    c.paper_ref = kSignedRef;
    try {
      const auto r = check_signed_permutation_structure(n, cap);
      c.add("elements", Integer(std::to_string(r.element_count)))
          .add("expected", r.expected_count)
          .add("permutations", Integer(std::to_string(r.permutation_count)))
          .add("sign_changes", Integer(std::to_string(r.sign_change_count)));
      c.status = pass_if(r.passed());
    } catch (const GroupTooLarge& e) {
      c.status = CheckStatus::Skipped;
      c.add("reason", std::string(e.what()));
    }
    doc.checks.push_back(std::move(c));
  }

  for (int n = 1; n <= 6; ++n) {
    const auto r = dual_lattice_quotient_check(n);
    CheckRecord c;
    c.name = "quotient_model/A" + std::to_string(n);
    c.add("discriminant", factors_string(r.discriminant_factors))
        .add("model_gram", matrix_string(r.model_gram))
        .add("dual_gram", matrix_string(r.dual_gram))
        .add("gram_match", r.gram_match);
    c.status = pass_if(r.passed());
    c.paper_ref = kModelRef;
    doc.checks.push_back(std::move(c));
  }

  for (int n = 1; n <= 8; ++n) doc.checks.push_back(tower_summary(tower_for_spec({Family::A, n})));
  for (int n = 3; n <= 7; ++n) doc.checks.push_back(tower_summary(tower_for_spec({Family::B, n})));
  for (int n = 3; n <= 7; ++n) doc.checks.push_back(tower_summary(tower_for_spec({Family::C, n})));

  for (const RootSystemSpec s : {RootSystemSpec{Family::A, 1}, RootSystemSpec{Family::A, 2},
                                 RootSystemSpec{Family::B, 2}, RootSystemSpec{Family::A, 3}}) {
    const WeylGroup g = generate_group(build_root_datum(s), cap);
    std::uint64_t compared = 0, matched = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const IntMatrix w = g.element(i);
      const Integer det = determinant(w - IntMatrix::identity(w.rows()));
      if (abs(det) > 8) continue;
      const FixedLocusEntry e = fixed_locus_on_abelian(w, i);
      const Integer brute = count_fixed_components_bruteforce(w, matrix_order(w));
      ++compared;
      matched += brute == e.component_count;
    }
    CheckRecord c;
    c.name = "fixed_locus/" + s.name();
    c.add("elements", as_int(g.size()))
        .add("compared", Integer(std::to_string(compared)))
        .add("matched", Integer(std::to_string(matched)));
    c.status = pass_if(compared > 0 && compared == matched);
    c.paper_ref = kFixedRef;
    doc.checks.push_back(std::move(c));
  }

  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F,
                   Family::G, Family::H})
    doc.checks.push_back(resolution_record(f));
  return doc;
}

}  // namespace roothk
