#include "gammalab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "gammalab/axioms.hpp"
#include "gammalab/completion.hpp"
#include "gammalab/complex.hpp"
#include "gammalab/errors.hpp"
#include "gammalab/io.hpp"
#include "gammalab/module_localization.hpp"
#include "gammalab/obstruction.hpp"
#include "gammalab/sheaf.hpp"
#include "gammalab/tensor.hpp"

namespace gammalab::cli {

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t budget = 0;  // 0: module defaults
  std::vector<std::string> files;
  std::vector<Element> seed;
  std::vector<Element> cover;
  std::uint64_t sample_seed = 0;
  bool list_ideals = false;
  bool check_basis = false;
  bool diagnostics = false;
  bool semiring = false;
  bool tilde = false;
  std::size_t max_ring = 12;
  std::string truncate_side;
  std::string cone;
  std::string output;
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> gammas;
  std::string family;
};

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) { return o.budget ? o.budget : fallback; }

Json table_rows(const AdditiveTable& t) {
  Json rows = Json::array();
  for (Element a = 0; a < t.size(); ++a) {
    Json r = Json::array();
    for (Element b = 0; b < t.size(); ++b) r.push_back(t.add(a, b));
    rows.push_back(r);
  }
  return rows;
}

Json mode_labels(const Semiring* T, const std::vector<std::uint64_t>& modes) {
  Json out = Json::array();
  for (auto g : modes) {
    if (T)
      out.push_back(T->label(static_cast<Mode>(g)));
    else
      out.push_back(g);
  }
  return out;
}

Json axiom_report(const AxiomReport& r, const Semiring* T) {
  Json out = Json::array();
  for (const auto& v : r.verdicts) {
    Json j;
    j["axiom"] = std::string(axiom_name(v.axiom));
    j["holds"] = v.holds;
    j["exhaustive"] = v.exhaustive;
    j["instances_checked"] = v.instances_checked;
    if (v.witness) {
      const auto& w = *v.witness;
      j["witness"] = {{"law", std::string(law_name(w.law))},
                      {"elements", w.elements},
                      {"modes", mode_labels(T, w.modes)},
                      {"lhs", w.lhs},
                      {"rhs", w.rhs}};
    } else {
      j["witness"] = nullptr;
    }
    out.push_back(j);
  }
  return out;
}

Json module_axioms(const GammaModule& m) {
  const auto r = check_module_axioms(m);
  Json out;
  out["holds"] = r.all_hold();
  Json fails = Json::array();
  for (std::size_t c = 0; c < kModuleClauseCount; ++c) {
    if (r.holds[c]) continue;
    const auto& w = *r.witness[c];
    fails.push_back({{"clause", std::string(module_clause_name(static_cast<ModuleClause>(c)))},
                     {"law", std::string(w.law)},
                     {"scalars", w.scalars},
                     {"elements", w.elements},
                     {"modes", w.modes},
                     {"lhs", w.lhs},
                     {"rhs", w.rhs}});
  }
  out["failures"] = fails;
  return out;
}

Json group_summary(const GammaModule& m) {
  Json out;
  out["size"] = m.size();
  out["invariant_factors"] = m.is_group() ? Json(invariant_factors(m.additive())) : Json(nullptr);
  return out;
}

Json fraction(const Fraction& f) { return Json::array({f.num, f.den}); }

Json cubic_witness(const Semiring& T, const std::optional<CubicWitness>& w) {
  if (!w) return nullptr;
  return {{"u", w->u}, {"gamma", T.label(w->gamma)}, {"delta", T.label(w->delta)}, {"eta", T.label(w->eta)}};
}

Json point_set(const PointSet& p) {
  Json out = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i]) out.push_back(i);
  return out;
}

MultiplicativeSystem system_from(const Semiring& T, const std::vector<Element>& seed) {
  if (seed.empty()) throw InputError("--seed needs at least one element");
  for (auto a : seed)
    if (a >= T.size()) throw InputError("seed element " + std::to_string(a) + " out of range");
  try {
    return close_multiplicative(T, seed);
  } catch (const ConstructionError& e) {
    throw PreconditionError(e.what());
  }
}

// ---- commands ----

int check_axioms_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto& doc = ws.document(o.files.at(0));
  AxiomReport r;
  if (doc.is_object() && doc.contains("family")) {
    if (!doc["family"].is_string()) throw InputError(o.files[0] + ".family: expected a name");
    const auto fam = formula_family(doc["family"].get<std::string>());
    SampleWindow w;
    if (!doc.contains("range_bound") || !doc["range_bound"].is_number_unsigned())
      throw InputError(o.files[0] + ": missing \"range_bound\"");
    w.range_bound = doc["range_bound"].get<std::uint64_t>();
    if (!doc.contains("gammas") || !doc["gammas"].is_array()) throw InputError(o.files[0] + ": missing \"gammas\"");
    for (const auto& g : doc["gammas"]) {
      if (!g.is_number_unsigned()) throw InputError(o.files[0] + ".gammas: expected naturals");
      w.gammas.push_back(g.get<std::uint64_t>());
    }
    if (doc.contains("sample_budget")) w.sample_budget = doc["sample_budget"].get<std::uint64_t>();
    w.sample_budget = budget_or(o, w.sample_budget);
    w.seed = o.sample_seed ? o.sample_seed : doc.value("seed", std::uint64_t{0});
    r = check_axioms_sampled(fam, w);
    rep["structure"] = {{"family", fam.name}, {"formula", fam.formula}, {"range_bound", w.range_bound},
                        {"gammas", w.gammas}, {"sample_budget", w.sample_budget}, {"seed", w.seed}};
    rep["axioms"] = axiom_report(r, nullptr);
  } else {
    const auto T = ws.structure(o.files[0]);
    r = check_axioms(*T);
    rep["structure"] = {{"carrier", T->size()}, {"gammas", T->labels()}};
    rep["axioms"] = axiom_report(r, T.get());
  }
  return r.all_hold() ? kPass : kFail;
}

int spec_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  const auto bound = static_cast<std::size_t>(budget_or(o, kDefaultSpecBound));
  const auto sp = spec(*T, bound);
  Json primes = Json::array();
  for (auto p : sp.primes) primes.push_back(members(p));
  rep["primes"] = primes;
  Json opens = Json::array();
  for (Element a = 0; a < T->size(); ++a) opens.push_back({{"element", a}, {"points", point_set(sp.basic_open(a))}});
  rep["basic_opens"] = opens;
  if (o.list_ideals) {
    Json ids = Json::array();
    for (auto i : ideals(*T, bound)) ids.push_back(members(i));
    rep["ideals"] = ids;
  }
  int code = kPass;
  if (o.check_basis) {
    const auto b = check_basis_laws(*T, sp);
    Json j{{"holds", b.holds()},
           {"intersection_law", b.intersection_law},
           {"zero_empty", b.zero_empty},
           {"intersections_are_unions", b.intersections_are_unions},
           {"instances_checked", b.instances_checked}};
    if (b.witness)
      j["witness"] = {{"law", b.witness->law}, {"elements", b.witness->elements},
                      {"modes", mode_labels(T.get(), {b.witness->modes.begin(), b.witness->modes.end()})}};
    rep["basis_laws"] = j;
    if (!b.holds()) code = kFail;
  }
  return code;
}

int localize_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  const auto S = system_from(*T, o.seed);
  const auto L = localize(*T, S);
  rep["system"] = S.elements();
  rep["class_count"] = L.class_count();
  rep["raw_equals_closure"] = L.raw_equals_closure();
  rep["raw_related_pairs"] = L.raw_related_pairs();
  const auto& Q = L.structure();
  Json classes = Json::array();
  for (Element c = 0; c < L.class_count(); ++c) {
    Json j{{"class", c}, {"representative", fraction(L.representatives()[c])}};
    if (auto inv = is_invertible(Q, c))
      j["inverse"] = {{"partner", inv->partner}, {"mode", Q.label(inv->mode)}};
    else
      j["inverse"] = nullptr;
    classes.push_back(j);
  }
  rep["classes"] = classes;
  try {
    const auto cm = canonical_map(*T, L);
    rep["canonical_map"] = {{"s0", cm.s0}, {"image", cm.image}};
  } catch (const StructuralError& e) {
    rep["canonical_map"] = {{"error", e.what()}};
  }
  if (o.diagnostics) {
    Json log = Json::array();
    for (const auto& m : L.log()) {
      Json j{{"rule", m.rule}, {"lhs", fraction(m.lhs)}, {"rhs", fraction(m.rhs)}};
      if (m.rule == "raw") j["witness"] = cubic_witness(*T, m.witness);
      if (!m.operands.empty()) {
        Json ops = Json::array();
        for (const auto& f : m.operands) ops.push_back(fraction(f));
        j["operands"] = ops;
      }
      if (m.rule == "tern") j["mode"] = T->label(m.mode);
      log.push_back(j);
    }
    rep["merge_log"] = log;
  }
  return kPass;
}

int localize_module_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  const auto M = ws.module(o.files.at(1), T);
  const auto S = system_from(*T, o.seed);
  const auto L = localize(*T, S);
  const auto lm = localize_module(T, L, M);
  rep["system"] = S.elements();
  rep["scalar_classes"] = L.class_count();
  rep["localized"] = group_summary(lm.module);
  rep["s0"] = lm.s0;
  rep["identity_like"] = lm.identity_like;
  rep["unit"] = lm.unit;
  const auto ax = module_axioms(lm.module);
  rep["module_axioms"] = ax;
  return ax["holds"].get<bool>() ? kPass : kFail;
}

int tensor_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  const auto M = ws.module(o.files.at(1), T);
  const auto N = ws.module(o.files.at(2), T);
  const auto t = tensor(M, N);
  rep["product"] = group_summary(t.module);
  rep["generators"] = t.presentation.generators;
  rep["relations"] = t.group.relation_count;
  Json pure = Json::array();
  for (Element m = 0; m < M.size(); ++m) {
    Json row = Json::array();
    for (Element n = 0; n < N.size(); ++n) row.push_back(t.pure(m, n));
    pure.push_back(row);
  }
  rep["pure_tensors"] = pure;
  const auto ax = module_axioms(t.module);
  rep["module_axioms"] = ax;
  return ax["holds"].get<bool>() ? kPass : kFail;
}

int complete_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto M = ws.module(o.files.at(0));
  const auto c = group_completion(M, budget_or(o, kDefaultHomBudget));
  rep["monoid_size"] = M.size();
  rep["completion"] = group_summary(c.module);
  rep["unit"] = c.unit;
  Json reps = Json::array();
  for (const auto& [m, n] : c.representatives) reps.push_back({m, n});
  rep["representatives"] = reps;
  rep["action_restricts"] = c.action_restricts;
  rep["max_compatible_extensions"] =
      c.max_compatible_extensions ? Json(*c.max_compatible_extensions) : Json(nullptr);
  if (!c.max_compatible_extensions) return kBudget;
  return c.action_restricts && *c.max_compatible_extensions == 1 ? kPass : kFail;
}

int sheaf_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  auto M = ws.module(o.files.at(1), T);
  rep["completed"] = !M.is_group();
  if (!M.is_group()) M = group_completion(M).module;
  const BasisPresheaf p(T, M);
  const auto budget = budget_or(o, kDefaultFamilyBudget);
  Json primes = Json::array();
  for (auto q : p.spectrum().primes) primes.push_back(members(q));
  rep["primes"] = primes;
  Json sections = Json::array();
  for (std::size_t i = 0; i < p.nodes().size(); ++i) {
    const auto& n = p.nodes()[i];
    Json j{{"node", i}, {"generators", n.generators}, {"system", members(n.system)}, {"open", point_set(n.open)},
           {"size", p.section_size(i)}};
    j["invariant_factors"] = invariant_factors(p.section_additive(i));
    j["defect"] = n.defect ? Json(*n.defect) : Json(nullptr);
    sections.push_back(j);
  }
  rep["sections"] = sections;
  Json res = Json::array();
  for (const auto& [key, r] : p.restrictions()) {
    Json j{{"from", key.first}, {"to", key.second}};
    j["digest"] = sha256_hex(Json(r.map).dump());
    j["defect"] = r.defect ? Json(*r.defect) : Json(nullptr);
    res.push_back(j);
  }
  rep["restrictions"] = res;
  const auto laws = check_presheaf_laws(p);
  rep["presheaf_laws"] = {{"holds", laws.holds()},
                          {"identities", laws.identities},
                          {"triangles", laws.triangles},
                          {"generator_independent", laws.generator_independent},
                          {"triangles_checked", laws.triangles_checked},
                          {"witness", laws.witness ? Json(*laws.witness) : Json(nullptr)}};
  const auto gs = global_sections(p, o.cover, budget);
  rep["global_sections"] = {{"cover", gs.cover},
                            {"families", gs.families.size()},
                            {"isomorphic", gs.isomorphic},
                            {"witness", gs.witness ? Json(*gs.witness) : Json(nullptr)},
                            {"defects", gs.defects}};
  const auto glue = check_gluing(p, gs.cover, budget);
  rep["gluing"] = {{"cover", glue.cover},
                   {"target", glue.target},
                   {"families_checked", glue.families_checked},
                   {"holds", glue.holds},
                   {"witness", glue.witness ? Json(*glue.witness) : Json(nullptr)}};
  return laws.holds() && gs.isomorphic && glue.holds ? kPass : kFail;
}

Json degree_table(const ChainComplex& k) {
  Json out = Json::array();
  if (k.empty()) return out;
  for (int n = k.lo(); n <= k.hi(); ++n) {
    const auto h = homology(k, n);
    out.push_back({{"n", n},
                   {"size", k.module(n).size()},
                   {"homology_size", h.module.size()},
                   {"invariant_factors", invariant_factors(h.module.additive())}});
  }
  return out;
}

int homology_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  const auto K = ws.complex(o.files.at(1), T);
  rep["degrees"] = degree_table(K);
  const auto heart = heart_check(K);
  rep["heart"] = {{"holds", heart.holds()},
                  {"concentrated", heart.concentrated},
                  {"zigzag_quasi_iso", heart.zigzag_quasi_iso},
                  {"h0_size", heart.h0_size},
                  {"witness", heart.witness ? Json(*heart.witness) : Json(nullptr)}};
  int code = kPass;
  if (!o.truncate_side.empty()) {
    const auto side = o.truncate_side == "le0" ? TruncationSide::Le0 : TruncationSide::Ge0;
    const auto t = truncate(K, side);
    rep["truncation"] = {{"side", o.truncate_side}, {"degrees", degree_table(t.complex)}};
  }
  if (!o.cone.empty()) {
    const auto f = ws.chain_map(o.cone, T);
    const auto les = check_long_exact(f);
    Json j{{"quasi_iso", is_quasi_iso(f)},
           {"cone", degree_table(cone(f))},
           {"long_exact", {{"exact", les.exact},
                           {"joints_checked", les.joints_checked},
                           {"witness", les.witness ? Json(*les.witness) : Json(nullptr)}}}};
    if (!les.exact) code = kFail;
    if (o.tilde) {
      const auto tv = tilde_complex_check(f);
      Json local = Json::array();
      for (const auto& [a, q] : tv.local) local.push_back({{"element", a}, {"quasi_iso", q}});
      j["tilde"] = {{"agrees", tv.agrees()}, {"global_quasi_iso", tv.global_quasi_iso}, {"local", local},
                    {"defects", tv.defects}};
      if (!tv.agrees()) code = kFail;
    }
    rep["map"] = j;
  }
  return code;
}

int shadow_cmd(Workspace& ws, const Options& o, Json& rep) {
  const auto T = ws.structure(o.files.at(0));
  const auto S = system_from(*T, o.seed);
  const auto L = localize(*T, S);
  SearchBounds b;
  b.max_ring = o.max_ring;
  b.semirings = o.semiring;
  b.candidate_budget = budget_or(o, b.candidate_budget);
  const auto r = shadow_search(*T, L, b);
  rep["system"] = S.elements();
  rep["classes"] = L.class_count();
  rep["raw_equals_closure"] = r.raw_equals_closure;
  rep["scope"] = r.scope;
  rep["rings"] = r.rings;
  rep["candidates"] = r.candidates;
  rep["complete"] = r.complete;
  Json rej = Json::object();
  for (const auto& [k, v] : r.rejections) rej[k] = v;
  rep["rejections"] = rej;
  Json sat = Json::array();
  for (const auto& c : r.satisfying) {
    Json mul = Json::array();
    for (Element x = 0; x < c.ring.size(); ++x) {
      Json row = Json::array();
      for (Element y = 0; y < c.ring.size(); ++y) row.push_back(c.ring.mul(x, y));
      mul.push_back(row);
    }
    sat.push_back({{"ring", c.ring.name()}, {"iota", c.iota}, {"add", table_rows(c.ring.additive())}, {"mul", mul}});
  }
  rep["satisfying"] = sat;
  return r.complete ? kPass : kBudget;
}

int generate_cmd(const Options& o, Json& doc) {
  if (o.gammas.empty()) throw InputError("--gammas needs at least one residue");
  const auto T = o.family.empty() ? standard_family(o.modulus, o.gammas)
                                  : compile_modular(formula_family(o.family), o.modulus, o.gammas);
  doc = semiring_to_json(T);
  return kPass;
}

void render_text(const Json& rep, std::ostream& out) {
  for (const auto& [key, value] : rep.items()) {
    auto text = value.is_string() ? value.get<std::string>() : value.dump();
    if (text.size() > 160) text = text.substr(0, 157) + "...";
    out << key << ": " << text << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Finite ternary Gamma-semiring toolkit", "gammalab"};
  app.set_version_flag("--version", std::string("gammalab ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", o.budget, "Enumeration cap overriding module defaults (also GAMMA_BUDGET)");

  auto* ax = app.add_subcommand("check-axioms", "Check the six structure axioms of a structure or formula family");
  ax->add_option("document", o.files, "Structure or formula-family document")->required()->expected(1);
  ax->add_option("--sample-seed", o.sample_seed, "Seed for sampled laws of a formula family");

  auto* sp = app.add_subcommand("spec", "Enumerate prime ideals and basic opens");
  sp->add_option("structure", o.files)->required()->expected(1);
  sp->add_flag("--list-ideals", o.list_ideals, "Also list every proper ideal");
  sp->add_flag("--check-basis", o.check_basis, "Verify the basic-open laws");

  auto* lo = app.add_subcommand("localize", "Localize at the system generated by --seed");
  lo->add_option("structure", o.files)->required()->expected(1);
  lo->add_option("--seed", o.seed, "Seed elements, comma separated")->required()->delimiter(',');
  lo->add_flag("--diagnostics", o.diagnostics, "Include the congruence merge log");

  auto* lm = app.add_subcommand("localize-module", "Localize a module at the system generated by --seed");
  lm->add_option("files", o.files, "structure.json module.json")->required()->expected(2);
  lm->add_option("--seed", o.seed)->required()->delimiter(',');

  auto* te = app.add_subcommand("tensor", "Tensor product of two modules");
  te->add_option("files", o.files, "structure.json M.json N.json")->required()->expected(3);

  auto* co = app.add_subcommand("complete", "Group completion of a module");
  co->add_option("module", o.files)->required()->expected(1);

  auto* sh = app.add_subcommand("sheaf-check", "Sections, restrictions, global sections and gluing");
  sh->add_option("files", o.files, "structure.json module.json")->required()->expected(2);
  sh->add_option("--cover", o.cover, "Cover elements, comma separated")->delimiter(',');

  auto* ho = app.add_subcommand("homology", "Homology, heart check, truncations and cones");
  ho->add_option("files", o.files, "structure.json complex.json")->required()->expected(2);
  ho->add_option("--truncate", o.truncate_side)->check(CLI::IsMember({"le0", "ge0"}));
  ho->add_option("--cone", o.cone, "Chain map document");
  ho->add_flag("--tilde", o.tilde, "With --cone: compare quasi-isomorphism on every basic open");

  auto* sd = app.add_subcommand("shadow-search", "Search binary rings for reflection of fraction equality");
  sd->add_option("structure", o.files)->required()->expected(1);
  sd->add_option("--seed", o.seed)->required()->delimiter(',');
  sd->add_option("--max-ring", o.max_ring, "Largest ring order")->check(CLI::Range(1, 64));
  sd->add_flag("--semiring", o.semiring, "Include semirings without negatives");

  auto* ge = app.add_subcommand("generate", "Emit a structure document for a modular family");
  ge->add_option("--modulus", o.modulus)->required()->check(CLI::Range(1, 64));
  ge->add_option("--gammas", o.gammas)->required()->delimiter(',');
  ge->add_option("--family", o.family, "Formula family name; default abc*gamma");
  ge->add_option("-o,--output", o.output, "Write the document to a file");

  std::vector<std::string> argv_store{"gammalab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInput;
  }
  if (o.budget == 0) {
    if (const char* env = std::getenv("GAMMA_BUDGET")) {
      try {
        o.budget = std::stoull(env);
      } catch (const std::exception&) {
        err << "GAMMA_BUDGET must be a positive integer\n";
        return kInput;
      }
    }
  }

  const auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json rep;
  rep["command"] = name;
  rep["arguments"] = args;
  rep["version"] = kVersion;
  Workspace ws;
  int code = kPass;
  try {
    if (name == "check-axioms") code = check_axioms_cmd(ws, o, rep);
    else if (name == "spec") code = spec_cmd(ws, o, rep);
    else if (name == "localize") code = localize_cmd(ws, o, rep);
    else if (name == "localize-module") code = localize_module_cmd(ws, o, rep);
    else if (name == "tensor") code = tensor_cmd(ws, o, rep);
    else if (name == "complete") code = complete_cmd(ws, o, rep);
    else if (name == "sheaf-check") code = sheaf_cmd(ws, o, rep);
    else if (name == "homology") code = homology_cmd(ws, o, rep);
    else if (name == "shadow-search") code = shadow_cmd(ws, o, rep);
    else if (name == "generate") {
      Json doc;
      code = generate_cmd(o, doc);
      if (o.output.empty()) {
        out << doc.dump(2) << '\n';
      } else {
        std::ofstream f(o.output);
        if (!(f << doc.dump(2) << '\n')) {
          err << o.output << ": cannot write\n";
          return kInput;
        }
      }
      return code;
    }
  } catch (const InputError& e) {
    rep["error"] = e.what();
    code = kInput;
  } catch (const PreconditionError& e) {
    rep["error"] = e.what();
    code = kInput;
  } catch (const ResourceError& e) {
    rep["error"] = e.what();
    code = kBudget;
  } catch (const ConstructionError& e) {
    rep["error"] = e.what();
    code = kFail;
  } catch (const StructuralError& e) {
    rep["error"] = e.what();
    code = kFail;
  }
  if (rep.contains("error")) err << name << ": " << rep["error"].get<std::string>() << '\n';

  Json inputs = Json::array();
  for (const auto& i : ws.inputs()) inputs.push_back({{"path", i.path}, {"sha256", i.sha256}});
  rep["inputs"] = inputs;
  static const char* status[] = {"pass", "fail", "input-error", "budget-exceeded"};
  rep["status"] = status[code];
  rep["exit_code"] = code;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep["timing"] = {{"elapsed_ms", ms}};
  if (o.format == "text")
    render_text(rep, out);
  else
    out << rep.dump(2) << '\n';
  return code;
}

}  // namespace gammalab::cli
