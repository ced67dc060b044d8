#include "grmds/cli.hpp"

#include <CLI11.hpp>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>

#include "grmds/code_oracle.hpp"
#include "grmds/json_io.hpp"
#include "grmds/reproduce.hpp"

namespace grmds {

namespace {

struct Globals {
  std::string catalog;
  std::uint64_t seed = 0;
  bool json = false;
  std::optional<std::int64_t> timestamp;

  std::int64_t now() const { return timestamp.value_or(static_cast<std::int64_t>(std::time(nullptr))); }
};

struct RingFlags {
  std::uint64_t p = 0;
  unsigned s = 1;
  unsigned m = 1;
  unsigned e = 0;
  std::string modulus;
  std::string ring_file;

  bool given() const { return p != 0 || !ring_file.empty(); }
};

void add_ring_flags(CLI::App* cmd, RingFlags& f) {
  cmd->add_option("--p", f.p, "Prime p");
  cmd->add_option("--s", f.s, "Characteristic exponent, char = p^s")->capture_default_str();
  cmd->add_option("--m", f.m, "Residue degree")->capture_default_str();
  cmd->add_option("--e", f.e, "Automorphism exponent, sigma = theta^e")->capture_default_str();
  cmd->add_option("--modulus", f.modulus, "Monic modulus, coefficients low-to-high (e.g. 3,3,0,1)");
  cmd->add_option("--ring", f.ring_file, "Ring config JSON file");
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::ParseError, "cannot parse " + what + ": '" + text + "'");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  return literal_from_json(parse_json_text("[" + text + "]", "integer list"));
}

// "1,2,2,1" or "[1,0,0],[2,0,0]": one literal per element.
std::vector<Literal> parse_element_list(const std::string& text) {
  std::vector<Literal> out;
  for (const auto& x : parse_json_text("[" + text + "]", "element list")) out.push_back(literal_from_json(x));
  return out;
}

Literal parse_element(const std::string& text) { return literal_from_json(parse_json_text(text, "element")); }

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "range must look like a:b, got '" + text + "'");
  }
}

Ring ring_from_flags(const RingFlags& f) {
  if (!f.ring_file.empty()) return ring_from_json(read_json_file(f.ring_file));
  if (f.p == 0) throw Error(ErrorCode::BadParameter, "--p is required (or --ring FILE)");
  std::optional<std::vector<std::int64_t>> modulus;
  if (!f.modulus.empty()) modulus = parse_int_list(f.modulus);
  return make_ring(f.p, f.s, f.m, modulus, f.e);
}

SkewPoly poly_from_literals(const Ring& ring, const std::vector<Literal>& literals) {
  std::vector<RingElement> coeffs;
  for (const auto& l : literals) coeffs.push_back(ring->element(l));
  return SkewPoly(ring, std::move(coeffs));
}

// Exact minimum distance, falling back to the residue field when the ring is too large.
std::pair<unsigned, std::string> oracle_distance(const GRMatrix& m) {
  try {
    return {min_distance(CodeInstance(m)), "ring"};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded || m.ring()->is_field()) throw;
    return {min_distance(CodeInstance(m.projected())), "residue_field"};
  }
}

// Weight criteria in the ring, or in the residue field when the ring is too large to enumerate.
Json criteria_json(const SkewPoly& g, unsigned t, std::optional<unsigned> n) {
  auto run = [&](const SkewPoly& h) {
    Json j{{"criterion_support", weight_criterion_support(h, t)}};
    if (n) j["criterion_full"] = weight_criterion_full(h, *n);
    return j;
  };
  try {
    Json j = run(g);
    j["criterion_ring"] = "ring";
    return j;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded || g.ring()->is_field()) throw;
  }
  std::vector<RingElement> coeffs;
  for (const auto& c : g.coeffs()) coeffs.push_back(project_residue(c));
  Json j = run(SkewPoly(g.ring()->residue_field(), std::move(coeffs)));
  j["criterion_ring"] = "residue_field";
  return j;
}

Json elements_to_json(const std::vector<RingElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(element_to_json(x));
  return out;
}

Json make_record(const Globals& globals, const ConstructionSpec& spec, const ConstructionResult& r) {
  Json rec{{"timestamp", globals.now()},
           {"ring", ring_to_json(spec.ring)},
           {"spec", spec_to_json(spec)},
           {"g", poly_to_json(r.g)},
           {"t", r.t},
           {"M", matrix_to_json(r.m)},
           {"roots", elements_to_json(r.roots)},
           {"mds", r.report.mds},
           {"quasi_involutory", r.report.quasi_involutory ? Json(*r.report.quasi_involutory) : Json(nullptr)},
           {"coeffs_in_base", r.coeffs_in_base},
           {"condition_holds", r.condition_holds ? Json(*r.condition_holds) : Json(nullptr)}};
  if (r.report.witness) rec["witness"] = Json{{"rows", r.report.witness->rows}, {"cols", r.report.witness->cols}};
  if (r.report.min_distance) rec["min_distance"] = *r.report.min_distance;
  return rec;
}

void append_catalog(const Globals& globals, const Json& record) {
  if (globals.catalog.empty()) return;
  std::ofstream out(globals.catalog, std::ios::app);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot open catalog " + globals.catalog);
  out << record.dump() << "\n";
}

struct ConstructFlags {
  RingFlags ring;
  std::string family = "consecutive_powers";
  std::string base_family = "consecutive_powers";
  unsigned k = 2;
  std::optional<unsigned> t;
  std::int64_t b = 0;
  std::string c;
  std::string eta;
  std::uint64_t xi_exponent = 1;
  std::string g;
  std::string spec_file;
  bool check_involutory = false;
  bool oracle = false;
};

void add_construct_flags(CLI::App* cmd, ConstructFlags& f) {
  add_ring_flags(cmd, f.ring);
  cmd->add_option("--family", f.family,
                  "consecutive_powers | scaled_consecutive | root_perturbed | gap_at_k | inverse_gap | "
                  "gap_k_plus_1 | frobenius_orbit | frobenius_orbit_with_one | coeff_perturbed | from-poly")
      ->capture_default_str();
  cmd->add_option("--base-family", f.base_family, "Family wrapped by coeff_perturbed")->capture_default_str();
  cmd->add_option("--k", f.k, "Degree of g")->capture_default_str();
  cmd->add_option("--b", f.b, "Exponent offset of the first root")->capture_default_str();
  cmd->add_option("--c", f.c, "Unit scale, element literal (e.g. 3 or [1,1])");
  cmd->add_option("--eta", f.eta, "Nilpotent perturbations, element list (e.g. 2,[0,2],0)");
  cmd->add_option("--xi-exponent", f.xi_exponent, "xi = tau^u for the Teichmueller generator tau")
      ->capture_default_str();
  cmd->add_option("--g", f.g, "Polynomial for from-poly, element list low-to-high");
  cmd->add_option("--spec", f.spec_file, "ConstructionSpec JSON file");
  cmd->add_flag("--check-involutory", f.check_involutory, "Also test sigma_twist(N_g, k) N_g = I_k");
  cmd->add_flag("--oracle", f.oracle, "Also compute the exact minimum distance of [I | M]");
}

ConstructionSpec spec_from_flags(const ConstructFlags& f) {
  if (!f.spec_file.empty()) {
    Ring fallback = f.ring.given() ? ring_from_flags(f.ring) : nullptr;
    ConstructionSpec spec = spec_from_json(read_json_file(f.spec_file), fallback);
    if (f.check_involutory) spec.check_involutory = true;
    return spec;
  }
  ConstructionSpec spec;
  spec.ring = ring_from_flags(f.ring);
  spec.family = parse_family(f.family);
  spec.k = f.k;
  spec.t = f.t;
  spec.b = f.b;
  spec.xi_exponent = f.xi_exponent;
  spec.check_involutory = f.check_involutory;
  if (!f.c.empty()) {
    spec.c = parse_element(f.c);
    if (spec.family == Family::consecutive_powers) spec.family = Family::scaled_consecutive;
  }
  if (!f.eta.empty()) spec.eta = parse_element_list(f.eta);
  if (spec.family == Family::from_poly) {
    if (f.g.empty()) throw Error(ErrorCode::BadParameter, "from-poly needs --g");
    spec.g = parse_element_list(f.g);
    spec.k = static_cast<unsigned>(spec.g.size() - 1);
  }
  if (spec.family == Family::coeff_perturbed) {
    auto inner = std::make_shared<ConstructionSpec>(spec);
    inner->family = parse_family(f.base_family);
    inner->eta.clear();
    inner->check_involutory = false;
    if (inner->family == Family::from_poly) inner->g = parse_element_list(f.g);
    spec.base_spec = inner;
  }
  return spec;
}

ConstructionResult run_construction(const ConstructionSpec& spec, bool oracle) {
  ConstructionResult r = construct(spec);
  if (oracle) r.report.min_distance = oracle_distance(r.m).first;
  return r;
}

int cmd_ring_info(const Globals& globals, const RingFlags& flags, std::ostream& out) {
  const Ring ring = ring_from_flags(flags);
  Json j = ring_to_json(ring);
  j["characteristic"] = ring->q();
  j["residue_field_size"] = ring->residue_size();
  j["sigma_order"] = ring->sigma_order();
  j["zeta_is_teichmuller"] = ring->zeta_is_teichmuller();
  j["teichmuller_generator"] = element_to_json(ring->teichmuller_generator());
  j["sigma_of_zeta"] = element_to_json(apply_sigma(ring->zeta(), 1));
  if (globals.json) {
    out << j.dump(2) << "\n";
    return 0;
  }
  std::string modulus;
  for (std::size_t i = 0; i < ring->modulus().size(); ++i) {
    const auto c = ring->modulus()[i];
    if (c == 0) continue;
    if (!modulus.empty()) modulus += " + ";
    if (c != 1 || i == 0) modulus += std::to_string(c);
    if (i > 0) modulus += i == 1 ? "Y" : "Y^" + std::to_string(i);
  }
  out << ring->description() << "\n";
  out << "modulus: " << modulus << "\n";
  out << "sigma order: " << ring->sigma_order() << "\n";
  out << "zeta is Teichmueller: " << (ring->zeta_is_teichmuller() ? "yes" : "no") << "\n";
  out << "Teichmueller generator: " << ring->teichmuller_generator().to_string() << "\n";
  out << "sigma(zeta): " << apply_sigma(ring->zeta(), 1).to_string() << "\n";
  return 0;
}

int cmd_construct(const Globals& globals, const ConstructFlags& flags, std::ostream& out) {
  const ConstructionSpec spec = spec_from_flags(flags);
  const ConstructionResult r = run_construction(spec, flags.oracle);
  Json j = result_to_json(r);
  j["spec"] = spec_to_json(spec);
  out << j.dump(2) << "\n";
  append_catalog(globals, make_record(globals, spec, r));
  return r.report.mds ? 0 : 2;
}

struct VerifyFlags {
  RingFlags ring;
  std::string matrix_file;
  std::string g;
  std::optional<unsigned> t;
  std::optional<unsigned> n;
  std::string records;
  bool oracle = false;
  bool criterion = false;
};

void add_verify_flags(CLI::App* cmd, VerifyFlags& f, bool with_switches) {
  add_ring_flags(cmd, f.ring);
  cmd->add_option("--matrix", f.matrix_file, "Matrix JSON file");
  cmd->add_option("--g", f.g, "Polynomial, element list low-to-high (with ring flags)");
  cmd->add_option("--t", f.t, "Chain length (default deg g)");
  cmd->add_option("--n", f.n, "Code length for the full left-multiple criterion");
  if (with_switches) {
    cmd->add_flag("--oracle", f.oracle, "Compute the exact minimum distance");
    cmd->add_flag("--criterion", f.criterion, "Run the support-restricted weight criterion");
    cmd->add_option("--records", f.records, "Re-verify every record of a JSONL catalog");
  }
}

int verify_records(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::string line;
  std::size_t index = 0;
  bool all_ok = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json result{{"record", index++}};
    try {
      const Json rec = parse_json_text(line, "catalog record");
      if (rec.contains("error")) {
        result["skipped"] = true;
        out << result.dump() << "\n";
        continue;
      }
      const GRMatrix m = matrix_from_json(rec.at("M"));
      const bool mds = is_mds(m).mds;
      bool ok = mds == rec.at("mds").get<bool>();
      if (rec.contains("g") && rec.contains("t")) ok = ok && twisted_chain(poly_from_json(rec.at("g")), rec.at("t").get<unsigned>()) == m;
      result["mds"] = mds;
      result["ok"] = ok;
      all_ok = all_ok && ok;
    } catch (const std::exception& e) {
      result["ok"] = false;
      result["error"] = e.what();
      all_ok = false;
    }
    out << result.dump() << "\n";
  }
  return all_ok ? 0 : 2;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  if (!flags.records.empty()) return verify_records(flags.records, out);
  GRMatrix m;
  std::optional<SkewPoly> g;
  unsigned t = 0;
  if (!flags.matrix_file.empty()) {
    m = matrix_from_json(read_json_file(flags.matrix_file));
  } else if (!flags.g.empty()) {
    g = poly_from_literals(ring_from_flags(flags.ring), parse_element_list(flags.g));
    t = flags.t.value_or(static_cast<unsigned>(std::max(g->degree(), 0)));
    m = twisted_chain(*g, t);
  } else {
    throw Error(ErrorCode::BadParameter, "verify needs --matrix FILE, --g POLY or --records FILE");
  }
  VerificationReport report = is_mds(m);
  Json extra = Json::object();
  if (flags.oracle) {
    auto [d, where] = oracle_distance(m);
    report.min_distance = d;
    extra["oracle_ring"] = where;
  }
  if (flags.criterion) {
    if (!g) throw Error(ErrorCode::BadParameter, "--criterion needs --g");
    extra.update(criteria_json(*g, t, flags.n));
  }
  Json j = report_to_json(report);
  j.update(extra);
  out << j.dump(2) << "\n";
  return report.mds ? 0 : 2;
}

struct SearchFlags {
  ConstructFlags construct;
  std::string b_range = "0:0";
  std::string t_range;
  std::string xi_range = "1:1";
  unsigned eta_samples = 0;
};

std::vector<Literal> sample_nilpotents(const Ring& ring, std::size_t count, std::mt19937_64& rng) {
  std::vector<Literal> out;
  for (std::size_t i = 0; i < count; ++i) {
    Literal x(ring->m());
    for (auto& c : x) c = static_cast<std::int64_t>((rng() % ring->q()) * ring->p() % ring->q());
    out.push_back(std::move(x));
  }
  return out;
}

int cmd_search(const Globals& globals, const SearchFlags& flags, std::ostream& out, std::ostream& err) {
  const ConstructionSpec base = spec_from_flags(flags.construct);
  const auto [b_lo, b_hi] = parse_range(flags.b_range);
  const auto [t_lo, t_hi] =
      flags.t_range.empty() ? std::pair<std::int64_t, std::int64_t>{base.k, base.k} : parse_range(flags.t_range);
  const auto [u_lo, u_hi] = parse_range(flags.xi_range);
  const bool perturbs = base.family == Family::root_perturbed || base.family == Family::coeff_perturbed;
  const unsigned samples = perturbs ? std::max(1u, flags.eta_samples) : 1;
  std::mt19937_64 rng(globals.seed);

  std::size_t records = 0, mds = 0, non_mds = 0, errors = 0, gated = 0, agree = 0;
  for (std::int64_t t = t_lo; t <= t_hi; ++t) {
    for (std::int64_t u = u_lo; u <= u_hi; ++u) {
      for (std::int64_t b = b_lo; b <= b_hi; ++b) {
        for (unsigned sample = 0; sample < samples; ++sample) {
          ConstructionSpec spec = base;
          spec.t = static_cast<unsigned>(t);
          spec.b = b;
          spec.xi_exponent = static_cast<std::uint64_t>(u);
          if (perturbs && flags.eta_samples > 0) spec.eta = sample_nilpotents(spec.ring, spec.k, rng);
          if (spec.base_spec) {
            auto inner = std::make_shared<ConstructionSpec>(*spec.base_spec);
            inner->t = spec.t;
            inner->b = b;
            inner->xi_exponent = spec.xi_exponent;
            spec.base_spec = inner;
          }
          Json record;
          try {
            const ConstructionResult r = run_construction(spec, flags.construct.oracle);
            record = make_record(globals, spec, r);
            (r.report.mds ? mds : non_mds)++;
            if (r.condition_holds) {
              ++gated;
              agree += *r.condition_holds == r.report.mds;
            }
          } catch (const Error& e) {
            ++errors;
            record = Json{{"timestamp", globals.now()},
                          {"ring", ring_to_json(spec.ring)},
                          {"spec", spec_to_json(spec)},
                          {"error", e.what()},
                          {"error_code", std::string(error_code_name(e.code()))}};
          }
          ++records;
          out << record.dump() << "\n";
          append_catalog(globals, record);
        }
      }
    }
  }
  err << "search: " << records << " records, " << mds << " mds, " << non_mds << " non-mds, " << errors
      << " errors";
  if (gated) err << ", condition agrees with verdict in " << agree << "/" << gated;
  err << "\n";
  return 0;
}

int cmd_oracle(VerifyFlags flags, std::ostream& out) {
  GRMatrix m;
  Json j = Json::object();
  if (!flags.matrix_file.empty()) {
    m = matrix_from_json(read_json_file(flags.matrix_file));
  } else if (!flags.g.empty()) {
    const SkewPoly g = poly_from_literals(ring_from_flags(flags.ring), parse_element_list(flags.g));
    const unsigned t = flags.t.value_or(static_cast<unsigned>(std::max(g.degree(), 0)));
    m = twisted_chain(g, t);
    j.update(criteria_json(g, t, flags.n));
  } else {
    throw Error(ErrorCode::BadParameter, "oracle needs --matrix FILE or --g POLY");
  }
  auto [d, where] = oracle_distance(m);
  const bool mds = is_mds(m).mds;
  j["min_distance"] = d;
  j["singleton_bound"] = m.rows() + 1;
  j["oracle_ring"] = where;
  j["mds"] = mds;
  out << j.dump(2) << "\n";
  return d == m.rows() + 1 ? 0 : 2;
}

int cmd_reproduce(const Globals& globals, const std::string& golden_path, std::ostream& out) {
  const Json golden = golden_path.empty() ? parse_json_text(embedded_golden(), "embedded golden data")
                                          : read_json_file(golden_path);
  const auto outcomes = run_examples(golden);
  bool all = true;
  Json report = Json::array();
  for (const auto& o : outcomes) {
    all = all && o.pass;
    report.push_back(Json{{"name", o.name}, {"pass", o.pass}, {"diffs", o.diffs}, {"elapsed_ms", o.elapsed_ms}});
  }
  if (globals.json) {
    out << Json{{"examples", report}, {"all_pass", all}}.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) {
      out << (o.pass ? "PASS  " : "FAIL  ") << o.name << "\n";
      for (const auto& d : o.diffs) out << "      " << d << "\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_emit(const Globals& globals, const RingFlags& ring_flags, const std::string& format, const std::string& g_text,
             std::optional<unsigned> t, std::ostream& out) {
  if (format != "companion-recursion") throw Error(ErrorCode::BadParameter, "unknown format '" + format + "'");
  if (g_text.empty()) throw Error(ErrorCode::BadParameter, "emit needs --g");
  const Ring ring = ring_from_flags(ring_flags);
  const SkewPoly g = poly_from_literals(ring, parse_element_list(g_text));
  const GRMatrix c = companion(g);
  const auto k = static_cast<std::size_t>(g.degree());
  const unsigned rounds = t.value_or(static_cast<unsigned>(k));
  std::vector<RingElement> taps;
  for (std::size_t j = 0; j < k; ++j) taps.push_back(c.at(k - 1, j));
  if (globals.json) {
    out << Json{{"format", format},
                {"ring", ring_to_json(ring)},
                {"k", k},
                {"rounds", rounds},
                {"sigma_exponent", ring->e()},
                {"taps", elements_to_json(taps)}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "# state (x_0, ..., x_{k-1}) -> (x_1, ..., x_{k-1}, sum_j sigma^i(tap_j) x_j) in round i\n";
  out << "k " << k << "\nrounds " << rounds << "\nsigma_exponent " << ring->e() << "\n";
  for (std::size_t j = 0; j < k; ++j) out << "tap " << j << " " << element_to_json(taps[j]).dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-recursive MDS matrices over Galois rings via skew polynomials", "grmds"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  std::int64_t timestamp = 0;
  app.add_option("--catalog", globals.catalog, "Append JSON-lines records to this file");
  app.add_option("--seed", globals.seed, "Seed for sampled parameters")->capture_default_str();
  app.add_flag("--json", globals.json, "Machine-readable output");
  auto* ts_opt = app.add_option("--timestamp", timestamp, "Timestamp written into catalog records");

  RingFlags info_flags;
  auto* ring_info = app.add_subcommand("ring-info", "Describe a Galois ring");
  add_ring_flags(ring_info, info_flags);

  ConstructFlags construct_flags;
  auto* construct_cmd = app.add_subcommand("construct", "Build g from a family and verify its chain");
  add_construct_flags(construct_cmd, construct_flags);
  construct_cmd->add_option("--t", construct_flags.t, "Chain length (default k)");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "MDS verdict for a matrix or a chain");
  add_verify_flags(verify_cmd, verify_flags, true);

  SearchFlags search_flags;
  auto* search_cmd = app.add_subcommand("search", "Sweep a family over parameter ranges");
  add_construct_flags(search_cmd, search_flags.construct);
  search_cmd->add_option("--b-range", search_flags.b_range, "Offsets a:b (inclusive)")->capture_default_str();
  search_cmd->add_option("--t-range", search_flags.t_range, "Chain lengths a:b (default k:k)");
  search_cmd->add_option("--xi-range", search_flags.xi_range, "xi exponents a:b")->capture_default_str();
  search_cmd->add_option("--eta-samples", search_flags.eta_samples, "Random nilpotent perturbations per point");

  VerifyFlags oracle_flags;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force minimum distance and weight criteria");
  add_verify_flags(oracle_cmd, oracle_flags, false);

  std::string golden_path;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute the worked examples against golden data");
  reproduce_cmd->add_option("--golden", golden_path, "Golden JSON file (default: built-in copy)");

  RingFlags emit_ring;
  std::string emit_format = "companion-recursion";
  std::string emit_g;
  std::optional<unsigned> emit_t;
  auto* emit_cmd = app.add_subcommand("emit", "Print recursion coefficients for external LFSR tooling");
  add_ring_flags(emit_cmd, emit_ring);
  emit_cmd->add_option("--format", emit_format, "Output format")->capture_default_str();
  emit_cmd->add_option("--g", emit_g, "Polynomial, element list low-to-high");
  emit_cmd->add_option("--t", emit_t, "Number of rounds (default k)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  if (ts_opt->count()) globals.timestamp = timestamp;

  try {
    if (ring_info->parsed()) return cmd_ring_info(globals, info_flags, out);
    if (construct_cmd->parsed()) return cmd_construct(globals, construct_flags, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_flags, out);
    if (search_cmd->parsed()) return cmd_search(globals, search_flags, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_flags, out);
    if (reproduce_cmd->parsed()) return cmd_reproduce(globals, golden_path, out);
    if (emit_cmd->parsed()) return cmd_emit(globals, emit_ring, emit_format, emit_g, emit_t, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace grmds
