#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sporadic/catalog.hpp"
#include "sporadic/congruence.hpp"
#include "sporadic/errors.hpp"
#include "sporadic/format.hpp"
#include "sporadic/polytope.hpp"
#include "sporadic/search.hpp"
#include "sporadic/verify.hpp"

#ifndef SPORADIC_VERSION
#define SPORADIC_VERSION "0.0.0"
#endif

namespace sporadic::cli {

namespace {

using nlohmann::json;

// What a subcommand hands back for the manifest and the exit code.
struct Result {
  int exit_code = 0;
  json config = json::object();
  json outcome = json::object();
};

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_decimal(v[i]);
  return s;
}

std::string point_text(const ExponentVector& e) {
  std::string s = "(";
  for (int i = 0; i < e.dim(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

// ------------------------------------------------------------------ terms

struct TermsArgs {
  std::string name;
  unsigned n = 0;
  std::string rep = "recurrence";
  std::string ct_label;
};

const catalog::CtRepresentation& pick_ct(const catalog::SequenceEntry& e, const std::string& label) {
  if (label.empty()) return e.ct_polys.front();
  for (const auto& r : e.ct_polys)
    if (r.label == label) return r;
  throw UnknownName(e.name + " ct representation " + label);
}

Result cmd_terms(const TermsArgs& a, std::ostream& out, bool pretty) {
  const auto& e = catalog::get(a.name);
  Result res;
  res.config = {{"name", e.name}, {"N", a.n}, {"representation", a.rep}, {"ct_label", a.ct_label}};
  const CtOptions ct_options{.prune = true};
  json j = {{"name", e.name}, {"N", a.n}, {"representation", a.rep}};

  if (a.rep == "all") {
    const auto reference = catalog::recurrence_terms(e.recurrence, a.n);
    json by = json::object();
    bool agree = true;
    auto add = [&](const std::string& key, const std::vector<Integer>& v) {
      by[key] = integers_to_json(v);
      agree = agree && v == reference;
    };
    add("recurrence", reference);
    for (const auto& id : e.binomial_formulas) add("binomial:" + id, catalog::binomial_formula_terms(id, a.n));
    for (const auto& r : e.ct_polys) add("ct:" + r.label, ct_sequence(r.poly, a.n, ct_options));
    if (catalog::has_prop12(e.name)) add("prop12", catalog::prop12_terms(e.name, a.n));
    j["terms"] = integers_to_json(reference);
    j["by_representation"] = by;
    j["agreement"] = agree;
    res.outcome = {{"agreement", agree}};
    res.exit_code = agree ? 0 : 1;
    if (pretty) {
      for (const auto& [key, v] : by.items()) out << key << ": " << v.dump() << '\n';
      out << "agreement: " << (agree ? "yes" : "NO") << '\n';
      return res;
    }
    out << j.dump() << '\n';
    return res;
  }

  std::vector<Integer> terms;
  if (a.rep == "recurrence") terms = catalog::recurrence_terms(e.recurrence, a.n);
  else if (a.rep == "binomial") terms = catalog::binomial_terms(e.name, a.n);
  else if (a.rep == "ct") terms = ct_sequence(pick_ct(e, a.ct_label).poly, a.n, ct_options);
  else if (a.rep == "prop12") {
    if (!catalog::has_prop12(e.name)) throw DomainError(e.name + " has no multinomial-sum formula");
    terms = catalog::prop12_terms(e.name, a.n);
  } else {
    throw DomainError("unknown representation " + a.rep);
  }
  j["terms"] = integers_to_json(terms);
  if (pretty) out << e.name << ": " << join(terms) << '\n';
  else out << j.dump() << '\n';
  return res;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  unsigned depth2 = verify::kDefaultDepth2;
  unsigned depth3 = verify::kDefaultDepth3;
  std::string inject_fault;
};

Result cmd_verify(const VerifyArgs& a, std::ostream& out, bool pretty) {
  Result res;
  res.config = {{"depth_2var", a.depth2}, {"depth_3var", a.depth3}, {"inject_fault", a.inject_fault}};
  std::vector<catalog::SequenceEntry> entries = catalog::entries();
  if (!a.inject_fault.empty()) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == a.inject_fault; });
    if (it == entries.end()) throw UnknownName(a.inject_fault);
    it->recurrence.params.front() += 1;
  }
  const auto rep = verify::verify_all(entries, a.depth2, a.depth3);
  json j = verify::to_json(rep);
  res.outcome = {{"verdict", j["verdict"]}, {"first_failure", j["first_failure"]}};
  res.exit_code = rep.pass ? 0 : 1;
  if (!pretty) {
    out << j.dump() << '\n';
    return res;
  }
  for (const auto& r : rep.agreements)
    out << (r.agree ? "ok   " : "FAIL ") << r.entry << ' ' << r.representation << " n<=" << r.depth << '\n';
  for (const auto& p : rep.polytopes)
    out << (p.ok() ? "ok   " : "FAIL ") << p.entry << " polytope " << (p.pass ? "pass" : "fail") << '\n';
  out << "verdict: " << (rep.pass ? "pass" : "fail");
  if (rep.first_failure) out << " (" << *rep.first_failure << ')';
  out << '\n';
  return res;
}

// ------------------------------------------------------------------ congruence

struct CongruenceArgs {
  std::string family;
  std::string sequence;
  std::string source = "recurrence";
  std::string expr;
  int dim = 0;
  int r = 1;
  std::vector<unsigned long> primes;
  unsigned k_max = 2;
  std::optional<unsigned> n_max;
  unsigned s_max = 2;
  unsigned m_max = 2;
  std::vector<int> shift;
  unsigned n = 1;
  unsigned r_max = 1;
};

// Smallest dimension covering the variables used in an expression, at least 2.
int infer_dim(const std::string& text) {
  int d = 2;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'z') d = std::max(d, 3);
    if (c == 'w') d = std::max(d, 4);
    if (c == 'x' && i + 1 < text.size() && text[i + 1] >= '1' && text[i + 1] <= '4') d = std::max(d, text[i + 1] - '0');
  }
  return d;
}

LaurentPoly expression_poly(const std::string& text, int dim) { return parse_poly(text, dim ? dim : infer_dim(text)); }

Result cmd_congruence(CongruenceArgs a, std::ostream& out, bool pretty) {
  Result res;
  const std::string& fam = a.family;
  const catalog::SequenceEntry* entry = a.sequence.empty() ? nullptr : &catalog::get(a.sequence);

  auto default_n = [&](unsigned v) { return a.n_max.value_or(v); };
  if (a.primes.empty()) {
    if (fam == "gauss") {
      for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        if (p >= static_cast<unsigned long>(a.r) + 1) a.primes.push_back(p);
    } else if (fam == "jacobsthal" || fam == "lower_binom") {
      a.primes = {3, 5, 7};
    } else {
      a.primes = {2, 3, 5};
    }
  }
  res.config = {{"family", fam}, {"sequence", a.sequence}, {"source", a.source}, {"expr", a.expr},
                {"r", a.r},      {"p", a.primes},          {"k_max", a.k_max},   {"s_max", a.s_max},
                {"m_max", a.m_max}};

  std::vector<congruence::CongruenceReport> reports;
  bool asserted = false;

  if (fam == "jacobsthal" || fam == "lower_binom") {
    const long n_max = default_n(60);
    res.config["n_max"] = n_max;
    reports.push_back(fam == "jacobsthal" ? congruence::jacobsthal_grid(n_max, a.primes)
                                          : congruence::lower_binom_grid(n_max, a.primes));
    asserted = true;
  } else if (fam == "shifted_gauss") {
    LaurentPoly lambda = entry ? entry->polytope_poly() : expression_poly(a.expr, a.dim);
    ExponentVector shift(lambda.dim());
    if (!a.shift.empty()) {
      if (a.shift.size() != static_cast<std::size_t>(lambda.dim())) throw DimensionMismatch("--shift has wrong length");
      for (int i = 0; i < lambda.dim(); ++i) shift[i] = a.shift[static_cast<std::size_t>(i)];
    }
    res.config["shift"] = polytope::to_json(shift);
    res.config["n"] = a.n;
    res.config["r_max"] = a.r_max;
    reports.push_back(congruence::shifted_gauss_check(lambda, shift, a.n, a.primes, a.r_max, a.r));
  } else {
    std::optional<congruence::SequenceSource> src;
    if (!a.expr.empty()) {
      src.emplace(congruence::SequenceSource::constant_term(expression_poly(a.expr, a.dim), "CT(" + a.expr + ")"));
    } else if (!entry) {
      throw DomainError("congruence " + fam + " needs a sequence name or --expr");
    } else if (a.source == "recurrence") {
      src.emplace(congruence::SequenceSource::entry(entry->name));
    } else if (a.source == "binomial") {
      src.emplace(congruence::SequenceSource::binomial(entry->name));
    } else if (a.source == "ct") {
      src.emplace(congruence::SequenceSource::constant_term(entry->ct_polys.front().poly, entry->name + ":ct"));
    } else {
      throw DomainError("unknown source " + a.source);
    }
    const bool covered = entry && entry->sporadic && entry->polytope_origin_only;
    if (fam == "gauss") {
      const unsigned n_max = default_n(2);
      res.config["n_max"] = n_max;
      reports.push_back(congruence::gauss_check(*src, a.r, a.primes, a.k_max, n_max));
      asserted = a.r == 1 || (entry && a.r <= entry->expected_gauss_order);
    } else if (fam == "lucas") {
      const unsigned n_max = default_n(200);
      res.config["n_max"] = n_max;
      for (unsigned long p : a.primes) reports.push_back(congruence::lucas_check(*src, p, n_max));
      asserted = entry && entry->sporadic;
    } else if (fam == "d3") {
      const unsigned n_max = default_n(8);
      res.config["n_max"] = n_max;
      for (unsigned long p : a.primes) reports.push_back(congruence::d3_check(*src, p, a.s_max, a.m_max, n_max));
      asserted = covered;
    } else if (fam == "valuation") {
      const unsigned n_max = default_n(60);
      res.config["n_max"] = n_max;
      for (unsigned long p : a.primes) reports.push_back(congruence::valuation_bound_check(*src, p, n_max));
      asserted = covered;
    } else {
      throw DomainError("unknown congruence family " + fam);
    }
  }

  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  json jr = json::array();
  for (const auto& r : reports) jr.push_back(congruence::to_json(r));
  json j = {{"family", fam},
            {"sequence", a.sequence.empty() ? a.expr : a.sequence},
            {"asserted", asserted},
            {"reports", jr},
            {"verdict", pass ? "pass" : "fail"}};
  res.outcome = {{"verdict", j["verdict"]}, {"asserted", asserted}};
  res.exit_code = asserted && !pass ? 1 : 0;
  if (!pretty) {
    out << j.dump() << '\n';
    return res;
  }
  for (const auto& r : jr) {
    out << r["family"].get<std::string>() << ' ' << r["sequence"].get<std::string>() << ' '
        << r["tested_range"].dump() << " checks=" << r["checks"].get<std::size_t>() << ' '
        << r["verdict"].get<std::string>();
    if (!r["counterexample"].is_null()) out << " counterexample=" << r["counterexample"]["at"].dump();
    out << '\n';
  }
  out << "verdict: " << (pass ? "pass" : "fail") << (asserted ? "" : " (not asserted)") << '\n';
  return res;
}

// ------------------------------------------------------------------ polytope

struct PolytopeArgs {
  std::string target;
  int dim = 0;
  bool all = false;
};

Result cmd_polytope(const PolytopeArgs& a, std::ostream& out, bool pretty) {
  Result res;
  res.config = {{"target", a.target}, {"dim", a.dim}, {"all", a.all}};
  if (a.all) {
    json rows = json::array();
    int sporadic_pass = 0, sporadic_fail = 0;
    bool ok = true;
    for (const auto& e : catalog::entries()) {
      const auto v = polytope::origin_only_interior(e.polytope_poly());
      auto want = e.expected_witnesses;
      std::sort(want.begin(), want.end());
      const bool row_ok = v.pass == e.polytope_origin_only && (v.pass || want == v.witnesses);
      ok = ok && row_ok;
      if (e.sporadic) (v.pass ? sporadic_pass : sporadic_fail)++;
      json w = json::array();
      for (const auto& p : v.witnesses) w.push_back(polytope::to_json(p));
      rows.push_back({{"name", e.name},
                      {"polynomial", e.ct_polys[e.polytope_index].label},
                      {"verdict", v.pass ? "pass" : "fail"},
                      {"expected", e.polytope_origin_only ? "pass" : "fail"},
                      {"vertices", v.polytope.vertices.size()},
                      {"witnesses", w}});
      if (pretty) {
        out << e.name << '\t' << (v.pass ? "pass" : "fail") << '\t' << v.polytope.vertices.size() << " vertices";
        for (const auto& p : v.witnesses) out << ' ' << point_text(p);
        out << '\n';
      }
    }
    json summary = {{"sporadic_pass", sporadic_pass}, {"sporadic_fail", sporadic_fail}, {"as_expected", ok}};
    res.outcome = summary;
    res.exit_code = ok ? 0 : 1;
    if (pretty) out << "sporadic: " << sporadic_pass << " pass, " << sporadic_fail << " fail\n";
    else out << json{{"rows", rows}, {"summary", summary}}.dump() << '\n';
    return res;
  }

  if (a.target.empty()) throw DomainError("polytope check needs a name, an expression, or --all");
  const catalog::SequenceEntry* entry = nullptr;
  for (const auto& e : catalog::entries())
    if (e.name == a.target) entry = &e;
  const LaurentPoly poly = entry ? entry->polytope_poly() : expression_poly(a.target, a.dim);
  const auto v = polytope::origin_only_interior(poly);
  json j = polytope::to_json(v);
  j["target"] = a.target;
  j["polynomial"] = format_poly(poly);
  if (entry) {
    j["expected"] = entry->polytope_origin_only ? "pass" : "fail";
    res.exit_code = v.pass == entry->polytope_origin_only ? 0 : 1;
  }
  res.outcome = {{"verdict", j["verdict"]}};
  if (!pretty) {
    out << j.dump() << '\n';
    return res;
  }
  out << a.target << ": " << (v.pass ? "pass" : "fail") << '\n' << "vertices:";
  for (const auto& p : v.polytope.vertices) out << ' ' << point_text(p);
  out << "\nwitnesses:";
  for (const auto& p : v.witnesses) out << ' ' << point_text(p);
  out << '\n';
  return res;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  std::optional<int> dim;
  std::vector<std::string> targets;
  std::optional<int> max_factors;
  std::string support_preset = "linear";
  std::optional<unsigned> prefix;
  std::optional<int> denominator_power;
  std::optional<std::size_t> max_candidates;
  std::optional<std::size_t> shard_size;
  std::string checkpoint;
  std::string results;
};

std::size_t read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  long long last = -1;
  if (in && (in >> last) && last >= 0) return static_cast<std::size_t>(last) + 1;
  return 0;
}

void write_checkpoint(const std::string& path, std::size_t last) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream o(tmp, std::ios::trunc);
    o << last << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Result cmd_search(const SearchArgs& a, std::ostream& out, bool pretty) {
  auto cfg = search::preset(a.support_preset);
  if (a.dim && *a.dim != cfg.dim)
    throw DomainError("--dim " + std::to_string(*a.dim) + " does not match preset " + a.support_preset);
  if (a.max_factors) cfg.max_factors = *a.max_factors;
  if (a.prefix) cfg.prefix_len = *a.prefix;
  if (a.denominator_power) cfg.denominator_power = *a.denominator_power;
  if (a.max_candidates) cfg.max_candidates = *a.max_candidates;
  if (a.shard_size) cfg.shard_size = *a.shard_size;
  std::vector<std::string> names;
  for (const auto& t : a.targets) {
    if (t == "all") {
      for (const auto& n : catalog::list()) names.push_back(n);
    } else {
      names.push_back(t);
    }
  }
  if (names.empty()) throw DomainError("search needs at least one --target");
  for (const auto& n : names) cfg.targets.push_back(search::catalog_target(n, cfg.prefix_len));

  Result res;
  res.config = search::config_to_json(cfg);
  res.config["checkpoint"] = a.checkpoint;
  res.config["results"] = a.results;

  search::RunOptions opts;
  if (!a.checkpoint.empty()) {
    if (a.results.empty()) throw DomainError("--checkpoint needs --results");
    opts.first_shard = read_checkpoint(a.checkpoint);
    if (opts.first_shard == 0) std::ofstream(a.results, std::ios::trunc).flush();
    opts.on_batch = [&](std::size_t last, const std::vector<search::Candidate>& batch) {
      {
        std::ofstream o(a.results, std::ios::app);
        for (const auto& c : batch) o << search::to_json(c).dump() << '\n';
      }
      write_checkpoint(a.checkpoint, last);
    };
  }
  const auto r = search::search_matches(cfg, opts);

  std::vector<json> lines;
  if (!a.checkpoint.empty()) {
    // Matches from earlier runs live in the results file.
    std::ifstream in(a.results);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) lines.push_back(json::parse(line));
    std::sort(lines.begin(), lines.end(), [](const json& x, const json& y) {
      return std::tie(x["canonical_key"].get_ref<const std::string&>(), x["matched_target"].get_ref<const std::string&>()) <
             std::tie(y["canonical_key"].get_ref<const std::string&>(), y["matched_target"].get_ref<const std::string&>());
    });
  } else {
    for (const auto& c : r.matches) lines.push_back(search::to_json(c));
  }
  for (const auto& l : lines) {
    if (pretty) out << l["matched_target"].get<std::string>() << '\t' << l["poly"].get<std::string>() << '\n';
    else out << l.dump() << '\n';
  }
  res.outcome = {{"matches", lines.size()},   {"enumerated", r.enumerated},
                 {"shards", r.shards},        {"first_shard", r.first_shard},
                 {"evaluated", r.evaluated},  {"over_budget", r.over_budget},
                 {"reverify_rejected", r.reverify_rejected}, {"partial", r.partial}};
  return res;
}

// ------------------------------------------------------------------ catalog

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

Result cmd_catalog_export(const std::string& format, std::ostream& out, bool pretty) {
  Result res;
  res.config = {{"format", format}};
  res.outcome = {{"entries", catalog::entries().size()}};
  if (format == "json") {
    out << (pretty ? catalog::export_json().dump(2) : catalog::export_json().dump()) << '\n';
  } else if (format == "csv") {
    out << "name,display,family,params,binomial_formula,ct_polys,expected_gauss_order,gauss_order_status,"
           "polytope_origin_only,verified_status,sporadic\n";
    for (const auto& e : catalog::entries()) {
      std::string params, polys;
      for (std::size_t i = 0; i < e.recurrence.params.size(); ++i)
        params += (i ? " " : "") + std::to_string(e.recurrence.params[i]);
      for (std::size_t i = 0; i < e.ct_polys.size(); ++i)
        polys += (i ? "; " : "") + e.ct_polys[i].label + "=" + e.ct_polys[i].text;
      out << csv_field(e.name) << ',' << csv_field(e.display) << ',' << family_name(e.recurrence.family) << ','
          << params << ',' << csv_field(e.binomial_formulas.front()) << ',' << csv_field(polys) << ','
          << e.expected_gauss_order << ',' << order_status_name(e.gauss_order_status) << ','
          << (e.polytope_origin_only ? "true" : "false") << ',' << status_name(e.verified_status) << ','
          << (e.sporadic ? "true" : "false") << '\n';
    }
  } else {
    throw DomainError("unknown export format " + format);
  }
  return res;
}

Result cmd_catalog_list(std::ostream& out, bool pretty) {
  Result res;
  res.outcome = {{"entries", catalog::entries().size()}};
  if (pretty) {
    for (const auto& e : catalog::entries())
      out << e.name << '\t' << family_name(e.recurrence.family) << '\t' << e.other_names << '\n';
    return res;
  }
  out << json(catalog::list()).dump() << '\n';
  return res;
}

std::string error_kind(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const UnknownName*>(&e)) return "UnknownName";
  if (dynamic_cast<const ResourceError*>(&e)) return "ResourceError";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const NonIntegral*>(&e)) return "NonIntegral";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  return "Error";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Apery-like sequences: catalog, constant terms, congruences, Newton polytopes, search", "sporadic"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  std::string manifest_path;
  long seed = 0;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");
  app.add_option("--manifest", manifest_path, "Write the run manifest to this file instead of stderr");
  app.add_option("--seed", seed, "Fixture shuffling seed; no algorithm is randomized");

  std::function<Result()> action;
  std::string command;

  TermsArgs terms;
  auto* t = app.add_subcommand("terms", "Print u_0..u_N of a catalog sequence");
  t->add_option("name", terms.name)->required();
  t->add_option("N", terms.n)->required();
  t->add_option("--rep", terms.rep, "recurrence, binomial, ct, prop12 or all")
      ->check(CLI::IsMember({"recurrence", "binomial", "ct", "prop12", "all"}));
  t->add_option("--ct-label", terms.ct_label, "Which constant-term representation (default: the first)");
  t->callback([&] {
    command = "terms";
    action = [&] { return cmd_terms(terms, out, pretty); };
  });

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Representation agreement and polytope verdicts for the whole catalog");
  v->add_option("--depth2", ver.depth2, "Depth for two-variable entries");
  v->add_option("--depth3", ver.depth3, "Depth for three-variable entries");
  v->add_option("--inject-fault", ver.inject_fault, "Corrupt this entry's recurrence before verifying");
  v->callback([&] {
    command = "verify";
    action = [&] { return cmd_verify(ver, out, pretty); };
  });

  CongruenceArgs cg;
  auto* c = app.add_subcommand("congruence", "Finite-range congruence checks");
  c->add_option("family", cg.family, "gauss, lucas, d3, valuation, jacobsthal, lower_binom, shifted_gauss")
      ->required()
      ->check(CLI::IsMember({"gauss", "lucas", "d3", "valuation", "jacobsthal", "lower_binom", "shifted_gauss"}));
  c->add_option("sequence", cg.sequence, "Catalog name");
  c->add_option("--source", cg.source, "recurrence, binomial or ct")
      ->check(CLI::IsMember({"recurrence", "binomial", "ct"}));
  c->add_option("--expr", cg.expr, "Use CT(f^n) of this Laurent polynomial instead of a catalog entry");
  c->add_option("--dim", cg.dim, "Dimension for --expr (default: inferred)");
  c->add_option("--r", cg.r, "Gauss order, or k for shifted_gauss");
  c->add_option("--p", cg.primes, "Primes")->delimiter(',');
  c->add_option("--kmax", cg.k_max);
  c->add_option("--nmax", cg.n_max);
  c->add_option("--smax", cg.s_max);
  c->add_option("--mmax", cg.m_max);
  c->add_option("--shift", cg.shift, "Exponent shift for shifted_gauss")->delimiter(',');
  c->add_option("--n", cg.n, "n for shifted_gauss");
  c->add_option("--rmax", cg.r_max, "r_max for shifted_gauss");
  c->callback([&] {
    command = "congruence";
    action = [&] { return cmd_congruence(cg, out, pretty); };
  });

  PolytopeArgs pa;
  auto* p = app.add_subcommand("polytope", "Newton polytope checks");
  p->require_subcommand(1);
  auto* pc = p->add_subcommand("check", "Is the origin the only interior integral point?");
  pc->add_option("target", pa.target, "Catalog name or Laurent polynomial");
  pc->add_option("--dim", pa.dim, "Dimension for an expression (default: inferred)");
  pc->add_flag("--all", pa.all, "Every catalog entry");
  pc->callback([&] {
    command = "polytope check";
    action = [&] { return cmd_polytope(pa, out, pretty); };
  });

  SearchArgs sa;
  auto* s = app.add_subcommand("search", "Enumerate good Laurent polynomials matching target prefixes");
  s->add_option("--dim", sa.dim);
  s->add_option("--target", sa.targets, "Catalog name (repeatable, or 'all')")->required();
  s->add_option("--max-factors", sa.max_factors);
  s->add_option("--support-preset", sa.support_preset)->check(CLI::IsMember(search::preset_names()));
  s->add_option("--prefix", sa.prefix, "Match depth");
  s->add_option("--denominator-power", sa.denominator_power);
  s->add_option("--max-candidates", sa.max_candidates);
  s->add_option("--shard-size", sa.shard_size);
  s->add_option("--checkpoint", sa.checkpoint, "Plain-text file holding the last completed shard id");
  s->add_option("--results", sa.results, "JSON-lines file accumulating matches across resumed runs");
  s->callback([&] {
    command = "search";
    action = [&] { return cmd_search(sa, out, pretty); };
  });

  std::string format = "json";
  auto* cat = app.add_subcommand("catalog", "Catalog export and listing");
  cat->require_subcommand(1);
  auto* ce = cat->add_subcommand("export", "Export every entry");
  ce->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  ce->callback([&] {
    command = "catalog export";
    action = [&] { return cmd_catalog_export(format, out, pretty); };
  });
  auto* cl = cat->add_subcommand("list", "List entry names");
  cl->callback([&] {
    command = "catalog list";
    action = [&] { return cmd_catalog_list(out, pretty); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Result res;
  json error = nullptr;
  try {
    res = action();
  } catch (const Error& e) {
    res.exit_code = 2;
    error = {{"type", error_kind(e)}, {"message", e.what()}};
    err << json{{"error", error}}.dump() << '\n';
  }

  json manifest = {{"command", command},
                   {"config", res.config},
                   {"global", {{"pretty", pretty}, {"seed", seed}}},
                   {"versions", {{"artifact", SPORADIC_VERSION}, {"catalog_checksum", catalog::checksum()}}},
                   {"outcome", res.outcome},
                   {"error", error},
                   {"exit_code", res.exit_code}};
  if (manifest_path.empty()) {
    err << manifest.dump() << '\n';
  } else {
    std::ofstream m(manifest_path, std::ios::trunc);
    m << manifest.dump(2) << '\n';
  }
  return res.exit_code;
}

}  // namespace sporadic::cli
