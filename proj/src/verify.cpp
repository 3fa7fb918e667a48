#include "sporadic/verify.hpp"

#include <algorithm>
#include <functional>

#include "sporadic/errors.hpp"
#include "sporadic/polytope.hpp"

namespace sporadic::verify {

namespace {

struct Job {
  std::size_t entry;
  std::string representation;
  unsigned depth;
  std::function<std::vector<Integer>(unsigned)> terms;
};

void compare(AgreementRow& row, const std::vector<Integer>& want, const std::vector<Integer>& got) {
  for (unsigned n = 0; n <= row.depth; ++n)
    if (n >= got.size() || want[n] != got[n]) {
      row.agree = false;
      row.first_mismatch = n;
      return;
    }
}

}  // namespace

VerifyReport verify_all(const std::vector<catalog::SequenceEntry>& entries, unsigned depth_2var,
                        unsigned depth_3var) {
  VerifyReport rep;
  rep.depth_2var = depth_2var;
  rep.depth_3var = depth_3var;

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const unsigned entry_depth = e.ct_dim() == 2 ? depth_2var : depth_3var;
    for (const auto& id : e.binomial_formulas)
      jobs.push_back({i, "binomial:" + id, entry_depth,
                      [id](unsigned N) { return catalog::binomial_formula_terms(id, N); }});
    for (const auto& r : e.ct_polys) {
      const unsigned d = r.poly.dim() == 2 ? depth_2var : depth_3var;
      jobs.push_back({i, "ct:" + r.label, d, [&r](unsigned N) {
                        return ct_sequence(r.poly, N, CtOptions{.prune = true});
                      }});
    }
    if (catalog::has_prop12(e.name))
      jobs.push_back({i, "prop12", std::min(entry_depth, kProp12Depth),
                      [name = e.name](unsigned N) { return catalog::prop12_terms(name, N); }});
  }

  // Recurrence prefixes first; a recurrence that fails is itself a finding.
  std::vector<std::vector<Integer>> reference(entries.size());
  std::vector<std::string> reference_error(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    try {
      reference[i] = catalog::recurrence_terms(entries[i].recurrence, std::max(depth_2var, depth_3var));
    } catch (const Error& ex) {
      reference_error[i] = ex.what();
    }
  }

  rep.agreements.resize(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    AgreementRow& row = rep.agreements[j];
    row.entry = entries[job.entry].name;
    row.representation = job.representation;
    row.depth = job.depth;
    if (!reference_error[job.entry].empty()) {
      row.agree = false;
      row.error = "recurrence: " + reference_error[job.entry];
      continue;
    }
    try {
      compare(row, reference[job.entry], job.terms(job.depth));
    } catch (const Error& ex) {
      row.agree = false;
      row.error = ex.what();
    }
  }

  rep.polytopes.resize(entries.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    PolytopeRow& row = rep.polytopes[i];
    row.entry = e.name;
    row.expected_pass = e.polytope_origin_only;
    const auto v = polytope::origin_only_interior(e.polytope_poly());
    row.pass = v.pass;
    row.witnesses = v.witnesses;
    if (!e.polytope_origin_only) {
      auto want = e.expected_witnesses;
      std::sort(want.begin(), want.end());
      row.witnesses_as_expected = want == v.witnesses;
    }
  }

  for (const auto& row : rep.agreements) {
    if (row.agree) continue;
    rep.pass = false;
    if (!rep.first_failure) {
      rep.first_failure = row.entry + " " + row.representation +
                          (row.error.empty() ? " differs from the recurrence at n=" + std::to_string(*row.first_mismatch)
                                             : " failed: " + row.error);
    }
  }
  for (const auto& row : rep.polytopes) {
    if (row.ok()) continue;
    rep.pass = false;
    if (!rep.first_failure)
      rep.first_failure = row.entry + " polytope verdict " + (row.pass ? "pass" : "fail") + ", expected " +
                          (row.expected_pass ? "pass" : "fail with the recorded witnesses");
  }
  return rep;
}

nlohmann::json to_json(const VerifyReport& r) {
  auto agreements = nlohmann::json::array();
  for (const auto& a : r.agreements) {
    nlohmann::json j = {{"entry", a.entry}, {"representation", a.representation}, {"depth", a.depth},
                        {"agree", a.agree}};
    j["first_mismatch"] = a.first_mismatch ? nlohmann::json(*a.first_mismatch) : nlohmann::json(nullptr);
    if (!a.error.empty()) j["error"] = a.error;
    agreements.push_back(j);
  }
  auto polys = nlohmann::json::array();
  for (const auto& p : r.polytopes) {
    auto w = nlohmann::json::array();
    for (const auto& e : p.witnesses) w.push_back(polytope::to_json(e));
    polys.push_back({{"entry", p.entry},
                     {"verdict", p.pass ? "pass" : "fail"},
                     {"expected", p.expected_pass ? "pass" : "fail"},
                     {"witnesses", w},
                     {"ok", p.ok()}});
  }
  nlohmann::json j = {{"depth_2var", r.depth_2var}, {"depth_3var", r.depth_3var}, {"agreements", agreements},
                      {"polytopes", polys},         {"verdict", r.pass ? "pass" : "fail"}};
  j["first_failure"] = r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr);
  return j;
}

}  // namespace sporadic::verify
