// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Exhaustive checks of the tilting-theory statements over a finite carrier:
// the indecomposables up to a dimension bound and every multiplicity-free
// sum of at most n of them. Every failure carries the modules involved as
// module-file text, so it can be replayed with `taulab check`.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "taulab/algebra.hpp"
#include "taulab/enumerate.hpp"
#include "taulab/homological.hpp"
#include "taulab/io.hpp"
#include "taulab/module_ops.hpp"
#include "taulab/ring.hpp"
#include "taulab/tilting.hpp"

namespace taulab {

using Json = nlohmann::ordered_json;

struct SuiteOptions {
  std::size_t max_dim = 4;
  std::size_t ext_bound = kDefaultExtBound;
  bool timing = false;
  std::size_t witness_limit = 5;
};

struct Witness {
  std::string detail;
  std::vector<std::pair<std::string, std::string>> modules;  // role, text
};

struct CheckResult {
  std::string id;
  std::string statement;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::size_t inconclusive = 0;
  std::vector<Witness> witnesses;
  double millis = 0;

  [[nodiscard]] bool passed() const noexcept { return failures == 0; }
  [[nodiscard]] std::string status() const {
    if (failures > 0) {
      return "fail";
    }
    return inconclusive > 0 ? "pass_with_inconclusive" : "pass";
  }
};

/// Predicates of one simple module, the table that makes small examples
/// readable at a glance.
struct SimpleRow {
  std::string vertex;
  bool projective = false;
  bool injective = false;
  std::string pd;
  bool tau_rigid = false;
  bool support_tau_tilting = false;
  bool tau_tilting = false;
  Verdict tilting = Verdict::no;
  Verdict partial_tilting = Verdict::no;
  Verdict self_orthogonal = Verdict::no;
};

struct VerificationReport {
  std::string algebra_text;
  std::size_t characteristic = 0;
  std::size_t algebra_dim = 0;
  std::size_t vertex_count = 0;
  std::size_t max_length = 0;
  SuiteOptions options;
  std::vector<Representation> indecomposables;
  std::size_t candidates = 0;
  std::vector<SupportTauTiltingModule> support_tau_tilting;
  std::vector<SimpleRow> simples;
  std::vector<CheckResult> checks;
  double enumeration_millis = 0;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.passed(); });
  }

  [[nodiscard]] const CheckResult& check(const std::string& id) const {
    for (const auto& c : checks) {
      if (c.id == id) {
        return c;
      }
    }
    throw Error("no check named '" + id + "'");
  }

  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string summary() const;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

/// Everything the suites ask about one candidate T, computed once.
struct Candidate {
  std::vector<std::size_t> summands;
  Representation module;
  Representation tau;
  PdResult pd;
  bool tau_rigid = false;
  bool tau_tilting = false;
  Verdict tilting = Verdict::no;
  std::vector<bool> generates;  // carrier module k lies in Fac T
};

inline std::string candidate_name(const std::vector<std::size_t>& summands) {
  std::string s = "T = ";
  for (std::size_t i = 0; i < summands.size(); ++i) {
    s += (i == 0 ? "M" : " + M") + std::to_string(summands[i]);
  }
  return s;
}

class Recorder {
 public:
  Recorder(CheckResult& r, std::size_t limit) : r_(r), limit_(limit) {}

  void pass() { ++r_.checked; }
  void inconclusive() {
    ++r_.checked;
    ++r_.inconclusive;
  }
  void fail(Witness w) {
    ++r_.checked;
    ++r_.failures;
    if (r_.witnesses.size() < limit_) {
      r_.witnesses.push_back(std::move(w));
    }
  }

 private:
  CheckResult& r_;
  std::size_t limit_;
};

}  // namespace detail

inline VerificationReport verify_theorem_suite(const AlgebraPtr& a,
                                               const SuiteOptions& opts = {}) {
  using detail::Clock;
  VerificationReport rep;
  rep.algebra_text = algebra_to_text(*a);
  rep.characteristic = a->field().characteristic();
  rep.algebra_dim = a->dim();
  rep.vertex_count = a->vertex_count();
  rep.max_length = a->max_length();
  rep.options = opts;
  const std::size_t n = a->vertex_count();
  const std::size_t bound = opts.ext_bound;

  auto t0 = Clock::now();
  rep.indecomposables = enumerate_indecomposables(a, opts.max_dim);
  const auto& ind = rep.indecomposables;
  rep.support_tau_tilting = enumerate_support_tau_tilting(a, ind);
  rep.enumeration_millis = detail::millis_since(t0);

  std::vector<Representation> taus;
  for (const auto& m : ind) {
    taus.push_back(ar_translate(m));
  }

  // Simple modules.
  for (std::size_t v = 0; v < n; ++v) {
    const auto s = Representation::simple(a, v);
    SimpleRow row;
    row.vertex = a->quiver().vertex(v);
    row.projective = is_projective(s);
    row.injective = is_injective(s);
    row.pd = projective_dimension(s, a->max_length()).to_string();
    row.tau_rigid = is_tau_rigid(s);
    row.support_tau_tilting = is_support_tau_tilting(s);
    row.tau_tilting = is_tau_tilting(s);
    row.tilting = is_tilting(s);
    row.partial_tilting = is_partial_tilting(s);
    row.self_orthogonal = self_orthogonal(s, bound);
    rep.simples.push_back(std::move(row));
  }

  // Candidates.
  std::vector<detail::Candidate> cands;
  for (auto& subset : candidate_subsets(ind.size(), n)) {
    std::vector<Representation> parts;
    for (auto i : subset) {
      parts.push_back(ind[i]);
    }
    auto t = direct_sum(parts, a);
    detail::Candidate c{std::move(subset), t, ar_translate(t),
                        projective_dimension(t, a->max_length()), false, false,
                        Verdict::no, {}};
    c.tau_rigid = hom_dim(t, c.tau) == 0;
    c.tau_tilting = c.tau_rigid && summand_type_count(t) == n;
    c.tilting = is_tilting(t);
    for (const auto& m : ind) {
      c.generates.push_back(fac_membership(t, m));
    }
    cands.push_back(std::move(c));
  }
  rep.candidates = cands.size();

  auto text_of = [](const Representation& m) { return m.to_text(); };
  auto carrier_witness = [&](const detail::Candidate& c, std::string what,
                             std::vector<std::pair<std::string, std::string>>
                                 extra = {}) {
    Witness w{detail::candidate_name(c.summands) + ": " + std::move(what),
              {{"T", text_of(c.module)}}};
    for (auto& e : extra) {
      w.modules.push_back(std::move(e));
    }
    return w;
  };
  auto run = [&](std::string id, std::string statement, auto&& body) {
    CheckResult r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    detail::Recorder rec(r, opts.witness_limit);
    const auto start = Clock::now();
    body(rec);
    r.millis = detail::millis_since(start);
    rep.checks.push_back(std::move(r));
  };

  run("tilting_fac_criterion",
      "T is tilting iff |T| = |A| and Ext^i(T, M) = 0 for all i >= 1 and all "
      "carrier M in Fac T",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          const auto fac = is_tilting_via_fac_criterion(c.module, ind, bound);
          const auto lhs = definite(c.tilting);
          const auto rhs = definite(fac.verdict);
          if (!lhs || !rhs) {
            rec.inconclusive();
          } else if (*lhs == *rhs) {
            rec.pass();
          } else {
            std::vector<std::pair<std::string, std::string>> extra;
            std::string d = "is_tilting = " + to_string(c.tilting) +
                            ", criterion = " + to_string(fac.verdict);
            if (fac.witness_module) {
              extra.emplace_back("M", text_of(ind[*fac.witness_module]));
              d += ", Ext^" + std::to_string(*fac.witness_degree) +
                   "(T, M) != 0";
            }
            rec.fail(carrier_witness(c, d, std::move(extra)));
          }
        }
      });

  run("self_orthogonal_tau_tilting",
      "a tau-tilting T of finite projective dimension is tilting iff "
      "Ext^i(T, T) = 0 for all i >= 1",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (!c.tau_tilting || !c.pd.exact) {
            continue;
          }
          const auto so = self_orthogonal(c.module, bound);
          const auto lhs = definite(c.tilting);
          const auto rhs = definite(so);
          if (!lhs || !rhs) {
            rec.inconclusive();
          } else if (*lhs == *rhs) {
            rec.pass();
          } else {
            rec.fail(carrier_witness(
                c, "is_tilting = " + to_string(c.tilting) +
                       ", self_orthogonal = " + to_string(so) +
                       ", pd = " + c.pd.to_string()));
          }
        }
      });

  run("torsion_pair",
      "for tau-rigid T: T is tau-tilting iff (Fac T, Sub tau T) is a torsion "
      "pair",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (!c.tau_rigid) {
            continue;
          }
          std::optional<Witness> broken;
          std::vector<bool> in_sub;
          for (const auto& m : ind) {
            in_sub.push_back(sub_membership(m, c.tau));
          }
          for (std::size_t x = 0; x < ind.size() && !broken; ++x) {
            for (std::size_t y = 0; y < ind.size() && !broken; ++y) {
              if (c.generates[x] && in_sub[y] && hom_dim(ind[x], ind[y]) != 0) {
                broken = carrier_witness(
                    c, "Hom(X, Y) != 0 with X in Fac T, Y in Sub tau T",
                    {{"X", text_of(ind[x])}, {"Y", text_of(ind[y])}});
              }
            }
          }
          for (std::size_t k = 0; k < ind.size() && !broken; ++k) {
            const auto d = torsion_decomposition(c.module, ind[k], c.tau_tilting);
            const bool ok = d.exact &&
                            fac_membership(c.module, d.torsion.module) &&
                            sub_membership(d.torsion_free.module, c.tau);
            if (!ok) {
              broken = carrier_witness(
                  c, "0 -> tM -> M -> fM -> 0 with fM outside Sub tau T",
                  {{"M", text_of(ind[k])}});
            }
          }
          const bool pair = !broken.has_value();
          if (pair == c.tau_tilting) {
            rec.pass();
          } else if (c.tau_tilting) {
            rec.fail(std::move(*broken));
          } else {
            rec.fail(carrier_witness(
                c, "tau-rigid, not tau-tilting, yet the carrier shows a "
                   "torsion pair"));
          }
        }
      });

  run("hom_detects_zero",
      "for tau-tilting T and M with Ext^1(T, M) = 0: Hom(T, M) = 0 iff M = 0",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (!c.tau_tilting) {
            continue;
          }
          rec.pass();  // M = 0
          for (const auto& m : ind) {
            if (ext_dim(c.module, m, 1) != 0) {
              continue;
            }
            if (hom_dim(c.module, m) != 0) {
              rec.pass();
            } else {
              rec.fail(carrier_witness(c, "Ext^1(T, M) = 0 = Hom(T, M)",
                                       {{"M", text_of(m)}}));
            }
          }
        }
      });

  run("approximation_kernel",
      "for tau-rigid T and a minimal right add T-approximation "
      "0 -> Y -> T0 -> X: Hom(Y, tau T) = 0",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (!c.tau_rigid) {
            continue;
          }
          const auto types = summand_types(c.module);
          for (const auto& x : ind) {
            const auto approx = minimal_right_add_approximation(types, x);
            const auto y = kernel(approx.map).module;
            if (approx.minimal && hom_dim(y, c.tau) == 0) {
              rec.pass();
            } else {
              rec.fail(carrier_witness(
                  c, approx.minimal ? "Hom(Y, tau T) != 0"
                                    : "approximation not minimal",
                  {{"X", text_of(x)}, {"Y", text_of(y)}}));
            }
          }
        }
      });

  run("add_resolution",
      "for tau-tilting T and M in Fac T: an add T-resolution with every "
      "kernel in Fac T",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (!c.tau_tilting) {
            continue;
          }
          for (std::size_t k = 0; k < ind.size(); ++k) {
            if (!c.generates[k]) {
              continue;
            }
            const auto res = add_T_resolution(c.module, ind[k], bound);
            if (res.certified()) {
              rec.pass();
            } else {
              rec.fail(carrier_witness(c, "resolution step not certified",
                                       {{"M", text_of(ind[k])}}));
            }
          }
        }
      });

  run("fac_in_perp",
      "for self-orthogonal tau-tilting T of finite projective dimension: "
      "Ext^i(T, M) = 0 for all i >= 1 and M in Fac T",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (!c.tau_tilting || !c.pd.exact) {
            continue;
          }
          if (self_orthogonal(c.module, bound) != Verdict::yes) {
            continue;
          }
          for (std::size_t k = 0; k < ind.size(); ++k) {
            if (!c.generates[k]) {
              continue;
            }
            const auto scan = scan_ext(c.module, ind[k], c.pd, bound);
            if (!scan.first_nonzero) {
              rec.pass();
            } else {
              rec.fail(carrier_witness(
                  c, "Ext^" + std::to_string(*scan.first_nonzero) +
                         "(T, M) != 0",
                  {{"M", text_of(ind[k])}}));
            }
          }
        }
      });

  run("ar_formula",
      "dim Ext^1(M, N) = dim of Hom(N, tau M) modulo maps factoring through "
      "injectives",
      [&](detail::Recorder& rec) {
        for (std::size_t i = 0; i < ind.size(); ++i) {
          for (std::size_t j = 0; j < ind.size(); ++j) {
            const auto e = ext_dim(ind[i], ind[j], 1);
            const auto s = stable_hom_dim(ind[j], taus[i]);
            if (e == s) {
              rec.pass();
            } else {
              rec.fail({"dim Ext^1(M, N) = " + std::to_string(e) +
                            ", stable Hom(N, tau M) = " + std::to_string(s),
                        {{"M", text_of(ind[i])}, {"N", text_of(ind[j])}}});
            }
          }
        }
      });

  run("tilting_is_tau_tilting_pd_le_1",
      "T is tilting iff T is tau-tilting with projective dimension at most 1",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          const auto lhs = definite(c.tilting);
          if (!lhs) {
            rec.inconclusive();
            continue;
          }
          const bool rhs = c.tau_tilting && c.pd.exact && *c.pd.exact <= 1;
          if (*lhs == rhs) {
            rec.pass();
          } else {
            rec.fail(carrier_witness(c, "is_tilting = " +
                                            to_string(c.tilting) +
                                            ", pd = " + c.pd.to_string()));
          }
        }
      });

  run("tau_vanishes_on_projectives",
      "for indecomposable M: tau M = 0 iff M is projective",
      [&](detail::Recorder& rec) {
        for (std::size_t i = 0; i < ind.size(); ++i) {
          if (taus[i].is_zero() == is_projective(ind[i])) {
            rec.pass();
          } else {
            rec.fail({"tau M = 0 disagrees with projectivity",
                      {{"M", text_of(ind[i])}}});
          }
        }
      });

  run("multiplicity_invariance",
      "predicates agree on T and T + T",
      [&](detail::Recorder& rec) {
        for (const auto& c : cands) {
          if (c.summands.size() != 1) {
            continue;
          }
          const auto tt = direct_sum(c.module, c.module);
          const bool same = is_tau_rigid(tt) == c.tau_rigid &&
                            is_tau_tilting(tt) == c.tau_tilting &&
                            is_tilting(tt) == c.tilting &&
                            is_support_tau_tilting(tt) ==
                                is_support_tau_tilting(c.module);
          if (same) {
            rec.pass();
          } else {
            rec.fail(carrier_witness(c, "T and T + T disagree"));
          }
        }
      });

  return rep;
}

inline Json VerificationReport::to_json() const {
  Json j;
  j["tool"] = "taulab";
  j["algebra"] = {{"characteristic", characteristic},
                  {"dim", algebra_dim},
                  {"vertices", vertex_count},
                  {"max_length", max_length},
                  {"text", algebra_text}};
  j["bounds"] = {{"max_dim", options.max_dim},
                 {"ext_bound", options.ext_bound},
                 {"carrier", "indecomposables of total dimension <= max_dim; "
                             "candidates are multiplicity-free sums of at "
                             "most n of them"}};
  Json ind = Json::array();
  for (std::size_t k = 0; k < indecomposables.size(); ++k) {
    ind.push_back({{"name", "M" + std::to_string(k)},
                   {"dims", indecomposables[k].dims()},
                   {"module", indecomposables[k].to_text()}});
  }
  j["indecomposables"] = std::move(ind);
  j["candidates"] = candidates;
  Json stt = Json::array();
  std::size_t tau_tilting_count = 0;
  for (const auto& s : support_tau_tilting) {
    Json summands = Json::array();
    for (auto i : s.summands) {
      summands.push_back("M" + std::to_string(i));
    }
    Json killed = Json::array();
    for (std::size_t v = 0; v < s.witness.killed.size(); ++v) {
      if (s.witness.killed[v]) {
        killed.push_back(s.module.algebra()->quiver().vertex(v));
      }
    }
    stt.push_back({{"summands", std::move(summands)},
                   {"killed_vertices", std::move(killed)},
                   {"tau_tilting", s.tau_tilting},
                   {"zero_module", s.witness.zero_module}});
    tau_tilting_count += s.tau_tilting ? 1 : 0;
  }
  j["support_tau_tilting"] = {
      {"count", support_tau_tilting.size()},
      {"count_without_zero", support_tau_tilting.size() -
                                 (support_tau_tilting.empty() ? 0 : 1)},
      {"tau_tilting", tau_tilting_count},
      {"modules", std::move(stt)}};
  Json simp = Json::array();
  for (const auto& s : simples) {
    simp.push_back({{"vertex", s.vertex},
                    {"projective", s.projective},
                    {"injective", s.injective},
                    {"pd", s.pd},
                    {"tau_rigid", s.tau_rigid},
                    {"support_tau_tilting", s.support_tau_tilting},
                    {"tau_tilting", s.tau_tilting},
                    {"tilting", to_string(s.tilting)},
                    {"partial_tilting", to_string(s.partial_tilting)},
                    {"self_orthogonal", to_string(s.self_orthogonal)}});
  }
  j["simples"] = std::move(simp);
  Json cs = Json::array();
  std::size_t failures = 0;
  for (const auto& c : checks) {
    Json w = Json::array();
    for (const auto& x : c.witnesses) {
      Json mods = Json::object();
      for (const auto& [role, text] : x.modules) {
        mods[role] = text;
      }
      w.push_back({{"detail", x.detail}, {"modules", std::move(mods)}});
    }
    Json entry = {{"id", c.id},
                  {"statement", c.statement},
                  {"status", c.status()},
                  {"checked", c.checked},
                  {"failures", c.failures},
                  {"inconclusive", c.inconclusive},
                  {"witnesses", std::move(w)}};
    if (options.timing) {
      entry["millis"] = c.millis;
    }
    cs.push_back(std::move(entry));
    failures += c.failures;
  }
  j["checks"] = std::move(cs);
  j["summary"] = {{"status", failures == 0 ? "pass" : "fail"},
                  {"failures", failures}};
  if (options.timing) {
    j["enumeration_millis"] = enumeration_millis;
  }
  return j;
}

inline std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "indecomposables: " << indecomposables.size()
     << "  candidates: " << candidates
     << "  support tau-tilting: " << support_tau_tilting.size()
     << " (including 0)\n";
  for (const auto& c : checks) {
    os << c.status() << "  " << c.id << "  checked " << c.checked;
    if (c.failures > 0) {
      os << ", failures " << c.failures;
    }
    if (c.inconclusive > 0) {
      os << ", inconclusive " << c.inconclusive;
    }
    os << '\n';
  }
  os << (passed() ? "all checks pass" : "THEOREM CHECK FAILED") << '\n';
  return os.str();
}

}  // namespace taulab
