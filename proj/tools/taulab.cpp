// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 a theorem check failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taulab/taulab.hpp"

namespace {

using namespace taulab;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct Options {
  std::string algebra;
  std::string module;
  std::string other;
  std::size_t max_length = kDefaultMaxLength;
  std::size_t degree = 1;
  std::size_t length = 4;
  std::size_t max_dim = 4;
  std::size_t ext_bound = kDefaultExtBound;
  std::string props;
  std::string report;
  bool timing = false;
  bool verbose = false;
};

std::string dims_string(const Representation& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    s += (v == 0 ? "" : ",") + std::to_string(m.dim(v));
  }
  return s + ")";
}

std::string tops_string(const AlgebraPtr& a,
                        const std::vector<std::size_t>& tops) {
  if (tops.empty()) {
    return "0";
  }
  std::string s;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    s += (i == 0 ? "P(" : " + P(") + a->quiver().vertex(tops[i]) + ")";
  }
  return s;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

int run_build(const Options& o) {
  const auto a = load_algebra(o.algebra, o.max_length);
  std::cout << "field: F_" << a->field().characteristic() << '\n'
            << "vertices: " << a->vertex_count() << '\n'
            << "arrows: " << a->quiver().arrow_count() << '\n'
            << "dim: " << a->dim() << '\n'
            << "basis:";
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::cout << ' ' << a->basis_name(i);
  }
  std::cout << '\n';
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    std::cout << "P(" << a->quiver().vertex(v) << ") dims "
              << dims_string(projective(a, v)) << "  I("
              << a->quiver().vertex(v) << ") dims "
              << dims_string(injective(a, v)) << '\n';
  }
  return kOk;
}

int run_compute(const std::string& what, const Options& o) {
  const auto a = load_algebra(o.algebra, o.max_length);
  if (o.module.empty()) {
    throw ParseError(0, "compute " + what + " needs --module");
  }
  const auto m = load_module(a, o.module);
  auto need_other = [&]() {
    if (o.other.empty()) {
      throw ParseError(0, "compute " + what + " needs --other");
    }
    return load_module(a, o.other);
  };
  if (what == "tau") {
    const auto t = ar_translate(m);
    std::cout << "# tau of the module, dims " << dims_string(t) << '\n'
              << t.to_text();
  } else if (what == "ext") {
    const auto n = need_other();
    std::cout << ext_dim(m, n, o.degree) << '\n';
  } else if (what == "pd") {
    std::cout << projective_dimension(m, o.max_length).to_string() << '\n';
  } else if (what == "resolution") {
    const auto r = projective_resolution(m, o.length);
    for (std::size_t i = 0; i < r.length(); ++i) {
      std::cout << "P" << i << " = " << tops_string(a, r.tops[i]) << "  dims "
                << dims_string(r.terms[i]) << '\n';
    }
    std::cout << (r.terminated ? "terminated" : "truncated") << " after "
              << r.length() << " terms\n";
    std::cout << "pd: " << projective_dimension(m, o.max_length).to_string()
              << '\n';
  } else if (what == "trace") {
    const auto x = need_other();
    const auto t = trace_submodule(m, x);
    std::cout << "# trace of the first module in the second, dims "
              << dims_string(t.module) << '\n'
              << t.module.to_text();
  } else if (what == "approx") {
    const auto x = need_other();
    const auto ap = minimal_right_add_approximation(m, x);
    for (std::size_t i = 0; i < ap.types.size(); ++i) {
      std::cout << "# type T" << i << " dims " << dims_string(ap.types[i])
                << '\n';
    }
    const auto mult = ap.multiplicities();
    std::cout << "# source:";
    bool any = false;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] > 0) {
        std::cout << (any ? " + " : " ") << "T" << i;
        if (mult[i] > 1) {
          std::cout << '^' << mult[i];
        }
        any = true;
      }
    }
    std::cout << (any ? "" : " 0") << '\n'
              << "# minimal: " << bool_string(ap.minimal) << '\n';
    const auto y = kernel(ap.map).module;
    std::cout << "# kernel, dims " << dims_string(y) << '\n' << y.to_text();
  } else {
    throw ParseError(0, "unknown computation '" + what + "'");
  }
  return kOk;
}

int run_check(const Options& o) {
  const auto a = load_algebra(o.algebra, o.max_length);
  if (o.module.empty()) {
    throw ParseError(0, "check needs --module");
  }
  const auto m = load_module(a, o.module);
  static const std::vector<std::string> all = {
      "tau-rigid", "tau-tilting", "support-tau-tilting", "tilting",
      "partial-tilting", "self-orthogonal", "injective", "projective", "pd"};
  std::vector<std::string> props;
  if (o.props.empty()) {
    props = all;
  } else {
    std::stringstream ss(o.props);
    std::string p;
    while (std::getline(ss, p, ',')) {
      if (std::find(all.begin(), all.end(), p) == all.end()) {
        throw ParseError(0, "unknown property '" + p + "'");
      }
      props.push_back(p);
    }
  }
  for (const auto& p : props) {
    std::string value;
    if (p == "tau-rigid") {
      value = bool_string(is_tau_rigid(m));
    } else if (p == "tau-tilting") {
      value = bool_string(is_tau_tilting(m));
    } else if (p == "support-tau-tilting") {
      value = bool_string(is_support_tau_tilting(m));
    } else if (p == "tilting") {
      value = to_string(is_tilting(m));
    } else if (p == "partial-tilting") {
      value = to_string(is_partial_tilting(m));
    } else if (p == "self-orthogonal") {
      value = to_string(self_orthogonal(m, o.ext_bound));
    } else if (p == "injective") {
      value = bool_string(is_injective(m));
    } else if (p == "projective") {
      value = bool_string(is_projective(m));
    } else {
      value = projective_dimension(m, o.max_length).to_string();
    }
    std::cout << p << ": " << value << '\n';
  }
  return kOk;
}

int run_enumerate(const std::string& what, const Options& o) {
  const auto a = load_algebra(o.algebra, o.max_length);
  const auto ind = enumerate_indecomposables(a, o.max_dim);
  if (what == "indecomposables") {
    std::cout << ind.size() << " indecomposables of total dimension <= "
              << o.max_dim << '\n';
    for (std::size_t k = 0; k < ind.size(); ++k) {
      std::cout << "M" << k << "  dims " << dims_string(ind[k]) << '\n';
      if (o.verbose) {
        std::cout << ind[k].to_text();
      }
    }
    return kOk;
  }
  if (what != "stau-tilting") {
    throw ParseError(0, "unknown enumeration '" + what + "'");
  }
  const auto list = enumerate_support_tau_tilting(a, ind);
  std::size_t tt = 0;
  for (const auto& s : list) {
    tt += s.tau_tilting ? 1 : 0;
  }
  std::cout << list.size() << " support tau-tilting modules (including 0), "
            << tt << " tau-tilting, carrier bound " << o.max_dim << '\n';
  for (const auto& s : list) {
    std::string name;
    for (std::size_t i = 0; i < s.summands.size(); ++i) {
      name += (i == 0 ? "M" : " + M") + std::to_string(s.summands[i]);
    }
    if (name.empty()) {
      name = "0";
    }
    std::cout << name << "  dims " << dims_string(s.module);
    if (s.tau_tilting) {
      std::cout << "  tau-tilting";
    }
    if (s.witness.zero_module) {
      std::cout << "  (zero module, listed by convention)";
    }
    std::cout << '\n';
  }
  return kOk;
}

int run_verify(const Options& o) {
  const auto a = load_algebra(o.algebra, o.max_length);
  SuiteOptions so;
  so.max_dim = o.max_dim;
  so.ext_bound = o.ext_bound;
  so.timing = o.timing;
  const auto rep = verify_theorem_suite(a, so);
  std::cout << rep.summary();
  if (!o.report.empty()) {
    std::ofstream out(o.report);
    if (!out) {
      throw ParseError(0, "cannot write report '" + o.report + "'");
    }
    out << rep.to_json().dump(2) << '\n';
  }
  return rep.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taulab: tilting and tau-tilting computations over F_p"};
  app.require_subcommand(1);
  Options o;

  auto add_algebra = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "algebra definition file")
        ->required();
    c->add_option("--max-length", o.max_length,
                  "path truncation length used to reduce relations");
  };

  auto* build = app.add_subcommand("build", "validate an algebra, print its basis");
  add_algebra(build);

  auto* compute = app.add_subcommand("compute", "compute a derived object");
  std::string what;
  compute->add_option("what", what, "tau | ext | pd | resolution | trace | approx")
      ->required()
      ->check(CLI::IsMember({"tau", "ext", "pd", "resolution", "trace", "approx"}));
  add_algebra(compute);
  compute->add_option("--module", o.module, "module file");
  compute->add_option("--other", o.other,
                      "second module (ext target, trace/approx target)");
  compute->add_option("--degree", o.degree, "Ext degree");
  compute->add_option("--length", o.length, "number of resolution terms");

  auto* check = app.add_subcommand("check", "evaluate predicates of a module");
  add_algebra(check);
  check->add_option("--module", o.module, "module file")->required();
  check->add_option("--props", o.props, "comma-separated property list");
  check->add_option("--ext-bound", o.ext_bound, "Ext degree bound");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate modules");
  std::string kind;
  enumerate->add_option("kind", kind, "indecomposables | stau-tilting")
      ->required()
      ->check(CLI::IsMember({"indecomposables", "stau-tilting"}));
  add_algebra(enumerate);
  enumerate->add_option("--max-dim", o.max_dim, "total dimension bound");
  enumerate->add_flag("--verbose", o.verbose, "print module files");

  auto* verify = app.add_subcommand("verify", "run the theorem suites");
  add_algebra(verify);
  verify->add_option("--max-dim", o.max_dim, "carrier dimension bound");
  verify->add_option("--ext-bound", o.ext_bound, "Ext degree bound");
  verify->add_option("--report", o.report, "write the JSON report here");
  verify->add_flag("--timing", o.timing, "include timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) {
      return run_build(o);
    }
    if (*compute) {
      return run_compute(what, o);
    }
    if (*check) {
      return run_check(o);
    }
    if (*enumerate) {
      return run_enumerate(kind, o);
    }
    return run_verify(o);
  } catch (const AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
