#pragma once

// Command-line front end. run() parses argv, dispatches one verb and returns the exit code:
// 0 ok, 1 usage or parse error, 2 theorem violation, 3 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "topring/error.hpp"
#include "topring/finring.hpp"
#include "topring/fintop.hpp"
#include "topring/group.hpp"
#include "topring/report.hpp"
#include "topring/search.hpp"
#include "topring/topalg.hpp"

namespace topring::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

namespace detail {

inline std::vector<Elem> parse_elements(const std::string& text, std::size_t n) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty element in '" + text + "'");
    const auto e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("not an element index: '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("not an element index: '" + tok + "'");
    if (v >= n) throw ParseError("element " + tok + " out of range for a ring of size " + std::to_string(n));
    out.push_back(static_cast<Elem>(v));
  }
  if (out.empty()) throw ParseError("empty generator list");
  return out;
}

inline int emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text;
  return kOk;
}

inline int emit_report(std::ostream& out, bool as_json, const Report& r) {
  emit(out, as_json, r.to_json(), r.to_text());
  return r.ok() ? kOk : kViolation;
}

inline std::string list_text(const std::vector<Elem>& v) { return json(v).dump(); }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Finite topological rings and groups: checks, adic topologies, searches and theorem suites", "topring"};
  app.require_subcommand(1);
  std::string output = "text";
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // ring info <spec>
  auto* ring = app.add_subcommand("ring", "Finite ring queries");
  ring->require_subcommand(1);
  auto* ring_info = ring->add_subcommand("info", "Size, units, zerodivisors, idempotents and ideals of a ring");
  std::string ring_spec;
  ring_info->add_option("spec", ring_spec, "Ring spec, e.g. Z/12, Z/2 x Z/3, Z/2[x]/(1,1,1)")->required();
  add_output(ring_info);

  // adic report --ring --ideal
  auto* adic = app.add_subcommand("adic", "I-adic topologies");
  adic->require_subcommand(1);
  auto* adic_report = adic->add_subcommand("report", "Structure report for the I-adic topology");
  std::string ideal_gens;
  adic_report->add_option("--ring", ring_spec, "Ring spec")->required();
  adic_report->add_option("--ideal", ideal_gens, "Comma-separated generators")->required();
  add_output(adic_report);

  // topology enumerate --size [--count-only]
  auto* topology = app.add_subcommand("topology", "Finite topologies");
  topology->require_subcommand(1);
  auto* enumerate = topology->add_subcommand("enumerate", "All topologies on a small set, canonical order");
  std::size_t size = 0;
  bool count_only = false;
  enumerate->add_option("--size", size, "Ground set size (1..6)")->required()->check(CLI::Range(1, 6));
  enumerate->add_flag("--count-only", count_only, "Print the count only");
  add_output(enumerate);

  // check topring|topgroup|absolute --ring --topology
  auto* check = app.add_subcommand("check", "Check one (ring, topology) pair");
  check->require_subcommand(1);
  std::string topology_text;
  std::string check_kind;
  for (const char* kind : {"topring", "topgroup", "absolute"}) {
    auto* sub = check->add_subcommand(kind, std::string("Check ") + kind);
    sub->add_option("--ring", ring_spec, "Ring spec")->required();
    sub->add_option("--topology", topology_text, "Topology literal {\"n\":..,\"opens\":[...]}")->required();
    add_output(sub);
    sub->callback([&check_kind, kind] { check_kind = kind; });
  }

  // search non-absolute --ring [--max-size]
  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  auto* non_absolute = search->add_subcommand("non-absolute", "Topological rings whose unit group is not a topological group");
  std::size_t max_size = 5;
  unsigned workers = 1;
  non_absolute->add_option("--ring", ring_spec, "Ring spec")->required();
  non_absolute->add_option("--max-size", max_size, "Largest carrier enumerated exhaustively (1..6)")
      ->check(CLI::Range(1, 6));
  non_absolute->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  add_output(non_absolute);

  // suite run [--theorems] [--rings] [--json]
  auto* suite = app.add_subcommand("suite", "Theorem suites");
  suite->require_subcommand(1);
  auto* suite_run = suite->add_subcommand("run", "Run theorem predicates over the corpus");
  std::vector<std::string> theorems, rings;
  std::string json_path;
  suite_run->add_option("--theorems", theorems, "Comma-separated theorem ids")->delimiter(',');
  suite_run->add_option("--rings", rings, "Ring specs separated by ';' (the flag may repeat)")->delimiter(';');
  suite_run->add_option("--json", json_path, "Write the JSON report to this path");
  suite_run->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  add_output(suite_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const bool as_json = output == "json";
  try {
    if (ring_info->parsed()) {
      const auto r = make_ring(ring_spec);
      const auto units = units_group(r);
      json ideals = json::array();
      for (const auto& i : all_ideals(r)) ideals.push_back(i.members());
      json maximal = json::array();
      for (const auto& i : maximal_ideals(r)) maximal.push_back(i.members());
      const auto crit = finite_nonfield_criterion(r);
      json j{{"ring", r.spec()},
             {"size", r.size()},
             {"zero", r.zero()},
             {"one", r.one()},
             {"field", is_field(r)},
             {"units", members(units.elements)},
             {"zerodivisors", members(zerodivisors(r))},
             {"idempotents", members(idempotents(r))},
             {"ideals", ideals},
             {"maximal_ideals", maximal},
             {"nonfield_criterion", crit.to_json()}};
      std::string text = "ring " + r.spec() + "\n  size: " + std::to_string(r.size()) +
                         "\n  field: " + (is_field(r) ? "true" : "false") +
                         "\n  units: " + detail::list_text(members(units.elements)) +
                         "\n  zerodivisors: " + detail::list_text(members(zerodivisors(r))) +
                         "\n  idempotents: " + detail::list_text(members(idempotents(r))) +
                         "\n  ideals: " + ideals.dump() + "\n  maximal ideals: " + maximal.dump() + "\n" + crit.to_text();
      detail::emit(out, as_json, j, text);
      return crit.ok() ? kOk : kViolation;
    }

    if (adic_report->parsed()) {
      const auto r = make_ring(ring_spec);
      const auto ideal = ideal_generate(r, detail::parse_elements(ideal_gens, r.size()));
      auto rep = adic_structure_theorems(ideal);
      const auto adic = adic_topology(ideal);
      rep.data["ideal"] = ideal.members();
      rep.data["absolute"] = absolute_check(r, adic.topology).data["absolute"];
      rep.data["topology"] = topology_literal(adic.topology);
      return detail::emit_report(out, as_json, rep);
    }

    if (enumerate->parsed()) {
      const auto& e = *cached_enumeration(size);
      if (count_only) {
        detail::emit(out, as_json, json{{"size", size}, {"count", e.size()}}, std::to_string(e.size()) + "\n");
        return kOk;
      }
      if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < e.size(); ++i) arr.push_back(topology_to_json(e.at(i)));
        out << json{{"size", size}, {"count", e.size()}, {"topologies", arr}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < e.size(); ++i) out << topology_to_json(e.at(i)).dump() << "\n";
        out << "count: " << e.size() << "\n";
      }
      return kOk;
    }

    if (!check_kind.empty()) {
      const auto r = make_ring(ring_spec);
      const auto t = topology_from_json(topology_text);
      if (t.size() != r.size())
        throw ParseError("topology has " + std::to_string(t.size()) + " points but the ring has " +
                         std::to_string(r.size()));
      if (check_kind == "topring") {
        const auto v = check_topological_ring(r, t);
        std::string text = "topring " + r.spec() + ": " + (v.is_topological_ring() ? "pass" : "fail") + "\n";
        if (v.add_witness)
          text += "  addition: open " + to_string(*v.add_witness) + " has non-open preimage " +
                  to_string(*v.add_witness_preimage) + " (pair (a,b) encoded a*n+b)\n";
        if (v.mul_witness)
          text += "  multiplication: open " + to_string(*v.mul_witness) + " has non-open preimage " +
                  to_string(*v.mul_witness_preimage) + "\n";
        detail::emit(out, as_json, to_json(v), text);
      } else if (check_kind == "topgroup") {
        const auto g = additive_group(r);
        const auto v = check_topological_group(g, t);
        std::string text = "topgroup " + g.name() + ": " + (v.is_topological_group() ? "pass" : "fail") + "\n";
        if (v.op_witness)
          text += "  operation: open " + to_string(*v.op_witness) + " has non-open preimage " +
                  to_string(*v.op_witness_preimage) + "\n";
        if (v.inverse_witness) text += "  inverse: open " + to_string(*v.inverse_witness) + " has non-open preimage\n";
        detail::emit(out, as_json, to_json(v), text);
      } else {
        return detail::emit_report(out, as_json, absolute_check(r, t));
      }
      return kOk;
    }

    if (non_absolute->parsed()) {
      const auto r = make_ring(ring_spec);
      SearchConfig cfg;
      cfg.max_exhaustive_size = max_size;
      cfg.workers = workers;
      const auto res = find_non_absolute(r, cfg);
      std::string text = "non-absolute search on " + r.spec() + ": " + std::to_string(res.searched) + " topologies (" +
                         (res.exhaustive ? "exhaustive" : "sampled") + "), " + std::to_string(res.topological_rings) +
                         " topological rings, " + std::to_string(res.findings.size()) + " non-absolute\n";
      bool violation = false;
      for (const auto& f : res.findings) {
        text += "  " + f.topology.dump() + "  " + f.witness.dump() + "\n";
        violation = violation || f.verdict == Verdict::violation;
      }
      detail::emit(out, as_json, to_json(res), text);
      return violation ? kViolation : kOk;
    }

    if (suite_run->parsed()) {
      SearchConfig cfg;
      cfg.theorems = theorems;
      cfg.rings = rings;
      cfg.workers = workers;
      const auto rep = theorem_corpus_report(cfg);
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw std::runtime_error("cannot write " + json_path);
        f << rep.to_json().dump(2) << "\n";
        if (!f) throw std::runtime_error("cannot write " + json_path);
      }
      detail::emit(out, as_json, rep.to_json(), rep.to_text());
      return rep.ok() ? kOk : kViolation;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const TheoremViolation& e) {
    err << "VIOLATION: " << e.what() << "\n";
    return kViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace topring::cli
