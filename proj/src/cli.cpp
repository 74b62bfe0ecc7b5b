#include "ordlat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "ordlat/document.hpp"
#include "ordlat/duality.hpp"
#include "ordlat/error.hpp"
#include "ordlat/lattice.hpp"
#include "parallel.hpp"

namespace ordlat::cli {
namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  int code = exit_ok;
  std::string text;
};

struct Context {
  Caps caps;
  bool timing = false;
  std::string output;
  std::string command;
};

json config_json(const Caps& caps) {
  // threads is left out: reports must not depend on it.
  json c;
  c["max_size"] = caps.max_size;
  c["max_dim_size"] = caps.max_dim_size;
  c["max_prime_lattice"] = caps.max_prime_lattice;
  c["max_downset_poset"] = caps.max_downset_poset;
  c["max_cube_elements"] = caps.max_cube_elements;
  c["max_enumerate"] = caps.max_enumerate;
  return c;
}

json document_json(const Poset& p, DocumentKind kind) { return json::parse(serialize(to_document(p, kind))); }

json index_list(const std::vector<std::size_t>& v) { return json(v); }

json members_json(const Poset& base, const Bitset& set) {
  json j;
  j["members"] = set.indices();
  json labels = json::array();
  set.for_each([&](std::size_t i) { labels.push_back(base.label(i)); });
  j["labels"] = std::move(labels);
  return j;
}

Outcome report(const Context& ctx, const char* status, json result, int code) {
  json r;
  r["command"] = ctx.command;
  r["config"] = config_json(ctx.caps);
  r["status"] = status;
  r["result"] = std::move(result);
  return {code, r.dump(2) + "\n"};
}

Outcome error_report(const Context& ctx, const Error& e) {
  json result;
  result["error"] = std::string(to_string(e.kind()));
  result["detail"] = e.detail();
  return report(ctx, "error", std::move(result), exit_negative);
}

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::parse_error, "cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

PosetDocument load(const std::string& path) { return parse_document(read_input(path)); }

// ---------------------------------------------------------------------------

Outcome cmd_check(const Context& ctx, const PosetDocument& doc) {
  json result;
  result["kind"] = std::string(to_string(doc.kind));
  result["size"] = doc.size;
  Poset p;
  try {
    p = to_poset(doc);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::antisymmetry_violation) throw;
    result["verdict"] = "invalid poset";
    result["error"] = std::string(to_string(e.kind()));
    result["detail"] = e.detail();
    return report(ctx, "negative", std::move(result), exit_negative);
  }
  result["related_pairs"] = p.related_pairs();
  if (doc.kind == DocumentKind::poset) {
    result["verdict"] = "valid poset";
    return report(ctx, "ok", std::move(result), exit_ok);
  }
  try {
    const DistLattice l = DistLattice::from_poset(p);
    result["verdict"] = "valid lattice";
    result["bottom"] = l.bottom();
    result["top"] = l.top();
    return report(ctx, "ok", std::move(result), exit_ok);
  } catch (const Error& e) {
    result["verdict"] = "invalid lattice";
    result["error"] = std::string(to_string(e.kind()));
    result["detail"] = e.detail();
    return report(ctx, "negative", std::move(result), exit_negative);
  }
}

Outcome cmd_phi(const Context& ctx, const PosetDocument& doc, const std::string& as) {
  const DocumentKind kind = as.empty() ? doc.kind : (as == "lattice" ? DocumentKind::lattice : DocumentKind::poset);
  const Poset p = to_poset(doc);
  json result;
  result["as"] = std::string(to_string(kind));
  PhiCarrierMap carrier;
  if (kind == DocumentKind::lattice) {
    PhiLattice phi = phi_lattice(DistLattice::from_poset(p), ctx.caps);
    result["document"] = document_json(phi.lattice.order(), kind);
    carrier = std::move(phi.carrier);
  } else {
    PhiPoset phi = phi_poset(p, ctx.caps);
    result["document"] = document_json(phi.poset, kind);
    carrier = std::move(phi.carrier);
  }
  json pairs = json::array();
  for (const auto& [a, b] : carrier.pairs) pairs.push_back({a, b});
  result["pairs"] = std::move(pairs);
  return report(ctx, "ok", std::move(result), exit_ok);
}

Outcome cmd_primes(const Context& ctx, const PosetDocument& doc) {
  const DistLattice l = DistLattice::from_poset(to_poset(doc));
  json list = json::array();
  for (const auto& ideal : prime_ideals(l, ctx.caps)) list.push_back(members_json(l.order(), ideal.members));
  json result;
  result["count"] = list.size();
  result["prime_ideals"] = std::move(list);
  return report(ctx, "ok", std::move(result), exit_ok);
}

Outcome cmd_spec(const Context& ctx, const PosetDocument& doc) {
  const DistLattice l = DistLattice::from_poset(to_poset(doc));
  json result;
  result["document"] = document_json(spec(l, ctx.caps), DocumentKind::poset);
  return report(ctx, "ok", std::move(result), exit_ok);
}

Outcome cmd_downsets(const Context& ctx, const PosetDocument& doc) {
  const Poset x = to_poset(doc);
  const DownsetLattice e = downset_lattice(x, ctx.caps);
  json sets = json::array();
  for (std::uint64_t d : e.sets) sets.push_back(members_json(x, Bitset::from_mask(x.size(), d)));
  json result;
  result["document"] = document_json(e.lattice.order(), DocumentKind::lattice);
  result["down_sets"] = std::move(sets);
  return report(ctx, "ok", std::move(result), exit_ok);
}

Outcome cmd_image(const Context& ctx, const PosetDocument& doc) {
  const DistLattice l = DistLattice::from_poset(to_poset(doc));
  const ImageResult r = in_image_of_phi(l, ctx.caps);
  json result;
  result["spectrum_size"] = r.spectrum_size;
  if (!r.in_image()) {
    result["answer"] = "NO";
    result["reason"] = r.reason;
    return report(ctx, "negative", std::move(result), exit_negative);
  }
  const ImageWitness& w = *r.witness;
  const PhiLattice phi = phi_lattice(w.k, ctx.caps);
  result["answer"] = "YES";
  result["k"] = document_json(w.k.order(), DocumentKind::lattice);
  json factor;
  factor["bottom_layer"] = index_list(w.factor.bottom_layer);
  factor["matching"] = index_list(w.factor.matching);
  factor["y"] = document_json(w.factor.factor, DocumentKind::poset);
  result["factorization"] = std::move(factor);
  json table = json::array();
  for (std::size_t i = 0; i < w.iso.forward.size(); ++i) {
    json row;
    row["phi_k"] = i;
    row["pair"] = {phi.carrier.pairs[i].first, phi.carrier.pairs[i].second};
    row["phi_k_label"] = phi.lattice.order().label(i);
    row["l"] = w.iso.forward[i];
    row["l_label"] = l.order().label(w.iso.forward[i]);
    table.push_back(std::move(row));
  }
  result["isomorphism"] = std::move(table);
  return report(ctx, "ok", std::move(result), exit_ok);
}

// ---------------------------------------------------------------------------

Outcome suite_corollary(const Context& ctx, std::size_t n_max) {
  struct Instance {
    std::string id;
    Poset order;
  };
  std::vector<Instance> instances;
  json per_size = json::array();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto posets = enumerate_posets(n, ctx.caps);
    std::size_t lattices = 0;
    for (std::size_t i = 0; i < posets.size(); ++i) {
      try {
        DistLattice::from_poset(posets[i]);
      } catch (const Error&) {
        continue;
      }
      instances.push_back({std::to_string(n) + "-" + std::to_string(i), posets[i]});
      ++lattices;
    }
    per_size.push_back({{"size", n}, {"lattices", lattices}});
  }
  std::vector<CorollaryReport> reports(instances.size());
  detail::parallel_for(instances.size(), ctx.caps.threads, [&](std::size_t i) {
    reports[i] = verify_corollary(DistLattice::from_poset(instances[i].order), ctx.caps);
  });
  json failures = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (reports[i].holds) {
      ++passed;
      continue;
    }
    failures.push_back({{"id", instances[i].id}, {"counterexample", reports[i].counterexample}});
  }
  json result;
  result["suite"] = "corollary";
  result["n_max"] = n_max;
  result["per_size"] = std::move(per_size);
  result["instances"] = instances.size();
  result["passed"] = passed;
  result["failures"] = std::move(failures);
  const bool ok = passed == instances.size();
  result["summary"] = ok ? "all " + std::to_string(passed) + " instances pass"
                         : std::to_string(instances.size() - passed) + " of " + std::to_string(instances.size()) +
                               " instances fail";
  return report(ctx, ok ? "ok" : "negative", std::move(result), ok ? exit_ok : exit_negative);
}

Outcome suite_lemma51(const Context& ctx, std::size_t n_max) {
  std::vector<std::pair<std::string, Poset>> spaces;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto posets = enumerate_posets(n, ctx.caps);
    for (std::size_t i = 0; i < posets.size(); ++i)
      spaces.emplace_back(std::to_string(n) + "-" + std::to_string(i), posets[i]);
  }
  spaces.emplace_back("cube-3", cube(3, ctx.caps));
  std::vector<std::string> errors(spaces.size());
  std::vector<std::size_t> sizes(spaces.size());
  detail::parallel_for(spaces.size(), ctx.caps.threads, [&](std::size_t i) {
    try {
      sizes[i] = lemma51(spaces[i].second, ctx.caps).witness.forward.size();
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });
  json failures = json::array();
  json checked = json::array();
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (!errors[i].empty()) failures.push_back({{"id", spaces[i].first}, {"error", errors[i]}});
    else checked.push_back({{"id", spaces[i].first}, {"lattice_size", sizes[i]}});
  }
  json result;
  result["suite"] = "lemma51";
  result["n_max"] = n_max;
  result["instances"] = spaces.size();
  result["passed"] = checked.size();
  result["checked"] = std::move(checked);
  result["failures"] = failures;
  const bool ok = failures.empty();
  result["summary"] = ok ? "all " + std::to_string(spaces.size()) + " instances pass"
                         : std::to_string(failures.size()) + " instances fail";
  return report(ctx, ok ? "ok" : "negative", std::move(result), ok ? exit_ok : exit_negative);
}

Outcome suite_fixedpoints(const Context& ctx, std::size_t n_max) {
  json modes = json::array();
  bool ok = true;
  const std::pair<FixedPointMode, const char*> all[] = {{FixedPointMode::posets, "posets"},
                                                        {FixedPointMode::lattices, "lattices"},
                                                        {FixedPointMode::connected_posets, "connected_posets"}};
  for (const auto& [mode, name] : all) {
    const FixedPointReport r = find_fixed_points(n_max, mode, ctx.caps);
    json hits = json::array();
    for (const auto& h : r.hits)
      hits.push_back({{"size", h.size}, {"id", std::to_string(h.size) + "-" + std::to_string(h.index)},
                      {"code", h.code}, {"antichain", h.antichain}, {"witness", h.witness.forward}});
    modes.push_back({{"mode", name}, {"scanned", r.scanned}, {"hits", std::move(hits)},
                     {"expectation_holds", r.expectation_holds}});
    ok = ok && r.expectation_holds;
  }
  json result;
  result["suite"] = "fixedpoints";
  result["n_max"] = n_max;
  result["modes"] = std::move(modes);
  result["summary"] = ok ? "expectations hold" : "expectation violated";
  return report(ctx, ok ? "ok" : "negative", std::move(result), ok ? exit_ok : exit_negative);
}

Outcome suite_shift(const Context& ctx, std::size_t n_max) {
  json runs = json::array();
  bool ok = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const ShiftReport r = free_lattice_shift_check(n, ctx.caps);
    runs.push_back({{"n", n},
                    {"free_lattice_size", r.free_lattice_size},
                    {"comparable_pairs", r.comparable_pairs},
                    {"next_free_lattice_size", r.next_free_lattice_size},
                    {"shift", r.shift},
                    {"holds", r.holds}});
    ok = ok && r.holds;
  }
  json result;
  result["suite"] = "shift";
  result["n_max"] = n_max;
  result["runs"] = std::move(runs);
  result["summary"] = ok ? "pass" : "fail";
  return report(ctx, ok ? "ok" : "negative", std::move(result), ok ? exit_ok : exit_negative);
}

Outcome cmd_experiments(const Context& ctx, const std::string& suite, std::optional<std::size_t> n_max) {
  if (suite == "corollary") return suite_corollary(ctx, n_max.value_or(5));
  if (suite == "lemma51") return suite_lemma51(ctx, n_max.value_or(4));
  if (suite == "fixedpoints") return suite_fixedpoints(ctx, n_max.value_or(6));
  if (suite == "shift") return suite_shift(ctx, n_max.value_or(3));
  return {exit_ok, dimension_csv(dimension_report(n_max.value_or(5), ctx.caps))};
}

}  // namespace

// ---------------------------------------------------------------------------

std::string dot_text(const Poset& p, bool hasse) {
  // Height = length of the longest chain below; used for rank hints.
  std::vector<std::size_t> height(p.size(), 0);
  for (const auto& x : linear_extension(p))
    p.down(x).for_each([&](std::size_t y) {
      if (y != x) height[x] = std::max(height[x], height[y] + 1);
    });

  std::ostringstream out;
  out << "digraph P {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  std::map<std::size_t, std::vector<std::size_t>> levels;
  for (std::size_t i = 0; i < p.size(); ++i) levels[height[i]].push_back(i);
  for (const auto& [h, nodes] : levels) {
    out << "  { rank=same;";
    for (std::size_t i : nodes) out << " n" << i << ";";
    out << " }\n";
  }
  if (hasse) {
    for (const auto& [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  } else {
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.less(a, b)) out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dimension_csv(const std::vector<DimensionRow>& rows) {
  auto cell = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("SKIPPED"); };
  std::ostringstream out;
  out << "id,code,size,phi_size,dim,phi_dim,width,phi_width\n";
  for (const auto& r : rows)
    out << r.id << "," << r.code << "," << r.size << "," << r.phi_size << "," << cell(r.dim) << ","
        << cell(r.phi_dim) << "," << r.width << "," << r.phi_width << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite posets, distributive lattices, Priestley duality and the ordering-relation functor", "ordlat"};
  app.require_subcommand(1);

  Context ctx;
  std::size_t threads = 1;
  app.add_option("--max-size", ctx.caps.max_size, "Largest constructed poset or lattice")->capture_default_str();
  app.add_option("--max-dim-size", ctx.caps.max_dim_size, "Largest poset for order dimension")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for exhaustive scans")->check(CLI::PositiveNumber);
  app.add_option("--output", ctx.output, "Write the report to this file");
  app.add_flag("--timing", ctx.timing, "Append wall-clock timing to JSON reports");

  std::string input;
  std::string as;
  std::string target = "hasse";
  std::string suite;
  std::optional<std::size_t> n_max;

  auto* check = app.add_subcommand("check", "Validate poset axioms, and lattice axioms for kind=lattice");
  auto* phi = app.add_subcommand("phi", "Build Phi of the input");
  auto* primes = app.add_subcommand("primes", "List the prime ideals of a lattice");
  auto* spec_cmd = app.add_subcommand("spec", "Spectrum of a lattice as a poset document");
  auto* downsets = app.add_subcommand("downsets", "Down-set lattice of a poset");
  auto* image = app.add_subcommand("image", "Decide whether a lattice is Phi(K) for some K");
  auto* experiments = app.add_subcommand("experiments", "Run an exhaustive experiment suite");
  auto* dot = app.add_subcommand("dot", "Graphviz rendering");
  for (auto* sub : {check, phi, primes, spec_cmd, downsets, image, dot})
    sub->add_option("input", input, "PosetDocument JSON file, or - for stdin")->required();
  phi->add_option("--as", as, "Treat the input as a poset or a lattice")->check(CLI::IsMember({"poset", "lattice"}));
  dot->add_option("--target", target, "order: all strict pairs; hasse: cover edges")
      ->check(CLI::IsMember({"order", "hasse"}))
      ->capture_default_str();
  experiments->add_option("suite", suite, "corollary | lemma51 | fixedpoints | shift | dimtable")
      ->required()
      ->check(CLI::IsMember({"corollary", "lemma51", "fixedpoints", "shift", "dimtable"}));
  experiments->add_option("--n-max", n_max, "Largest size scanned (shift: largest n)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }
  ctx.caps.threads = threads;
  // Echo the command without the flags that must not change the report.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--output" || args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i] == "--timing" || args[i].rfind("--output=", 0) == 0 || args[i].rfind("--threads=", 0) == 0) continue;
    ctx.command += (ctx.command.empty() ? "" : " ") + args[i];
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (*experiments) {
      outcome = cmd_experiments(ctx, suite, n_max);
    } else {
      const PosetDocument doc = load(input);
      if (*check) outcome = cmd_check(ctx, doc);
      else if (*phi) outcome = cmd_phi(ctx, doc, as);
      else if (*primes) outcome = cmd_primes(ctx, doc);
      else if (*spec_cmd) outcome = cmd_spec(ctx, doc);
      else if (*downsets) outcome = cmd_downsets(ctx, doc);
      else if (*image) outcome = cmd_image(ctx, doc);
      else outcome = {exit_ok, dot_text(to_poset(doc), target == "hasse")};
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::invalid_argument) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    err << "error: " << e.what() << "\n";
    outcome = error_report(ctx, e);
  }

  if (ctx.timing && !outcome.text.empty() && outcome.text.front() == '{') {
    json r = json::parse(outcome.text);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    r["timing"] = {{"wall_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
    outcome.text = r.dump(2) + "\n";
  }

  if (ctx.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(ctx.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << ctx.output << "'\n";
      return exit_usage;
    }
    file << outcome.text;
  }
  return outcome.code;
}

}  // namespace ordlat::cli
