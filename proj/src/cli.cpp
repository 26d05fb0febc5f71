#include "graphcode/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "graphcode/bounds.hpp"
#include "graphcode/construct.hpp"
#include "graphcode/exact.hpp"
#include "graphcode/generators.hpp"
#include "graphcode/io.hpp"
#include "graphcode/kernels.hpp"

namespace graphcode {

namespace {

using Json = nlohmann::ordered_json;

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw PreconditionError(std::string("bad ") + what + " '" + s + "'");
}

Graph factor_graph(const std::string& tok) {
  if (tok.size() >= 2 && (tok[0] == 'c' || tok[0] == 'k')) {
    const int n = to_int(tok.substr(1), "factor size");
    return tok[0] == 'c' ? cycle(n) : complete_graph(n);
  }
  throw PreconditionError("product factor must be cN or kN, got '" + tok + "'");
}

void expect_params(const std::vector<std::string>& spec, std::size_t count, const char* usage) {
  if (spec.size() != count + 1) throw PreconditionError(std::string("usage: ") + usage);
}

}  // namespace

Graph generate_graph(const std::vector<std::string>& spec, std::uint64_t seed) {
  if (spec.empty()) throw PreconditionError("missing generator family");
  const std::string& f = spec[0];
  if (f == "kn") {
    expect_params(spec, 1, "kn N");
    return complete_graph(to_int(spec[1], "N"));
  }
  if (f == "cycle") {
    expect_params(spec, 1, "cycle S");
    return cycle(to_int(spec[1], "S"));
  }
  if (f == "product") {
    expect_params(spec, 2, "product F1 F2 (factors cN or kN)");
    return cartesian_product(factor_graph(spec[1]), factor_graph(spec[2]));
  }
  if (f == "cyclepow") {
    expect_params(spec, 2, "cyclepow S K");
    return cycle_power(to_int(spec[1], "S"), to_int(spec[2], "K"));
  }
  if (f == "hn") {
    expect_params(spec, 1, "hn N");
    return three_matching_cubic(to_int(spec[1], "N"));
  }
  if (f == "cliquechain") {
    expect_params(spec, 2, "cliquechain S K");
    return clique_chain(to_int(spec[1], "S"), to_int(spec[2], "K"));
  }
  if (f == "random") {
    expect_params(spec, 2, "random N D");
    return random_regular(to_int(spec[1], "N"), to_int(spec[2], "D"), seed);
  }
  throw PreconditionError("unknown family '" + f + "' (kn, cycle, product, cyclepow, hn, cliquechain, random)");
}

Graph load_graph_arg(const std::string& arg) {
  if (arg.rfind("gen:", 0) != 0) return load_graph_file(arg);
  std::vector<std::string> spec;
  std::stringstream ss(arg.substr(4));
  for (std::string part; std::getline(ss, part, ':');) spec.push_back(part);
  std::uint64_t seed = 0;
  if (!spec.empty() && spec.back().rfind("seed=", 0) == 0) {
    seed = std::stoull(spec.back().substr(5));
    spec.pop_back();
  }
  return generate_graph(spec, seed);
}

namespace {

struct Globals {
  std::optional<unsigned> threads;
  std::string format = "text";

  unsigned thread_count() const {
    if (threads) return std::max(1u, *threads);
    if (const char* env = std::getenv("GRAPHCODE_THREADS")) {
      const int v = std::atoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
  }
  bool json() const { return format == "json"; }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  // Primary artifact: to `path`, or to stdout when no path was given.
  void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out_ << text;
      primary_on_stdout_ = true;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + path + "'");
    f << text;
  }

  // Summary lines go to stderr when stdout carries the artifact.
  std::ostream& summary() { return primary_on_stdout_ ? err_ : out_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool primary_on_stdout_ = false;
};

std::string to_text(const auto& writer) {
  std::ostringstream s;
  writer(s);
  return s.str();
}

std::string bound_value(const BoundEntry& e) {
  if (e.value_log2 && e.value) return std::to_string(*e.value) + " (2^" + std::to_string(*e.value_log2) + ")";
  if (e.value) return std::to_string(*e.value);
  if (e.value_log2) return "2^" + std::to_string(*e.value_log2);
  return "none";
}

void print_bounds_text(std::ostream& os, const BoundReport& r) {
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("unknown"); };
  os << "lower: " << opt(r.lower) << '\n';
  os << "upper: " << opt(r.upper) << '\n';
  if (r.exact) os << "exact: m = " << *r.exact << '\n';
  for (const auto& e : r.entries)
    os << (e.is_upper ? "  upper " : "  lower ") << e.kind << ": " << bound_value(e) << "; " << e.certificate
       << '\n';
}

std::string certificate_text(const Graph& h, const EdgeSubset& a, const EdgeSubset& b, const CutCertificate& cut,
                             const std::string& note) {
  return to_text([&](std::ostream& s) { write_certificate(s, h, a, b, cut, note); });
}

// Certificate for an assignment whose codeword z is disconnected: the
// members for u = 0 and u = z.
std::string assignment_certificate(const Graph& h, const EdgeAssignment& a, const BitVec& z,
                                   const CutCertificate& cut) {
  return certificate_text(h, h.empty_subset(), codeword(a, z), cut,
                          "codeword z=" + z.to_hex() + " of the assignment is disconnected");
}

enum class Method { automatic, clique, repair, tree, hn };

struct ConstructOutcome {
  std::string method;
  EdgeAssignment assignment;
  bool verified = false;
  std::optional<ConstructTrace> trace;
  std::optional<ViolatingCut> failure;
};

std::size_t expected_dim(const Graph& h, Method m) {
  switch (m) {
    case Method::clique: return static_cast<std::size_t>(h.n() - 1);
    case Method::hn: return 2;
    case Method::repair: return static_cast<std::size_t>(graph_stats(h).min_degree);
    case Method::tree: return static_cast<std::size_t>(edge_connectivity(h) / 2);
    case Method::automatic: break;
  }
  return 0;
}

Method resolve_method(const Graph& h, Method m) {
  if (m != Method::automatic) return m;
  if (h.n() >= 2 && h == complete_graph(h.n())) return Method::clique;
  if (h.n() % 2 == 0 && h.n() >= 6 && (h.n() / 2) % 2 == 1 && h == three_matching_cubic(h.n() / 2))
    return Method::hn;
  const auto st = graph_stats(h);
  if (st.is_regular && st.min_degree >= 1 && is_connected(h)) return Method::repair;
  return Method::tree;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::clique: return "clique";
    case Method::hn: return "hn";
    case Method::repair: return "repair";
    case Method::tree: return "tree";
    case Method::automatic: break;
  }
  return "auto";
}

struct ConstructSettings {
  Method method = Method::automatic;
  std::optional<int> dim;
  ConstructParams params;
  bool allow_large_dim = false;
};

ConstructOutcome run_construct(const Graph& h, const ConstructSettings& s) {
  const Method m = resolve_method(h, s.method);
  const std::size_t dim = expected_dim(h, m);
  if (s.dim && static_cast<std::size_t>(*s.dim) != dim)
    throw PreconditionError("method " + std::string(method_name(m)) + " yields dimension " + std::to_string(dim) +
                            " on this host, not " + std::to_string(*s.dim));
  if (dim > static_cast<std::size_t>(kCliDimCap) && !s.allow_large_dim)
    throw CapExceeded("dimension " + std::to_string(dim) + " exceeds the cap of " + std::to_string(kCliDimCap) +
                      " (use --allow-large-dim)");

  ConstructOutcome o;
  o.method = method_name(m);
  const VerifyOptions vopt{s.params.threads};
  switch (m) {
    case Method::clique:
      if (!(h == complete_graph(h.n()))) throw PreconditionError("method clique needs a complete graph");
      o.assignment = clique_assignment(h.n());
      break;
    case Method::hn:
      if (h.n() % 2 != 0 || !(h == three_matching_cubic(h.n() / 2)))
        throw PreconditionError("method hn needs the three-matching cubic graph H_n");
      o.assignment = h_n_assignment(h.n() / 2);
      break;
    case Method::tree: o.assignment = *tree_packing_code(h).generator; break;
    case Method::repair: {
      auto r = repair_construct(h, static_cast<int>(dim), s.params);
      o.assignment = std::move(r.assignment);
      o.trace = std::move(r.trace);
      o.verified = r.success;
      o.failure = std::move(r.failure);
      return o;
    }
    case Method::automatic: break;
  }
  o.failure = find_violating_cut(h, o.assignment, vopt);
  o.verified = !o.failure;
  return o;
}

Json construct_json(const ConstructOutcome& o) {
  Json j;
  j["method"] = o.method;
  j["dim"] = o.assignment.dim();
  j["verified"] = o.verified;
  if (o.verified && o.assignment.dim() < 64) j["code_size"] = std::uint64_t{1} << o.assignment.dim();
  j["trace"] = o.trace ? trace_to_json(*o.trace) : Json(nullptr);
  if (o.failure) {
    j["violating_z"] = o.failure->z.to_hex();
    j["violating_cut"] = cut_to_json(o.failure->cut);
  }
  return j;
}

void print_construct_text(std::ostream& os, const ConstructOutcome& o) {
  os << "method: " << o.method << '\n';
  os << "dimension: " << o.assignment.dim() << '\n';
  if (o.verified) os << "verified: linear code of " << (std::uint64_t{1} << o.assignment.dim()) << " members\n";
  else os << "not verified: codeword z=" << o.failure->z.to_hex() << " is disconnected\n";
  if (o.trace) {
    const auto& t = *o.trace;
    os << "thinning k: " << (t.chosen_k ? std::to_string(*t.chosen_k) : std::string("none")) << " (degrees "
       << t.thinned_min_degree << ".." << t.thinned_max_degree << ")\n";
    os << "attempts: " << t.attempts_used << ", rounds: " << t.repair_rounds_used << " (" << t.star_resamples
       << " star, " << t.cut_resamples << " cut), resampled edges: " << t.resampled_edge_count << '\n';
    os << "outcome: " << t.outcome << '\n';
  }
}

Json graph_json(const Graph& h) {
  const auto st = graph_stats(h);
  Json j;
  j["n"] = h.n();
  j["m"] = h.m();
  j["min_degree"] = st.min_degree;
  j["max_degree"] = st.max_degree;
  j["regular"] = st.is_regular;
  return j;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity codes for graphs: construct, verify and bound."};
  app.name("graphcode");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (default: $GRAPHCODE_THREADS or 1)");
  app.add_option("--format", g.format, "Summary format")->check(CLI::IsMember({"text", "json"}));
  app.add_option_function<std::string>(
      "--simd",
      [](const std::string& v) {
        kernels::set_backend(v == "scalar" ? kernels::Backend::scalar : kernels::Backend::avx2);
      },
      "Kernel backend")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  Runner run(out, err);
  int status = kExitOk;
  ConstructSettings cs;
  std::string method = "auto";

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph");
  std::vector<std::string> gen_spec;
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("spec", gen_spec, "Family and parameters, e.g. product c3 c3")->required();
  gen->add_option("-o,--output", gen_out, "Output graph file");
  gen->add_option("--seed", gen_seed, "Seed for random graphs");
  gen->callback([&] {
    const auto h = generate_graph(gen_spec, gen_seed);
    run.emit(gen_out, to_text([&](std::ostream& s) { write_graph(s, h); }));
  });

  // construct
  auto* con = app.add_subcommand("construct", "Build an edge assignment and verify its code");
  std::string con_graph, con_out, con_cert;
  int con_dim = 0;
  con->add_option("graph", con_graph, "Graph file, '-' or gen:family:params")->required();
  con->add_option("-d,--dim", con_dim, "Expected dimension");
  con->add_option("--seed", cs.params.seed, "Seed");
  con->add_option("--retries", cs.params.max_outer_retries, "Outer attempts for the repair method");
  con->add_option("--rounds", cs.params.max_repair_rounds, "Resampling rounds per attempt (0: 10m)");
  con->add_option("--thinning", cs.params.thinning_override, "Force the thinning degree k");
  con->add_option("--method", method, "Construction")
      ->check(CLI::IsMember({"auto", "clique", "repair", "tree", "hn"}));
  con->add_option("-o,--output", con_out, "Output assignment file");
  con->add_option("--cert-out", con_cert, "Certificate file on failure");
  con->add_flag("--allow-large-dim", cs.allow_large_dim, "Lift the dimension cap");
  con->callback([&] {
    const auto h = load_graph_arg(con_graph);
    static const std::pair<const char*, Method> names[] = {{"auto", Method::automatic},
                                                           {"clique", Method::clique},
                                                           {"repair", Method::repair},
                                                           {"tree", Method::tree},
                                                           {"hn", Method::hn}};
    for (const auto& [name, m] : names)
      if (method == name) cs.method = m;
    if (con->count("--dim")) cs.dim = con_dim;
    cs.params.threads = g.thread_count();
    const auto o = run_construct(h, cs);
    run.emit(con_out, to_text([&](std::ostream& s) { write_assignment(s, o.assignment); }));
    if (g.json()) run.summary() << construct_json(o).dump(2) << '\n';
    else print_construct_text(run.summary(), o);
    if (!o.verified) {
      const auto cert = assignment_certificate(h, o.assignment, o.failure->z, o.failure->cut);
      if (con_cert.empty()) run.err() << cert;
      else run.emit(con_cert, cert);
      status = o.trace ? kExitLimit : kExitRejected;
    }
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Check that a code is a connectivity code");
  std::string ver_graph, ver_assign, ver_code, ver_cert;
  ver->add_option("graph", ver_graph, "Graph file, '-' or gen:family:params")->required();
  auto* va = ver->add_option("--assignment", ver_assign, "Assignment file (linear code)");
  auto* vc = ver->add_option("--code", ver_code, "Code file");
  va->excludes(vc);
  ver->add_option("--cert-out", ver_cert, "Certificate file when verification fails");
  ver->callback([&] {
    if (ver_assign.empty() == ver_code.empty())
      throw CLI::ValidationError("verify", "exactly one of --assignment and --code is required");
    const auto h = load_graph_arg(ver_graph);
    Json j;
    std::string cert;
    std::ostringstream text;
    if (!ver_assign.empty()) {
      const auto a = load_assignment_file(ver_assign);
      if (a.edge_count() != static_cast<std::size_t>(h.m()))
        throw HostMismatch("assignment has " + std::to_string(a.edge_count()) + " edges, graph has " +
                           std::to_string(h.m()));
      const auto r = verify_linear(h, a, {g.thread_count()});
      j["kind"] = "linear";
      j["dim"] = a.dim();
      j["ok"] = r.ok;
      j["checked"] = r.checked;
      if (r.ok) {
        j["code_size"] = std::uint64_t{1} << a.dim();
        text << "verified: linear code of " << (std::uint64_t{1} << a.dim()) << " members (dim " << a.dim()
             << ", " << r.checked << " nonzero codewords checked)\n";
      } else {
        const auto& ce = *r.counterexample;
        j["z"] = ce.z->to_hex();
        j["cut"] = cut_to_json(ce.cut);
        text << "not verified: codeword z=" << ce.z->to_hex() << " is disconnected\n";
        cert = assignment_certificate(h, a, *ce.z, ce.cut);
      }
    } else {
      const auto c = load_code_file(ver_code);
      if (c.n != h.n() || c.edge_count != static_cast<std::size_t>(h.m()))
        throw HostMismatch("code host (n=" + std::to_string(c.n) + ", m=" + std::to_string(c.edge_count) +
                           ") does not match the graph");
      const auto r = verify_pairwise(h, c);
      j["kind"] = "code";
      j["size"] = c.size();
      j["ok"] = r.ok;
      j["checked"] = r.checked;
      if (r.ok) {
        text << "verified: code of " << c.size() << " members (" << r.checked << " pairs checked)\n";
      } else {
        const auto [i, k] = *r.counterexample->pair;
        j["pair"] = {i, k};
        j["cut"] = cut_to_json(r.counterexample->cut);
        text << "not verified: members " << i << " and " << k << " differ in a disconnected subgraph\n";
        cert = certificate_text(h, c.member(i), c.member(k), r.counterexample->cut,
                                "members " + std::to_string(i) + " and " + std::to_string(k) +
                                    " differ in a disconnected subgraph");
      }
    }
    if (!cert.empty()) {
      status = kExitRejected;
      if (!ver_cert.empty()) run.emit(ver_cert, cert);
    }
    if (g.json()) {
      if (!cert.empty() && ver_cert.empty()) j["certificate"] = cert;
      run.out() << j.dump(2) << '\n';
    } else if (!cert.empty() && ver_cert.empty()) {
      // Comment lines keep stdout a valid certificate file.
      run.out() << "# " << text.str() << cert;
    } else {
      run.out() << text.str();
    }
  });

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Upper and lower bounds on m(H)");
  std::string bnd_graph, bnd_family = "auto", bnd_assign, bnd_out;
  BoundOptions bo;
  bnd->add_option("graph", bnd_graph, "Graph file, '-' or gen:family:params")->required();
  bnd->add_option("--family", bnd_family, "Disconnecting family: auto, none or a family file");
  bnd->add_option("--assignment", bnd_assign, "Assignment whose code gives a lower bound");
  bnd->add_flag("--exact", bo.run_exact, "Include the exhaustive search");
  bnd->add_option("--edge-cap", bo.exact_edge_cap, "Edge cap for --exact");
  bnd->add_option("--spectral-c", bo.spectral_c, "Report the spectral expansion check with this c");
  bnd->add_option("-o,--output", bnd_out, "Write the report here instead of stdout");
  bnd->callback([&] {
    const auto h = load_graph_arg(bnd_graph);
    if (bnd_family == "auto") bo.family_mode = FamilyMode::auto_detect;
    else if (bnd_family == "none") bo.family_mode = FamilyMode::none;
    else {
      bo.family_mode = FamilyMode::given;
      bo.family = load_family_file(bnd_family, h);
    }
    if (!bnd_assign.empty()) bo.assignment = load_assignment_file(bnd_assign);
    if (bo.run_exact && h.m() > bo.exact_edge_cap)
      throw CapExceeded("exact search: host has " + std::to_string(h.m()) + " edges, cap is " +
                        std::to_string(bo.exact_edge_cap));
    bo.threads = g.thread_count();
    const auto r = bound_report(h, bo);
    if (g.json()) {
      Json j;
      j["graph"] = graph_json(h);
      j.update(bound_report_to_json(r));
      run.emit(bnd_out, j.dump(2) + "\n");
    } else {
      run.emit(bnd_out, to_text([&](std::ostream& s) { print_bounds_text(s, r); }));
    }
  });

  // exact
  auto* ex = app.add_subcommand("exact", "Exhaustive m(H) for small hosts");
  std::string ex_graph, ex_out;
  int ex_cap = kDefaultExactEdgeCap;
  std::size_t ex_pool = kDefaultExactPoolCap;
  ex->add_option("graph", ex_graph, "Graph file, '-' or gen:family:params")->required();
  ex->add_option("--edge-cap", ex_cap, "Refuse hosts with more edges");
  ex->add_option("--pool-cap", ex_pool, "Refuse more connected spanning candidates");
  ex->add_option("-o,--output", ex_out, "Witness code file");
  ex->callback([&] {
    const auto h = load_graph_arg(ex_graph);
    const auto r = exact_m(h, ex_cap, ex_pool);
    run.emit(ex_out, to_text([&](std::ostream& s) { write_code(s, r.witness); }));
    if (g.json()) {
      Json j;
      j["m"] = r.value;
      j["pool_size"] = r.pool_size;
      j["search_nodes"] = r.nodes;
      run.summary() << j.dump(2) << '\n';
    } else {
      run.summary() << "m(H) = " << r.value << " (" << r.pool_size << " connected spanning candidates, "
                    << r.nodes << " search nodes)\n";
    }
  });

  // report
  auto* rep = app.add_subcommand("report", "JSON report: bounds, construction and verification");
  std::string rep_graph, rep_out;
  bool rep_exact = false;
  rep->add_option("graph", rep_graph, "Graph file, '-' or gen:family:params")->required();
  rep->add_option("--seed", cs.params.seed, "Seed");
  rep->add_option("--retries", cs.params.max_outer_retries, "Outer attempts for the repair method");
  rep->add_option("--rounds", cs.params.max_repair_rounds, "Resampling rounds per attempt (0: 10m)");
  rep->add_flag("--exact", rep_exact, "Include the exhaustive search when m <= 16");
  rep->add_option("-o,--output", rep_out, "Write the report here instead of stdout");
  rep->callback([&] {
    const auto start = std::chrono::steady_clock::now();
    const auto h = load_graph_arg(rep_graph);
    cs.params.threads = g.thread_count();
    Json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = kToolVersion;
    j["seed"] = cs.params.seed;
    j["graph"] = graph_json(h);
    BoundOptions opt;
    opt.threads = cs.params.threads;
    opt.run_exact = rep_exact && h.m() <= opt.exact_edge_cap;
    try {
      const auto o = run_construct(h, cs);
      j["construct"] = construct_json(o);
      if (o.verified) opt.assignment = o.assignment;
      else status = o.trace ? kExitLimit : kExitRejected;
    } catch (const PreconditionError& e) {
      j["construct"] = {{"method", nullptr}, {"skipped", e.what()}};
    } catch (const CapExceeded& e) {
      j["construct"] = {{"method", nullptr}, {"skipped", e.what()}};
    }
    j["bounds"] = bound_report_to_json(bound_report(h, opt));
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    j["sidecar"] = {{"wall_time_s", wall.count()}};
    run.emit(rep_out, j.dump(2) + "\n");
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    return status;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace graphcode
