#include "graphcode/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace graphcode {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Reads significant lines, splitting them into whitespace-separated tokens
// with their columns.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<Token>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
      }
      if (tokens.empty() || tokens.front().text.front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what, std::size_t column = 1) const {
    throw ParseError(what, line_no_ == 0 ? 1 : line_no_, column);
  }

  long long integer(const Token& t, long long lo, long long hi) const {
    long long v = 0;
    const auto* b = t.text.data();
    const auto* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail("expected an integer, got '" + t.text + "'", t.column);
    if (v < lo || v > hi) fail("value " + t.text + " out of range", t.column);
    return v;
  }

  void expect_count(const std::vector<Token>& tokens, std::size_t n, const char* what) const {
    if (tokens.size() != n)
      fail(std::string("expected ") + what, tokens.size() > n ? tokens[n].column : 1);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

template <class Bits>
Bits parse_hex(const LineReader& r, const Token& t, std::size_t size) {
  try {
    return Bits::from_hex(size, t.text);
  } catch (const ParseError& e) {
    r.fail(e.what(), t.column);
  }
}

void require_end(LineReader& r) {
  std::vector<Token> extra;
  if (r.next(extra)) r.fail("unexpected trailing content", extra.front().column);
}

}  // namespace

Graph read_graph(std::istream& in, bool allow_multigraph) {
  LineReader r(in);
  std::vector<Token> tok;
  if (!r.next(tok)) r.fail("missing header \"n m\"");
  r.expect_count(tok, 2, "header \"n m\"");
  const int n = static_cast<int>(r.integer(tok[0], 1, 1 << 24));
  const auto m = static_cast<std::size_t>(r.integer(tok[1], 0, 1 << 26));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!r.next(tok)) r.fail("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    r.expect_count(tok, 2, "edge line \"u v\"");
    const int u = static_cast<int>(r.integer(tok[0], 0, n - 1));
    const int v = static_cast<int>(r.integer(tok[1], 0, n - 1));
    if (u == v) r.fail("self-loop", tok[1].column);
    edges.push_back({u, v});
  }
  require_end(r);
  try {
    return Graph(n, std::move(edges), allow_multigraph);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

void write_graph(std::ostream& out, const Graph& h) {
  out << h.n() << ' ' << h.m() << '\n';
  for (const auto& e : h.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeAssignment read_assignment(std::istream& in) {
  LineReader r(in);
  std::vector<Token> tok;
  if (!r.next(tok)) r.fail("missing header \"m d\"");
  r.expect_count(tok, 2, "header \"m d\"");
  const auto m = static_cast<std::size_t>(r.integer(tok[0], 0, 1 << 26));
  const auto d = static_cast<std::size_t>(r.integer(tok[1], 0, 1 << 16));
  EdgeAssignment a(m, d);
  for (std::size_t e = 0; e < m; ++e) {
    if (!r.next(tok)) r.fail("expected " + std::to_string(m) + " vector lines, found " + std::to_string(e));
    r.expect_count(tok, 1, "one hex vector or '-'");
    if (tok[0].text == "-") continue;
    a.set(e, parse_hex<BitVec>(r, tok[0], d));
  }
  require_end(r);
  return a;
}

void write_assignment(std::ostream& out, const EdgeAssignment& a) {
  out << a.edge_count() << ' ' << a.dim() << '\n';
  for (std::size_t e = 0; e < a.edge_count(); ++e) out << (a.assigned(e) ? a.at(e).to_hex() : "-") << '\n';
}

ConnectivityCode read_code(std::istream& in) {
  LineReader r(in);
  std::vector<Token> tok;
  if (!r.next(tok)) r.fail("missing header \"n m count\"");
  r.expect_count(tok, 3, "header \"n m count\"");
  ConnectivityCode c;
  c.n = static_cast<int>(r.integer(tok[0], 1, 1 << 24));
  c.edge_count = static_cast<std::size_t>(r.integer(tok[1], 0, 1 << 26));
  const auto count = static_cast<std::size_t>(r.integer(tok[2], 0, 1 << 26));
  for (std::size_t i = 0; i < count; ++i) {
    if (!r.next(tok)) r.fail("expected " + std::to_string(count) + " member lines, found " + std::to_string(i));
    r.expect_count(tok, 1, "one hex edge mask");
    c.members.push_back(parse_hex<EdgeSubset>(r, tok[0], c.edge_count));
  }
  require_end(r);
  return c;
}

void write_code(std::ostream& out, const ConnectivityCode& c) {
  out << c.n << ' ' << c.edge_count << ' ' << c.size() << '\n';
  for (std::uint64_t i = 0; i < c.size(); ++i) out << c.member(i).to_hex() << '\n';
}

DisconnectingFamily read_family(std::istream& in, const Graph& host) {
  LineReader r(in);
  std::vector<Token> tok;
  if (!r.next(tok)) r.fail("missing header \"t s\"");
  r.expect_count(tok, 2, "header \"t s\"");
  DisconnectingFamily f{host, {}, static_cast<int>(r.integer(tok[0], 0, 30))};
  const auto s = static_cast<std::size_t>(r.integer(tok[1], 0, 1 << 24));
  for (std::size_t i = 0; i < s; ++i) {
    if (!r.next(tok)) r.fail("expected " + std::to_string(s) + " set lines, found " + std::to_string(i));
    r.expect_count(tok, 1, "one hex edge mask");
    f.sets.push_back(parse_hex<EdgeSubset>(r, tok[0], static_cast<std::size_t>(host.m())));
  }
  require_end(r);
  return f;
}

void write_family(std::ostream& out, const DisconnectingFamily& f) {
  out << f.t << ' ' << f.sets.size() << '\n';
  for (const auto& e : f.sets) out << e.to_hex() << '\n';
}

void write_certificate(std::ostream& out, const Graph& h, const EdgeSubset& first, const EdgeSubset& second,
                       const CutCertificate& cut, const std::string& note) {
  out << "# " << note << '\n';
  out << "# W =";
  for (int v : cut.side) out << ' ' << v;
  out << "\n# crossing edges of W: " << cut.crossing.to_hex() << " (" << cut.crossing.count() << " edges)\n";
  out << "# symmetric difference of the two members below contains none of them\n";
  ConnectivityCode pair;
  pair.n = h.n();
  pair.edge_count = static_cast<std::size_t>(h.m());
  pair.members = {first, second};
  write_code(out, pair);
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return f;
}

template <class F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin);
  auto in = open_input(path);
  try {
    return f(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

Graph load_graph_file(const std::string& path, bool allow_multigraph) {
  return with_input(path, [&](std::istream& in) { return read_graph(in, allow_multigraph); });
}

EdgeAssignment load_assignment_file(const std::string& path) {
  return with_input(path, [](std::istream& in) { return read_assignment(in); });
}

ConnectivityCode load_code_file(const std::string& path) {
  return with_input(path, [](std::istream& in) { return read_code(in); });
}

DisconnectingFamily load_family_file(const std::string& path, const Graph& host) {
  return with_input(path, [&](std::istream& in) { return read_family(in, host); });
}

void save_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

nlohmann::ordered_json trace_to_json(const ConstructTrace& t) {
  nlohmann::ordered_json j;
  j["chosen_k"] = t.chosen_k ? nlohmann::ordered_json(*t.chosen_k) : nlohmann::ordered_json(nullptr);
  j["thinned_min_degree"] = t.thinned_min_degree;
  j["thinned_max_degree"] = t.thinned_max_degree;
  j["attempts_used"] = t.attempts_used;
  j["attempt_seed"] = t.attempt_seed;
  j["repair_rounds_used"] = t.repair_rounds_used;
  j["star_resamples"] = t.star_resamples;
  j["cut_resamples"] = t.cut_resamples;
  j["resampled_edge_count"] = t.resampled_edge_count;
  j["outcome"] = t.outcome;
  return j;
}

nlohmann::ordered_json cut_to_json(const CutCertificate& c) {
  nlohmann::ordered_json j;
  j["W"] = c.side;
  j["crossing"] = c.crossing.to_hex();
  j["crossing_count"] = c.crossing.count();
  j["connected_side"] = c.connected_side;
  return j;
}

nlohmann::ordered_json bound_report_to_json(const BoundReport& r) {
  auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
  nlohmann::ordered_json j;
  j["lower"] = opt(r.lower);
  j["upper"] = opt(r.upper);
  j["lower_log2"] = opt(r.lower_log2);
  j["upper_log2"] = opt(r.upper_log2);
  j["exact"] = opt(r.exact);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    nlohmann::ordered_json b;
    b["kind"] = e.kind;
    b["side"] = e.is_upper ? "upper" : "lower";
    b["value_log2"] = opt(e.value_log2);
    b["value"] = opt(e.value);
    b["certificate"] = e.certificate;
    arr.push_back(std::move(b));
  }
  j["bounds"] = std::move(arr);
  return j;
}

}  // namespace graphcode
