#include "gcmwb/dsl.hpp"

#include <algorithm>

namespace gcmwb {

std::string to_string(Command c) {
  switch (c) {
    case Command::Invariants:
      return "invariants";
    case Command::Graded:
      return "graded";
    case Command::Rees:
      return "rees";
    case Command::Suite:
      return "suite";
    case Command::GcmTest:
      return "gcm-test";
  }
  return "?";
}

std::optional<Command> command_from_string(std::string_view s) {
  for (Command c : {Command::Invariants, Command::Graded, Command::Rees, Command::Suite, Command::GcmTest})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

std::uint64_t to_uint(const Token& t, TokenStream& ts, std::uint64_t limit) {
  if (t.text.size() > 19) ts.fail("integer too large");
  const std::uint64_t v = std::stoull(t.text);
  if (v > limit) ts.fail("integer too large (limit " + std::to_string(limit) + ")");
  return v;
}

// F<p>, QQ, k, or nothing before '['.
std::uint32_t parse_field(TokenStream& ts) {
  if (ts.at_symbol('[')) return kDefaultCharacteristic;
  const Token t = ts.peek();
  if (t.kind != TokenKind::Ident) ts.fail("expected a field", {"F<p>", "QQ", "k", "'['"});
  if (t.text == "QQ") {
    ts.next();
    return 0;
  }
  if (t.text == "k") {
    ts.next();
    return kDefaultCharacteristic;
  }
  if (t.text.size() >= 2 && t.text[0] == 'F' &&
      std::all_of(t.text.begin() + 1, t.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    if (t.text.size() > 11) throw ParseError(t.line, t.column, "characteristic must be prime (too large)");
    const std::uint64_t p = std::stoull(t.text.substr(1));
    if (!is_prime(p) || p >= (1ULL << 31))
      throw ParseError(t.line, t.column, "characteristic must be prime (got " + t.text.substr(1) + ")");
    ts.next();
    return static_cast<std::uint32_t>(p);
  }
  ts.fail("unknown field '" + t.text + "'", {"F<p>", "QQ", "k"});
}

std::vector<Polynomial> parse_list(const RingPtr& ring, TokenStream& ts, bool require_in_max) {
  ts.expect_symbol('(');
  std::vector<Polynomial> out;
  if (ts.at_symbol(')')) {
    ts.next();
    return out;
  }
  for (;;) {
    const Token start = ts.peek();
    Polynomial p = parse_polynomial(ring, ts);
    if (require_in_max && !constant_term(p).is_zero())
      throw ParseError(start.line, start.column, "generator has nonzero constant term: " + p.to_string());
    out.push_back(std::move(p));
    if (ts.at_symbol(',')) {
      ts.next();
      continue;
    }
    if (ts.at_symbol(')')) {
      ts.next();
      return out;
    }
    ts.fail("unexpected token in list", {"','", "')'"});
  }
}

void parse_ring(JobSpec& spec, TokenStream& ts) {
  const std::string name = ts.expect_ident("ring name");
  ts.expect_symbol('=');
  const std::uint32_t p = parse_field(ts);
  ts.expect_symbol('[');
  std::vector<std::string> vars;
  for (;;) {
    const Token t = ts.peek();
    const std::string v = ts.expect_ident("variable name");
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      throw ParseError(t.line, t.column, "duplicate variable '" + v + "'");
    vars.push_back(v);
    if (ts.at_symbol(',')) {
      ts.next();
      continue;
    }
    ts.expect_symbol(']');
    break;
  }
  if (vars.size() > kMaxVariables) ts.fail("too many variables (limit " + std::to_string(kMaxVariables) + ")");
  const Field f = p == 0 ? Field::rationals() : Field::prime(p);
  spec.ring.name = name;
  spec.ring.ring = PolyRing::make(f, vars);
  spec.ring.relations.clear();
  if (ts.at_symbol('/')) {
    ts.next();
    spec.ring.relations = parse_list(spec.ring.ring, ts, true);
  }
}

void parse_run(JobSpec& spec, TokenStream& ts) {
  const Token t = ts.peek();
  std::string word = ts.expect_ident("command");
  if (word == "gcm" && ts.at_symbol('-')) {
    ts.next();
    const Token u = ts.peek();
    if (u.kind != TokenKind::Ident || u.text != "test") ts.fail("expected 'test'", {"test"});
    ts.next();
    word = "gcm-test";
  }
  auto cmd = command_from_string(word);
  if (!cmd)
    throw ParseError(t.line, t.column, "unknown command '" + word + "'",
                     {"invariants", "graded", "rees", "suite", "gcm-test"});
  spec.command = *cmd;
  spec.explicit_run = true;
  if (!ts.at_word("with")) return;
  ts.next();
  for (;;) {
    const Token k = ts.peek();
    const std::string key = ts.expect_ident("option");
    ts.expect_symbol('=');
    const Token v = ts.peek();
    if (v.kind != TokenKind::Integer) ts.fail("expected an integer", {"integer"});
    if (key == "n") {
      spec.n = static_cast<unsigned>(to_uint(v, ts, 1000));
    } else if (key == "m") {
      spec.m = static_cast<unsigned>(to_uint(v, ts, 1000));
    } else if (key == "seed") {
      spec.seed = to_uint(v, ts, ~0ULL);
    } else {
      throw ParseError(k.line, k.column, "unknown option '" + key + "'", {"n", "m", "seed"});
    }
    ts.next();
    if (!ts.at_symbol(',')) break;
    ts.next();
  }
}

}  // namespace

JobSpec parse_job(std::string_view text) {
  TokenStream ts(tokenize(text));
  JobSpec spec;
  bool have_ring = false;
  while (!ts.at_end()) {
    const Token t = ts.peek();
    if (ts.at_word("ring")) {
      if (have_ring) throw ParseError(t.line, t.column, "only one ring declaration is allowed");
      ts.next();
      parse_ring(spec, ts);
      have_ring = true;
    } else if (ts.at_word("params")) {
      if (!have_ring) throw ParseError(t.line, t.column, "params declared before the ring");
      ts.next();
      const Token nt = ts.peek();
      ParamsDecl decl;
      decl.name = ts.expect_ident("params name");
      for (const auto& other : spec.params)
        if (other.name == decl.name) throw ParseError(nt.line, nt.column, "duplicate params '" + decl.name + "'");
      ts.expect_symbol('=');
      decl.elements = parse_list(spec.ring.ring, ts, false);
      spec.params.push_back(std::move(decl));
    } else if (ts.at_word("run")) {
      if (spec.explicit_run) throw ParseError(t.line, t.column, "only one run statement is allowed");
      ts.next();
      parse_run(spec, ts);
    } else {
      ts.fail("unexpected " + (t.kind == TokenKind::Ident ? "'" + t.text + "'" : std::string("token")),
              {"ring", "params", "run"});
    }
    if (ts.at_end()) break;
    ts.expect_symbol(';');
  }
  if (!have_ring) {
    const Token& e = ts.peek();
    throw ParseError(e.line, e.column, "missing ring declaration", {"ring"});
  }
  return spec;
}

std::string serialize_job(const JobSpec& spec) {
  const auto& r = spec.ring;
  std::string s = "ring " + r.name + " = ";
  const auto p = r.ring->field().characteristic();
  s += p == 0 ? "QQ" : "F" + std::to_string(p);
  s += "[";
  const auto& vars = r.ring->variables();
  for (std::size_t k = 0; k < vars.size(); ++k) s += (k ? ", " : "") + vars[k];
  s += "] / (";
  for (std::size_t k = 0; k < r.relations.size(); ++k) s += (k ? ", " : "") + r.relations[k].to_string();
  s += ");\n";
  for (const auto& d : spec.params) {
    s += "params " + d.name + " = (";
    for (std::size_t k = 0; k < d.elements.size(); ++k) s += (k ? ", " : "") + d.elements[k].to_string();
    s += ");\n";
  }
  if (spec.explicit_run || spec.n || spec.m || spec.seed) {
    s += "run " + to_string(spec.command);
    std::vector<std::string> opts;
    if (spec.n) opts.push_back("n=" + std::to_string(*spec.n));
    if (spec.m) opts.push_back("m=" + std::to_string(*spec.m));
    if (spec.seed) opts.push_back("seed=" + std::to_string(*spec.seed));
    for (std::size_t k = 0; k < opts.size(); ++k) s += (k ? ", " : " with ") + opts[k];
    s += ";\n";
  }
  return s;
}

bool operator==(const JobSpec& a, const JobSpec& b) {
  if (a.ring.name != b.ring.name || !(*a.ring.ring == *b.ring.ring) || a.ring.relations != b.ring.relations)
    return false;
  if (a.params.size() != b.params.size()) return false;
  for (std::size_t k = 0; k < a.params.size(); ++k)
    if (a.params[k].name != b.params[k].name || a.params[k].elements != b.params[k].elements) return false;
  const bool run_a = a.explicit_run || a.n || a.m || a.seed, run_b = b.explicit_run || b.n || b.m || b.seed;
  return a.command == b.command && run_a == run_b && a.n == b.n && a.m == b.m && a.seed == b.seed;
}

}  // namespace gcmwb
