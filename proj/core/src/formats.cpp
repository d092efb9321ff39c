#include "gtsp/formats.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace gtsp {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

Rational parse_value(std::string_view tok, std::size_t line) {
  try {
    return Rational::parse(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

int parse_header(const std::vector<Line>& lines, std::size_t& pos, std::size_t last_line) {
  if (pos >= lines.size()) throw ParseError(last_line, "missing 'n' header");
  const Line& h = lines[pos++];
  if (h.tokens.size() != 2 || h.tokens[0] != "n") throw ParseError(h.number, "expected header 'n <vertex count>'");
  const long n = parse_int(h.tokens[1], h.number, "vertex count");
  if (n < 3 || n > 64) throw ParseError(h.number, "vertex count must be in [3, 64]");
  return static_cast<int>(n);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(std::string_view keyword, std::size_t arity) {
    if (pos_ >= lines_.size()) throw ParseError(last_line(), "expected '" + std::string(keyword) + "'");
    const Line& l = lines_[pos_++];
    if (l.tokens.front() != keyword) {
      throw ParseError(l.number, "expected '" + std::string(keyword) + "', got '" + std::string(l.tokens.front()) + "'");
    }
    if (arity != SIZE_MAX && l.tokens.size() != arity + 1) {
      throw ParseError(l.number, "'" + std::string(keyword) + "' expects " + std::to_string(arity) + " values");
    }
    return l;
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

Vertex parse_vertex(std::string_view tok, std::size_t line, int n) {
  const long v = parse_int(tok, line, "vertex");
  if (v < 1 || v > n) throw ParseError(line, "vertex " + std::string(tok) + " outside [" + std::to_string(n) + "]");
  return static_cast<Vertex>(v);
}

std::size_t parse_count(const Line& l) {
  const long k = parse_int(l.tokens[1], l.number, "count");
  if (k < 0) throw ParseError(l.number, "negative count");
  return static_cast<std::size_t>(k);
}

HamiltonianCycle parse_cycle(const Line& l, std::size_t first, int n) {
  if (l.tokens.size() != first + static_cast<std::size_t>(n)) {
    throw ParseError(l.number, "cycle must list exactly " + std::to_string(n) + " vertices");
  }
  std::vector<Vertex> order;
  for (std::size_t i = first; i < l.tokens.size(); ++i) order.push_back(parse_vertex(l.tokens[i], l.number, n));
  try {
    return HamiltonianCycle(std::move(order));
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.number, e.what());
  }
}

ShortcutTriple parse_triple(const Line& l, std::size_t first, int n) {
  try {
    return ShortcutTriple(parse_vertex(l.tokens[first], l.number, n), parse_vertex(l.tokens[first + 1], l.number, n),
                          parse_vertex(l.tokens[first + 2], l.number, n));
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.number, e.what());
  }
}

SetKind parse_set(const Line& l) {
  const auto set = parse_set_kind(std::string(l.tokens[1]));
  if (!set) throw ParseError(l.number, "unknown set '" + std::string(l.tokens[1]) + "'");
  return *set;
}

std::string cycle_text(const HamiltonianCycle& c) {
  std::string s;
  for (Vertex v : c.order()) s += " " + std::to_string(v);
  return s;
}

std::string triple_text(const ShortcutTriple& t) {
  return " " + std::to_string(t.u()) + " " + std::to_string(t.w()) + " " + std::to_string(t.v());
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

EdgeVector parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t pos = 0;
  const int n = parse_header(lines, pos, lines.empty() ? 1 : lines.back().number);
  EdgeVector x{EdgeSpace(n)};
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'u v value'");
    const Vertex u = parse_vertex(l.tokens[0], l.number, n);
    const Vertex v = parse_vertex(l.tokens[1], l.number, n);
    if (u == v) throw ParseError(l.number, "loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    x.at(u, v) += parse_value(l.tokens[2], l.number);
  }
  return x;
}

Multigraph parse_multigraph(std::string_view text) {
  const auto lines = tokenize(text);
  for (const Line& l : lines) {
    if (l.tokens.size() == 3) {
      const Rational value = parse_value(l.tokens[2], l.number);
      if (!value.is_integer()) throw ParseError(l.number, "multiplicity must be an integer");
      if (value.sign() < 0) throw ParseError(l.number, "negative multiplicity");
    }
  }
  return Multigraph::from_edge_vector(parse_instance(text));
}

std::string print_instance(const EdgeVector& x) {
  std::string out = "n " + std::to_string(x.space().n()) + "\n";
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e].is_zero()) continue;
    const Edge edge = x.space().edge(e);
    out += std::to_string(edge.u) + " " + std::to_string(edge.v) + " " + x[e].to_string() + "\n";
  }
  return out;
}

std::string print_instance(const Multigraph& g) { return print_instance(g.to_edge_vector()); }

std::string print_certificate(const Certificate& cert) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DecompositionCertificate>) {
          os << "certificate decomposition\n";
          os << "n " << c.base_cycle.n() << "\n";
          os << "cycle" << cycle_text(c.base_cycle) << "\n";
          os << "steps " << c.steps.size() << "\n";
          for (const auto& t : c.steps) os << "step" << triple_text(t) << "\n";
        } else if constexpr (std::is_same_v<T, MembershipInside>) {
          os << "certificate membership-inside\n";
          os << "set " << to_string(c.set) << "\n";
          os << "n " << c.n << "\n";
          os << "tours " << c.combination.tours.size() << "\n";
          for (const auto& t : c.combination.tours) os << "tour " << t.weight << cycle_text(t.cycle) << "\n";
          os << "shortcuts " << c.combination.shortcuts.size() << "\n";
          for (const auto& t : c.combination.shortcuts) os << "shortcut " << t.weight << triple_text(t.triple) << "\n";
        } else if constexpr (std::is_same_v<T, MembershipOutside>) {
          os << "certificate membership-outside\n";
          os << "set " << to_string(c.set) << "\n";
          os << "n " << c.separator.a.space().n() << "\n";
          os << "alpha " << c.separator.alpha << "\n";
          os << "normal";
          for (const auto& v : c.separator.a.coords()) os << " " << v;
          os << "\n";
        } else {
          os << "certificate lp-farkas\n";
          os << "rows " << c.y.size() << "\n";
          os << "y";
          for (const auto& v : c.y) os << " " << v;
          os << "\n";
        }
      },
      cert);
  os << "end\n";
  return os.str();
}

Certificate parse_certificate(std::string_view text) {
  Reader r(text);
  const Line& head = r.next("certificate", 1);
  const std::string_view kind = head.tokens[1];
  std::optional<Certificate> out;

  if (kind == "decomposition") {
    const Line& nl = r.next("n", 1);
    const int n = static_cast<int>(parse_int(nl.tokens[1], nl.number, "vertex count"));
    if (n < 3) throw ParseError(nl.number, "vertex count must be at least 3");
    HamiltonianCycle cycle = parse_cycle(r.next("cycle", static_cast<std::size_t>(n)), 1, n);
    const std::size_t k = parse_count(r.next("steps", 1));
    std::vector<ShortcutTriple> steps;
    for (std::size_t i = 0; i < k; ++i) steps.push_back(parse_triple(r.next("step", 3), 1, n));
    out = DecompositionCertificate{std::move(cycle), std::move(steps)};
  } else if (kind == "membership-inside") {
    const SetKind set = parse_set(r.next("set", 1));
    const Line& nl = r.next("n", 1);
    const int n = static_cast<int>(parse_int(nl.tokens[1], nl.number, "vertex count"));
    if (n < 3) throw ParseError(nl.number, "vertex count must be at least 3");
    InsideCertificate comb;
    const std::size_t tours = parse_count(r.next("tours", 1));
    for (std::size_t i = 0; i < tours; ++i) {
      const Line& l = r.next("tour", 1 + static_cast<std::size_t>(n));
      comb.tours.push_back({parse_cycle(l, 2, n), parse_value(l.tokens[1], l.number)});
    }
    const std::size_t shortcuts = parse_count(r.next("shortcuts", 1));
    for (std::size_t i = 0; i < shortcuts; ++i) {
      const Line& l = r.next("shortcut", 4);
      comb.shortcuts.push_back({parse_triple(l, 2, n), parse_value(l.tokens[1], l.number)});
    }
    out = MembershipInside{set, n, std::move(comb)};
  } else if (kind == "membership-outside") {
    const SetKind set = parse_set(r.next("set", 1));
    const Line& nl = r.next("n", 1);
    const int n = static_cast<int>(parse_int(nl.tokens[1], nl.number, "vertex count"));
    if (n < 3) throw ParseError(nl.number, "vertex count must be at least 3");
    const Line& al = r.next("alpha", 1);
    Rational alpha = parse_value(al.tokens[1], al.number);
    const EdgeSpace space(n);
    const Line& nm = r.next("normal", space.dim());
    EdgeVector a(space);
    for (std::size_t e = 0; e < space.dim(); ++e) a[e] = parse_value(nm.tokens[e + 1], nm.number);
    out = MembershipOutside{set, {std::move(a), std::move(alpha)}};
  } else if (kind == "lp-farkas") {
    const std::size_t rows = parse_count(r.next("rows", 1));
    const Line& yl = r.next("y", rows);
    FarkasCertificate f;
    for (std::size_t i = 0; i < rows; ++i) f.y.push_back(parse_value(yl.tokens[i + 1], yl.number));
    out = std::move(f);
  } else {
    throw ParseError(head.number, "unknown certificate kind '" + std::string(kind) + "'");
  }

  r.next("end", 0);
  if (!r.done()) throw ParseError(r.last_line(), "trailing content after 'end'");
  return std::move(*out);
}

Certificate certificate_of(const MembershipAnswer& answer, int n) {
  if (answer.verdict == Verdict::Inside) return MembershipInside{answer.set, n, answer.inside};
  return MembershipOutside{answer.set, *answer.separator};
}

}  // namespace gtsp
