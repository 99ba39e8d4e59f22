#include "polyad/pgf.hpp"

#include <cctype>
#include <sstream>

#include "polyad/permutations.hpp"

namespace polyad {

namespace {

struct Token {
  std::string text;
  bool quoted = false;
  std::size_t line = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '"') {
      Token t{"", true, line};
      ++i;
      for (;;) {
        if (i >= text.size() || text[i] == '\n')
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": unterminated string");
        if (text[i] == '"') break;
        if (text[i] == '\\') {
          if (i + 1 >= text.size()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad escape");
          ++i;
        }
        t.text += text[i++];
      }
      ++i;
      out.push_back(std::move(t));
    } else {
      Token t{"", false, line};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#' && text[i] != '"')
        t.text += text[i++];
      out.push_back(std::move(t));
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool done() const { return pos_ >= toks_.size(); }
  bool peek(const std::string& word) const { return !done() && !toks_[pos_].quoted && toks_[pos_].text == word; }

  void expect(const std::string& word) {
    if (!peek(word)) fail("expected '" + word + "'");
    ++pos_;
  }
  std::uint64_t integer() {
    if (done() || toks_[pos_].quoted) fail("expected a decimal integer");
    const std::string& s = toks_[pos_].text;
    if (s.empty() || s.size() > 18) fail("expected a decimal integer");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a decimal integer, got '" + s + "'");
    ++pos_;
    return std::stoull(s);
  }
  std::string word() {
    if (done() || toks_[pos_].quoted) fail("expected a keyword");
    return toks_[pos_++].text;
  }
  std::string string() {
    if (done() || !toks_[pos_].quoted) fail("expected a quoted string");
    return toks_[pos_++].text;
  }
  std::vector<Elem> elements(std::size_t count, std::size_t bound) {
    std::vector<Elem> out(count);
    for (auto& v : out) {
      const std::uint64_t x = integer();
      if (x >= bound) reject("element " + std::to_string(x) + " out of range");
      v = static_cast<Elem>(x);
    }
    return out;
  }
  // At the token about to be read.
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t line = done() ? (toks_.empty() ? 1 : toks_.back().line) : toks_[pos_].line;
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
  }
  // At the token just read.
  [[noreturn]] void reject(const std::string& what) const {
    const std::size_t line = pos_ == 0 ? 1 : toks_[pos_ - 1].line;
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct Header {
  Backing kind = Backing::Table;
  int arity = 2;
  std::size_t size = 0;
  std::vector<std::string> labels;
};

Backing parse_kind(Reader& rd) {
  const std::string k = rd.word();
  for (Backing b : {Backing::Table, Backing::Derived, Backing::Gluskin, Backing::Coset, Backing::Product,
                    Backing::Permutation})
    if (k == backing_name(b)) return b;
  rd.reject("unknown kind '" + k + "'");
}

std::shared_ptr<const BinaryGroup> parse_base(Reader& rd) {
  rd.expect("group");
  const std::uint64_t m = rd.integer();
  if (m == 0 || m > 65536) rd.reject("group order out of range");
  std::vector<std::string> labels;
  if (rd.peek("group_labels")) {
    rd.expect("group_labels");
    for (std::uint64_t i = 0; i < m; ++i) labels.push_back(rd.string());
  }
  rd.expect("mul");
  std::vector<Elem> mul = rd.elements(m * m, m);
  return std::make_shared<const BinaryGroup>(m, std::move(mul), std::move(labels));
}

std::shared_ptr<Recipe> parse_document(Reader& rd, Header& h) {
  rd.expect("format_version");
  if (rd.integer() != 1) rd.reject("unsupported format_version");
  rd.expect("kind");
  h.kind = parse_kind(rd);
  rd.expect("arity");
  const std::uint64_t n = rd.integer();
  if (n < 2 || n > 64) rd.reject("arity must be in 2..64");
  h.arity = static_cast<int>(n);
  rd.expect("size");
  h.size = rd.integer();
  if (h.size == 0) rd.reject("size must be positive");
  if (rd.peek("labels")) {
    rd.expect("labels");
    for (std::size_t i = 0; i < h.size; ++i) h.labels.push_back(rd.string());
  }
  auto r = std::make_shared<Recipe>();
  r->kind = h.kind;
  r->arity = h.arity;
  switch (h.kind) {
    case Backing::Table: {
      rd.expect("table");
      const std::uint64_t cells = ipow(h.size, static_cast<unsigned>(h.arity));
      if (cells > limits().table_cap) rd.reject("table exceeds table_cap");
      r->table = rd.elements(cells, h.size);
      r->labels = h.labels;
      break;
    }
    case Backing::Derived:
      r->base = parse_base(rd);
      rd.expect("central");
      r->central = rd.elements(1, r->base->size())[0];
      break;
    case Backing::Gluskin:
      r->base = parse_base(rd);
      rd.expect("beta");
      r->beta = rd.elements(r->base->size(), r->base->size());
      rd.expect("d");
      r->d = rd.elements(1, r->base->size())[0];
      break;
    case Backing::Coset: {
      r->base = parse_base(rd);
      rd.expect("subgroup");
      for (Elem x = 0; x < r->base->size(); ++x) {
        const std::uint64_t bit = rd.integer();
        if (bit > 1) rd.reject("subgroup bits must be 0 or 1");
        if (bit) r->subgroup.push_back(x);
      }
      rd.expect("generator");
      r->generator = rd.elements(1, r->base->size())[0];
      break;
    }
    case Backing::Product: {
      rd.expect("components");
      const std::uint64_t count = rd.integer();
      if (count == 0 || count > 16) rd.reject("component count out of range");
      for (std::uint64_t i = 0; i < count; ++i) {
        rd.expect("begin");
        Header child;
        r->children.push_back(parse_document(rd, child));
        rd.expect("end");
      }
      break;
    }
    case Backing::Permutation: {
      rd.expect("points");
      r->q = rd.integer();
      rd.expect("positions");
      const std::uint64_t pos = rd.integer();
      if (pos < 2 || pos > 16) rd.reject("positions must be in 2..16");
      r->positions = static_cast<int>(pos);
      rd.expect("sigma");
      const std::string cyc = rd.string();
      try {
        r->sigma = parse_cycles(cyc, static_cast<std::size_t>(pos - 1));
      } catch (const Error& e) {
        rd.reject(e.what());
      }
      break;
    }
  }
  return r;
}

std::shared_ptr<Recipe> parse_top(const std::string& text, Header& h) {
  Reader rd(tokenize(text));
  auto r = parse_document(rd, h);
  if (!rd.done()) rd.fail("trailing content");
  return r;
}

void check_header(const Header& h, const NaryGroup& g) {
  if (g.size() != h.size) throw Error(ErrorCode::InvalidInput, "size " + std::to_string(h.size) + " does not match the payload (" + std::to_string(g.size()) + ")");
  if (g.arity() != h.arity) throw Error(ErrorCode::InvalidInput, "arity does not match the payload");
  if (!h.labels.empty() && h.kind != Backing::Table && h.labels != g.groupoid().labels())
    throw Error(ErrorCode::InvalidInput, "labels do not match the constructed carrier");
}

void write_rows(std::ostringstream& os, const std::vector<Elem>& v, std::size_t width) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << v[i];
    os << ((i + 1) % width == 0 || i + 1 == v.size() ? '\n' : ' ');
  }
}

void write_labels(std::ostringstream& os, const char* key, const std::vector<std::string>& labels) {
  if (labels.empty()) return;
  os << key;
  for (const auto& l : labels) os << ' ' << quote(l);
  os << '\n';
}

void write_base(std::ostringstream& os, const BinaryGroup& b) {
  os << "group " << b.size() << '\n';
  write_labels(os, "group_labels", b.labels());
  os << "mul\n";
  write_rows(os, b.table(), b.size());
}

std::size_t recipe_size(const Recipe& r) {
  switch (r.kind) {
    case Backing::Table: {
      std::size_t k = 0;
      while (ipow(k + 1, static_cast<unsigned>(r.arity)) <= r.table.size()) ++k;
      return k;
    }
    case Backing::Derived:
    case Backing::Gluskin: return r.base->size();
    case Backing::Coset: return r.subgroup.size();
    case Backing::Product: {
      std::size_t k = 1;
      for (const auto& c : r.children) k *= recipe_size(*c);
      return k;
    }
    case Backing::Permutation: {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= r.q; ++i) f *= i;
      return static_cast<std::size_t>(ipow(f, static_cast<unsigned>(r.positions - 1)));
    }
  }
  return 0;
}

void write_document(std::ostringstream& os, const Recipe& r, const std::vector<std::string>& labels) {
  const std::size_t k = recipe_size(r);
  os << "format_version 1\n";
  os << "kind " << backing_name(r.kind) << '\n';
  os << "arity " << r.arity << '\n';
  os << "size " << k << '\n';
  write_labels(os, "labels", labels);
  switch (r.kind) {
    case Backing::Table:
      os << "table\n";
      write_rows(os, r.table, k);
      break;
    case Backing::Derived:
      write_base(os, *r.base);
      os << "central " << r.central << '\n';
      break;
    case Backing::Gluskin:
      write_base(os, *r.base);
      os << "beta\n";
      write_rows(os, r.beta, r.base->size());
      os << "d " << r.d << '\n';
      break;
    case Backing::Coset: {
      write_base(os, *r.base);
      const Subset h = Subset::of(r.base->size(), r.subgroup);
      std::vector<Elem> bits;
      for (Elem x = 0; x < r.base->size(); ++x) bits.push_back(h.contains(x) ? 1 : 0);
      os << "subgroup\n";
      write_rows(os, bits, r.base->size());
      os << "generator " << r.generator << '\n';
      break;
    }
    case Backing::Product:
      os << "components " << r.children.size() << '\n';
      for (const auto& c : r.children) {
        os << "begin\n";
        write_document(os, *c, c->kind == Backing::Table ? c->labels : std::vector<std::string>{});
        os << "end\n";
      }
      break;
    case Backing::Permutation: {
      std::string cyc = cycle_notation(r.sigma);
      os << "points " << r.q << '\n';
      os << "positions " << r.positions << '\n';
      os << "sigma " << quote(cyc) << '\n';
      break;
    }
  }
}

const char* kHeader = "# polyad group file\n";

}  // namespace

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string save_pgf(const Recipe& r) {
  std::ostringstream os;
  os << kHeader;
  write_document(os, r, r.kind == Backing::Table ? r.labels : std::vector<std::string>{});
  return os.str();
}

std::string save_pgf(const NaryGroup& g) {
  const auto& r = g.groupoid().recipe();
  std::ostringstream os;
  os << kHeader;
  if (!r) {
    Recipe t;
    t.arity = g.arity();
    t.table = g.groupoid().table();
    t.labels = g.groupoid().labels();
    write_document(os, t, t.labels);
  } else {
    write_document(os, *r, g.groupoid().labels());
  }
  return os.str();
}

NaryGroup load_pgf(const std::string& text, NaryGroup::Check check) {
  Header h;
  auto r = parse_top(text, h);
  NaryGroup g = realize(*r, check);
  check_header(h, g);
  return g;
}

Groupoid load_pgf_groupoid(const std::string& text) {
  Header h;
  auto r = parse_top(text, h);
  if (h.kind == Backing::Table) {
    if (r->table.size() != ipow(h.size, static_cast<unsigned>(h.arity)))
      throw Error(ErrorCode::InvalidInput, "table length does not match size^arity");
    Groupoid gr = Groupoid::from_table(h.size, h.arity, r->table, r->labels);
    gr.set_recipe(Backing::Table, r);
    return gr;
  }
  NaryGroup g = realize(*r);
  check_header(h, g);
  return g.groupoid();
}

std::string table_pgf(std::size_t k, int n, const std::vector<Elem>& table, const std::vector<std::string>& labels,
                      const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << kHeader;
  for (const auto& c : comments) os << "# " << c << '\n';
  Recipe t;
  t.arity = n;
  t.table = table;
  t.labels = labels;
  (void)k;
  write_document(os, t, labels);
  return os.str();
}

}  // namespace polyad
