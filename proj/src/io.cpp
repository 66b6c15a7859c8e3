#include "seqcm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace seqcm {

namespace {

struct Parser {
  const std::string& src;
  const RingPtr& ring;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(msg + " at position " + std::to_string(pos) + " in '" + src + "'");
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(src.substr(start, pos - start));
  }

  std::optional<std::size_t> variable() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= src.size()) return std::nullopt;
    char c = src[pos];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string name = src.substr(start, pos - start);
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      if (ring->variables[i] == name) return i;
    pos = start;
    fail("unknown variable '" + name + "'");
  }

  // term := factor ('*' factor)*; factor := INT | VAR ('^' INT)?
  Polynomial term() {
    Polynomial acc = Polynomial::constant(ring, 1);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        acc = acc.scaled(fp::from_int(integer(), ring->characteristic));
      } else if (auto v = variable()) {
        unsigned e = 1;
        if (accept('^')) {
          long long k = integer();
          if (k < 0 || k > 1000) fail("exponent out of range");
          e = static_cast<unsigned>(k);
        }
        acc = acc * Polynomial::variable(ring, *v).pow(e);
      } else if (first) {
        fail("expected a coefficient or a variable");
      } else {
        break;
      }
      first = false;
      if (!accept('*')) break;
    }
    return acc;
  }

  Polynomial polynomial() {
    Polynomial sum(ring);
    bool negate = false;
    skip_ws();
    if (accept('-'))
      negate = true;
    else
      accept('+');
    while (true) {
      Polynomial t = term();
      sum = negate ? sum - t : sum + t;
      skip_ws();
      if (accept('-'))
        negate = true;
      else if (accept('+'))
        negate = false;
      else
        break;
    }
    skip_ws();
    if (pos != src.size()) fail("trailing input");
    return sum;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Parser p{text, ring};
  return p.polynomial();
}

IdealFile parse_ideal_text(const std::string& text, const std::string& origin,
                           std::optional<std::uint64_t> prime_override, unsigned degree_cap) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<std::string> vars;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> weights;
  std::vector<std::string> gen_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto starts = [&](const char* key) { return t.rfind(key, 0) == 0; };
    try {
      if (starts("vars:")) {
        vars = split_list(t.substr(5));
      } else if (starts("char:")) {
        p = std::stoull(trim(t.substr(5)));
      } else if (starts("weights:")) {
        for (const auto& w : split_list(t.substr(8))) weights.push_back(std::stoull(w));
      } else {
        gen_lines.push_back(t);
      }
    } catch (const std::exception& e) {
      throw InputError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (vars.empty()) throw InputError(origin + ": missing 'vars:' line");
  if (p == 0 && !prime_override) throw InputError(origin + ": missing 'char:' line");
  if (prime_override) p = *prime_override;
  IdealFile file;
  file.ring = make_ring(vars, p, weights, degree_cap);
  std::vector<Polynomial> gens;
  for (const auto& g : gen_lines) {
    try {
      gens.push_back(parse_polynomial(g, file.ring));
    } catch (const InputError& e) {
      throw InputError(origin + ": " + e.what());
    }
  }
  file.ideal = Ideal(file.ring, std::move(gens));
  return file;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

IdealFile parse_ideal_file(const std::filesystem::path& path,
                           std::optional<std::uint64_t> prime_override, unsigned degree_cap) {
  return parse_ideal_text(read_file(path), path.string(), prime_override, degree_cap);
}

SimplicialComplex parse_complex_json(const std::string& text, bool allow_ghost_vertices) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("complex JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("facets"))
    throw InputError("complex JSON needs 'vertices' and 'facets'");
  int n = j["vertices"].get<int>();
  std::vector<std::vector<int>> facets;
  for (const auto& f : j["facets"]) facets.push_back(f.get<std::vector<int>>());
  return validate_complex(n, std::move(facets), allow_ghost_vertices);
}

SimplicialComplex parse_complex_file(const std::filesystem::path& path,
                                     bool allow_ghost_vertices) {
  return parse_complex_json(read_file(path), allow_ghost_vertices);
}

ModulePresentation parse_presentation_file(const std::filesystem::path& path,
                                           std::optional<std::uint64_t> prime_override,
                                           unsigned degree_cap) {
  std::istringstream in(read_file(path));
  const std::filesystem::path base = path.parent_path();
  std::string line;
  int lineno = 0;
  std::optional<IdealFile> defining;
  std::vector<std::pair<Ideal, int>> components;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto where = path.string() + ":" + std::to_string(lineno);
    if (t.rfind("ideal:", 0) == 0) {
      defining = parse_ideal_file(base / trim(t.substr(6)), prime_override, degree_cap);
    } else if (t.rfind("component:", 0) == 0) {
      std::istringstream rest(trim(t.substr(10)));
      std::string file;
      int dim;
      if (!(rest >> file >> dim)) throw InputError(where + ": expected '<file> <dim>'");
      IdealFile comp = parse_ideal_file(base / file, prime_override, degree_cap);
      if (defining && !same_ring(defining->ring, comp.ring))
        throw InputError(where + ": component ring differs from the defining ring");
      components.emplace_back(comp.ideal, dim);
    } else {
      throw InputError(where + ": expected 'ideal:' or 'component:'");
    }
  }
  if (!defining) throw InputError(path.string() + ": missing 'ideal:' line");
  return ModulePresentation::make(defining->ideal, std::move(components));
}

std::vector<Polynomial> parse_sop_file(const std::filesystem::path& path, const RingPtr& ring) {
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<Polynomial> elements;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    elements.push_back(parse_polynomial(t, ring));
  }
  if (elements.empty()) throw InputError(path.string() + ": no parameter elements");
  return elements;
}

}  // namespace seqcm
