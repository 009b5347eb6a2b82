// File formats: groups, homomorphisms, representations.
//
// All formats are line-oriented "key = value" documents with '#' comments.
// Parsers are strict: unknown keys, duplicate keys, malformed lines and
// trailing garbage are errors reported with file, line and column.
// The exact grammar is documented in docs/formats.md.

#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "indres/rep.hpp"

namespace indres {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, int line, int col, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        file_(file), line_(line), col_(col) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string file_;
  int line_, col_;
};

[[noreturn]] inline void parse_fail(const std::string& file, int line, int col,
                                    const std::string& msg) {
  throw ParseError(file, line, col, msg);
}

struct KvLine {
  std::string key, value;
  int line = 0;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' ||
          c == ']'))
      return false;
  return true;
}

}  // namespace detail

// Split a document into key = value lines; anything else is an error.
inline std::vector<KvLine> parse_kv_document(const std::string& text, const std::string& file) {
  std::vector<KvLine> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      parse_fail(file, lineno, int(raw.find_first_not_of(" \t") + 1),
                 "expected 'key = value', got '" + line + "'");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (!detail::valid_key(key))
      parse_fail(file, lineno, 1, "bad key '" + key + "'");
    out.push_back({std::move(key), std::move(value), lineno});
  }
  return out;
}

inline std::vector<std::string> split_ws_or_comma(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline long parse_long_strict(const std::string& tok, const std::string& file, int line) {
  if (tok.empty()) parse_fail(file, line, 1, "expected an integer");
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) parse_fail(file, line, 1, "expected an integer, got '" + tok + "'");
  long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      parse_fail(file, line, int(i + 1), "expected an integer, got '" + tok + "'");
    v = v * 10 + (tok[i] - '0');
  }
  return tok[0] == '-' ? -v : v;
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& file, int line) {
  std::vector<int> out;
  for (const std::string& t : split_ws_or_comma(s)) out.push_back(int(parse_long_strict(t, file, line)));
  return out;
}

// Matrix literal: rows separated by ';', entries by spaces or commas, in
// the scalar literal syntax of the field.
inline Matrix parse_matrix_value(const std::string& s, int rows, int cols,
                                 const FieldDescriptor& f, const std::string& file, int line) {
  std::vector<std::string> row_texts;
  {
    std::string cur;
    for (char c : s) {
      if (c == ';') {
        row_texts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    row_texts.push_back(cur);
  }
  if (rows == 0) {
    // a 0 x c matrix is written as an empty value
    if (!detail::trim(s).empty()) parse_fail(file, line, 1, "expected an empty matrix");
    return Matrix(0, cols, f);
  }
  if (int(row_texts.size()) != rows)
    parse_fail(file, line, 1, "expected " + std::to_string(rows) + " matrix rows, got " +
                                  std::to_string(row_texts.size()));
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i) {
    std::vector<std::string> toks = split_ws_or_comma(row_texts[std::size_t(i)]);
    if (int(toks.size()) != cols)
      parse_fail(file, line, 1, "matrix row " + std::to_string(i) + " has " +
                                    std::to_string(toks.size()) + " entries, want " +
                                    std::to_string(cols));
    for (int j = 0; j < cols; ++j) {
      try {
        m.at(i, j) = FieldScalar::parse(f, toks[std::size_t(j)]);
      } catch (const std::exception& e) {
        parse_fail(file, line, 1, e.what());
      }
    }
  }
  return m;
}

inline std::string matrix_value(const Matrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += " ; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += m.at(i, j).str();
    }
  }
  return s;
}

// Matrix literal with an explicit shape prefix, "RxC: entries".
inline std::string matrix_literal(const Matrix& m) {
  return m.shape_str() + ": " + matrix_value(m);
}

inline Matrix parse_matrix_literal(const std::string& s, const FieldDescriptor& f,
                                   const std::string& file, int line) {
  std::size_t colon = s.find(':');
  if (colon == std::string::npos) parse_fail(file, line, 1, "matrix literal needs 'RxC:' prefix");
  std::string shape = detail::trim(s.substr(0, colon));
  std::size_t x = shape.find('x');
  if (x == std::string::npos) parse_fail(file, line, 1, "matrix literal needs 'RxC:' prefix");
  int rows = int(parse_long_strict(shape.substr(0, x), file, line));
  int cols = int(parse_long_strict(shape.substr(x + 1), file, line));
  return parse_matrix_value(s.substr(colon + 1), rows, cols, f, file, line);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open file for writing: " + path);
  out << content;
}

// Key-value cursor enforcing "every key consumed exactly once".
class KvDoc {
 public:
  KvDoc(std::vector<KvLine> lines, std::string file)
      : lines_(std::move(lines)), file_(std::move(file)) {}

  const std::string& file() const { return file_; }

  bool has(const std::string& key) const {
    for (const auto& l : lines_)
      if (l.key == key) return true;
    return false;
  }

  const KvLine& get(const std::string& key) {
    const KvLine* found = nullptr;
    for (auto& l : lines_)
      if (l.key == key) {
        if (found) parse_fail(file_, l.line, 1, "duplicate key '" + key + "'");
        found = &l;
      }
    if (!found) parse_fail(file_, 1, 1, "missing key '" + key + "'");
    used_.push_back(key);
    return *found;
  }

  void finish() const {
    for (const auto& l : lines_) {
      bool ok = false;
      for (const auto& u : used_)
        if (l.key == u) ok = true;
      if (!ok) parse_fail(file_, l.line, 1, "unexpected key '" + l.key + "'");
    }
  }

 private:
  std::vector<KvLine> lines_;
  std::string file_;
  std::vector<std::string> used_;
};

// --- group files ----------------------------------------------------------

inline GroupPtr parse_group_text(const std::string& text, const std::string& file) {
  KvDoc doc(parse_kv_document(text, file), file);
  const KvLine& kind = doc.get("kind");
  GroupPtr g;
  if (kind.value == "cayley") {
    int order = int(parse_long_strict(doc.get("order").value, file, kind.line));
    const KvLine& tbl = doc.get("table");
    std::vector<std::vector<int>> rows;
    std::string cur;
    std::vector<std::string> row_texts;
    for (char c : tbl.value) {
      if (c == ';') {
        row_texts.push_back(cur);
        cur.clear();
      } else
        cur += c;
    }
    row_texts.push_back(cur);
    if (int(row_texts.size()) != order)
      parse_fail(file, tbl.line, 1, "table must have " + std::to_string(order) + " rows");
    for (const auto& rt : row_texts) rows.push_back(parse_int_list(rt, file, tbl.line));
    std::vector<int> gens;
    if (doc.has("generators")) gens = parse_int_list(doc.get("generators").value, file, 1);
    doc.finish();
    try {
      GroupPtr base = group_from_cayley(rows);
      if (!gens.empty()) {
        FiniteGroup copy = *base;
        copy.declared_gens = gens;
        copy.gens.clear();
        g = detail::finish_group(std::move(copy));
      } else {
        g = base;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      parse_fail(file, kind.line, 1, e.what());
    }
  } else if (kind.value == "permutation") {
    const KvLine& deg = doc.get("degree");
    int degree = int(parse_long_strict(deg.value, file, deg.line));
    const KvLine& gens = doc.get("generators");
    std::vector<std::vector<int>> perms;
    // split generator list on commas at top level (commas inside cycles
    // are part of the cycle syntax, so split on ")," boundaries)
    std::vector<std::string> parts;
    {
      std::string cur;
      int depth = 0;
      for (char c : gens.value) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
          parts.push_back(cur);
          cur.clear();
        } else
          cur += c;
      }
      if (!detail::trim(cur).empty()) parts.push_back(cur);
    }
    doc.finish();
    try {
      for (const auto& p : parts) perms.push_back(parse_cycles(detail::trim(p), degree));
      g = group_from_permutations(degree, perms).group;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      parse_fail(file, gens.line, 1, e.what());
    }
  } else {
    parse_fail(file, kind.line, 1, "kind must be 'cayley' or 'permutation'");
  }
  return g;
}

inline std::string group_file_text(const FiniteGroup& g) {
  std::ostringstream os;
  if (!g.perms.empty() && !g.declared_gens.empty()) {
    os << "kind = permutation\n";
    os << "degree = " << g.perms[0].size() << "\n";
    os << "generators = ";
    for (std::size_t i = 0; i < g.declared_gens.size(); ++i) {
      if (i) os << ", ";
      os << cycle_string(g.perms[std::size_t(g.declared_gens[i])]);
    }
    os << "\n";
  } else {
    os << "kind = cayley\n";
    os << "order = " << g.n << "\n";
    os << "table = ";
    for (int a = 0; a < g.n; ++a) {
      if (a) os << " ; ";
      for (int b = 0; b < g.n; ++b) {
        if (b) os << " ";
        os << g.mul(a, b);
      }
    }
    os << "\n";
    if (!g.declared_gens.empty()) {
      os << "generators =";
      for (int x : g.declared_gens) os << " " << x;
      os << "\n";
    }
  }
  return os.str();
}

// --- reference resolution ---------------------------------------------------

struct LoadedHom {
  GroupHom hom;
  std::string domain_ref, codomain_ref;  // as written in the file
};

// Group references are either file paths (relative to the referring file)
// or "builtin:NAME". The loader caches by resolved reference.
struct Loader {
  std::function<GroupPtr(const std::string&)> builtin_group;            // may be empty
  std::function<const LoadedHom*(const std::string&)> builtin_hom;      // may be empty

  std::map<std::string, GroupPtr> group_cache;

  static std::string resolve_path(const std::string& ref, const std::string& base_dir) {
    std::filesystem::path p(ref);
    if (p.is_absolute() || base_dir.empty()) return p.lexically_normal().string();
    return (std::filesystem::path(base_dir) / p).lexically_normal().string();
  }

  GroupPtr load_group(const std::string& ref, const std::string& base_dir) {
    if (ref.rfind("builtin:", 0) == 0) {
      std::string name = ref.substr(8);
      if (!builtin_group) fail("no builtin groups available for reference '" + ref + "'");
      GroupPtr g = builtin_group(name);
      if (!g) fail("unknown builtin group '" + name + "'");
      return g;
    }
    std::string path = resolve_path(ref, base_dir);
    auto it = group_cache.find(path);
    if (it != group_cache.end()) return it->second;
    GroupPtr g = parse_group_text(read_file(path), path);
    group_cache.emplace(path, g);
    return g;
  }
};

// --- hom files --------------------------------------------------------------

inline LoadedHom parse_hom_text(const std::string& text, const std::string& file,
                                Loader& loader, const std::string& base_dir) {
  KvDoc doc(parse_kv_document(text, file), file);
  const KvLine& dom_line = doc.get("domain");
  const KvLine& cod_line = doc.get("codomain");
  GroupPtr dom, cod;
  try {
    dom = loader.load_group(dom_line.value, base_dir);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(file, dom_line.line, 1, e.what());
  }
  try {
    cod = loader.load_group(cod_line.value, base_dir);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(file, cod_line.line, 1, e.what());
  }
  try {
    if (doc.has("map")) {
      const KvLine& m = doc.get("map");
      std::vector<int> map = parse_int_list(m.value, file, m.line);
      doc.finish();
      return {hom_from_map(dom, cod, std::move(map)), dom_line.value, cod_line.value};
    }
    const KvLine& gl = doc.get("gens");
    const KvLine& il = doc.get("images");
    std::vector<int> gens = parse_int_list(gl.value, file, gl.line);
    std::vector<int> images = parse_int_list(il.value, file, il.line);
    doc.finish();
    return {hom_from_generator_images(dom, cod, gens, images), dom_line.value, cod_line.value};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(file, 1, 1, e.what());
  }
}

inline LoadedHom load_hom_file(const std::string& path, Loader& loader) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_hom_text(read_file(path), path, loader, dir);
}

// Hom references: "builtin:NAME" or a hom file path.
inline LoadedHom load_hom_ref(const std::string& ref, const std::string& base_dir,
                              Loader& loader) {
  if (ref.rfind("builtin:", 0) == 0) {
    std::string name = ref.substr(8);
    if (!loader.builtin_hom) fail("no builtin homomorphisms available for '" + ref + "'");
    const LoadedHom* h = loader.builtin_hom(name);
    if (!h) fail("unknown builtin homomorphism '" + name + "'");
    return *h;
  }
  return load_hom_file(Loader::resolve_path(ref, base_dir), loader);
}

inline std::string hom_file_text(const GroupHom& h, const std::string& domain_ref,
                                 const std::string& codomain_ref) {
  std::ostringstream os;
  os << "domain = " << domain_ref << "\n";
  os << "codomain = " << codomain_ref << "\n";
  os << "map =";
  for (int v : h.map) os << " " << v;
  os << "\n";
  return os.str();
}

// --- representation files ----------------------------------------------------

struct LoadedRep {
  Representation rep;
  std::string group_ref;
};

inline LoadedRep parse_rep_text(const std::string& text, const std::string& file,
                                Loader& loader, const std::string& base_dir) {
  KvDoc doc(parse_kv_document(text, file), file);
  const KvLine& group_line = doc.get("group");
  GroupPtr g;
  try {
    g = loader.load_group(group_line.value, base_dir);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(file, group_line.line, 1, e.what());
  }
  const KvLine& field_line = doc.get("field");
  FieldDescriptor f = FieldDescriptor::rationals();
  try {
    f = FieldDescriptor::parse(field_line.value);
  } catch (const std::exception& e) {
    parse_fail(file, field_line.line, 1, e.what());
  }
  const KvLine& dim_line = doc.get("dim");
  int dim = int(parse_long_strict(dim_line.value, file, dim_line.line));
  try {
    if (doc.has("matrix_0") || g->n == 0) {
      std::vector<Matrix> mats;
      for (int x = 0; x < g->n; ++x) {
        const KvLine& m = doc.get("matrix_" + std::to_string(x));
        mats.push_back(parse_matrix_value(m.value, dim, dim, f, file, m.line));
      }
      doc.finish();
      return {make_representation(g, f, std::move(mats)), group_line.value};
    }
    if (g->declared_gens.empty())
      parse_fail(file, 1, 1, "generator_matrix form needs a group with declared generators");
    std::vector<Matrix> gen_mats;
    for (std::size_t k = 0; k < g->declared_gens.size(); ++k) {
      const KvLine& m = doc.get("generator_matrix_" + std::to_string(k));
      gen_mats.push_back(parse_matrix_value(m.value, dim, dim, f, file, m.line));
    }
    doc.finish();
    return {rep_from_generator_matrices(g, f, g->declared_gens, gen_mats), group_line.value};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(file, 1, 1, e.what());
  }
}

inline LoadedRep load_rep_file(const std::string& path, Loader& loader) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  return parse_rep_text(read_file(path), path, loader, dir);
}

inline std::string rep_file_text(const Representation& v, const std::string& group_ref,
                                 const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "group = " << group_ref << "\n";
  os << "field = " << v.field.str() << "\n";
  os << "dim = " << v.dim << "\n";
  for (int x = 0; x < v.group->n; ++x)
    os << "matrix_" << x << " = " << matrix_value(v.of(x)) << "\n";
  return os.str();
}

}  // namespace indres
