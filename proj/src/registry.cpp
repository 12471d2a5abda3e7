#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "patwilf/gf.hpp"

namespace patwilf {

GfPtr parse_gf_bound(const std::string& text, const std::map<std::string, GfPtr>& bindings);

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_key(const std::string& k) {
  size_t i = 0;
  if (i >= k.size() || !std::isdigit(static_cast<unsigned char>(k[i]))) return false;
  while (i < k.size() && std::isdigit(static_cast<unsigned char>(k[i]))) ++i;
  if (i == k.size()) return true;
  if (k[i] != '.') return false;
  ++i;
  if (i >= k.size()) return false;
  while (i < k.size()) {
    if (!std::isalnum(static_cast<unsigned char>(k[i]))) return false;
    ++i;
  }
  return true;
}

bool valid_let_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return s != "x" && s != "C" && s != "r5" && s != "sqrt";
}

struct StanzaLine {
  int lineno;
  std::string text;
};

}  // namespace

Registry Registry::load_text(const std::string& text, const std::string& origin) {
  Registry reg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<StanzaLine> stanza;

  auto fail = [&](int at, const std::string& msg) {
    throw InputError(origin + ":" + std::to_string(at) + ": " + msg);
  };

  auto flush = [&]() {
    if (stanza.empty()) return;
    const int at = stanza.front().lineno;
    int f_lineno = at, triple_lineno = at;
    std::string key, triple_text, formula_text, ref;
    std::map<std::string, GfPtr> bindings;
    for (const auto& ln : stanza) {
      const std::string& s = ln.text;
      auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
      if (starts("case:")) {
        if (!key.empty()) fail(ln.lineno, "duplicate case: line");
        key = trim(s.substr(5));
        if (!valid_key(key)) fail(ln.lineno, "bad case key '" + key + "'");
      } else if (starts("triple:")) {
        if (!triple_text.empty()) fail(ln.lineno, "duplicate triple: line");
        triple_text = trim(s.substr(7));
        triple_lineno = ln.lineno;
      } else if (starts("let ")) {
        const size_t eq = s.find('=');
        if (eq == std::string::npos) fail(ln.lineno, "let line without '='");
        const std::string name = trim(s.substr(4, eq - 4));
        if (!valid_let_name(name)) fail(ln.lineno, "bad let name '" + name + "'");
        if (bindings.count(name)) fail(ln.lineno, "duplicate let name '" + name + "'");
        try {
          bindings[name] = parse_gf_bound(s.substr(eq + 1), bindings);
        } catch (const ParseError& e) {
          fail(ln.lineno, std::string("in let ") + name + ": " + e.what());
        }
      } else if (starts("f:")) {
        if (!formula_text.empty()) fail(ln.lineno, "duplicate f: line");
        formula_text = trim(s.substr(2));
        if (formula_text.empty()) fail(ln.lineno, "empty f: line");
        f_lineno = ln.lineno;
      } else if (starts("ref:")) {
        ref = trim(s.substr(4));
      } else {
        fail(ln.lineno, "unrecognized line '" + s + "'");
      }
    }
    if (key.empty()) fail(at, "stanza without case: line");
    if (triple_text.empty()) fail(at, "stanza without triple: line");
    if (formula_text.empty()) fail(at, "stanza without f: line");
    if (reg.entries_.count(key)) fail(at, "duplicate case key '" + key + "'");

    std::optional<PatternTriple> triple;
    try {
      triple = PatternTriple::parse(triple_text);
      const auto& ps = triple->patterns();
      triple = PatternTriple(ps[0], ps[1], ps[2], std::stoi(key));
    } catch (const PermError& e) {
      fail(triple_lineno, std::string("bad triple: ") + e.what());
    }
    GfPtr formula;
    try {
      formula = parse_gf_bound(formula_text, bindings);
    } catch (const ParseError& e) {
      fail(f_lineno, std::string("bad formula: ") + e.what());
    }

    reg.entries_.emplace(key, RegistryEntry{key, *triple, formula_text, formula, ref});
    reg.order_.push_back(key);
    stanza.clear();
  };

  while (std::getline(in, raw)) {
    ++lineno;
    const size_t hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      flush();
      continue;
    }
    stanza.push_back({lineno, line});
  }
  flush();
  return reg;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open registry file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), path);
}

bool Registry::has(const std::string& key) const { return entries_.count(key) != 0; }

const RegistryEntry& Registry::entry(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw NotFoundError("no registry entry for case " + key);
  return it->second;
}

const RegistryEntry& Registry::case_entry(int id) const { return entry(std::to_string(id)); }

std::vector<int> Registry::main_cases() const {
  std::vector<int> out;
  for (const auto& k : order_)
    if (k.find('.') == std::string::npos) out.push_back(std::stoi(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::string default_registry_path() {
  if (const char* env = std::getenv("PATWILF_REGISTRY"); env && *env) return env;
#ifdef PATWILF_DEFAULT_REGISTRY
  return PATWILF_DEFAULT_REGISTRY;
#else
  return "data/registry.txt";
#endif
}

}  // namespace patwilf
