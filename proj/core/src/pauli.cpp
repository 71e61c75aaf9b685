#include "qss/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qss {

namespace {

int mod(int v, int p) {
  v %= p;
  return v < 0 ? v + p : v;
}

void check_same_group(const PauliElement& g, const PauliElement& h) {
  if (g.p != h.p) throw DimensionMismatch("pauli product: p mismatch");
  if (g.n != h.n) throw DimensionMismatch("pauli product: qudit count mismatch");
}

}  // namespace

PauliElement PauliElement::identity(int p, int n) {
  check_modulus(p);
  PauliElement g;
  g.p = p;
  g.n = n;
  g.a.assign(n, 0);
  g.b.assign(n, 0);
  return g;
}

PauliElement PauliElement::from_symplectic(int p, const std::vector<int>& row,
                                           int phase_exp) {
  check_modulus(p);
  if (row.size() % 2 != 0) {
    throw DimensionMismatch("symplectic row must have even length");
  }
  const int n = static_cast<int>(row.size() / 2);
  PauliElement g;
  g.p = p;
  g.n = n;
  g.phase_exp = mod(phase_exp, p);
  g.a.resize(n);
  g.b.resize(n);
  for (int i = 0; i < n; ++i) {
    g.a[i] = mod(row[i], p);
    g.b[i] = mod(row[n + i], p);
  }
  return g;
}

std::vector<int> PauliElement::symplectic_row() const {
  std::vector<int> row(2 * n);
  std::copy(a.begin(), a.end(), row.begin());
  std::copy(b.begin(), b.end(), row.begin() + n);
  return row;
}

bool PauliElement::is_identity_word() const {
  auto zero = [](int v) { return v == 0; };
  return std::all_of(a.begin(), a.end(), zero) &&
         std::all_of(b.begin(), b.end(), zero);
}

PauliElement pauli_mul(const PauliElement& g, const PauliElement& h) {
  check_same_group(g, h);
  PauliElement out;
  out.p = g.p;
  out.n = g.n;
  int phase = g.phase_exp + h.phase_exp;
  for (int i = 0; i < g.n; ++i) phase += g.b[i] * h.a[i];
  out.phase_exp = mod(phase, g.p);
  out.a.resize(g.n);
  out.b.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    out.a[i] = mod(g.a[i] + h.a[i], g.p);
    out.b[i] = mod(g.b[i] + h.b[i], g.p);
  }
  return out;
}

PauliElement pauli_pow(const PauliElement& g, int t) {
  if (t < 0) throw ValidationError("pauli_pow: negative exponent");
  PauliElement out = PauliElement::identity(g.p, g.n);
  for (int i = 0; i < t; ++i) out = pauli_mul(out, g);
  return out;
}

int symplectic_product(const std::vector<int>& u, const std::vector<int>& v,
                       int p) {
  check_modulus(p);
  if (u.size() != v.size()) {
    throw DimensionMismatch("symplectic_product: length mismatch");
  }
  if (u.size() % 2 != 0) {
    throw DimensionMismatch("symplectic_product: odd length");
  }
  const std::size_t n = u.size() / 2;
  long long acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<long long>(u[i]) * v[n + i];
    acc -= static_cast<long long>(u[n + i]) * v[i];
  }
  int r = static_cast<int>(acc % p);
  return r < 0 ? r + p : r;
}

namespace {

std::vector<int> parse_side(const std::string& side, int p,
                            const std::string& text) {
  std::vector<int> vals;
  if (side.find(',') != std::string::npos) {
    std::stringstream ss(side);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad symplectic entry '" + tok + "' in \"" + text + "\"");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
        ++pos;
      if (pos != tok.size()) {
        throw ParseError("bad symplectic entry '" + tok + "' in \"" + text + "\"");
      }
      vals.push_back(v);
    }
  } else {
    for (char c : side) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("bad symplectic digit '") + c + "' in \"" +
                         text + "\"");
      }
      vals.push_back(c - '0');
    }
  }
  if (vals.empty()) throw ParseError("empty symplectic side in \"" + text + "\"");
  for (int v : vals) {
    if (v < 0 || v >= p) {
      throw ParseError("symplectic entry " + std::to_string(v) +
                       " out of range [0, " + std::to_string(p) + ") in \"" +
                       text + "\"");
    }
  }
  return vals;
}

PauliElement parse_symplectic_form(const std::string& text, int p) {
  const std::size_t bar = text.find('|');
  if (text.find('|', bar + 1) != std::string::npos) {
    throw ParseError("more than one '|' in \"" + text + "\"");
  }
  std::vector<int> a = parse_side(text.substr(0, bar), p, text);
  std::vector<int> b = parse_side(text.substr(bar + 1), p, text);
  if (a.size() != b.size()) {
    throw ParseError("sides of '|' differ in length in \"" + text + "\"");
  }
  std::vector<int> row = a;
  row.insert(row.end(), b.begin(), b.end());
  return PauliElement::from_symplectic(p, row);
}

PauliElement parse_word_form(const std::string& text, int p) {
  std::vector<int> a, b;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == 'I') {
      a.push_back(0);
      b.push_back(0);
      ++i;
      continue;
    }
    if (c != 'X' && c != 'Z') {
      throw ParseError(std::string("unexpected symbol '") + c + "' in \"" +
                       text + "\"");
    }
    ++i;
    int power = 1;
    if (i < text.size() && (text[i] == '^' || std::isdigit(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '^') ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("dangling '^' in \"" + text + "\"");
      }
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (power < 1000) power = power * 10 + (text[i] - '0');
        ++i;
      }
    }
    if (power >= p) {
      throw ParseError("power " + std::to_string(power) + " >= p in \"" + text +
                       "\"");
    }
    if (c == 'X') {
      a.push_back(power);
      b.push_back(0);
    } else {
      a.push_back(0);
      b.push_back(power);
    }
  }
  if (a.empty()) throw ParseError("empty Pauli word");
  std::vector<int> row = a;
  row.insert(row.end(), b.begin(), b.end());
  return PauliElement::from_symplectic(p, row);
}

}  // namespace

PauliElement pauli_parse(const std::string& text, int p) {
  check_modulus(p);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty Pauli string");
  if (s.find('|') != std::string::npos) return parse_symplectic_form(s, p);
  return parse_word_form(s, p);
}

std::string to_string(const PauliElement& g) {
  std::string prefix;
  if (g.phase_exp != 0) prefix = "w" + std::to_string(g.phase_exp) + "*";
  bool mixed = false;
  for (int i = 0; i < g.n; ++i) {
    if (g.a[i] != 0 && g.b[i] != 0) mixed = true;
  }
  if (!mixed) {
    std::string w;
    for (int i = 0; i < g.n; ++i) {
      if (g.a[i] == 0 && g.b[i] == 0) {
        w.push_back('I');
      } else if (g.a[i] != 0) {
        w.push_back('X');
        if (g.a[i] != 1) w += std::to_string(g.a[i]);
      } else {
        w.push_back('Z');
        if (g.b[i] != 1) w += std::to_string(g.b[i]);
      }
    }
    return prefix + w;
  }
  // mixed X/Z factor present: symplectic form
  const bool csv = g.p > 7;
  std::string out;
  auto side = [&](const std::vector<int>& v) {
    std::string s;
    for (int i = 0; i < g.n; ++i) {
      if (csv && i > 0) s.push_back(',');
      s += std::to_string(v[i]);
    }
    return s;
  };
  return prefix + side(g.a) + "|" + side(g.b);
}

GfMatrix symplectic_dual(const GfMatrix& c) {
  if (c.cols() % 2 != 0) {
    throw DimensionMismatch("symplectic_dual: odd column count");
  }
  const std::size_t n = c.cols() / 2;
  // <(a|b),(c|d)>_s = (-b|a).(c|d), so the dual is the plain kernel of the
  // row-transformed matrix.
  GfMatrix twisted(c.p(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      twisted.set(i, j, -c.at(i, n + j));
      twisted.set(i, n + j, c.at(i, j));
    }
  }
  return kernel(twisted);
}

GfMatrix shorten(const GfMatrix& c, const std::vector<int>& J) {
  if (c.cols() % 2 != 0) throw DimensionMismatch("shorten: odd column count");
  const std::size_t n = c.cols() / 2;
  const std::vector<int> js = normalize_index_set(J, static_cast<int>(n));
  if (js.empty()) return row_basis(c);

  // Drop to the subspace of row combinations vanishing on the selected
  // coordinate pairs, then delete those coordinates.
  GfMatrix sel(c.p(), c.rows(), 2 * js.size());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t t = 0; t < js.size(); ++t) {
      const std::size_t j = static_cast<std::size_t>(js[t] - 1);
      sel.set(i, 2 * t, c.at(i, j));
      sel.set(i, 2 * t + 1, c.at(i, n + j));
    }
  }
  const GfMatrix combos = kernel(transpose(sel));  // y with y * sel = 0
  const GfMatrix sub = multiply(combos, c);

  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::binary_search(js.begin(), js.end(), static_cast<int>(j + 1))) {
      keep.push_back(j);
    }
  }
  GfMatrix cut(c.p(), sub.rows(), 2 * keep.size());
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    for (std::size_t t = 0; t < keep.size(); ++t) {
      cut.set(i, t, sub.at(i, keep[t]));
      cut.set(i, keep.size() + t, sub.at(i, n + keep[t]));
    }
  }
  return row_basis(cut);
}

StabilizerCode validate_stabilizer(const std::vector<PauliElement>& gens,
                                   std::vector<std::string>* warnings) {
  if (gens.empty()) throw ValidationError("no generators given");
  const int p = gens[0].p;
  const int n = gens[0].n;
  check_modulus(p);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const PauliElement& g = gens[i];
    if (g.p != p || g.n != n) {
      throw ValidationError("generator " + std::to_string(i + 1) +
                            " disagrees in p or n");
    }
    if (g.phase_exp != 0) {
      throw ValidationError("generator " + std::to_string(i + 1) +
                            " has nonzero phase; the +1 eigenvalue convention "
                            "requires phase_exp = 0");
    }
    if (p == 2) {
      // For p = 2 a generator with odd X/Z overlap squares to -I, which puts
      // -I into the group and empties the +1 eigenspace.
      int overlap = 0;
      for (int j = 0; j < n; ++j) overlap += g.a[j] * g.b[j];
      if (overlap % 2 != 0) {
        throw ValidationError("generator " + std::to_string(i + 1) + " (" +
                              to_string(g) + ") squares to -I");
      }
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const int sp = symplectic_product(gens[i].symplectic_row(),
                                        gens[j].symplectic_row(), p);
      if (sp != 0) {
        throw ValidationError("generators " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) +
                              " do not commute (symplectic product " +
                              std::to_string(sp) + ")");
      }
    }
  }

  // Accept generators in order; a dependent one must reproduce (with phase)
  // the tracked product of the accepted combination, otherwise the group
  // contains w^i * I with i != 0.
  std::vector<PauliElement> accepted;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const PauliElement& g = gens[i];
    std::optional<std::vector<int>> combo;
    if (accepted.empty()) {
      combo = g.is_identity_word() ? std::optional<std::vector<int>>(std::vector<int>{})
                                   : std::nullopt;
    } else {
      GfMatrix acc(p, accepted.size(), 2 * n);
      for (std::size_t r = 0; r < accepted.size(); ++r) {
        const std::vector<int> row = accepted[r].symplectic_row();
        for (std::size_t cidx = 0; cidx < row.size(); ++cidx) {
          acc.set(r, cidx, row[cidx]);
        }
      }
      combo = solve_linear(transpose(acc), g.symplectic_row());
    }
    if (!combo) {
      accepted.push_back(g);
      continue;
    }
    PauliElement prod = PauliElement::identity(p, n);
    for (std::size_t r = 0; r < combo->size(); ++r) {
      prod = pauli_mul(prod, pauli_pow(accepted[r], (*combo)[r]));
    }
    if (prod.phase_exp != 0) {
      throw ValidationError(
          "generator " + std::to_string(i + 1) +
          " is dependent with inconsistent phase: the group would contain w^" +
          std::to_string((p - prod.phase_exp) % p) + " * identity");
    }
    if (warnings) {
      warnings->push_back("generator " + std::to_string(i + 1) + " (" +
                          to_string(g) + ") is dependent on earlier ones; dropped");
    }
  }
  if (accepted.empty()) {
    // all generators were the identity word
    StabilizerCode code;
    code.p = p;
    code.n = n;
    code.f_matrix = GfMatrix(p, 0, 2 * static_cast<std::size_t>(n));
    code.k = n;
    return code;
  }

  StabilizerCode code;
  code.p = p;
  code.n = n;
  code.generators = accepted;
  GfMatrix f(p, accepted.size(), 2 * static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < accepted.size(); ++r) {
    const std::vector<int> row = accepted[r].symplectic_row();
    for (std::size_t cidx = 0; cidx < row.size(); ++cidx) f.set(r, cidx, row[cidx]);
  }
  code.f_matrix = f;
  code.k = n - static_cast<int>(accepted.size());
  return code;
}

StabilizerCode stabilizer_from_f_matrix(int p, int n, const GfMatrix& rows) {
  if (rows.cols() != 2 * static_cast<std::size_t>(n)) {
    throw DimensionMismatch("stabilizer_from_f_matrix: column count != 2n");
  }
  const GfMatrix basis = row_basis(rows);
  if (basis.rows() == 0) {
    StabilizerCode code;
    code.p = p;
    code.n = n;
    code.f_matrix = GfMatrix(p, 0, 2 * static_cast<std::size_t>(n));
    code.k = n;
    return code;
  }
  std::vector<PauliElement> gens;
  gens.reserve(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    gens.push_back(PauliElement::from_symplectic(p, basis.row(i)));
  }
  return validate_stabilizer(gens);
}

StabilizerCode shortened_stabilizer(const StabilizerCode& code,
                                    const std::vector<int>& J) {
  const std::vector<int> js = normalize_index_set(J, code.n);
  if (js.empty()) return code;
  const int p = code.p;
  const std::size_t n = static_cast<std::size_t>(code.n);
  const std::size_t nr = n - js.size();
  const GfMatrix& f = code.f_matrix;

  StabilizerCode out;
  out.p = p;
  out.n = static_cast<int>(nr);
  if (f.rows() == 0) {
    out.f_matrix = GfMatrix(p, 0, 2 * nr);
    out.k = static_cast<int>(nr);
    return out;
  }

  // combination coefficients y with y * (J columns of f) = 0
  GfMatrix sel(p, f.rows(), 2 * js.size());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t t = 0; t < js.size(); ++t) {
      const std::size_t j = static_cast<std::size_t>(js[t] - 1);
      sel.set(i, 2 * t, f.at(i, j));
      sel.set(i, 2 * t + 1, f.at(i, n + j));
    }
  }
  const GfMatrix combos = kernel(transpose(sel));

  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::binary_search(js.begin(), js.end(), static_cast<int>(j + 1))) {
      keep.push_back(j);
    }
  }

  GfMatrix rows(p, combos.rows(), 2 * nr);
  for (std::size_t y = 0; y < combos.rows(); ++y) {
    PauliElement prod = PauliElement::identity(p, static_cast<int>(n));
    for (std::size_t i = 0; i < f.rows(); ++i) {
      const int e = combos.at(y, i);
      if (e != 0) prod = pauli_mul(prod, pauli_pow(code.generators[i], e));
    }
    PauliElement g;
    g.p = p;
    g.n = static_cast<int>(nr);
    g.phase_exp = prod.phase_exp;  // inherited, may be nonzero
    g.a.resize(nr);
    g.b.resize(nr);
    for (std::size_t t = 0; t < nr; ++t) {
      g.a[t] = prod.a[keep[t]];
      g.b[t] = prod.b[keep[t]];
      rows.set(y, t, g.a[t]);
      rows.set(y, nr + t, g.b[t]);
    }
    out.generators.push_back(std::move(g));
  }
  out.f_matrix = rows;
  out.k = static_cast<int>(nr) - static_cast<int>(combos.rows());
  return out;
}

namespace {

std::string strip_comment(const std::string& line) {
  const std::size_t h = line.find('#');
  std::string s = (h == std::string::npos) ? line : line.substr(0, h);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

StabilizerCode parse_stabilizer_text(const std::string& text,
                                     std::vector<std::string>* warnings) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int p = 0, n = 0;
  bool header_seen = false;
  std::vector<PauliElement> gens;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    if (!header_seen) {
      std::istringstream hs(s);
      std::string ptok, ntok;
      hs >> ptok >> ntok;
      if (ptok.rfind("p=", 0) != 0 || ntok.rfind("n=", 0) != 0) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header \"p=<prime> n=<count>\"");
      }
      try {
        p = std::stoi(ptok.substr(2));
        n = std::stoi(ntok.substr(2));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad header numbers");
      }
      check_modulus(p);
      if (n < 1) {
        throw ParseError("line " + std::to_string(lineno) + ": n must be >= 1");
      }
      header_seen = true;
      continue;
    }
    PauliElement g;
    try {
      g = pauli_parse(s, p);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (g.n != n) {
      throw ParseError("line " + std::to_string(lineno) + ": generator acts on " +
                       std::to_string(g.n) + " qudits, expected " +
                       std::to_string(n));
    }
    gens.push_back(g);
  }
  if (!header_seen) throw ParseError("missing \"p=<prime> n=<count>\" header");
  if (gens.empty()) throw ParseError("no generators in stabilizer input");
  return validate_stabilizer(gens, warnings);
}

StabilizerCode read_stabilizer_file(const std::string& path,
                                    std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stabilizer file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_stabilizer_text(buf.str(), warnings);
}

std::vector<int> normalize_index_set(const std::vector<int>& J, int n) {
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (int j : js) {
    if (j < 1 || j > n) {
      throw ValidationError("share index " + std::to_string(j) +
                            " out of range [1, " + std::to_string(n) + "]");
    }
  }
  return js;
}

std::vector<int> complement_of(const std::vector<int>& J, int n) {
  const std::vector<int> js = normalize_index_set(J, n);
  std::vector<int> out;
  out.reserve(n - js.size());
  for (int j = 1; j <= n; ++j) {
    if (!std::binary_search(js.begin(), js.end(), j)) out.push_back(j);
  }
  return out;
}

}  // namespace qss
