#include "germ/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace germ {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, VarSet vars)
      : text_(text), vars_(std::move(vars)) {}

  Germ run() {
    Germ f = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "syntax error at position " << pos_ << ": " << what;
    throw ParseError(os.str(), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Int parse_nat(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return Int(std::string(text_.substr(start, pos_ - start)), 10);
  }

  // expr := ["+"|"-"] term (("+"|"-") term)*
  Germ parse_expr() {
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    Germ f = parse_term();
    if (sign < 0) f = -f;
    for (;;) {
      if (eat('+'))
        f = f + parse_term();
      else if (eat('-'))
        f = f - parse_term();
      else
        break;
    }
    return f;
  }

  // term := factor ("*" factor)*
  Germ parse_term() {
    Germ f = parse_factor();
    while (eat('*')) f = f * parse_factor();
    return f;
  }

  // factor := coeff | var ("^" nat)? | "(" expr ")"
  Germ parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected coefficient, variable or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Germ f = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_coeff();
    if (is_ident_start(c)) return parse_var_power();
    fail("expected coefficient, variable or '('");
  }

  // coeff := int ("/" posint)?
  Germ parse_coeff() {
    Int num = parse_nat("integer");
    Int den = 1;
    if (eat('/')) {
      std::size_t den_pos = pos_;
      den = parse_nat("positive denominator");
      if (den == 0)
        throw ParseError("zero denominator at position " + std::to_string(den_pos),
                         den_pos);
    }
    Rat q(num, den);
    q.canonicalize();
    return Germ::constant(vars_, q);
  }

  Germ parse_var_power() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = vars_.index_of(name);
    if (!idx)
      throw ParseError("unknown variable '" + name + "' at position " +
                           std::to_string(start),
                       start);
    unsigned long exp = 1;
    if (eat('^')) {
      skip_ws();
      if (peek() == '-') {
        std::size_t at = pos_;
        throw ParseError("negative exponent at position " + std::to_string(at), at);
      }
      Int e = parse_nat("exponent");
      if (!e.fits_ulong_p()) fail("exponent too large");
      exp = e.get_ui();
    }
    Exponent e(vars_.size(), 0);
    e[*idx] = static_cast<unsigned>(exp);
    return Germ::monomial(vars_, std::move(e), Rat(1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  VarSet vars_;
};

// First pass when no variable set is given: collect identifiers, sorted
// lexicographically.
VarSet infer_vars(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ident_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      names.emplace(text.substr(start, i - start));
    } else {
      ++i;
    }
  }
  return VarSet(std::vector<std::string>(names.begin(), names.end()));
}

void print_monomial(std::ostream& os, const VarSet& vars, const Exponent& e,
                    const Rat& coeff_abs) {
  bool printed = false;
  if (total_degree(e) == 0 || coeff_abs != 1) {
    os << coeff_abs.get_str();
    printed = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << '*';
    printed = true;
    os << vars.names[i];
    if (e[i] > 1) os << '^' << e[i];
  }
}

}  // namespace

Germ parse_germ(std::string_view text, const std::optional<VarSet>& vars) {
  VarSet vs = vars ? *vars : infer_vars(text);
  return Parser(text, std::move(vs)).run();
}

VarSet parse_varlist(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t comma = text.find(',', i);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(i, comma - i);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.remove_suffix(1);
    if (piece.empty()) throw ParseError("empty variable name in list", i);
    if (!is_ident_start(piece.front()))
      throw ParseError("invalid variable name '" + std::string(piece) + "'", i);
    for (char c : piece)
      if (!is_ident_char(c))
        throw ParseError("invalid variable name '" + std::string(piece) + "'", i);
    names.emplace_back(piece);
    i = comma + 1;
    if (comma == text.size()) break;
  }
  return VarSet(std::move(names));
}

std::string to_string(const Germ& f) {
  if (f.is_zero()) return "0";
  // Ascending total degree, then ascending lexicographic: lowest order first.
  std::vector<const std::pair<const Exponent, Rat>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto* a, const auto* b) {
                     unsigned da = total_degree(a->first);
                     unsigned db = total_degree(b->first);
                     if (da != db) return da < db;
                     return a->first > b->first;  // leading variables first
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    const Rat& c = t->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    print_monomial(os, f.vars(), t->first, neg ? Rat(-c) : c);
  }
  return os.str();
}

}  // namespace germ
