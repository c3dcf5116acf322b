#include "mfres/parse.hpp"

#include <cctype>
#include <unordered_map>

namespace mfres {

namespace {

// Sum of terms without ordering or homogeneity; only the final result must be homogeneous.
using RawPoly = std::unordered_map<Monomial, Coeff, MonomialHash>;

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, int line, int column)
      : ring_(ring), k_(ring->field()), text_(text), line_(line), column_(column) {}

  Polynomial run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    RawPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    std::vector<Term> terms;
    for (const auto& [m, c] : p)
      if (c != 0) terms.push_back({c, m});
    try {
      return Polynomial::from_terms(ring_, std::move(terms));
    } catch (const HomogeneityError&) {
      throw ParseError("polynomial is not homogeneous", line_, column_);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawPoly expr() {
    RawPoly acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      RawPoly t = term();
      add_into(acc, t, negate);
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else break;
    }
    return acc;
  }

  RawPoly term() {
    RawPoly acc = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = multiply(acc, factor());
      } else if (pos_ < text_.size() && (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        // implicit product such as 3x or 2(x+y)
        acc = multiply(acc, factor());
      } else {
        return acc;
      }
    }
  }

  RawPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    RawPoly base;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = k_.add(k_.mul(v, 10 % k_.characteristic()), static_cast<Coeff>(text_[pos_] - '0') % k_.characteristic());
        ++pos_;
      }
      base[Monomial{}] = v;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->var_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      base[Monomial::variable(idx)] = 1;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 65535) fail("exponent too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected exponent after '^'");
      RawPoly result;
      result[Monomial{}] = 1;
      for (long i = 0; i < e; ++i) result = multiply(result, base);
      return result;
    }
    return base;
  }

  void add_into(RawPoly& acc, const RawPoly& t, bool negate) const {
    for (const auto& [m, c] : t) {
      Coeff& slot = acc[m];
      slot = negate ? k_.sub(slot, c) : k_.add(slot, c);
    }
  }

  RawPoly multiply(const RawPoly& a, const RawPoly& b) const {
    RawPoly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        if (ca == 0 || cb == 0) continue;
        Coeff& slot = out[ma * mb];
        slot = k_.add(slot, k_.mul(ca, cb));
      }
    return out;
  }

  const RingPtr& ring_;
  const PrimeField& k_;
  std::string_view text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, int line, int column) {
  return Parser(ring, text, line, column).run();
}

}  // namespace mfres
