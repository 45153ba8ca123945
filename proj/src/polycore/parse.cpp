#include <algorithm>
#include <cctype>

#include "slemmakit/polynomial.hpp"

namespace slemmakit {

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t nvars, const std::vector<std::string>& names)
      : text_(text), nvars_(nvars), names_(names) {}

  Polynomial run() {
    Polynomial result(nvars_);
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int s = 1;
      if (peek() == '+' || peek() == '-') {
        s = peek() == '-' ? -1 : 1;
        advance();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      Polynomial t = term();
      if (s < 0) t = -t;
      result += t;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    ++pos_;
    skip();
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer digits() {
    std::size_t start = pos_;
    std::string buf;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || std::isspace(static_cast<unsigned char>(peek())))) {
      if (!std::isspace(static_cast<unsigned char>(peek()))) buf += peek();
      ++pos_;
    }
    if (buf.empty()) throw ParseError("expected digits", start);
    return Integer(buf);
  }

  Polynomial term() {
    Rational coef = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      skip();
      if (!at_end() && peek() == '/') {
        advance();
        std::size_t at = pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coef = Rational(num, den);
      coef.canonicalize();
      skip();
      if (!at_end() && peek() == '*') advance();
      else if (at_end() || peek() == '+' || peek() == '-') return Polynomial::constant(nvars_, coef);
    }
    Exponent e(nvars_, 0);
    for (;;) {
      std::size_t idx = variable();
      unsigned k = 1;
      skip();
      if (!at_end() && peek() == '^') {
        advance();
        k = static_cast<unsigned>(digits().get_ui());
        skip();
      }
      e[idx] += k;
      if (!at_end() && peek() == '*') {
        advance();
        continue;
      }
      break;
    }
    return Polynomial::monomial(e, coef);
  }

  std::size_t variable() {
    std::size_t start = pos_;
    std::size_t best_len = 0, best_idx = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& nm = names_[i];
      if (nm.size() > best_len && text_.compare(pos_, nm.size(), nm) == 0) {
        std::size_t end = pos_ + nm.size();
        bool cut = end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
        if (cut) {
          best_len = nm.size();
          best_idx = i;
        }
      }
    }
    if (best_len) {
      pos_ += best_len;
      return best_idx;
    }
    if (!at_end() && peek() == 'x') {
      ++pos_;
      std::size_t at = pos_;
      std::string buf;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) buf += text_[pos_++];
      if (buf.empty()) throw ParseError("expected variable index", at);
      unsigned long i = std::stoul(buf);
      if (i < 1 || i > nvars_) throw ParseError("variable index out of range", start);
      return i - 1;
    }
    throw ParseError("expected variable", start);
  }

  const std::string& text_;
  std::size_t nvars_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t nvars,
                            const std::vector<std::string>& names) {
  if (!names.empty() && names.size() != nvars)
    throw std::invalid_argument("variable name list does not match nvars");
  return Parser(text, nvars, names).run();
}

std::string format(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  const std::vector<std::string> nm = names.empty() ? default_names(p.nvars()) : names;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += nm[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace slemmakit
