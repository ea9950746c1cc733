#include <cctype>

#include "vcalc/coeffring/scalar.hpp"
#include "vcalc/errors.hpp"

namespace vcalc {
namespace {

class ScalarParser {
 public:
  ScalarParser(const std::string& text, const std::map<std::string, Scalar>& symbols)
      : text_(text), symbols_(symbols) {}

  Scalar parse() {
    Scalar v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(text_.substr(start, pos_ - start));
    Scalar out(1);
    for (long n = 0; n < e; ++n) out *= base;
    return negative ? out.inverse() : out;
  }

  Scalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return GaussRational(mpq_class(mpz_class(text_.substr(start, pos_ - start))));
    }
    if (accept('(')) {
      Scalar v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name = text_.substr(start, pos_ - start);
      if (name == "k") return Scalar::k();
      if (name == "i") return Scalar::i();
      if (name == "sqrt") {
        expect('(');
        Scalar arg = expr();
        expect(')');
        if (!arg.is_rational()) fail("nested radicals are not supported");
        try {
          return Scalar::sqrt(arg.as_rational());
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }
      auto it = symbols_.find(name);
      if (it != symbols_.end()) return it->second;
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  const std::map<std::string, Scalar>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const std::map<std::string, Scalar>& symbols) {
  return ScalarParser(text, symbols).parse();
}

}  // namespace vcalc
