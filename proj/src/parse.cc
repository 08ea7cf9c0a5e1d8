#include <cctype>
#include <string>

#include "rhomboid/errors.h"
#include "rhomboid/expression.h"

namespace rhomboid {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr ParseAll() {
    Expr e = ParseSum();
    SkipSpace();
    if (pos_ != text_.size()) Fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  Expr ParseSum() {
    std::vector<Expr> terms{ParseProduct()};
    while (Accept('+')) terms.push_back(ParseProduct());
    return Expr::Sum(std::move(terms));
  }

  Expr ParseProduct() {
    std::vector<Expr> factors{ParseAtom()};
    while (Accept('*')) factors.push_back(ParseAtom());
    return Expr::Product(std::move(factors));
  }

  Expr ParseAtom() {
    SkipSpace();
    if (pos_ == text_.size()) Fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = ParseSum();
      if (!Accept(')')) Fail("expected ')'");
      return inner;
    }
    if (c == '1') {
      ++pos_;
      return Expr::One();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto series = SeriesFromChar(c);
      if (!series) Fail(std::string("unknown label series '") + c + "'");
      ++pos_;
      std::size_t start = pos_;
      long ordinal = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ordinal = ordinal * 10 + (text_[pos_] - '0');
        if (ordinal > 1'000'000'000) Fail("label ordinal too large");
        ++pos_;
      }
      if (pos_ > start && ordinal == 0) {
        pos_ = start;
        Fail("label ordinal must be positive");
      }
      return Expr::Literal(Label(*series, static_cast<int>(ordinal)));
    }
    Fail(std::string("unexpected '") + c + "'");
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void Fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Parse(std::string_view text) { return Parser(text).ParseAll(); }

}  // namespace rhomboid
