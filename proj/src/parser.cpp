#include "darboux/parser.hpp"

#include <cctype>

namespace darboux {

ParseError::ParseError(std::size_t pos, const std::string& message)
    : std::invalid_argument("position " + std::to_string(pos) + ": " + message), position(pos) {}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const ParseContext& ctx) : src_(src), ctx_(ctx) {}

  MultiPoly parse() {
    MultiPoly v = expr();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly v = term();
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

  MultiPoly term() {
    MultiPoly v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        MultiPoly d = unary();
        if (!d.is_constant()) throw ParseError(at, "coordinate in denominator");
        if (d.is_zero()) throw ParseError(at, "division by zero");
        v = v.scaled(CoeffValue(1) / d.constant_term());
      } else {
        return v;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected a nonnegative integer exponent");
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 4) throw ParseError(start, "exponent too large");
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  MultiPoly primary() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly v = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      mpq_class q(std::string(src_.substr(start, pos_ - start)));
      return MultiPoly::constant(ctx_.coordinates, CoeffValue(GaussQ(q)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "I") return MultiPoly::constant(ctx_.coordinates, CoeffValue::imaginary_unit());
      if (ctx_.coordinates.contains(name)) return MultiPoly::variable(ctx_.coordinates, name);
      if (ctx_.parameters.count(name) > 0) return MultiPoly::constant(ctx_.coordinates, CoeffValue::param(name));
      throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expression(std::string_view src, const ParseContext& ctx) { return Parser(src, ctx).parse(); }

CoeffValue parse_coefficient(std::string_view src, const std::set<std::string, std::less<>>& parameters) {
  ParseContext ctx{Coordinates(), parameters};
  return parse_expression(src, ctx).constant_term();
}

}  // namespace darboux
