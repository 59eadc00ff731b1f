#include "betti4/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "betti4/errors.hpp"

namespace betti4 {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Exponent cap) : text_(strip_comment(text)), cap_(cap) {}

  MonomialIdeal ideal() {
    std::vector<Monomial> gens;
    skip_space();
    if (at_end()) return {};
    while (true) {
      gens.push_back(monomial());
      skip_space();
      if (at_end()) break;
      expect(',');
    }
    return MonomialIdeal::minimalize(std::move(gens));
  }

  Monomial single() {
    skip_space();
    Monomial m = monomial();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "' after monomial");
    return m;
  }

 private:
  static std::string_view strip_comment(std::string_view t) {
    const auto hash = t.find('#');
    return hash == std::string_view::npos ? t : t.substr(0, hash);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(pos_, reason); }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c)
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kExponentLimit) {
        pos_ = start;
        throw ExponentCapExceeded("exponent at column " + std::to_string(start + 1) +
                                  " exceeds the limit " + std::to_string(kExponentLimit));
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer exponent");
    return value;
  }

  std::size_t variable() {
    skip_space();
    if (at_end()) fail("expected a variable, found end of input");
    const char c = text_[pos_];
    if (c >= 'a' && c <= 'd') {
      ++pos_;
      return static_cast<std::size_t>(c - 'a');
    }
    if (c != 'x') fail(std::string("expected a variable, found '") + c + "'");
    const std::size_t start = pos_;
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a variable index after 'x'");
    std::uint64_t index = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = std::min<std::uint64_t>(index * 10 + static_cast<std::uint64_t>(text_[pos_] - '0'), 1000);
      ++pos_;
    }
    if (index < 1 || index > kVariableCount)
      throw VariableOutOfRange("variable x" + std::to_string(index) + " at column " +
                               std::to_string(start + 1) + " is outside x1..x4");
    return static_cast<std::size_t>(index - 1);
  }

  Monomial monomial() {
    skip_space();
    if (!at_end() && text_[pos_] == '1') {
      const std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end() || text_[pos_] == ',') return Monomial{};
      pos_ = save;
      fail("a constant '1' cannot be combined with other factors");
    }
    std::array<std::uint64_t, kVariableCount> e{};
    const std::size_t start = pos_;
    while (true) {
      const std::size_t var = variable();
      std::uint64_t power = 1;
      skip_space();
      if (!at_end() && text_[pos_] == '^') {
        ++pos_;
        const std::size_t at = pos_;
        power = integer();
        if (power == 0) {
          pos_ = at;
          fail("exponents must be positive");
        }
      }
      e[var] += power;
      skip_space();
      if (at_end() || text_[pos_] != '*') break;
      ++pos_;
    }
    std::array<Exponent, kVariableCount> exps{};
    for (std::size_t i = 0; i < kVariableCount; ++i) {
      if (e[i] > cap_)
        throw ExponentCapExceeded("exponent " + std::to_string(e[i]) + " of x" +
                                  std::to_string(i + 1) + " in the monomial at column " +
                                  std::to_string(start + 1) + " exceeds the cap " +
                                  std::to_string(cap_));
      exps[i] = static_cast<Exponent>(e[i]);
    }
    return Monomial(exps);
  }

  std::string_view text_;
  Exponent cap_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, Exponent max_exponent) {
  return Parser(text, max_exponent).ideal();
}

Monomial parse_monomial(std::string_view text, Exponent max_exponent) {
  return Parser(text, max_exponent).single();
}

bool is_blank_line(std::string_view text) {
  for (const char c : text) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace betti4
