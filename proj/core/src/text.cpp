#include "vnum/text.hpp"

#include <cctype>

#include "vnum/error.hpp"

namespace vnum {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skipSpace();
    return pos_ == s_.size();
  }
  char peek() {
    skipSpace();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skipSpace();
    const auto start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start]))) {
      pos_ = start;
      fail("expected a variable name");
    }
    return std::string(s_.substr(start, pos_ - start));
  }
  std::int64_t integer() {
    skipSpace();
    const auto start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checkedAdd(checkedMul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::InvalidArgument,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Monomial monomial(const RingSpec& ring, Cursor& c) {
  Monomial m(ring.dim());
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    if (c.integer() != 1) c.fail("only the constant 1 is a monomial");
    return m;
  }
  do {
    const auto name = c.identifier();
    const auto idx = ring.indexOf(name);
    if (!idx) c.fail("unknown variable '" + name + "'");
    const std::int64_t e = c.accept('^') ? c.integer() : 1;
    m[*idx] = checkedAdd(m[*idx], e);
  } while (c.accept('*'));
  return m;
}

}  // namespace

Monomial parseMonomial(const RingSpec& ring, std::string_view text) {
  Cursor c(text);
  auto m = monomial(ring, c);
  if (!c.done()) c.fail("trailing input");
  return m;
}

MonomialIdeal parseIdeal(const RingPtr& ring, std::string_view text) {
  Cursor c(text);
  c.expect('(');
  std::vector<Monomial> gens;
  if (c.peek() == '0') {
    c.integer();
  } else {
    do {
      gens.push_back(monomial(*ring, c));
    } while (c.accept(','));
  }
  c.expect(')');
  if (!c.done()) c.fail("trailing input");
  return MonomialIdeal::minimalize(ring, std::move(gens));
}

}  // namespace vnum
