#include "pdq/parser.hpp"

#include <cctype>
#include <string>

#include "pdq/error.hpp"

namespace pdq {

namespace {

template <class T>
struct Algebra;

template <>
struct Algebra<Scalar> {
  static Scalar constant(const Scalar& s) { return s; }
  static std::optional<Scalar> as_constant(const Scalar& s) { return s; }
  static bool has_variables() { return false; }
  static Scalar variable(int) { return Scalar{}; }
};

template <>
struct Algebra<CPoly> {
  static CPoly constant(const Scalar& s) { return CPoly(s); }
  static std::optional<Scalar> as_constant(const CPoly& p) { return p.as_constant(); }
  static bool has_variables() { return true; }
  static CPoly variable(int i) { return CPoly::variable(i); }
};

template <>
struct Algebra<NCPoly> {
  static NCPoly constant(const Scalar& s) { return NCPoly(s); }
  static std::optional<Scalar> as_constant(const NCPoly& p) {
    if (p.is_zero()) return Scalar{};
    if (p.terms().size() == 1 && p.terms().begin()->first.empty()) return p.terms().begin()->second;
    return std::nullopt;
  }
  static bool has_variables() { return true; }
  static NCPoly variable(int i) { return NCPoly::variable(i); }
};

template <class T>
class Parser {
 public:
  Parser(std::string_view text, char alphabet) : s_(text), alphabet_(alphabet) {}

  T parse_all() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return v;
  }

  // For matrices: parse one expression and stop at a delimiter.
  T parse_until_delim() { return expr(); }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

 private:
  T expr() {
    T acc;
    if (peek() == '-') {
      ++pos_;
      acc = -term();
    } else {
      acc = term();
    }
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        T d = power();
        auto k = Algebra<T>::as_constant(d);
        if (!k) throw SyntaxError(at, "division by a non-scalar");
        if (k->is_zero()) throw SyntaxError(at, "division by zero");
        acc = acc * Algebra<T>::constant(k->inv());
      } else {
        return acc;
      }
    }
  }

  T power() {
    T base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected integer exponent");
    int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (neg) {
      auto k = Algebra<T>::as_constant(base);
      if (!k) throw SyntaxError(start, "negative exponent of a non-scalar");
      return Algebra<T>::constant(k->pow(-n));
    }
    T r = Algebra<T>::constant(Scalar(1));
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
  }

  T atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Algebra<T>::constant(Scalar(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name.size() == 2 && (name[0] == 'x' || name[0] == 'y' || name[0] == 'z') && name[1] >= '1' &&
          name[1] <= '3') {
        if (!Algebra<T>::has_variables() || name[0] != alphabet_)
          throw Error(ErrorCode::AlphabetMismatch, "variable " + name + " at offset " + std::to_string(start));
        return Algebra<T>::variable(name[1] - '0');
      }
      if (name == "zeta") {
        if (pos_ >= s_.size() || s_[pos_] != '{') throw SyntaxError(pos_, "expected '{' after zeta");
        std::size_t open = ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (open == pos_ || pos_ >= s_.size() || s_[pos_] != '}') throw SyntaxError(pos_, "expected zeta{m}");
        int m = std::stoi(std::string(s_.substr(open, pos_ - open)));
        ++pos_;
        return Algebra<T>::constant(Scalar::zeta(m));
      }
      if (name == "sqrt3") return Algebra<T>::constant(Scalar::sqrt3());
      return Algebra<T>::constant(Scalar::param(name));
    }
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  char alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser<Scalar>(text, '\0').parse_all(); }

CPoly parse_cpoly(std::string_view text, char alphabet) { return Parser<CPoly>(text, alphabet).parse_all(); }

NCPoly parse_ncpoly(std::string_view text, char alphabet) { return Parser<NCPoly>(text, alphabet).parse_all(); }

Matrix3 parse_matrix(std::string_view text) {
  Parser<Scalar> p(text, '\0');
  if (p.peek() != '[') throw SyntaxError(p.pos(), "expected '['");
  p.set_pos(p.pos() + 1);
  Matrix3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      m[r][c] = p.parse_until_delim();
      char want = c < 2 ? ',' : (r < 2 ? ';' : ']');
      if (p.peek() != want) throw SyntaxError(p.pos(), std::string("expected '") + want + "'");
      p.set_pos(p.pos() + 1);
    }
  }
  p.skip();
  if (p.pos() != text.size()) throw SyntaxError(p.pos(), "trailing input after matrix");
  return m;
}

}  // namespace pdq
