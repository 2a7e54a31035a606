#include <cctype>
#include <map>

#include "tropexp/error.hpp"
#include "tropexp/expsum.hpp"

namespace tropexp {
namespace {

// Value of a subexpression inside exp(...): a linear form plus a constant.
struct Affine {
  Vec lin;
  Scalar constant;
  bool is_constant() const { return is_zero(lin); }
};

// Value of a subexpression outside exp: exponent -> coefficient.
struct Sum {
  std::map<Covector, Complex> terms;
  bool constant_only() const {
    for (const auto& [e, c] : terms)
      if (!e.is_zero()) return false;
    return true;
  }
};

class Parser {
 public:
  Parser(const std::string& text, const FieldDescriptor& field, std::size_t n) : s_(text), field_(field), n_(n) {}

  ExpSum run() {
    Sum v = sum_expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    std::vector<ExpSum::Term> terms;
    for (auto& [e, c] : v.terms) terms.push_back({c, e});
    return ExpSum(n_, field_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    std::string id;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) id += s_[pos_++];
    return id;
  }
  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  Scalar number() {
    const std::size_t start = pos_;
    std::string whole = digits();
    std::string frac;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      frac = digits();
    }
    if (whole.empty() && frac.empty()) fail_at("expected a number", start);
    mpz_class num(whole.empty() ? std::string("0") : whole);
    mpz_class den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    return Scalar(mpq_class(num, den));
  }

  Scalar square_root(const std::string& text, std::size_t at) {
    if (text.empty()) fail_at("expected an integer after sqrt", at);
    if (text.size() > 15) fail_at("radicand too large", at);
    std::int64_t k = std::stoll(text);
    std::int64_t outside = 1;
    for (std::int64_t p = 2; p * p <= k; ++p) {
      while (k % (p * p) == 0) {
        k /= p * p;
        outside *= p;
      }
    }
    if (k == 0) return Scalar(0);
    if (k == 1) return Scalar(static_cast<long>(outside));
    if (k != field_.radicand()) {
      fail_at("sqrt(" + text + ") is not representable in the field " + field_.to_string(), at);
    }
    return Scalar(0, mpq_class(static_cast<long>(outside)), k);
  }

  Scalar sqrt_atom(std::size_t at) {
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return square_root(digits(), at);
    expect('(');
    skip();
    const std::size_t inner = pos_;
    const std::string d = digits();
    if (d.empty()) fail_at("sqrt expects an integer argument", inner);
    expect(')');
    return square_root(d, at);
  }

  std::size_t variable_index(std::size_t at) {
    const std::string d = digits();
    if (d.empty() || d.size() > 6) fail_at("expected a variable z1..z" + std::to_string(n_), at);
    const std::size_t k = std::stoul(d);
    if (k < 1 || k > n_) fail_at("variable z" + d + " outside z1..z" + std::to_string(n_), at);
    return k - 1;
  }

  // ---- linear forms inside exp(...) ----

  Affine affine_sum() {
    Affine v;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    v = affine_product();
    if (negate) v = scale(v, Scalar(-1));
    for (;;) {
      if (accept('+')) {
        add(v, affine_product());
      } else if (accept('-')) {
        add(v, scale(affine_product(), Scalar(-1)));
      } else {
        return v;
      }
    }
  }

  static void add(Affine& a, const Affine& b) {
    for (std::size_t i = 0; i < a.lin.size(); ++i) a.lin[i] += b.lin[i];
    a.constant += b.constant;
  }
  static Affine scale(Affine a, const Scalar& s) {
    for (auto& x : a.lin) x *= s;
    a.constant *= s;
    return a;
  }

  Affine affine_product() {
    Affine v = affine_unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        Affine w = affine_unary();
        if (v.is_constant()) {
          v = scale(w, v.constant);
        } else if (w.is_constant()) {
          v = scale(v, w.constant);
        } else {
          fail_at("exponent must be linear in z", at);
        }
      } else if (accept('/')) {
        Affine w = affine_unary();
        if (!w.is_constant()) fail_at("division by a non-constant in the exponent", at);
        if (w.constant.is_zero()) fail_at("division by zero", at);
        v = scale(v, w.constant.inverse());
      } else {
        return v;
      }
    }
  }

  Affine affine_unary() {
    if (accept('-')) return scale(affine_unary(), Scalar(-1));
    if (accept('+')) return affine_unary();
    return affine_atom();
  }

  Affine affine_atom() {
    skip();
    const std::size_t at = pos_;
    Affine v{Vec(n_), Scalar(0)};
    if (accept('(')) {
      v = affine_sum();
      expect(')');
      return v;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      v.constant = number();
      return v;
    }
    const std::string id = identifier();
    if (id == "z") {
      v.lin[variable_index(at)] = 1;
      return v;
    }
    if (id == "sqrt") {
      v.constant = sqrt_atom(at);
      return v;
    }
    if (id == "i") fail_at("complex exponents are not supported (only real exponents)", at);
    if (id.empty()) fail_at(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input", at);
    fail_at("unknown name '" + id + "' in the exponent", at);
  }

  // ---- sums of exponentials ----

  static Sum constant(const Complex& c, std::size_t n) {
    Sum s;
    if (!c.is_zero()) s.terms.emplace(Covector(n), c);
    return s;
  }

  static void add(Sum& a, const Sum& b) {
    for (const auto& [e, c] : b.terms) {
      auto [it, inserted] = a.terms.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) a.terms.erase(it);
      }
    }
  }

  static Sum multiply(const Sum& a, const Sum& b) {
    Sum out;
    for (const auto& [ea, ca] : a.terms) {
      for (const auto& [eb, cb] : b.terms) {
        Sum t;
        t.terms.emplace(ea + eb, ca * cb);
        add(out, t);
      }
    }
    return out;
  }

  Sum negate(const Sum& a) const { return multiply(a, constant({Scalar(-1), Scalar(0)}, n_)); }

  Sum sum_expr() {
    Sum v;
    if (accept('-')) {
      v = negate(product());
    } else {
      accept('+');
      v = product();
    }
    for (;;) {
      if (accept('+')) {
        add(v, product());
      } else if (accept('-')) {
        add(v, negate(product()));
      } else {
        return v;
      }
    }
  }

  Sum product() {
    Sum v = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = multiply(v, unary());
      } else if (accept('/')) {
        Sum w = unary();
        if (!w.constant_only()) fail_at("division by a non-constant", at);
        if (w.terms.empty()) fail_at("division by zero", at);
        v = multiply(v, constant(w.terms.begin()->second.inverse(), n_));
      } else {
        return v;
      }
    }
  }

  Sum unary() {
    if (accept('-')) return negate(unary());
    if (accept('+')) return unary();
    return power();
  }

  Sum power() {
    Sum base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.empty() || d.size() > 3) fail_at("expected a small non-negative integer exponent", at);
    Sum out = constant({Scalar(1), Scalar(0)}, n_);
    for (int k = std::stoi(d); k > 0; --k) out = multiply(out, base);
    return out;
  }

  Sum atom() {
    skip();
    const std::size_t at = pos_;
    if (accept('(')) {
      Sum v = sum_expr();
      expect(')');
      return v;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      return constant({number(), Scalar(0)}, n_);
    }
    const std::string id = identifier();
    if (id == "i") return constant({Scalar(0), Scalar(1)}, n_);
    if (id == "sqrt") return constant({sqrt_atom(at), Scalar(0)}, n_);
    if (id == "exp") {
      expect('(');
      skip();
      const std::size_t inner = pos_;
      const Affine a = affine_sum();
      expect(')');
      if (!a.constant.is_zero()) fail_at("constant term in the exponent (write it as a coefficient)", inner);
      Sum s;
      s.terms.emplace(Covector(a.lin), Complex{Scalar(1), Scalar(0)});
      return s;
    }
    if (id == "z") fail_at("variables may only appear inside exp(...)", at);
    if (id.empty()) fail_at(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input", at);
    fail_at("unknown name '" + id + "'", at);
  }

  const std::string& s_;
  FieldDescriptor field_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpSum parse_expsum(const std::string& text, const FieldDescriptor& field, std::size_t n) {
  if (n == 0) throw PreconditionError("exponential sums need at least one variable");
  return Parser(text, field, n).run();
}

}  // namespace tropexp
