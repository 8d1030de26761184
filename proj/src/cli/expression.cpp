#include "gsc/cli/expression.hpp"

#include <cctype>
#include <stdexcept>

#include "gsc/cli/format.hpp"
#include "gsc/gamma.hpp"
#include "gsc/hurwitz.hpp"
#include "gsc/stieltjes.hpp"

namespace gsc::cli {

namespace {

using Node = std::function<Real(const PrecisionContext&)>;

// Digits a cached constant must carry to stand in for a fresh evaluation.
unsigned cache_digits(const PrecisionContext& ctx) { return ctx.digits + ctx.guard / 2; }

Node cached(const ValueCache* cache, CacheRecord key, std::function<Real(const PrecisionContext&)> compute) {
  return [cache, key = std::move(key), compute = std::move(compute)](const PrecisionContext& ctx) {
    const unsigned need = cache_digits(ctx);
    if (cache) {
      if (auto hit = cache->lookup(key, need)) {
        WorkingPrecision wp(ctx.working_digits());
        return parse_real(hit->value);
      }
    }
    Real value = compute(ctx);
    if (cache) {
      CacheRecord rec = key;
      rec.digits = need;
      rec.value = to_fixed(value, need);
      rec.created_at = utc_timestamp();
      cache->store(rec);
    }
    return value;
  };
}

class Parser {
 public:
  Parser(std::string_view text, const ValueCache* cache) : text_(text), cache_(cache) {}

  Node parse() {
    Node n = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad vector entry \"" + std::string(text_) + "\": " + what);
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

  static Node binary(Node l, Node r, char op) {
    return [l = std::move(l), r = std::move(r), op](const PrecisionContext& ctx) {
      Real a = l(ctx);
      Real b = r(ctx);
      WorkingPrecision wp(ctx.working_digits());
      switch (op) {
        case '+':
          return Real(a + b);
        case '-':
          return Real(a - b);
        case '*':
          return Real(a * b);
        default:
          return Real(a / b);
      }
    };
  }

  Node expr() {
    Node n = term();
    while (true) {
      if (accept('+')) {
        n = binary(std::move(n), term(), '+');
      } else if (accept('-')) {
        n = binary(std::move(n), term(), '-');
      } else {
        return n;
      }
    }
  }

  Node term() {
    Node n = unary();
    while (true) {
      if (accept('*')) {
        n = binary(std::move(n), unary(), '*');
      } else if (accept('/')) {
        n = binary(std::move(n), unary(), '/');
      } else {
        return n;
      }
    }
  }

  Node unary() {
    if (accept('-')) {
      Node inner = unary();
      return [inner = std::move(inner)](const PrecisionContext& ctx) { return Real(-inner(ctx)); };
    }
    return primary();
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string until(char stop) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop && text_[pos_] != ',') ++pos_;
    if (pos_ == text_.size()) fail(std::string("missing '") + stop + "'");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long integer_arg(const std::string& raw) {
    Rational r;
    try {
      r = parse_rational(raw);
    } catch (const std::exception&) {
      fail("not an integer: " + raw);
    }
    if (mp::denominator(r) != 1 || r < 0) fail("not a non-negative integer: " + raw);
    return mp::numerator(r).convert_to<unsigned long>();
  }

  Node primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (accept('(')) {
      Node n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return literal();
    std::string name = word();
    if (name == "log_pi") {
      return [](const PrecisionContext& ctx) {
        WorkingPrecision wp(ctx.working_digits());
        return Real(boost::multiprecision::log(pi()));
      };
    }
    if (name == "log_2") {
      return [](const PrecisionContext& ctx) {
        WorkingPrecision wp(ctx.working_digits());
        return log2_const();
      };
    }
    if (name == "euler_gamma") {
      CacheRecord key;
      key.kind = "euler_gamma";
      key.method = "euler_maclaurin";
      return cached(cache_, key, [](const PrecisionContext& ctx) { return euler_gamma(ctx); });
    }
    if (name == "log_gamma") {
      expect('(');
      Rational x;
      std::string raw = until(')');
      try {
        x = parse_rational(raw);
      } catch (const std::exception&) {
        fail("log_gamma needs a rational argument, got " + raw);
      }
      expect(')');
      if (x <= 0) fail("log_gamma needs a positive argument");
      CacheRecord key;
      key.kind = "log_gamma";
      key.a = mp::numerator(x).convert_to<std::size_t>();
      key.q = mp::denominator(x).convert_to<std::size_t>();
      key.method = "stirling";
      return cached(cache_, key, [x](const PrecisionContext& ctx) { return log_gamma(x, ctx); });
    }
    if (name == "stieltjes") {
      expect('(');
      unsigned long k = integer_arg(until(')'));
      expect(',');
      unsigned long a = integer_arg(until(')'));
      expect(',');
      unsigned long q = integer_arg(until(')'));
      expect(')');
      StieltjesKey sk{static_cast<unsigned>(k), a, q};
      try {
        sk.validate();
      } catch (const std::exception& e) {
        fail(e.what());
      }
      CacheRecord key;
      key.kind = "stieltjes";
      key.k = sk.k;
      key.a = sk.a;
      key.q = sk.q;
      key.method = "euler_maclaurin";
      return cached(cache_, key, [sk](const PrecisionContext& ctx) { return stieltjes_em(sk, ctx).value; });
    }
    if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
    fail("unknown name " + name);
  }

  Node literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    std::string raw(text_.substr(start, pos_ - start));
    Rational value;
    try {
      value = parse_rational(raw);
    } catch (const std::exception&) {
      fail("bad number " + raw);
    }
    return [value](const PrecisionContext& ctx) {
      WorkingPrecision wp(ctx.working_digits());
      return to_real(value);
    };
  }

  std::string_view text_;
  const ValueCache* cache_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<VectorExpression> parse_vector(std::string_view spec, const ValueCache* cache) {
  std::vector<VectorExpression> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(';', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view piece = spec.substr(start, end - start);
    bool blank = piece.find_first_not_of(" \t") == std::string_view::npos;
    if (!blank) out.push_back({std::string(piece), Parser(piece, cache).parse()});
    start = end + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty --vector");
  return out;
}

VectorSource as_source(std::vector<VectorExpression> entries) {
  return [entries = std::move(entries)](const PrecisionContext& ctx) {
    std::vector<Real> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.evaluate(ctx));
    return v;
  };
}

}  // namespace gsc::cli
