#include "cobweb/sequence.hpp"

#include "cobweb/errors.hpp"
#include "cobweb/fnomial.hpp"

#include <cctype>
#include <numeric>

namespace cobweb {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

BigInt parse_integer(std::string_view text, std::string_view context) {
  if (text.empty()) throw ParseError("empty integer in sequence spec '" + std::string(context) + "'");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a nonnegative integer, got '" + std::string(text) +
                       "' in sequence spec '" + std::string(context) + "'");
  return BigInt(std::string(text));
}

constexpr std::string_view kGrammar =
    "nat | fib | const:<c> | gauss:<q> | even1 | odd | div3 | list:[v1,v2,...]";

}  // namespace

Sequence Sequence::natural() { return {SequenceKind::Natural, "nat"}; }
Sequence Sequence::fibonacci() { return {SequenceKind::Fibonacci, "fib"}; }
Sequence Sequence::even1() { return {SequenceKind::Even1, "even1"}; }
Sequence Sequence::odd() { return {SequenceKind::Odd, "odd"}; }
Sequence Sequence::div3() { return {SequenceKind::Div3, "div3"}; }

Sequence Sequence::constant(BigInt c) {
  if (c < 1) throw ParseError("const:<c> requires c >= 1, got " + c.str());
  return {SequenceKind::Constant, "const:" + c.str(), c};
}

Sequence Sequence::gaussian(unsigned long q) {
  if (q < 1) throw ParseError("gauss:<q> requires q >= 1");
  return {SequenceKind::Gaussian, "gauss:" + std::to_string(q), BigInt(q)};
}

Sequence Sequence::list(std::vector<BigInt> values) {
  std::string name = "list:[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1)
      throw ParseError("list value F_" + std::to_string(i + 1) + " must be >= 1, got " +
                       values[i].str());
    if (i) name += ',';
    name += values[i].str();
  }
  name += ']';
  return {SequenceKind::List, std::move(name), 0, std::move(values)};
}

Sequence Sequence::parse(std::string_view spec) {
  if (spec == "nat") return natural();
  if (spec == "fib") return fibonacci();
  if (spec == "even1") return even1();
  if (spec == "odd") return odd();
  if (spec == "div3") return div3();
  if (spec.starts_with("const:")) return constant(parse_integer(spec.substr(6), spec));
  if (spec.starts_with("gauss:")) {
    BigInt q = parse_integer(spec.substr(6), spec);
    if (q > BigInt(1'000'000)) throw ParseError("gauss:<q> base too large: " + q.str());
    return gaussian(q.convert_to<unsigned long>());
  }
  if (spec.starts_with("list:")) {
    std::string body = strip_spaces(spec.substr(5));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw ParseError("expected list:[v1,v2,...], got '" + std::string(spec) + "'");
    body = body.substr(1, body.size() - 2);
    std::vector<BigInt> values;
    if (!body.empty()) {
      std::size_t start = 0;
      while (true) {
        std::size_t comma = body.find(',', start);
        std::string_view item = std::string_view(body).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(parse_integer(item, spec));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    return list(std::move(values));
  }
  throw ParseError("unknown sequence '" + std::string(spec) + "'; expected " +
                   std::string(kGrammar));
}

BigInt Sequence::value(std::size_t n) const {
  if (n == 0) return 0;
  switch (kind_) {
    case SequenceKind::Natural:
      return BigInt(n);
    case SequenceKind::Fibonacci: {
      BigInt a = 0, b = 1;  // F_0, F_1
      for (std::size_t i = 1; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
      }
      return b;
    }
    case SequenceKind::Constant:
      return param_;
    case SequenceKind::Gaussian: {
      // 1 + q + ... + q^{n-1}
      BigInt sum = 0, power = 1;
      for (std::size_t i = 0; i < n; ++i) {
        sum += power;
        power *= param_;
      }
      return sum;
    }
    case SequenceKind::Even1:
      return n == 1 ? BigInt(1) : BigInt(2 * (n - 1));
    case SequenceKind::Odd:
      return BigInt(2 * n - 1);
    case SequenceKind::Div3:
      return n == 1 ? BigInt(1) : BigInt(3 * (n - 1));
    case SequenceKind::List:
      if (n > values_.size())
        throw IndexOutOfRange("index " + std::to_string(n) + " beyond explicit list " + name_ +
                              " of length " + std::to_string(values_.size()));
      return values_[n - 1];
  }
  return 0;
}

std::optional<std::size_t> Sequence::length() const {
  if (kind_ == SequenceKind::List) return values_.size();
  return std::nullopt;
}

std::vector<Sequence> Sequence::builtins() {
  return {natural(), fibonacci(), constant(1), constant(2), gaussian(2), gaussian(3),
          even1(),   odd(),       div3()};
}

AdmissibilityVerdict check_cobweb_admissible(const Sequence& seq, std::size_t bound) {
  AdmissibilityVerdict verdict;
  verdict.bound = bound;
  FNomialTable table(seq, bound);
  for (std::size_t n = 0; n <= bound; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      FNomialQuotient q = table.fnomial(n, k);
      if (!q.is_integer()) {
        verdict.admissible_up_to = n - 1;  // n >= 2 here: rows 0 and 1 are always integral
        verdict.first_failure = AdmissibilityFailure{n, k, q.numerator, q.denominator};
        return verdict;
      }
    }
  }
  verdict.admissible_up_to = bound;
  return verdict;
}

GcdVerdict check_gcd_morphic(const Sequence& seq, std::size_t bound) {
  GcdVerdict verdict;
  verdict.bound = bound;
  verdict.morphic_up_to = bound;
  std::vector<BigInt> values(bound + 1);
  for (std::size_t i = 0; i <= bound; ++i) values[i] = seq.value(i);

  for (std::size_t n = 1; n <= bound; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      BigInt g = boost::multiprecision::gcd(values[n], values[m]);
      const BigInt& expected = values[std::gcd(n, m)];
      if (g == expected) continue;
      verdict.failing_pairs.emplace_back(n, m);
      if (!verdict.first_failure) {
        verdict.first_failure = GcdFailure{n, m, g, expected};
        verdict.morphic_up_to = n - 1;
      }
    }
  }
  return verdict;
}

}  // namespace cobweb
