#include "turanforge/types.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace turanforge {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> vs) {
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i - 1] >= vs[i]) throw InternalFault("VertexSet::from_sorted: input not strictly increasing");
  }
  VertexSet s;
  s.members_ = std::move(vs);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return PreconditionError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    auto integral = [](const std::string& s) {
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      return true;
    };
    if (!integral(num) || !integral(den)) throw bad();
    BigInt d(den);
    if (d == 0) throw bad();
    return Rational(BigInt(num), d);
  }
  // Decimal: sign, digits, optional fractional part.
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool seen_digit = false;
  bool fraction = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.' && !fraction) {
      fraction = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
    seen_digit = true;
    num = num * 10 + (ch - '0');
    if (fraction) den *= 10;
  }
  if (!seen_digit) throw bad();
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace turanforge
