#include "stlie/field.hpp"

#include <cctype>

namespace stlie {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string FieldSpec::name() const {
  if (kind == FieldKind::rationals) return "Q";
  return "F" + std::to_string(p);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw FieldMismatchError("field mismatch: " + a.name() + " vs " + b.name());
  }
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > kMaxPrime) {
    throw Error("prime modulus " + std::to_string(p) + " exceeds supported bound " +
                std::to_string(kMaxPrime));
  }
  if (!is_prime(p)) {
    throw Error("modulus " + std::to_string(p) + " is not prime");
  }
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p_);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F" + std::to_string(p_));
  // extended Euclid on signed 64-bit; p < 2^31 so no overflow
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::parse(std::string_view s) const {
  if (s.empty()) throw SpecParseError("empty scalar literal");
  bool negative = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw SpecParseError("bad scalar literal '" + std::string(s) + "'");
  Elem acc = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw SpecParseError("bad scalar literal '" + std::string(s) + "' for F" +
                           std::to_string(p_));
    }
    acc = reduce(acc * 10 + static_cast<Elem>(s[i] - '0'));
  }
  return negative ? neg(acc) : acc;
}

RationalField::Elem RationalField::parse(std::string_view s) const {
  if (s.empty()) throw SpecParseError("empty scalar literal");
  std::size_t start = (s[0] == '+') ? 1 : 0;
  std::string body(s.substr(start));
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || body[i - 1] == '/'));
    if (!ok) throw SpecParseError("bad rational literal '" + std::string(s) + "'");
  }
  try {
    Elem q(body);
    if (q.get_den() == 0) throw SpecParseError("zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw SpecParseError("bad rational literal '" + std::string(s) + "'");
  }
}

}  // namespace stlie
