#pragma once

#include <adelic/preper.hpp>

#include <json.hpp>

#include <fstream>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adelic {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// accepts "p/q", integers, and exact decimal / scientific literals ("0.5",
// "1e-30", "2.25e3")
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos) {
    try {
      return Rational(s);
    } catch (const std::exception&) {
      throw ParseError("malformed rational: \"" + s + "\"");
    }
  }
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw ParseError("malformed rational: \"" + s + "\"");
      seen_dot = true;
      continue;
    }
    digits += s[i];
    seen_digit = true;
    if (seen_dot) ++frac_digits;
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i >= s.size()) throw ParseError("malformed rational: \"" + s + "\"");
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
      exp10 = exp10 * 10 + (s[i] - '0');
    if (eneg) exp10 = -exp10;
  }
  if (!seen_digit || i != s.size())
    throw ParseError("malformed rational: \"" + s + "\"");
  std::size_t nz = digits.find_first_not_of('0');  // gmp reads "0..." as octal
  digits = nz == std::string::npos ? "0" : digits.substr(nz);
  Rational r{Int(digits)};
  long shift = exp10 - frac_digits;
  for (long k = 0; k < (shift < 0 ? -shift : shift); ++k) {
    if (shift < 0)
      r /= 10;
    else
      r *= 10;
  }
  return neg ? Rational(-r) : r;
}

inline std::string rational_to_string(const Rational& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline ProjPointQ parse_point(const std::string& s) {
  if (s == "inf") return ProjPointQ::infinity();
  Rational r = parse_rational(s);
  return ProjPointQ::from_rational(r);
}

inline std::string point_to_string(const ProjPointQ& x) {
  if (x.b == 0) return "inf";
  if (x.b == 1) return x.a.str();
  return x.a.str() + "/" + x.b.str();
}

inline RationalMapP1 parse_map(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("F0") ||
      !j.contains("F1"))
    throw ParseError("map JSON needs fields d, F0, F1");
  int d = 0;
  try {
    d = j.at("d").get<int>();
  } catch (const std::exception&) {
    throw ParseError("map field \"d\" must be an integer");
  }
  if (d < 1) throw ParseError("map degree must be >= 1");
  HomogeneousLift lift;
  lift.degree = d;
  auto read_form = [&](const char* key, std::vector<Rational>& out) {
    const Json& arr = j.at(key);
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(d + 1))
      throw ParseError(std::string(key) + " must list " + std::to_string(d + 1) +
                       " coefficient strings");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string())
        throw ParseError(std::string(key) + "[" + std::to_string(i) +
                         "] must be a string");
      out.push_back(parse_rational(arr[i].get<std::string>()));
    }
  };
  read_form("F0", lift.c0);
  read_form("F1", lift.c1);
  try {
    return RationalMapP1::from_lift(lift);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

inline RationalMapP1 load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw ParseError("invalid JSON in " + path + ": " + ex.what());
  }
  return parse_map(j);
}

inline GaloisSetQ parse_point_set(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("point set must be a nonempty JSON array");
  std::vector<ProjPointQ> pts;
  for (const Json& item : j) {
    if (!item.is_string()) throw ParseError("point entries must be strings");
    pts.push_back(parse_point(item.get<std::string>()));
  }
  try {
    return GaloisSetQ::of(std::move(pts));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

inline AdelicEpsilon parse_epsilon(const Json& j) {
  if (!j.is_object()) throw ParseError("epsilon must be a JSON object");
  AdelicEpsilon eps;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      throw ParseError("epsilon values must be strings");
    BigReal val = to_real(parse_rational(it.value().get<std::string>()));
    if (it.key() == "arch") {
      eps.arch = val;
    } else {
      Int p;
      try {
        p = Int(it.key());
      } catch (const std::exception&) {
        throw ParseError("epsilon keys must be \"arch\" or a prime");
      }
      if (!is_probable_prime(p))
        throw ParseError("epsilon key is not prime: " + it.key());
      eps.finite[p] = val;
    }
  }
  try {
    eps.validate();
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
  return eps;
}

inline PencilMap parse_pencil(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("F0") ||
      !j.contains("F1"))
    throw ParseError("pencil JSON needs fields d, F0, F1");
  PencilMap out;
  out.d = j.at("d").get<int>();
  if (out.d < 1) throw ParseError("pencil degree must be >= 1");
  auto read_form = [&](const char* key, std::vector<PencilCoeff>& coeffs) {
    const Json& arr = j.at(key);
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(out.d + 1))
      throw ParseError(std::string(key) + " must list " +
                       std::to_string(out.d + 1) + " coefficients");
    for (const Json& item : arr) {
      PencilCoeff c;
      if (item.is_string()) {
        c.base = parse_rational(item.get<std::string>());
        c.slope = 0;
      } else if (item.is_array() && item.size() == 2 && item[0].is_string() &&
                 item[1].is_string()) {
        c.base = parse_rational(item[0].get<std::string>());
        c.slope = parse_rational(item[1].get<std::string>());
      } else {
        throw ParseError(std::string(key) +
                         " entries must be \"c\" or [\"c\",\"t-slope\"]");
      }
      coeffs.push_back(c);
    }
  };
  read_form("F0", out.c0);
  read_form("F1", out.c1);
  return out;
}

inline std::string place_to_string(const Place& v) {
  return v.archimedean ? "arch" : v.prime.str();
}

inline Place parse_place(const std::string& s) {
  if (s == "arch") return Place::arch();
  Int p;
  try {
    p = Int(s);
  } catch (const std::exception&) {
    throw ParseError("place must be \"arch\" or a prime: " + s);
  }
  if (p < 2 || !is_probable_prime(p))
    throw ParseError("place is not prime: " + s);
  return Place::finite(p);
}

// fixed-width decimal rendering keeps reports byte-stable across runs
inline std::string real_to_string(const BigReal& x) {
  long digits = static_cast<long>(precision_bits() * 0.30103) + 2;
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(digits)) << std::scientific << x;
  return os.str();
}

}  // namespace adelic
