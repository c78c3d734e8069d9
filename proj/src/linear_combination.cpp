#include "bialint/linear_combination.hpp"

#include <vector>

namespace bialint {

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) out.add_term(u * v, cu * cv);
  }
  return out;
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [k1, c1] : a) {
    for (const auto& [k2, c2] : b) out.add_term({k1.first * k2.first, k1.second * k2.second}, c1 * c2);
  }
  return out;
}

TensorPoly tensor(const NcPoly& a, const NcPoly& b) {
  TensorPoly out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) out.add_term({u, v}, cu * cv);
  }
  return out;
}

TensorPoly flip(const TensorPoly& t) {
  TensorPoly out;
  for (const auto& [k, c] : t) out.add_term({k.second, k.first}, c);
  return out;
}

namespace {

// Appends one signed term; body is the already formatted monomial or "" for a constant.
void append_term(std::string& out, const Scalar& c, const std::string& body) {
  const bool first = out.empty();
  Scalar magnitude = c.sign() < 0 ? -c : c;
  if (c.sign() < 0) {
    out += first ? "-" : " - ";
  } else if (!first) {
    out += " + ";
  }
  if (body.empty()) {
    out += magnitude.to_string();
  } else if (magnitude.is_one()) {
    out += body;
  } else {
    out += magnitude.to_string() + " " + body;
  }
}

}  // namespace

std::string format_poly(const NcPoly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, it->second, it->first.empty() ? std::string() : alphabet.format(it->first));
  }
  return out;
}

std::string format_tensor(const TensorPoly& t, const Alphabet& alphabet) {
  if (t.is_zero()) return "0";
  std::string out;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
    append_term(out, it->second, alphabet.format(it->first.first) + " (x) " + alphabet.format(it->first.second));
  }
  return out;
}

}  // namespace bialint
