#include "k3iso/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace k3iso {

namespace {

constexpr std::string_view kVariables = "WXYZ";

std::array<Integer, 4> checked_sort(const std::array<Integer, 4>& in,
                                    std::array<std::size_t, 4>& order) {
  for (const auto& w : in)
    if (w <= 0) throw Error(ErrorKind::NotWellPosed, "weights must be positive");
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return in[a] < in[b]; });
  std::array<Integer, 4> sorted;
  for (std::size_t i = 0; i < 4; ++i) sorted[i] = in[order[i]];
  return sorted;
}

}  // namespace

bool is_well_posed(const std::array<Integer, 4>& w) {
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) g = gcd(g, w[i]);
    if (g != 1) return false;
  }
  return true;
}

WeightSystem::WeightSystem(const std::array<Integer, 4>& weights)
    : weights_(checked_sort(weights, input_order_)) {
  if (!is_well_posed(weights_))
    throw Error(ErrorKind::NotWellPosed, "weights " + to_string() + " are not well-posed");
  degree_ = weights_[0] + weights_[1] + weights_[2] + weights_[3];
  basis_ = kernel_basis(weights_);
}

WeightSystem::WeightSystem(long a0, long a1, long a2, long a3)
    : WeightSystem(std::array<Integer, 4>{a0, a1, a2, a3}) {}

WeightSystem WeightSystem::parse(std::string_view text) {
  std::array<Integer, 4> w;
  std::size_t count = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || count >= 4)
      throw Error(ErrorKind::Parse, "expected four comma-separated positive integers, got '" +
                                        std::string(text) + "'");
    w[count++] = Integer(token);
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') flush();
    else token.push_back(ch);
  }
  flush();
  if (count != 4)
    throw Error(ErrorKind::Parse, "expected four weights, got '" + std::string(text) + "'");
  return WeightSystem(w);
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << weights_[i];
  return os.str();
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (exponents[i] == 0) continue;
    out.push_back(kVariables[i]);
    if (exponents[i] != 1) out += "^" + exponents[i].get_str();
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  std::array<bool, 4> seen{};
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::Parse, "monomial '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw fail("empty");
  while (i < text.size()) {
    const auto var = kVariables.find(text[i]);
    if (var == std::string_view::npos) throw fail(std::string("unexpected symbol '") + text[i] + "'");
    if (seen[var]) throw fail(std::string("repeated variable ") + text[i]);
    seen[var] = true;
    ++i;
    Integer e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const bool braced = i < text.size() && text[i] == '{';
      if (braced) ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw fail("missing exponent");
      e = Integer(std::string(text.substr(start, i - start)));
      if (braced) {
        if (i >= text.size() || text[i] != '}') throw fail("unclosed brace");
        ++i;
      }
      if (e <= 0) throw fail("exponent must be positive");
    }
    m.exponents[var] = e;
    skip_space();
  }
  return m;
}

Integer weighted_degree(const Monomial& m, const WeightSystem& a) {
  return dot(m.exponents, a.weights());
}

IntVec3 monomial_to_point(const Monomial& m, const WeightSystem& a) {
  const Integer deg = weighted_degree(m, a);
  if (deg != a.degree())
    throw Error(ErrorKind::WrongDegree, m.to_string() + " has degree " + deg.get_str() + ", expected " +
                                            a.degree().get_str() + " for weights " + a.to_string());
  IntVec4 shifted = m.exponents - IntVec4{1, 1, 1, 1};
  return to_coords(shifted, a.basis());
}

Monomial point_to_monomial(const IntVec3& point, const WeightSystem& a) {
  return {from_coords(point, a.basis()) + IntVec4{1, 1, 1, 1}};
}

Polytope delta_tetrahedron(const WeightSystem& a) {
  const auto& w = a.weights();
  std::vector<RatVec3> vertices;
  for (std::size_t j = 0; j < 4; ++j) {
    RatVec4 m{Rational(-1), Rational(-1), Rational(-1), Rational(-1)};
    m[j] = make_rational(a.degree() - w[j], w[j]);
    vertices.push_back(to_coords(m, a.basis()));
  }
  return Polytope::hull(vertices);
}

std::vector<Monomial> anticanonical_monomials(const WeightSystem& a) {
  const auto& w = a.weights();
  const Integer& d = a.degree();
  std::vector<Monomial> out;
  for (Integer e0 = 0; e0 * w[0] <= d; ++e0)
    for (Integer e1 = 0; e0 * w[0] + e1 * w[1] <= d; ++e1)
      for (Integer e2 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] <= d; ++e2) {
        Integer rest = d - e0 * w[0] - e1 * w[1] - e2 * w[2];
        if (rest % w[3] == 0) out.push_back({{e0, e1, e2, Integer(rest / w[3])}});
      }
  return out;
}

Polytope newton_polytope(const WeightSystem& a) {
  std::vector<IntVec3> points;
  for (const auto& m : anticanonical_monomials(a)) points.push_back(monomial_to_point(m, a));
  try {
    return Polytope::hull(points);
  } catch (const Error& e) {
    throw Error(ErrorKind::Degenerate,
                "Newton polytope of weights " + a.to_string() + " is not three-dimensional");
  }
}

}  // namespace k3iso
