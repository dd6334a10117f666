#include "fockcb/a_value.hpp"

#include <sstream>

namespace fockcb {

Rational shifted_charge(int c, const ParamSet& params) {
  long long v = params.charge(c);  // validates the index
  long long d = params.level();
  return Rational(v * d - static_cast<long long>(c) * params.e() + static_cast<long long>(params.e()) * d, d);
}

std::vector<Rational> shifted_beta_numbers(const Multipartition& mp, int c,
                                           const ParamSet& params) {
  if (mp.level() != params.level())
    throw diagram_error("multipartition level does not match the parameter set");
  Rational m = shifted_charge(c, params);
  int n = mp.rank();
  const Partition& comp = mp.component(c);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) out.push_back(Rational(comp.part(p) - p + n) + m);
  return out;
}

namespace {

long long floor_of_positive(const Rational& r) {
  using boost::multiprecision::cpp_int;
  cpp_int f = numerator(r) / denominator(r);
  return f.convert_to<long long>();
}

}  // namespace

Rational a_value(const Multipartition& mp, const ParamSet& params) {
  int d = params.level();
  std::vector<Rational> charge(static_cast<std::size_t>(d));
  std::vector<std::vector<Rational>> betas(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) {
    charge[static_cast<std::size_t>(c)] = shifted_charge(c, params);
    betas[static_cast<std::size_t>(c)] = shifted_beta_numbers(mp, c, params);
  }

  Rational total = 0;
  // pair sum: unordered pairs across components i <= j, with a > b when
  // i = j realized positionally on the strictly decreasing beta list
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const auto& left = betas[static_cast<std::size_t>(i)];
      const auto& right = betas[static_cast<std::size_t>(j)];
      for (std::size_t s = 0; s < left.size(); ++s)
        for (std::size_t t = (i == j ? s + 1 : 0); t < right.size(); ++t)
          total += std::min(left[s], right[t]);
    }
  }
  // counter sum: integer k runs from 1 to floor(a) for each beta-number a
  for (int i = 0; i < d; ++i) {
    for (const Rational& beta : betas[static_cast<std::size_t>(i)]) {
      long long bound = floor_of_positive(beta);
      for (long long k = 1; k <= bound; ++k) {
        Rational kk(k);
        for (int j = 0; j < d; ++j) total -= std::min(kk, charge[static_cast<std::size_t>(j)]);
      }
    }
  }
  return total;
}

std::strong_ordering a_compare(const Multipartition& x, const Multipartition& y,
                               const ParamSet& params) {
  if (x.rank() != y.rank())
    throw precondition_error("a-values are only comparable within one rank");
  Rational ax = a_value(x, params), ay = a_value(y, params);
  if (ax < ay) return std::strong_ordering::less;
  if (ay < ax) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

const Rational& AValueCache::operator()(const Multipartition& mp) {
  auto it = memo_.find(mp);
  if (it == memo_.end()) it = memo_.emplace(mp, a_value(mp, params_)).first;
  return it->second;
}

}  // namespace fockcb
