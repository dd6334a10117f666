#include <doctest.h>

#include <sstream>

#include "fockcb/canonical.hpp"

using namespace fockcb;

namespace {

Multipartition mp(const std::string& text) { return Multipartition::parse(text); }
Laurent q(int exp) { return Laurent::monomial(1, exp); }

FockVector vec(int rank, std::initializer_list<std::pair<const char*, Laurent>> terms) {
  FockVector out(rank);
  for (const auto& [text, coeff] : terms) out.add_term(mp(text), coeff);
  return out;
}

const std::vector<ParamSet>& configs() {
  static const std::vector<ParamSet> all = {ParamSet(2, {0}), ParamSet(3, {0, 1}),
                                            ParamSet(4, {0, 2, 3})};
  return all;
}

std::string dump_string(const CanonicalBasis& basis) {
  std::ostringstream os;
  basis.dump(os);
  return os.str();
}

}  // namespace

TEST_CASE("a-sequence vectors") {
  ParamSet p2(2, {0});
  CHECK(apply_a_sequence(mp("2"), p2) == vec(2, {{"2", Laurent(1)}, {"1.1", q(1)}}));
  CHECK(apply_a_sequence(mp("2.1"), p2) == vec(3, {{"2.1", Laurent(1)}}));
  CHECK(apply_a_sequence(Multipartition::empty(1), p2) ==
        FockVector::unit(Multipartition::empty(1)));
}

TEST_CASE("reduction") {
  // real multipartitions with a((3)) < a((2.1)) < a((1.1.1)) and (2.1) FLOTW
  ParamSet p2(2, {0});
  AValueCache cache(p2);
  Multipartition lam = mp("3"), nu = mp("2.1"), rho = mp("1.1.1");

  CanonicalBasis known(p2, 3);
  known.insert({nu, vec(3, {{"2.1", Laurent(1)}, {"1.1.1", q(1)}}), cache(nu)});

  SUBCASE("no offending term returns the input unchanged") {
    FockVector a = vec(3, {{"3", Laurent(1)}, {"2.1", q(1)}});
    CHECK(reduce_to_canonical(a, lam, known, cache) == a);
  }

  SUBCASE("single step with constant offender") {
    FockVector a = vec(3, {{"3", Laurent(1)}, {"2.1", Laurent(1) + q(1)}, {"1.1.1", q(2)}});
    CHECK(reduce_to_canonical(a, lam, known, cache) ==
          vec(3, {{"3", Laurent(1)}, {"2.1", q(1)}, {"1.1.1", q(2) - q(1)}}));
  }

  SUBCASE("mirrored offender") {
    CanonicalBasis simple(p2, 3);
    simple.insert({nu, vec(3, {{"2.1", Laurent(1)}}), cache(nu)});
    FockVector a = vec(3, {{"3", Laurent(1)}, {"2.1", q(-1)}});
    CHECK(reduce_to_canonical(a, lam, simple, cache) ==
          vec(3, {{"3", Laurent(1)}, {"2.1", -q(1)}}));
  }

  SUBCASE("offending term below the target a-value is an invariant breach") {
    FockVector a = vec(3, {{"2.1", Laurent(1)}, {"3", Laurent(1)}});
    CHECK_THROWS_AS(reduce_to_canonical(a, nu, known, cache), invariant_error);
  }

  SUBCASE("non-FLOTW offending term is an invariant breach") {
    FockVector a = vec(3, {{"3", Laurent(1)}, {"1.1.1", Laurent(1)}});
    CHECK_THROWS_AS(reduce_to_canonical(a, lam, known, cache), invariant_error);
  }

  SUBCASE("missing canonical element is an invariant breach") {
    CanonicalBasis empty_known(p2, 3);
    FockVector a = vec(3, {{"3", Laurent(1)}, {"2.1", Laurent(1)}});
    CHECK_THROWS_AS(reduce_to_canonical(a, lam, empty_known, cache), invariant_error);
  }
}

TEST_CASE("small canonical bases") {
  ParamSet p2(2, {0});

  CanonicalBasis rank0 = compute_canonical_basis(0, p2);
  REQUIRE(rank0.size() == 1);
  CHECK(rank0.at(Multipartition::empty(1)) == FockVector::unit(Multipartition::empty(1)));

  CanonicalBasis rank2 = compute_canonical_basis(2, p2);
  REQUIRE(rank2.size() == 1);
  CHECK(rank2.at(mp("2")) == vec(2, {{"2", Laurent(1)}, {"1.1", q(1)}}));

  CanonicalBasis rank3 = compute_canonical_basis(3, p2);
  REQUIRE(rank3.size() == 2);
  CHECK(rank3.at(mp("3")) == vec(3, {{"3", Laurent(1)}, {"1.1.1", q(1)}}));
  CHECK(rank3.at(mp("2.1")) == vec(3, {{"2.1", Laurent(1)}}));
}

TEST_CASE("dump format") {
  ParamSet p2(2, {0});
  CHECK(dump_string(compute_canonical_basis(3, p2)) ==
        "G(3)\n"
        "3 : 1\n"
        "1.1.1 : q\n"
        "G(2.1)\n"
        "2.1 : 1\n");
}

TEST_CASE("unitriangular shape with positive q-powers") {
  for (const ParamSet& p : configs()) {
    AValueCache cache(p);
    for (int n = 0; n <= 4; ++n) {
      CanonicalBasis basis = compute_canonical_basis(n, p);
      CHECK(basis.size() == enumerate_flotw(n, p).size());
      for (const auto& entry : basis.entries()) {
        CHECK(entry.vector.coeff(entry.label) == Laurent(1));
        for (const auto& [mu, coeff] : entry.vector.terms()) {
          if (mu == entry.label) continue;
          CHECK(coeff.in_qZq());
          CHECK(cache(mu) > entry.a);
        }
      }
    }
  }
}

TEST_CASE("reduction is idempotent on canonical elements") {
  ParamSet p(3, {0, 1});
  AValueCache cache(p);
  CanonicalBasis basis = compute_canonical_basis(4, p);
  for (const auto& entry : basis.entries()) {
    CHECK(reduce_to_canonical(entry.vector, entry.label, basis, cache) == entry.vector);
  }
}

TEST_CASE("tie-break choices do not change the basis") {
  for (const ParamSet& p : configs()) {
    for (int n = 0; n <= 4; ++n) {
      BasisOptions alternate;
      alternate.k_scan = KScan::descending;
      alternate.reverse_offender_ties = true;
      CHECK(dump_string(compute_canonical_basis(n, p)) ==
            dump_string(compute_canonical_basis(n, p, alternate)));
    }
  }
}
