#include "ecassoc/field.hpp"

#include "expect_error.hpp"

#include <doctest.h>

#include <random>

using namespace ecassoc;
using oracle::error_code_of;

namespace {

std::vector<std::string> names(const std::vector<FieldElement>& els) {
  std::vector<std::string> out;
  for (const auto& e : els) out.push_back(e.to_string());
  return out;
}

std::vector<Field> small_fields() {
  std::vector<Field> out;
  for (auto [p, k] : std::vector<std::pair<int, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                                                           {11, 1}, {13, 1}, {2, 4}}) {
    out.push_back(Field::finite(p, k));
  }
  return out;
}

}  // namespace

TEST_CASE("worked arithmetic values") {
  const auto f5 = Field::prime(5);
  CHECK(f5.from_int(2) + f5.from_int(4) == f5.from_int(1));
  CHECK(invert(f5.from_int(2)) == f5.from_int(3));

  const auto f4 = Field::parse("p=2,k=2,mod=1,1,1");
  const auto u = f4.parse_element("0,1");
  CHECK((u * u).to_string() == "1,1");
  CHECK(invert(u).to_string() == "1,1");

  const auto q = Field::rationals();
  CHECK(q.parse_element("1/3") + q.parse_element("1/6") == q.parse_element("1/2"));
  CHECK(invert(q.parse_element("-3/7")).to_string() == "-7/3");
  CHECK(q.parse_element("6/-4").to_string() == "-3/2");
}

TEST_CASE("field_arithmetic agrees with the operators") {
  const auto f7 = Field::prime(7);
  const auto a = f7.from_int(3), b = f7.from_int(5);
  CHECK(field_arithmetic(a, b, FieldOp::add) == a + b);
  CHECK(field_arithmetic(a, b, FieldOp::sub) == a - b);
  CHECK(field_arithmetic(a, b, FieldOp::mul) == a * b);
  CHECK(field_arithmetic(a, b, FieldOp::div) == a / b);
}

TEST_CASE("prime-field arithmetic matches integers mod p") {
  for (int p : {2, 3, 7, 13}) {
    const auto f = Field::prime(static_cast<std::uint64_t>(p));
    for (int x = 0; x < p; ++x) {
      for (int y = 0; y < p; ++y) {
        const auto a = f.from_int(x), b = f.from_int(y);
        CHECK((a + b).code() == static_cast<std::uint64_t>((x + y) % p));
        CHECK((a - b).code() == static_cast<std::uint64_t>(((x - y) % p + p) % p));
        CHECK((a * b).code() == static_cast<std::uint64_t>((x * y) % p));
        if (y != 0) CHECK(((a / b) * b) == a);
      }
    }
  }
}

TEST_CASE("extension construction") {
  const std::int64_t f4_mod[] = {1, 1, 1};
  CHECK(Field::extension(2, f4_mod).order() == 4u);

  const std::int64_t reducible[] = {1, 0, 1};
  CHECK(error_code_of([&] { Field::extension(2, reducible); }) == ErrorCode::ReducibleModulus);
  try {
    Field::extension(2, reducible);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("u+1") != std::string::npos);
  }

  // u^2 + 1 over F_3: no root among 0, 1, 2.
  for (int x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
  const auto f9 = Field::extension(3, reducible);
  CHECK(f9.order() == 9u);
  CHECK(f9.spec() == "p=3,k=2,mod=1,0,1");

  const std::int64_t not_monic[] = {1, 1, 2};
  CHECK(error_code_of([&] { Field::extension(3, not_monic); }).has_value());
  CHECK(error_code_of([] { Field::prime(4); }) == ErrorCode::NotPrime);
  CHECK(error_code_of([] { Field::prime(1); }) == ErrorCode::NotPrime);
  const std::int64_t f4_mod_p4[] = {1, 1, 1};
  CHECK(error_code_of([&] { Field::extension(4, f4_mod_p4); }) == ErrorCode::NotPrime);
}

TEST_CASE("enumeration order") {
  CHECK(names(Field::prime(2).elements()) == std::vector<std::string>{"0", "1"});
  CHECK(names(Field::prime(5).elements()) == std::vector<std::string>{"0", "1", "2", "3", "4"});
  CHECK(names(Field::parse("p=2,k=2,mod=1,1,1").elements()) == std::vector<std::string>{"0,0", "1,0", "0,1", "1,1"});
  CHECK(enumerate_field(Field::prime(3)).size() == 3);
  CHECK(error_code_of([] { Field::rationals().elements(); }) == ErrorCode::InfiniteField);
}

TEST_CASE("field axioms hold exhaustively on fields with at most 16 elements") {
  for (const auto& f : small_fields()) {
    CAPTURE(f.spec());
    const auto els = f.elements();
    REQUIRE(els.size() == *f.order());
    CHECK(!(f.zero() == f.one()));
    for (const auto& a : els) {
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a + (-a) == f.zero());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == f.one());
        CHECK(a.inverse().inverse() == a);
      }
      for (const auto& b : els) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : els) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("canonical representatives along different construction paths") {
  std::mt19937_64 rng(20261015);
  for (const auto& f : small_fields()) {
    const auto els = f.elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = els[pick(rng)];
      const auto b = els[pick(rng)];
      if (b.is_zero()) continue;
      const auto round_trip = (a / b) * b;
      CHECK(round_trip == a);
      CHECK(round_trip.code() == a.code());
      CHECK(f.parse_element(a.to_string()) == a);
    }
  }
  const auto q = Field::rationals();
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
  for (int i = 0; i < 300; ++i) {
    const auto a = q.from_rational(Rational(num(rng), den(rng)));
    const auto b = q.from_rational(Rational(num(rng), den(rng)));
    if (b.is_zero()) continue;
    const auto c = (a / b) * b;
    CHECK(c == a);
    CHECK(c.to_string() == a.to_string());
    CHECK(denominator(c.rational()) > 0);
  }
}

TEST_CASE("error paths") {
  const auto f5 = Field::prime(5);
  const auto f7 = Field::prime(7);
  CHECK(error_code_of([&] { (void)(f5.one() + f7.one()); }) == ErrorCode::MixedFields);
  CHECK(error_code_of([&] { (void)(f5.one() / f5.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(error_code_of([&] { (void)invert(Field::rationals().zero()); }) == ErrorCode::DivisionByZero);
  CHECK(error_code_of([&] { (void)(FieldElement() + f5.one()); }) == ErrorCode::MixedFields);
  CHECK(error_code_of([] { Field::parse("p=x"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { Field::parse("p=2,k=2,mod=1,1"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { Field::parse("p=2,k=2,mod=1,1,0"); }).has_value());
  CHECK(error_code_of([] { Field::parse("R"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([&] { f5.parse_element("1/2"); }) == ErrorCode::ParseError);
}

TEST_CASE("handles are interned") {
  CHECK(Field::parse("p=5") == Field::prime(5));
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::finite(2, 2) == Field::parse("p=2,k=2,mod=1,1,1"));
  CHECK(Field::parse(Field::finite(3, 2).spec()) == Field::finite(3, 2));
}
