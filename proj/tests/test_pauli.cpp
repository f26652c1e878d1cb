#include <doctest.h>

#include <random>

#include "bsyk/pauli.hpp"
#include "oracle.hpp"

using namespace bsyk;

namespace {

PauliString random_string(std::mt19937_64& gen, int n) {
  std::uniform_int_distribution<std::uint64_t> bits(
      0, (n == 64 ? ~0ull : (1ull << n) - 1));
  return PauliString(n, bits(gen), bits(gen));
}

}  // namespace

TEST_CASE("single-qubit multiplication table") {
  auto X = PauliString::parse("X");
  auto Y = PauliString::parse("Y");
  auto Z = PauliString::parse("Z");

  auto [xy, pxy] = multiply(X, Y);
  CHECK(xy == Z);
  CHECK(pxy == Phase(1));  // X*Y = iZ

  auto [xx, pxx] = multiply(X, X);
  CHECK(xx.is_identity());
  CHECK(pxx == Phase(0));

  auto [yx, pyx] = multiply(Y, X);
  CHECK(yx == Z);
  CHECK(pyx == Phase(3));  // Y*X = -iZ
}

TEST_CASE("disjoint supports multiply without phase") {
  auto a = PauliString::parse("XI");
  auto b = PauliString::parse("IY");
  auto [c, phase] = multiply(a, b);
  CHECK(c == PauliString::parse("XY"));
  CHECK(phase == Phase(0));
}

TEST_CASE("commutation examples") {
  CHECK_FALSE(commutes(PauliString::parse("X"), PauliString::parse("Z")));
  CHECK(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
  CHECK(commutes(PauliString::parse("II"), PauliString::parse("YZ")));
}

TEST_CASE("weight counts non-identity sites") {
  CHECK(weight(PauliString::parse("III")) == 0);
  CHECK(weight(PauliString::parse("XYI")) == 2);
  CHECK(weight(PauliString::parse("XYZY")) == 4);
}

TEST_CASE("parse/str round trip and ordering") {
  CHECK(PauliString::parse("XYIZ").str() == "XYIZ");
  CHECK(PauliString::parse("IIII").is_identity());
  CHECK(PauliString::parse("IX") < PauliString::parse("XI"));
  CHECK(PauliString::parse("XI") < PauliString::parse("XZ"));
}

TEST_CASE("width and label errors") {
  CHECK_THROWS(PauliString::parse("XQ"));
  CHECK_THROWS(PauliString(0));
  CHECK_THROWS(PauliString(65));
  CHECK_THROWS(multiply(PauliString::parse("X"), PauliString::parse("XX")));
  CHECK_THROWS(commutes(PauliString::parse("X"), PauliString::parse("XX")));
  CHECK_THROWS(PauliString::single(4, 4, 'X'));
  CHECK_THROWS(PauliString::single(4, 0, 'Q'));
}

TEST_CASE("multiply is associative with phases") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 8);
    auto a = random_string(gen, n);
    auto b = random_string(gen, n);
    auto c = random_string(gen, n);

    auto [ab, p_ab] = multiply(a, b);
    auto [ab_c, p_abc] = multiply(ab, c);
    auto [bc, p_bc] = multiply(b, c);
    auto [a_bc, p2] = multiply(a, bc);

    CHECK(ab_c == a_bc);
    CHECK(p_ab * p_abc == p_bc * p2);
  }
}

TEST_CASE("every string squares to the identity with phase +1") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_string(gen, 1 + static_cast<int>(gen() % 12));
    auto [sq, phase] = multiply(a, a);
    CHECK(sq.is_identity());
    CHECK(phase == Phase(0));
  }
}

TEST_CASE("commutes agrees with products in both orders") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 6);
    auto a = random_string(gen, n);
    auto b = random_string(gen, n);
    auto [ab, p_ab] = multiply(a, b);
    auto [ba, p_ba] = multiply(b, a);
    CHECK(ab == ba);
    CHECK(commutes(a, b) == (p_ab == p_ba));
  }
}

TEST_CASE("dense matrix oracle confirms multiply and commutes for n <= 3") {
  std::mt19937_64 gen(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 3);
    auto a = random_string(gen, n);
    auto b = random_string(gen, n);

    auto da = oracle::dense_pauli(a.str());
    auto db = oracle::dense_pauli(b.str());

    auto [c, phase] = multiply(a, b);
    oracle::Mat lhs = da * db;
    oracle::Mat rhs = phase.value() * oracle::dense_pauli(c.str());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);

    const double comm_norm = (da * db - db * da).cwiseAbs().maxCoeff();
    CHECK(commutes(a, b) == (comm_norm == 0.0));
  }
}

TEST_CASE("basis action matches the dense matrix column") {
  std::mt19937_64 gen(5150);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 3);
    auto p = random_string(gen, n);
    auto dense = oracle::dense_pauli(p.str());
    for (std::uint64_t b = 0; b < (1ull << n); ++b) {
      auto act = apply_to_basis(p, b);
      for (std::uint64_t r = 0; r < (1ull << n); ++r) {
        const auto expect =
            (r == act.index) ? act.phase.value() : std::complex<double>(0, 0);
        CHECK(dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b)) ==
              expect);
      }
    }
  }
}
