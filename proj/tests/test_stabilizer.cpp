#include <doctest.h>

#include <stdexcept>

#include "qec/rng.hpp"
#include "qec/stabilizer_code.hpp"

using qec::PauliOperator;
using qec::StabilizerCode;

TEST_CASE("built-ins validate") {
  for (const auto& name : qec::builtin_code_names()) {
    StabilizerCode code = qec::builtin_code(name);
    qec::ValidationReport report = qec::validate_code(code);
    INFO(name, ": ", report.str());
    CHECK(report.valid());
  }
  CHECK_THROWS_AS(qec::builtin_code("nope"), std::invalid_argument);
}

TEST_CASE("shor9 layout") {
  StabilizerCode shor = qec::builtin_code("shor9");
  CHECK(shor.n == 9);
  CHECK(shor.k == 1);
  CHECK(shor.generators.size() == 8);
  CHECK(shor.generators[0].str() == "ZZIIIIIII");
  CHECK(shor.generators[5].str() == "IIIIIIIZZ");
  CHECK(shor.generators[6].str() == "XXXXXXIII");
  CHECK(shor.generators[7].str() == "XXXIIIXXX");
}

TEST_CASE("five_qubit layout is the printed cyclic shift set") {
  StabilizerCode five = qec::builtin_code("five_qubit");
  REQUIRE(five.generators.size() == 4);
  CHECK(five.generators[0].str() == "XZZXI");
  CHECK(five.generators[1].str() == "IXZZX");
  CHECK(five.generators[2].str() == "XIXZZ");
  CHECK(five.generators[3].str() == "ZXIXZ");
}

TEST_CASE("anticommuting generators are invalid") {
  StabilizerCode bad;
  bad.name = "bad";
  bad.n = 1;
  bad.k = 0;
  bad.generators = {PauliOperator::parse("X"), PauliOperator::parse("Z")};
  // k=0 needs n-k=1... keep sizes consistent but broken commutation:
  bad.n = 2;
  bad.generators = {PauliOperator::parse("XI"), PauliOperator::parse("ZI")};
  qec::ValidationReport report = qec::validate_code(bad);
  CHECK_FALSE(report.valid());
  bool saw_anticommute = false;
  for (const auto& v : report.violations) {
    if (v.find("anticommute") != std::string::npos) saw_anticommute = true;
  }
  CHECK(saw_anticommute);
}

TEST_CASE("duplicated generator is a rank deficiency") {
  StabilizerCode steane = qec::builtin_code("steane7");
  steane.generators[1] = steane.generators[0];
  qec::ValidationReport report = qec::validate_code(steane);
  CHECK_FALSE(report.valid());
  bool saw_rank = false;
  for (const auto& v : report.violations) {
    if (v.find("rank") != std::string::npos) saw_rank = true;
  }
  CHECK(saw_rank);
}

TEST_CASE("syndrome of the 3-qubit bit-flip code") {
  StabilizerCode code = qec::builtin_code("bitflip3");
  qec::Syndrome s1 = qec::syndrome(code, PauliOperator::parse("XII"));
  CHECK(s1.str() == "10");
  qec::Syndrome s_id = qec::syndrome(code, PauliOperator::identity(3));
  CHECK(s_id.str() == "00");
  CHECK_THROWS_AS(qec::syndrome(code, PauliOperator::parse("XI")),
                  std::invalid_argument);
}

TEST_CASE("steane bit-flip syndromes read off the Hamming columns") {
  StabilizerCode code = qec::builtin_code("steane7");
  // Column of H for qubit i, rows top to bottom = generators 0..2.
  const char* columns[7] = {"001", "010", "011", "100", "101", "110", "111"};
  for (std::size_t q = 0; q < 7; ++q) {
    qec::Syndrome s = qec::syndrome(code, PauliOperator::single(7, q, 'X'));
    std::string zsector;
    for (std::size_t r = 0; r < 3; ++r) zsector.push_back(s.get(r) ? '1' : '0');
    CHECK(zsector == columns[q]);
    // X errors never trip the X-type generators.
    for (std::size_t r = 3; r < 6; ++r) CHECK_FALSE(s.get(r));
  }
}

TEST_CASE("syndrome is a homomorphism and vanishes on the stabilizer") {
  qec::RngStream rng(31, 0);
  for (const auto& name : qec::builtin_code_names()) {
    StabilizerCode code = qec::builtin_code(name);
    for (int iter = 0; iter < 50; ++iter) {
      // Random stabilizer element: random subset of generators.
      PauliOperator s = PauliOperator::identity(code.n);
      for (const auto& g : code.generators) {
        if (rng.next_below(2)) s = s * g;
      }
      CHECK_FALSE(qec::syndrome(code, s).bits.any());

      qec::BitVec ex(code.n), ez(code.n), fx(code.n), fz(code.n);
      for (std::size_t q = 0; q < code.n; ++q) {
        ex.set(q, rng.next_below(2));
        ez.set(q, rng.next_below(2));
        fx.set(q, rng.next_below(2));
        fz.set(q, rng.next_below(2));
      }
      PauliOperator e(ex, ez, 0), f(fx, fz, 0);
      qec::Syndrome se = qec::syndrome(code, e);
      qec::Syndrome sf = qec::syndrome(code, f);
      qec::Syndrome sef = qec::syndrome(code, e * f);
      qec::BitVec expected = se.bits;
      expected.xor_with(sf.bits);
      CHECK(sef.bits == expected);
    }
  }
}

TEST_CASE("stabilizer membership distinguishes phases") {
  StabilizerCode shor = qec::builtin_code("shor9");
  PauliOperator z1z2 = PauliOperator::parse("ZZIIIIIII");
  CHECK(qec::in_stabilizer_span(shor, z1z2));
  CHECK(qec::in_stabilizer_group(shor, z1z2));
  PauliOperator minus_z1z2 = PauliOperator::parse("-ZZIIIIIII");
  CHECK(qec::in_stabilizer_span(shor, minus_z1z2));
  CHECK_FALSE(qec::in_stabilizer_group(shor, minus_z1z2));
}

TEST_CASE("qecc check on shor9 weight-1 errors") {
  StabilizerCode shor = qec::builtin_code("shor9");
  auto errors = qec::paulis_up_to_weight(9, 1, true);
  CHECK(errors.size() == 28);
  qec::QeccCheckResult result = qec::stabilizer_qecc_check(shor, errors);
  CHECK(result.passes());

  // (Z1, Z2) is a degenerate pair: Z1 Z2 lies in the stabilizer.
  std::size_t z1 = 0, z2 = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i].str() == "ZIIIIIIII") z1 = i;
    if (errors[i].str() == "IZIIIIIII") z2 = i;
  }
  CHECK(result.classification[z1][z2] == qec::PairClass::InStabilizer);
}

TEST_CASE("bit-flip code cannot tell phase errors apart") {
  StabilizerCode code = qec::builtin_code("bitflip3");
  std::vector<PauliOperator> errors = {PauliOperator::identity(3),
                                       PauliOperator::parse("ZII")};
  qec::QeccCheckResult result = qec::stabilizer_qecc_check(code, errors);
  CHECK_FALSE(result.passes());
  CHECK(result.classification[0][1] == qec::PairClass::Violation);
}

TEST_CASE("five_qubit and steane weight-1 sets pass the qecc check") {
  for (const char* name : {"steane7", "five_qubit"}) {
    StabilizerCode code = qec::builtin_code(name);
    auto errors = qec::paulis_up_to_weight(code.n, 1, true);
    CHECK(qec::stabilizer_qecc_check(code, errors).passes());
  }
}

TEST_CASE("distance-1 codes pass on the error set they are built for") {
  StabilizerCode bitflip = qec::builtin_code("bitflip3");
  std::vector<PauliOperator> flips = {PauliOperator::identity(3),
                                      PauliOperator::parse("XII"),
                                      PauliOperator::parse("IXI"),
                                      PauliOperator::parse("IIX")};
  CHECK(qec::stabilizer_qecc_check(bitflip, flips).passes());

  StabilizerCode phaseflip = qec::builtin_code("phaseflip3");
  std::vector<PauliOperator> phases = {PauliOperator::identity(3),
                                       PauliOperator::parse("ZII"),
                                       PauliOperator::parse("IZI"),
                                       PauliOperator::parse("IIZ")};
  CHECK(qec::stabilizer_qecc_check(phaseflip, phases).passes());
}

TEST_CASE("distance by brute force") {
  CHECK(qec::distance(qec::builtin_code("steane7"), 3) == 3);
  CHECK(qec::distance(qec::builtin_code("five_qubit"), 3) == 3);
  CHECK(qec::distance(qec::builtin_code("shor9"), 3) == 3);  // degeneracy handled
  CHECK(qec::distance(qec::builtin_code("bitflip3"), 3) == 1);
  CHECK(qec::distance(qec::builtin_code("phaseflip3"), 3) == 1);
  // Cap reporting: steane7 has no normalizer element of weight <= 2.
  CHECK_FALSE(qec::distance(qec::builtin_code("steane7"), 2).has_value());
}

TEST_CASE("cached distances agree with brute force") {
  for (const auto& name : qec::builtin_code_names()) {
    StabilizerCode code = qec::builtin_code(name);
    CHECK(qec::distance(code, 3) == qec::builtin_distance(name));
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& name : qec::builtin_code_names()) {
    StabilizerCode code = qec::builtin_code(name);
    StabilizerCode back = StabilizerCode::deserialize(code.serialize());
    CHECK(back.name == code.name);
    CHECK(back.n == code.n);
    CHECK(back.k == code.k);
    CHECK(back.generators == code.generators);
    CHECK(back.logical_x == code.logical_x);
    CHECK(back.logical_z == code.logical_z);
  }
  CHECK_THROWS_AS(StabilizerCode::deserialize("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(StabilizerCode::deserialize("n=2 k=1 name=x\n[generators]\nXXX\n"),
                  std::invalid_argument);
}
